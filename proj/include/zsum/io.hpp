#pragma once

#include <iosfwd>
#include <string>

#include "zsum/expr.hpp"
#include "zsum/tables.hpp"

namespace zsum {

// Data-mine style expression text:
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := symbol ('^' uint)?
//   coeff  := int ('/' uint)?
// Symbols: z-runs (z5z3, zm11zm3z3), e-constants (e3), h-words (h31, hB1),
// a-runs (a7a5), sinf, plus H(m1,...,md) for mixed leftovers.  Long integers
// wrap with a trailing backslash.
std::string emit_expression(const Expr<Rat>& e);
std::string emit_expression(const Expr<Fp>& e);
Expr<Rat> parse_expression(const std::string& text);
Expr<Fp> parse_expression_fp(const std::string& text);

// AtomId for a symbol name, interning on first sight.
AtomId atom_from_symbol(const std::string& name);

// "Z(6,4,1,1)" or "H(0,1,0,1)" or "A(7,5)" -> word forms.
SumWord parse_z_word(const std::string& text);

// Reduction table files.  Records read `Z(i1,...,id) = expr ;` with the Z
// value in sum notation; --form-style emits the bracketed +E(...)*(...) shape
// instead (write-only).
template <class F>
void write_table(std::ostream& os, const ReductionTable<F>& t, bool form_style = false);
template <class F>
ReductionTable<F> read_table(std::istream& is);

template <class F>
void write_table_file(const std::string& path, const ReductionTable<F>& t,
                      bool form_style = false);
template <class F>
ReductionTable<F> read_table_file(const std::string& path);

// Sorted (key, offset) sidecar for O(log n) record lookup; magic "MZDM1".
void build_sidecar_index(const std::string& table_path);
// Returns the record text for the word (folding MZV duals), or empty.
std::string lookup_record(const std::string& table_path, const SumWord& z);

}  // namespace zsum
