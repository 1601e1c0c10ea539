#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "zsum/tables.hpp"

namespace zsum {

enum class RelClass : uint8_t { stuffle, shuffle, doubling, gdr, pseudo_duality, duality };

const char* rel_class_name(RelClass c);

// One generated equation, before expansion.  Words are stored packed in
// m-notation; the sort key realizes the equation ordering.
struct RelDesc {
  RelClass cls;
  uint64_t a = 0;  // stuffle/shuffle: first factor; doubling/duality: word; gdr: tuple
  uint64_t b = 0;  // second factor
};

struct RunError : std::runtime_error {
  explicit RunError(const std::string& what) : std::runtime_error(what) {}
};

// All convergent nested sums of one weight in sum notation.
std::vector<SumWord> all_sum_words(Kind kind, int weight, int max_depth,
                                   bool convergent_only);

// Default elimination group sizes.
int default_group_size(Kind kind, int weight);

// Whether a word belongs to the fixed Lyndon basis of odd negative indices
// (zeta_2 stands in at weight 2).
bool is_lyndon_odd_basis_word(const IntegralWord& h);

// The four-part observation filter for shuffles that always turn trivial.
bool trivial_shuffle_skip(const SumWord& mult, const SumWord& other);

// Runs grouped Gaussian elimination for cfg.weight on top of the session's
// lower-weight tables and returns the completed table.
template <class F>
ReductionTable<F> run_reduction(Session<F>& session, RunConfig cfg);

// Ordered equation stream (exposed for tests and statistics).
std::vector<RelDesc> equation_stream(const RunConfig& cfg);

// True iff expr, with every unresolved word replaced by its table value,
// is identically zero.
template <class F>
bool verify_relation(const Expr<F>& expr, const ReductionTable<F>& table,
                     Session<F>& session);

}  // namespace zsum
