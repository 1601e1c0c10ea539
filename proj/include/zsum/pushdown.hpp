#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zsum/expr.hpp"
#include "zsum/tables.hpp"

namespace zsum {

// A_{n1..np} as signed H words (last index positive, one sign flip per
// minus) and as Z sums (all sign patterns with an even number of minus
// signs, unit coefficients).  2^(p-1) terms each way.
std::vector<std::pair<int, IntegralWord>> expand_A_h(const SumWord& indices);
std::vector<std::pair<int, SumWord>> expand_A_z(const SumWord& indices);

// Value of the A function in the coordinates of a completed Euler session.
Expr<Rat> a_function_value(Session<Rat>& euler, const SumWord& indices);

// One generator of a pushdown right-hand side: either an A function or a
// product of MZV basis atoms.
struct PushGen {
  bool is_a = false;
  SumWord a_indices;
  Monomial mono;  // over MZV-session atoms
  std::string name(Kind kind) const;
};

struct PushdownIdentity {
  Expr<Rat> lhs;  // in Euler-session coordinates (for reference)
  std::vector<std::pair<Rat, PushGen>> rhs;
};

// Expresses `target` (an extended MZV word, sum notation, possibly with
// mixing terms) as A functions + MZV atoms + products of lower-weight MZV
// atoms, by exact linear solve in the Euler basis.  Same-weight MZV atoms
// deeper than max_mzv_depth are excluded from the generators.
std::optional<PushdownIdentity> synthesize_pushdown(
    Session<Rat>& euler, Session<Rat>& mzv,
    const std::vector<std::pair<Rat, SumWord>>& target_combo,
    const std::vector<SumWord>& candidate_a, int max_mzv_depth,
    Rat* residual_norm = nullptr);

// MZV-ring membership test utilities.
class MzvSpan {
 public:
  MzvSpan(Session<Rat>& euler, Session<Rat>& mzv, int weight);
  // nullopt if not in the span; otherwise coefficients per generator.
  std::optional<std::vector<std::pair<Rat, PushGen>>> reduce(const Expr<Rat>& value) const;
  const std::vector<PushGen>& generators() const { return gens_; }

 private:
  std::vector<PushGen> gens_;
  // Row-reduced generator matrix over the Euler monomial coordinates.
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> pivot_col_;
  std::vector<Monomial> cols_;
  std::vector<std::vector<Rat>> combo_;  // generator combination per row
  friend struct MzvSpanAccess;
};

// express_A_in_mzv: the A value reduced to MZV atoms only, if possible.
std::optional<std::vector<std::pair<Rat, PushGen>>> express_A_in_mzv(
    Session<Rat>& euler, Session<Rat>& mzv, const SumWord& indices);

// Number of weight/depth Euler sums with at least one negative index whose
// values lie in the MZV ring (Table-10-style counts).
int classify_mzv_expressible(Session<Rat>& euler, Session<Rat>& mzv, int weight, int depth);
// Same for A functions (Table-11-style counts).
int classify_a_mzv_expressible(Session<Rat>& euler, Session<Rat>& mzv, int weight, int depth);

}  // namespace zsum
