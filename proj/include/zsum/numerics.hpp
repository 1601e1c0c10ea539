#pragma once

#include <string>
#include <vector>

#include "zsum/expr.hpp"
#include "zsum/tables.hpp"
#include "zsum/words.hpp"

namespace zsum {

struct NumericValue {
  long double value = 0;
  long double error_bound = 0;
};

// Direct evaluation of a convergent nested sum by streaming the recursion to
// k <= N, with one Richardson step on the outer sum (alternating outer sums
// are averaged instead).  O(N * depth) time, O(depth) memory.
NumericValue eval_sum(const SumWord& w, long N = 1000000);

// Values of basis constants; word atoms evaluate through eval_sum.
// sinf has no finite value and is rejected.
NumericValue eval_atom(AtomId id, long N = 1000000);

long double eval_zeta(int k);
long double eval_li_half(int n);   // Li_n(1/2)
long double eval_alpha(int n);     // Li_n(1/2) + (-1)^n [ln^n2/n! - zeta_2 ln^(n-2)2/(n-2)!]

// Evaluates an expression over exact rationals; unresolved words evaluate
// through eval_sum of the corresponding H value.
NumericValue eval_expr(const Expr<Rat>& e, Kind kind, long N = 1000000);

struct NumericCheckLine {
  SumWord word;
  long double delta = 0;
  long double bound = 0;
  bool pass = true;
};

struct NumericCheckReport {
  std::vector<NumericCheckLine> worst;  // sorted by delta/bound ratio
  long checked = 0;
  long failed = 0;
};

// |eval(word) - eval(value)| <= tolerance + combined bounds, per table entry.
NumericCheckReport numeric_check(const ReductionTable<Rat>& table, double tolerance,
                                 long N = 1000000, size_t keep_worst = 10);

}  // namespace zsum
