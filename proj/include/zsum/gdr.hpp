#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "zsum/rational.hpp"
#include "zsum/words.hpp"

namespace zsum {

// Binomial arrays of the two-factor partial fraction
// 1/(U^a V^b) = sum_i A_i/((U+V)^(a+b-i) U^i) + sum_i B_i/((U+V)^(a+b-i) V^i).
Rat binom_A(int a, int b, int i);  // (a+b-i-1)! / ((a-i)! (b-1)!), 1 <= i <= a
Rat binom_B(int a, int b, int i);  //  symmetric,                    1 <= i <= b

// A generalized doubling relation, fully expanded into Z sums:
//   sum(words) + sum(prods) = 0,
// where words live at the full weight (divergent entries still carry their
// leading ones and are regularized downstream) and prods are products of two
// lower-weight values Z(A)*Z(B) (B may be empty).
struct GdrTerms {
  std::vector<std::pair<Rat, SumWord>> words;
  std::vector<std::tuple<Rat, SumWord, SumWord>> prods;
};

// Specialized depth 2..4 generators; signs are +1/-1 and apply to the
// second..fourth index.  The first index is always positive.
GdrTerms gdr_depth2(int a, int b, int sb);
GdrTerms gdr_depth3(int a, int b, int c, int sb, int sc);
GdrTerms gdr_depth4(int a, int b, int c, int d, int sb, int sc, int sd);

// Any depth >= 2 via the defect-recursion; byte-identical content to the
// specialized forms at depths 2..4 (cross-checked in the tests).
GdrTerms gdr_generic(const SumWord& tuple);

}  // namespace zsum
