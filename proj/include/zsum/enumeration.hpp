#pragma once

#include <map>
#include <string>
#include <vector>

#include "zsum/rational.hpp"
#include "zsum/words.hpp"

namespace zsum {

int mobius(long n);
// Moebius-transformed binomial: (1/(a+b)) sum_{d | gcd(a,b)} mu(d) ((a+b)/d)! / ((a/d)! (b/d)!).
long T_count(int a, int b);
// Independent Euler sums at fixed weight and depth: T((w-d)/2, d) when the
// parities match and w > d, zero otherwise.
long euler_count_E(int w, int d);

// Named integer sequences (1-based).
long padovan(int n);    // 1,1,1,2,2,3,...
long perrin(int n);     // 0,2,3,2,5,...
long lucas(int n);      // 1,3,4,7,11,...
long fibonacci(int n);  // 1,1,2,3,5,...

// Lyndon-word counts over a weighted alphabet (multiplicity of letters per
// weight), via the Moebius/Witt transform of the power-sum series.
std::vector<long> weighted_lyndon_counts(const std::vector<int>& letter_weights, int maxw);
long witt_mzv(int w);        // alphabet {2,3}
long witt_euler_12(int w);   // alphabet {1,2}
long lyndon_count_odd(int w);  // alphabet {1,3,5,...}, the program basis size

// Fixed-weight, fixed-depth basis size tables from generating-function
// filtrations.  Key: (w, d, p); bk1/bk2 use p = 0 only.
using CountTable = std::map<std::tuple<int, int, int>, long>;
CountTable filtration_bk1(int maxw);    // MZVs by weight and depth
CountTable filtration_bk2(int maxw);    // MZVs as Euler sums, minimal depth
CountTable filtration_bbv(int maxw);    // with the pushdown grading
CountTable table_euler_E(int maxw);     // from the closed form

// Hoffman words: all {2,3} compositions of w.
std::vector<SumWord> hoffman_basis(int w);
// Lyndon words of positive odd indices >= 3 summing to w
// (depth ascending, then index field descending).
std::vector<SumWord> odd_lyndon_set(int w);

// n-fold extension: subtract 1 from the first 2n indices, append 2n ones.
SumWord extend_word(const SumWord& w, int folds);

struct BasisEntry {
  SumWord word;
  int folds = 0;        // 0: taken from L_w
  SumWord source;       // extension source for folds > 0
};

// The pushdown basis P_w.  Desk-scale weights are backed by the shipped
// fixtures (which the construction reproduces where tables exist).
std::vector<BasisEntry> pushdown_basis(int w);
bool pushdown_basis_available(int w);

}  // namespace zsum
