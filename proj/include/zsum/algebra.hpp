#pragma once

#include <cstdint>
#include <vector>

#include "zsum/words.hpp"

namespace zsum {

// Stuffle merge of two indices: sign(m)*sign(n)*(|m|+|n|).
inline int amp_merge(int m, int n) {
  int s = ((m < 0) != (n < 0)) ? -1 : 1;
  int mag = (m < 0 ? -m : m) + (n < 0 ? -n : n);
  return s * mag;
}

// Shuffle product of two integral words with multiplicities collected.
// Total multiplicity is C(|u|+|v|, |u|); every term keeps depth(u)+depth(v).
std::vector<std::pair<IntegralWord, int64_t>> shuffle(const IntegralWord& u,
                                                      const IntegralWord& v);

// Straightforward recursive shuffle without collection; only used to
// cross-check the collected version.
std::vector<std::pair<IntegralWord, int64_t>> shuffle_reference(const IntegralWord& u,
                                                                const IntegralWord& v);

// Quasi-shuffle of nested sums.  Z convention: merged terms enter with +1,
// S convention with -1 per merge.
std::vector<std::pair<SumWord, int64_t>> stuffle_z(const SumWord& u, const SumWord& v);
std::vector<std::pair<SumWord, int64_t>> stuffle_s(const SumWord& u, const SumWord& v);

// H_w(1) = 2^zeros * sum of sign*term over all 1 -> +/-1 assignments,
// with a sign flip per -1.  Only defined for {0,1} words.
struct DoublingRhs {
  int zeros;
  std::vector<std::pair<int, IntegralWord>> terms;
};
DoublingRhs doubling_rhs(const IntegralWord& w);

}  // namespace zsum
