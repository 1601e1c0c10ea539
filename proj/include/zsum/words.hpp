#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zsum {

enum class Kind : uint8_t { mzv, euler };

// Letters of the integral alphabet: 0, +1, -1.
using Letter = int8_t;

constexpr int kMaxLetters = 40;

// A word in iterated-integral notation.  Weight = number of letters.
// Words standing for nested sums never end in 0; convergent words do not
// start with +1.
struct IntegralWord {
  uint8_t len = 0;
  Letter a[kMaxLetters] = {};

  int weight() const { return len; }
  int depth() const {
    int d = 0;
    for (int i = 0; i < len; i++) d += a[i] != 0;
    return d;
  }
  bool ends_nonzero() const { return len > 0 && a[len - 1] != 0; }
  bool convergent() const { return len > 0 && a[0] != 1; }
  bool is_mzv() const {
    for (int i = 0; i < len; i++)
      if (a[i] < 0) return false;
    return true;
  }
  void push(Letter l) {
    if (len >= kMaxLetters) throw std::length_error("IntegralWord: too long");
    a[len++] = l;
  }
  bool operator==(const IntegralWord& o) const {
    return len == o.len && std::memcmp(a, o.a, len) == 0;
  }
  // Letter-wise lexicographic order with 0 < 1 (MZV duality dedupe).
  bool lex_less_mzv(const IntegralWord& o) const {
    for (int i = 0; i < len && i < o.len; i++)
      if (a[i] != o.a[i]) return a[i] < o.a[i];
    return len < o.len;
  }
  std::string str() const;
};

// A word in nested-sum notation: signed nonzero indices.
// Weight = sum of |c_i|, depth = number of indices.
struct SumWord {
  uint8_t len = 0;
  int16_t c[kMaxLetters] = {};

  int weight() const {
    int w = 0;
    for (int i = 0; i < len; i++) w += c[i] < 0 ? -c[i] : c[i];
    return w;
  }
  int depth() const { return len; }
  bool divergent() const { return len > 0 && c[0] == 1; }
  int leading_ones() const {
    int k = 0;
    while (k < len && c[k] == 1) k++;
    return k;
  }
  void push(int v) {
    if (v == 0) throw std::invalid_argument("SumWord: zero index");
    if (len >= kMaxLetters) throw std::length_error("SumWord: too long");
    c[len++] = int16_t(v);
  }
  SumWord suffix(int from) const {
    SumWord s;
    for (int i = from; i < len; i++) s.push(c[i]);
    return s;
  }
  bool operator==(const SumWord& o) const {
    return len == o.len && std::memcmp(c, o.c, sizeof(int16_t) * len) == 0;
  }
  std::string str() const;
};

SumWord make_sum_word(std::initializer_list<int> idx);
IntegralWord make_integral_word(std::initializer_list<int> letters);

// Index re-encodings of one and the same nested sum: n <-> (n-1 zeros, +1),
// -n <-> (n-1 zeros, -1).
IntegralWord to_integral(const SumWord& w);
SumWord to_sum(const IntegralWord& w);  // rejects trailing zeros

// H-function words in m-notation carry different signs than the Z-sums with
// the same integral string.  H_{m}(1) = sign * Z(z), where the k-th Z index
// sign is s_{k-1} s_k for the m-notation signs s and the overall sign is
// (-1)^{#negative m}.
struct SignedSum {
  int sign = 1;
  SumWord w;
};
SignedSum h_word_value(const IntegralWord& h);
IntegralWord z_value_to_h_word(const SumWord& z, int& sign_out);

// Duality on convergent MZV words: reverse, swap 0 <-> 1.  Involution.
IntegralWord mzv_dual(const IntegralWord& w);

// Euler pseudo-duality: reverse the letters, then 0 -> 1(+)/-1(+),
// 1 -> 0(+)/-1(-), -1 -> -1.  Expands to 2^k signed words of equal weight.
std::vector<std::pair<int, IntegralWord>> euler_pseudo_dual(const IntegralWord& w);

// Rotation-maximal aperiodic words, larger indices to the left.
bool is_lyndon(const int* idx, int n);
bool is_lyndon(const SumWord& w);

// All convergent target words of one weight, integral notation.
// For MZVs with dedupe_duality, one representative per dual pair
// (the lexicographically first).
std::vector<IntegralWord> enumerate_targets(Kind kind, int weight, int max_depth,
                                            bool dedupe_duality);

// Packed word key: one big base-3 (Euler) or base-2 (MZV) number with a
// leading marker digit, so different lengths cannot collide.
struct WordKey {
  uint64_t v = 0;
  bool operator==(const WordKey& o) const { return v == o.v; }
  bool operator!=(const WordKey& o) const { return v != o.v; }
  bool operator<(const WordKey& o) const { return v < o.v; }
};

WordKey pack_word(const IntegralWord& w, Kind kind);
IntegralWord unpack_word(WordKey k, Kind kind);

struct WordKeyHash {
  size_t operator()(const WordKey& k) const {
    uint64_t x = k.v;
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return size_t(x);
  }
};

}  // namespace zsum
