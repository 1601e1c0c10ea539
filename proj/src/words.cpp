#include "zsum/words.hpp"

#include <algorithm>

namespace zsum {

std::string IntegralWord::str() const {
  std::string s = "(";
  for (int i = 0; i < len; i++) {
    if (i) s += ",";
    s += std::to_string(int(a[i]));
  }
  return s + ")";
}

std::string SumWord::str() const {
  std::string s = "Z(";
  for (int i = 0; i < len; i++) {
    if (i) s += ",";
    s += std::to_string(int(c[i]));
  }
  return s + ")";
}

SumWord make_sum_word(std::initializer_list<int> idx) {
  SumWord w;
  for (int v : idx) w.push(v);
  return w;
}

IntegralWord make_integral_word(std::initializer_list<int> letters) {
  IntegralWord w;
  for (int v : letters) {
    if (v < -1 || v > 1) throw std::invalid_argument("letter outside {0,1,-1}");
    w.push(Letter(v));
  }
  return w;
}

IntegralWord to_integral(const SumWord& w) {
  IntegralWord r;
  for (int i = 0; i < w.len; i++) {
    int n = w.c[i] < 0 ? -w.c[i] : w.c[i];
    for (int z = 0; z < n - 1; z++) r.push(0);
    r.push(w.c[i] < 0 ? -1 : 1);
  }
  return r;
}

SumWord to_sum(const IntegralWord& w) {
  if (!w.ends_nonzero())
    throw std::invalid_argument("to_sum: trailing zero in " + w.str());
  SumWord r;
  int zeros = 0;
  for (int i = 0; i < w.len; i++) {
    if (w.a[i] == 0) {
      zeros++;
    } else {
      int n = zeros + 1;
      r.push(w.a[i] < 0 ? -n : n);
      zeros = 0;
    }
  }
  return r;
}

SignedSum h_word_value(const IntegralWord& h) {
  SumWord m = to_sum(h);  // m-notation: indices with the letter signs
  SignedSum out;
  int prev = 1;
  for (int i = 0; i < m.len; i++) {
    int s = m.c[i] < 0 ? -1 : 1;
    int n = m.c[i] < 0 ? -m.c[i] : m.c[i];
    if (s < 0) out.sign = -out.sign;
    out.w.push(prev * s * n);
    prev = s;
  }
  return out;
}

IntegralWord z_value_to_h_word(const SumWord& z, int& sign_out) {
  SumWord m;
  int s_prev = 1, sign = 1;
  for (int i = 0; i < z.len; i++) {
    int sp = z.c[i] < 0 ? -1 : 1;
    int n = z.c[i] < 0 ? -z.c[i] : z.c[i];
    int s = s_prev * sp;  // m-notation sign: running product of Z signs
    if (s < 0) sign = -sign;
    m.push(s * n);
    s_prev = s;
  }
  sign_out = sign;
  return to_integral(m);
}

IntegralWord mzv_dual(const IntegralWord& w) {
  if (!w.is_mzv()) throw std::invalid_argument("mzv_dual: Euler letters in " + w.str());
  if (!(w.len >= 2 && w.a[0] == 0 && w.a[w.len - 1] == 1))
    throw std::invalid_argument("mzv_dual: word not convergent: " + w.str());
  IntegralWord r;
  r.len = w.len;
  for (int i = 0; i < w.len; i++) r.a[i] = Letter(1 - w.a[w.len - 1 - i]);
  return r;
}

std::vector<std::pair<int, IntegralWord>> euler_pseudo_dual(const IntegralWord& w) {
  if (!w.convergent())
    throw std::invalid_argument("euler_pseudo_dual: divergent word");
  std::vector<std::pair<int, IntegralWord>> terms;
  terms.push_back({1, IntegralWord{}});
  for (int i = w.len - 1; i >= 0; i--) {
    Letter l = w.a[i];
    std::vector<std::pair<int, IntegralWord>> next;
    next.reserve(terms.size() * 2);
    for (auto& [s, word] : terms) {
      auto emit = [&](int sgn, Letter nl) {
        auto t = word;
        t.push(nl);
        next.push_back({s * sgn, t});
      };
      if (l == 0) {  // A -> B (+) C
        emit(1, 1);
        emit(1, -1);
      } else if (l == 1) {  // B -> A (-) C
        emit(1, 0);
        emit(-1, -1);
      } else {  // C -> C
        emit(1, -1);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

bool is_lyndon(const int* idx, int n) {
  if (n <= 0) return false;
  // Maximal among rotations, with larger integers ordered first; strict
  // maximality rules out periodic words.
  for (int r = 1; r < n; r++) {
    for (int i = 0; i < n; i++) {
      int a = idx[i];
      int b = idx[(i + r) % n];
      if (a != b) {
        if (a < b) return false;  // rotation is bigger
        break;
      }
      if (i == n - 1) return false;  // periodic
    }
  }
  return true;
}

bool is_lyndon(const SumWord& w) {
  int buf[kMaxLetters];
  for (int i = 0; i < w.len; i++) buf[i] = w.c[i];
  return is_lyndon(buf, w.len);
}

std::vector<IntegralWord> enumerate_targets(Kind kind, int weight, int max_depth,
                                            bool dedupe_duality) {
  if (weight < 1) throw std::invalid_argument("enumerate_targets: weight < 1");
  std::vector<IntegralWord> out;
  IntegralWord cur;
  cur.len = uint8_t(weight);
  // Depth-first over letter strings; last letter nonzero, first letter != +1.
  std::function<void(int, int)> rec = [&](int pos, int depth) {
    if (depth > max_depth) return;
    if (pos == weight) {
      if (cur.a[weight - 1] == 0) return;
      if (cur.a[0] == 1) return;
      if (kind == Kind::mzv && dedupe_duality) {
        IntegralWord d = mzv_dual(cur);
        if (d.lex_less_mzv(cur)) return;
      }
      out.push_back(cur);
      return;
    }
    for (Letter l : {Letter(0), Letter(1), Letter(-1)}) {
      if (l == -1 && kind == Kind::mzv) continue;
      cur.a[pos] = l;
      rec(pos + 1, depth + (l != 0));
    }
  };
  if (kind == Kind::mzv && weight < 2) return out;
  rec(0, 0);
  return out;
}

WordKey pack_word(const IntegralWord& w, Kind kind) {
  uint64_t radix = kind == Kind::mzv ? 2 : 3;
  int maxlen = kind == Kind::mzv ? 62 : 39;
  if (w.len > maxlen)
    throw std::length_error("pack_word: weight beyond 64-bit key range");
  uint64_t v = 1;
  for (int i = 0; i < w.len; i++) {
    uint64_t d;
    if (w.a[i] == 0) d = 0;
    else if (w.a[i] == 1) d = 1;
    else {
      if (kind == Kind::mzv) throw std::invalid_argument("pack_word: -1 letter in MZV key");
      d = 2;
    }
    v = v * radix + d;
  }
  return WordKey{v};
}

IntegralWord unpack_word(WordKey k, Kind kind) {
  uint64_t radix = kind == Kind::mzv ? 2 : 3;
  IntegralWord w;
  Letter tmp[kMaxLetters];
  int n = 0;
  uint64_t v = k.v;
  while (v > 1) {
    uint64_t d = v % radix;
    v /= radix;
    tmp[n++] = d == 0 ? Letter(0) : (d == 1 ? Letter(1) : Letter(-1));
    if (n > kMaxLetters) throw std::invalid_argument("unpack_word: corrupt key");
  }
  if (v != 1) throw std::invalid_argument("unpack_word: corrupt key");
  for (int i = n - 1; i >= 0; i--) w.push(tmp[i]);
  return w;
}

}  // namespace zsum
