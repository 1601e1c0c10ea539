#include "zsum/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zsum {

int mobius(long n) {
  if (n < 1) throw std::invalid_argument("mobius: n >= 1");
  int m = 1;
  for (long p = 2; p * p <= n; p++) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

long T_count(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("T_count: a,b >= 1");
  long g = std::gcd(a, b);
  Rat sum;
  for (long d = 1; d <= g; d++) {
    if (g % d) continue;
    int mu = mobius(d);
    if (!mu) continue;
    Rat term = rat_factorial(unsigned(a / d + b / d)) /
               (rat_factorial(unsigned(a / d)) * rat_factorial(unsigned(b / d)));
    sum += Rat(mu) * term;
  }
  sum /= Rat(a + b);
  if (!sum.fits_small() || sum.small_den() != 1)
    throw std::logic_error("T_count: non-integer");
  return sum.small_num();
}

long euler_count_E(int w, int d) {
  if (w <= d || d < 1) return 0;
  if ((w - d) % 2) return 0;
  return T_count((w - d) / 2, d);
}

namespace {
long linear_rec(int n, std::vector<long> init, int s2, int s3) {
  // x_n = s2*x_{n-2} + s3*x_{n-3}-style helpers are all Padovan-like;
  // Fibonacci/Lucas pass through the two-term variant below.
  std::vector<long> v = std::move(init);
  if (n <= int(v.size())) return v[n - 1];
  for (int i = int(v.size()); i < n; i++)
    v.push_back(s2 * v[i - 2] + s3 * v[i - 3]);
  return v[n - 1];
}
}  // namespace

long padovan(int n) { return linear_rec(n, {1, 1, 1}, 1, 1); }
long perrin(int n) { return linear_rec(n, {0, 2, 3}, 1, 1); }

long lucas(int n) {
  long a = 1, b = 3;  // L_1, L_2
  if (n == 1) return a;
  if (n == 2) return b;
  for (int i = 3; i <= n; i++) {
    long c = a + b;
    a = b;
    b = c;
  }
  return b;
}

long fibonacci(int n) {
  long a = 1, b = 1;
  if (n <= 2) return 1;
  for (int i = 3; i <= n; i++) {
    long c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::vector<long> weighted_lyndon_counts(const std::vector<int>& letter_weights, int maxw) {
  // p-series: x A'(x) / (1 - A(x)), then l(n) = (1/n) sum_{d|n} mu(n/d) p_d.
  std::vector<Rat> A(maxw + 1), Ap(maxw + 1);
  for (int w : letter_weights) {
    if (w < 1 || w > maxw) continue;
    A[w] += Rat(1);
    Ap[w] += Rat(w);  // x A' has coefficient w at x^w
  }
  // S = 1/(1-A):  S = 1 + A S.
  std::vector<Rat> S(maxw + 1);
  S[0] = Rat(1);
  for (int n = 1; n <= maxw; n++) {
    Rat s;
    for (int k = 1; k <= n; k++)
      if (!A[k].is_zero()) s += A[k] * S[n - k];
    S[n] = s;
  }
  std::vector<Rat> P(maxw + 1);
  for (int n = 1; n <= maxw; n++) {
    Rat s;
    for (int k = 1; k <= n; k++)
      if (!Ap[k].is_zero()) s += Ap[k] * S[n - k];
    P[n] = s;
  }
  std::vector<long> l(maxw + 1, 0);
  for (int n = 1; n <= maxw; n++) {
    Rat s;
    for (int d = 1; d <= n; d++) {
      if (n % d) continue;
      int mu = mobius(n / d);
      if (mu) s += Rat(mu) * P[d];
    }
    s /= Rat(n);
    if (!s.fits_small() || s.small_den() != 1)
      throw std::logic_error("weighted_lyndon_counts: non-integer");
    l[n] = s.small_num();
  }
  return l;
}

long witt_mzv(int w) { return weighted_lyndon_counts({2, 3}, w)[w]; }
long witt_euler_12(int w) { return weighted_lyndon_counts({1, 2}, w)[w]; }

long lyndon_count_odd(int w) {
  std::vector<int> letters;
  for (int k = 1; k <= w; k += 2) letters.push_back(k);
  return weighted_lyndon_counts(letters, w)[w];
}

namespace {

// Sparse trivariate series with exact coefficients, truncated at total
// x-degree maxw.
struct Series {
  int maxw;
  std::map<std::tuple<int, int, int>, Rat> c;

  void add(int w, int d, int p, const Rat& v) {
    if (w > maxw || v.is_zero()) return;
    Rat& r = c[{w, d, p}];
    r += v;
    if (r.is_zero()) c.erase({w, d, p});
  }
};

Series series_one(int maxw) {
  Series s{maxw, {}};
  s.add(0, 0, 0, Rat(1));
  return s;
}

Series mul(const Series& a, const Series& b) {
  Series r{a.maxw, {}};
  for (auto& [ka, va] : a.c)
    for (auto& [kb, vb] : b.c) {
      int w = std::get<0>(ka) + std::get<0>(kb);
      if (w > a.maxw) continue;
      r.add(w, std::get<1>(ka) + std::get<1>(kb), std::get<2>(ka) + std::get<2>(kb),
            va * vb);
    }
  return r;
}

// 1/(1 - x^aw y^ad z^ap) truncated.
Series geom(int maxw, int aw, int ad, int ap) {
  Series r{maxw, {}};
  for (int k = 0; k * aw <= maxw; k++) r.add(k * aw, k * ad, k * ap, Rat(1));
  return r;
}

// (1 - x^w y^d z^p)^e for integer e (negative allowed), truncated.
Series binom_pow(int maxw, int w, int d, int p, long e) {
  Series r{maxw, {}};
  long kmax = w > 0 ? maxw / w : 0;
  Rat coef(1);
  r.add(0, 0, 0, coef);
  // C(e, k) (-1)^k
  Rat run(1);
  for (long k = 1; k <= kmax; k++) {
    run *= Rat(e - (k - 1));
    run /= Rat(k);
    Rat v = run;
    if (k % 2) v = -v;
    r.add(int(w * k), int(d * k), int(p * k), v);
  }
  return r;
}

CountTable solve_filtration(const Series& target, int maxw, bool with_p) {
  // prod (1 - x^w y^d z^p)^{D} = target; peel exponents in graded order.
  Series prod = series_one(maxw);
  CountTable out;
  for (int w = 3; w <= maxw; w++) {
    int dmax = w;
    for (int d = 1; d <= dmax; d++) {
      int pmax = with_p ? w / 2 : 0;
      for (int p = 0; p <= pmax; p++) {
        Rat have;
        auto it = prod.c.find({w, d, p});
        if (it != prod.c.end()) have = it->second;
        Rat want;
        auto jt = target.c.find({w, d, p});
        if (jt != target.c.end()) want = jt->second;
        Rat diff = have - want;  // exponent D makes prod pick up -D here
        if (diff.is_zero()) continue;
        if (!diff.fits_small() || diff.small_den() != 1)
          throw std::logic_error("filtration: non-integer exponent");
        long D = diff.small_num();
        out[{w, d, p}] = D;
        prod = mul(prod, binom_pow(maxw, w, d, p, D));
      }
    }
  }
  return out;
}

}  // namespace

CountTable filtration_bk1(int maxw) {
  // 1 - x^3 y/(1-x^2) + x^12 y^2 (1-y^2) / ((1-x^4)(1-x^6))
  Series t = series_one(maxw);
  Series g2 = geom(maxw, 2, 0, 0);
  for (auto& [k, v] : g2.c) {
    int w = std::get<0>(k) + 3;
    if (w <= maxw) t.add(w, 1, 0, -v);
  }
  Series g46 = mul(geom(maxw, 4, 0, 0), geom(maxw, 6, 0, 0));
  for (auto& [k, v] : g46.c) {
    int w = std::get<0>(k) + 12;
    if (w > maxw) continue;
    t.add(w, 2, 0, v);
    t.add(w, 4, 0, -v);
  }
  return solve_filtration(t, maxw, false);
}

CountTable filtration_bbv(int maxw) {
  // correction numerator x^12 y^2 (1 - y^2 z)
  Series t = series_one(maxw);
  Series g2 = geom(maxw, 2, 0, 0);
  for (auto& [k, v] : g2.c) {
    int w = std::get<0>(k) + 3;
    if (w <= maxw) t.add(w, 1, 0, -v);
  }
  Series g46 = mul(geom(maxw, 4, 0, 0), geom(maxw, 6, 0, 0));
  for (auto& [k, v] : g46.c) {
    int w = std::get<0>(k) + 12;
    if (w > maxw) continue;
    t.add(w, 2, 0, v);
    t.add(w, 4, 1, -v);
  }
  return solve_filtration(t, maxw, true);
}

CountTable filtration_bk2(int maxw) {
  // (1 - x^2 - x^3 y) / (1 - x^2) = 1 - x^3 y / (1-x^2)
  Series t = series_one(maxw);
  Series g2 = geom(maxw, 2, 0, 0);
  for (auto& [k, v] : g2.c) {
    int w = std::get<0>(k) + 3;
    if (w <= maxw) t.add(w, 1, 0, -v);
  }
  return solve_filtration(t, maxw, false);
}

CountTable table_euler_E(int maxw) {
  CountTable out;
  for (int w = 3; w <= maxw; w++)
    for (int d = 1; d < w; d++) {
      long e = euler_count_E(w, d);
      if (e) out[{w, d, 0}] = e;
    }
  return out;
}

std::vector<SumWord> hoffman_basis(int w) {
  std::vector<SumWord> out;
  SumWord cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int v : {2, 3}) {
      if (v > left) continue;
      cur.push(v);
      rec(left - v);
      cur.len--;
    }
  };
  rec(w);
  return out;
}

std::vector<SumWord> odd_lyndon_set(int w) {
  std::vector<SumWord> out;
  SumWord cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (is_lyndon(cur)) out.push_back(cur);
      return;
    }
    for (int v = 3; v <= left; v += 2) {
      cur.push(v);
      rec(left - v);
      cur.len--;
    }
  };
  rec(w);
  std::sort(out.begin(), out.end(), [](const SumWord& a, const SumWord& b) {
    if (a.len != b.len) return a.len < b.len;
    return std::lexicographical_compare(b.c, b.c + b.len, a.c, a.c + a.len);
  });
  return out;
}

SumWord extend_word(const SumWord& w, int folds) {
  if (2 * folds > w.len) throw std::invalid_argument("extend_word: word too short");
  SumWord r;
  for (int i = 0; i < w.len; i++) r.push(i < 2 * folds ? w.c[i] - 1 : w.c[i]);
  for (int i = 0; i < 2 * folds; i++) r.push(1);
  return r;
}

namespace {
// Appendix-style pushdown bases; the recipe reproduces these wherever the
// reduction tables that decide the dependencies are available.
const std::map<int, std::vector<std::pair<std::vector<int>, std::vector<int>>>>&
fixtures() {
  // (basis word, extension source or empty)
  static const std::map<int, std::vector<std::pair<std::vector<int>, std::vector<int>>>>
      f = {
          {2, {{{2}, {}}}},
          {3, {{{3}, {}}}},
          {5, {{{5}, {}}}},
          {7, {{{7}, {}}}},
          {8, {{{5, 3}, {}}}},
          {9, {{{9}, {}}}},
          {10, {{{7, 3}, {}}}},
          {11, {{{11}, {}}, {{5, 3, 3}, {}}}},
          {12, {{{9, 3}, {}}, {{6, 4, 1, 1}, {7, 5}}}},
          {13, {{{13}, {}}, {{7, 3, 3}, {}}, {{5, 5, 3}, {}}}},
          {14, {{{11, 3}, {}}, {{9, 5}, {}}, {{5, 3, 3, 3}, {}}}},
          {15,
           {{{15}, {}}, {{7, 3, 5}, {}}, {{9, 3, 3}, {}}, {{6, 4, 3, 1, 1}, {7, 5, 3}}}},
          {16,
           {{{11, 5}, {}},
            {{13, 3}, {}},
            {{5, 5, 3, 3}, {}},
            {{7, 3, 3, 3}, {}},
            {{8, 6, 1, 1}, {9, 7}}}},
          {17,
           {{{17}, {}},
            {{7, 5, 5}, {}},
            {{9, 3, 5}, {}},
            {{9, 5, 3}, {}},
            {{11, 3, 3}, {}},
            {{5, 3, 3, 3, 3}, {}},
            {{6, 6, 3, 1, 1}, {7, 7, 3}}}},
          {18,
           {{{13, 5}, {}},
            {{15, 3}, {}},
            {{5, 5, 5, 3}, {}},
            {{7, 3, 3, 5}, {}},
            {{7, 3, 5, 3}, {}},
            {{9, 3, 3, 3}, {}},
            {{10, 6, 1, 1}, {11, 7}},
            {{6, 4, 3, 3, 1, 1}, {7, 5, 3, 3}}}},
      };
  return f;
}
}  // namespace

bool pushdown_basis_available(int w) { return fixtures().count(w) != 0; }

std::vector<BasisEntry> pushdown_basis(int w) {
  auto it = fixtures().find(w);
  if (it == fixtures().end())
    throw std::invalid_argument("pushdown basis not available at weight " +
                                std::to_string(w));
  std::vector<BasisEntry> out;
  for (auto& [word, src] : it->second) {
    BasisEntry e;
    for (int v : word) e.word.push(v);
    if (!src.empty()) {
      for (int v : src) e.source.push(v);
      e.folds = int(src.size() == e.word.len - 2 ? 1 : (e.word.len - src.size()) / 2);
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace zsum
