#include "zsum/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zsum/pushdown.hpp"

namespace zsum {

namespace {

// Tail constants calibrated once against zeta_2, zeta_3 and zeta_{2,1}.
long double g_tail_c[kMaxLetters + 1];
bool g_calibrated = false;
std::mutex g_cal_mu;

long double raw_partial(const SumWord& w, long N, long double* prev_out) {
  int d = w.len;
  long double S[kMaxLetters + 1];
  for (int i = 0; i <= d; i++) S[i] = i == d ? 1.0L : 0.0L;
  long double prev = 0;
  for (long k = 1; k <= N; k++) {
    if (k == N) prev = S[0];
    long double kd = (long double)k;
    for (int j = 0; j < d; j++) {
      int n = w.c[j] < 0 ? -w.c[j] : w.c[j];
      long double term = S[j + 1];
      if (w.c[j] < 0 && (k & 1)) term = -term;
      S[j] += term / powl(kd, n);
    }
  }
  if (prev_out) *prev_out = prev;
  return S[0];
}

long double tail_model(int depth, long N) {
  long double l = logl((long double)N);
  long double u = 1.0L / N;
  for (int i = 0; i < depth - 1; i++) u *= l;
  return u;
}

void calibrate() {
  std::lock_guard<std::mutex> lock(g_cal_mu);
  if (g_calibrated) return;
  for (int i = 0; i <= kMaxLetters; i++) g_tail_c[i] = 4.0L;
  // Observed tail/model ratios at moderate N, with headroom.
  const long N = 100000;
  auto ratio = [&](const SumWord& w, long double exact) {
    long double v = raw_partial(w, N, nullptr);
    return fabsl(v - exact) / tail_model(w.len, N);
  };
  long double z2 = 1.6449340668482264365L;
  long double z3 = 1.2020569031595942854L;
  long double r1 = ratio(make_sum_word({2}), z2);
  long double r2 = ratio(make_sum_word({3}), z3);
  long double r3 = ratio(make_sum_word({2, 1}), z3);  // Z(2,1) = zeta_3
  g_tail_c[1] = 4.0L * std::max(r1, r2) + 1.0L;
  for (int d = 2; d <= kMaxLetters; d++) g_tail_c[d] = 4.0L * r3 + 2.0L;
  g_calibrated = true;
}

}  // namespace

NumericValue eval_sum(const SumWord& w, long N) {
  if (w.len == 0) return {1.0L, 0.0L};
  if (w.divergent()) throw std::invalid_argument("eval_sum: divergent word " + w.str());
  if (N < 1000) N = 1000;
  calibrate();
  NumericValue out;
  if (w.c[0] < 0) {
    // Alternating outer sum: average the last two partials.
    long double prev = 0;
    long double v = raw_partial(w, N, &prev);
    out.value = (v + prev) / 2;
    out.error_bound = tail_model(w.len, N) / N + fabsl(v - prev) / N + 1e-17L;
    return out;
  }
  long double half = raw_partial(w, N / 2, nullptr);
  long double full = raw_partial(w, N, nullptr);
  long double uN = tail_model(w.len, N), uH = tail_model(w.len, N / 2);
  long double c = (full - half) / (uH - uN);
  out.value = full + c * uN;
  out.error_bound = g_tail_c[w.len] * uN / logl((long double)N) + 1e-17L;
  if (w.c[0] == 2 && w.len == 1) out.error_bound += 1.0L / ((long double)N * N);
  return out;
}

long double eval_zeta(int k) {
  if (k < 2) throw std::invalid_argument("eval_zeta: k >= 2");
  // Euler-Maclaurin with a short head.
  const long M = 20000;
  long double s = 0;
  for (long n = 1; n <= M; n++) s += 1.0L / powl((long double)n, k);
  long double Ml = (long double)M;
  s += 1.0L / ((k - 1) * powl(Ml, k - 1));
  s -= 1.0L / (2 * powl(Ml, k));
  s += k / (12.0L * powl(Ml, k + 1));
  return s;
}

long double eval_li_half(int n) {
  long double s = 0, p = 1;
  for (int k = 1; k < 200; k++) {
    p *= 0.5L;
    s += p / powl((long double)k, n);
  }
  return s;
}

long double eval_alpha(int n) {
  if (n < 2) throw std::invalid_argument("eval_alpha: n >= 2");
  long double ln2 = logl(2.0L);
  long double t = powl(ln2, n);
  for (int i = 2; i <= n; i++) t /= i;
  long double u = eval_zeta(2) / 2 * ((n - 2) == 0 ? 1.0L : powl(ln2, n - 2));
  for (int i = 2; i <= n - 2; i++) u /= i;
  long double corr = t - u;
  if (n % 2) corr = -corr;
  return eval_li_half(n) + corr;
}

NumericValue eval_atom(AtomId id, long N) {
  auto& at = AtomTable::instance();
  const AtomInfo& info = at.info(id);
  switch (info.tag) {
    case AtomTag::sinf:
      throw std::invalid_argument("eval_atom: sinf has no finite value");
    case AtomTag::ln2:
      return {logl(2.0L), 1e-18L};
    case AtomTag::eta: {
      int k = info.weight;
      long double z = eval_zeta(k);
      return {(1.0L - powl(2.0L, 1 - k)) * z, 1e-15L};
    }
    case AtomTag::zword: {
      if (info.idx.len == 1 && info.idx.c[0] >= 2)
        return {eval_zeta(info.idx.c[0]), 1e-15L};
      return eval_sum(info.idx, N);
    }
    case AtomTag::hword: {
      SumWord m;
      for (int i = 0; i < info.idx.len; i++) m.push(-info.idx.c[i]);
      int sign = 0;
      IntegralWord h = to_integral(m);
      SignedSum z = h_word_value(h);
      (void)sign;
      NumericValue v = eval_sum(z.w, N);
      v.value *= z.sign;
      return v;
    }
    case AtomTag::hmixed: {
      SignedSum z = h_word_value(to_integral(info.idx));
      NumericValue v = eval_sum(z.w, N);
      v.value *= z.sign;
      return v;
    }
    case AtomTag::aword: {
      NumericValue out{0, 0};
      for (auto& [sgn, zw] : expand_A_z(info.idx)) {
        NumericValue v = eval_sum(zw, N);
        out.value += sgn * v.value;
        out.error_bound += v.error_bound;
      }
      return out;
    }
  }
  throw std::logic_error("eval_atom: unhandled tag");
}

NumericValue eval_expr(const Expr<Rat>& e, Kind kind, long N) {
  static std::map<std::pair<uint32_t, long>, NumericValue> atom_cache;
  static std::mutex mu;
  NumericValue out{0, 0};
  for (auto& t : e.terms()) {
    long double v = t.c.to_long_double();
    long double b = 0;
    for (int i = 0; i < t.m.nf; i++) {
      AtomId id = Monomial::factor_atom(t.m.f[i]);
      unsigned p = Monomial::factor_pow(t.m.f[i]);
      NumericValue av;
      {
        std::lock_guard<std::mutex> lock(mu);
        auto it = atom_cache.find({id, N});
        if (it != atom_cache.end()) {
          av = it->second;
        } else {
          av = eval_atom(id, N);
          atom_cache.emplace(std::make_pair(id, N), av);
        }
      }
      for (unsigned q = 0; q < p; q++) {
        b = fabsl(v) * av.error_bound + fabsl(av.value) * b;
        v *= av.value;
      }
    }
    if (t.m.has_pending()) {
      SignedSum z = h_word_value(unpack_word(WordKey{t.m.pending}, kind));
      NumericValue wv = eval_sum(z.w, N);
      b = fabsl(v) * wv.error_bound + fabsl(wv.value * z.sign) * b;
      v *= wv.value * z.sign;
    }
    out.value += v;
    out.error_bound += b + 1e-18L;
  }
  return out;
}

NumericCheckReport numeric_check(const ReductionTable<Rat>& table, double tolerance,
                                 long N, size_t keep_worst) {
  NumericCheckReport rep;
  std::vector<NumericCheckLine> lines(table.order.size());
  long n = long(table.order.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long i = 0; i < n; i++) {
    WordKey k = table.order[i];
    IntegralWord h = unpack_word(k, table.kind);
    SignedSum z = h_word_value(h);
    NumericValue lhs = eval_sum(z.w, N);
    lhs.value *= z.sign;
    NumericValue rhs = eval_expr(*table.find(k), table.kind, N);
    NumericCheckLine line;
    line.word = z.w;
    line.delta = fabsl(lhs.value - rhs.value);
    line.bound = lhs.error_bound + rhs.error_bound;
    line.pass = line.delta <= tolerance + line.bound;
    lines[i] = line;
  }
  for (auto& l : lines) {
    rep.checked++;
    if (!l.pass) rep.failed++;
  }
  std::sort(lines.begin(), lines.end(), [](const NumericCheckLine& a, const NumericCheckLine& b) {
    long double ra = a.delta / (a.bound + 1e-30L);
    long double rb = b.delta / (b.bound + 1e-30L);
    return ra > rb;
  });
  if (lines.size() > keep_worst) lines.resize(keep_worst);
  rep.worst = std::move(lines);
  return rep;
}

}  // namespace zsum
