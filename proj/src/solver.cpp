#include "zsum/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zsum/algebra.hpp"
#include "zsum/gdr.hpp"

namespace zsum {

const char* rel_class_name(RelClass c) {
  switch (c) {
    case RelClass::stuffle: return "stuffle";
    case RelClass::shuffle: return "shuffle";
    case RelClass::doubling: return "doubling";
    case RelClass::gdr: return "gdr";
    case RelClass::pseudo_duality: return "pseudo-duality";
    case RelClass::duality: return "duality";
  }
  return "?";
}

std::vector<SumWord> all_sum_words(Kind kind, int weight, int max_depth,
                                   bool convergent_only) {
  std::vector<SumWord> out;
  SumWord cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      if (cur.len > 0) out.push_back(cur);
      return;
    }
    if (cur.len >= max_depth) return;
    for (int n = 1; n <= left; n++) {
      for (int s : {1, -1}) {
        if (s < 0 && kind == Kind::mzv) continue;
        if (convergent_only && cur.len == 0 && s == 1 && n == 1) continue;
        cur.push(s * n);
        rec(left - n);
        cur.len--;
      }
    }
  };
  rec(weight);
  return out;
}

int default_group_size(Kind kind, int weight) {
  double e = kind == Kind::mzv ? (weight - 1) / 2.0 : 1.5 * weight - 7;
  long g = long(std::pow(2.0, e));
  if (g < 1) g = 1;
  if (g > 4096) g = 4096;
  return int(g);
}

bool is_lyndon_odd_basis_word(const IntegralWord& h) {
  if (h.len == 2 && h.a[0] == 0 && h.a[1] == 1) return true;  // zeta_2
  SumWord m = to_sum(h);
  int mag[kMaxLetters];
  for (int i = 0; i < m.len; i++) {
    if (m.c[i] >= 0 || (-m.c[i]) % 2 == 0) return false;
    mag[i] = -m.c[i];
  }
  return is_lyndon(mag, m.len);
}

bool trivial_shuffle_skip(const SumWord& mult, const SumWord& other) {
  if (mult.len + other.len < 3) return false;
  auto count_ones = [](const SumWord& w) {
    int n = 0;
    for (int i = 0; i < w.len; i++) n += (w.c[i] == 1 || w.c[i] == -1);
    return n;
  };
  if (count_ones(mult) + count_ones(other) < 1) return false;
  int mw = mult.weight();
  if (mw < 2) return false;
  if (mw == 2 && count_ones(other) < 2) return false;
  return true;
}

namespace {

using Key = std::array<int64_t, 10>;

struct DescWithKey {
  Key key;
  RelDesc d;
};

uint64_t pack_m(const SumWord& m) { return pack_word(to_integral(m), Kind::euler).v; }
SumWord unpack_m(uint64_t v) { return to_sum(unpack_word(WordKey{v}, Kind::euler)); }

int count_abs(const SumWord& w, int val) {
  int n = 0;
  for (int i = 0; i < w.len; i++) n += (w.c[i] == val || w.c[i] == -val);
  return n;
}

int64_t packed_counts(const SumWord& u, const SumWord& v, int lo, int hi) {
  int64_t p = 0;
  for (int j = lo; j <= hi; j++) p = (p << 5) | int64_t(count_abs(u, j) + count_abs(v, j));
  return p;
}

int64_t sum_sq(const SumWord& w) {
  int64_t s = 0;
  for (int i = 0; i < w.len; i++) s += int64_t(w.c[i]) * w.c[i];
  return s;
}

int first_mag(const SumWord& w) { return w.len ? (w.c[0] < 0 ? -w.c[0] : w.c[0]) : 0; }

// Elimination preference: greater = eliminated first (deepest, then the
// smallest index field read as a multi-digit number).
bool eliminate_before(const SumWord& a, const SumWord& b) {
  if (a.len != b.len) return a.len > b.len;
  for (int i = 0; i < a.len && i < b.len; i++) {
    int ma = a.c[i] < 0 ? -a.c[i] : a.c[i];
    int mb = b.c[i] < 0 ? -b.c[i] : b.c[i];
    if (ma != mb) return ma < mb;
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

struct StreamBuilder {
  const RunConfig& cfg;
  std::vector<DescWithKey> out;

  void add(Key k, RelDesc d) { out.push_back({k, d}); }

  void stuffles(int eq_depth_cap) {
    if (!cfg.use_stuffle) return;
    int w = cfg.weight;
    std::vector<std::vector<SumWord>> conv(w);
    for (int k = 1; k < w; k++)
      conv[k] = all_sum_words(cfg.kind, k, cfg.max_depth > 0 ? cfg.max_depth : k, true);
    for (int wu = 1; wu <= w / 2; wu++) {
      int wv = w - wu;
      for (auto& u : conv[wu]) {
        for (auto& v : conv[wv]) {
          if (u.len + v.len > eq_depth_cap) continue;
          if (wu == wv && pack_m(v) < pack_m(u)) continue;
          Key k{};
          k[0] = 0;
          k[1] = u.len + v.len;
          k[2] = count_abs(u, 1) + count_abs(v, 1);
          k[3] = packed_counts(u, v, 2, 13);
          k[4] = packed_counts(u, v, 14, 25);
          k[5] = std::min<int64_t>(u.len, v.len);
          k[6] = -std::max(first_mag(u), first_mag(v));
          k[7] = int64_t(pack_m(u));
          k[8] = int64_t(pack_m(v));
          add(k, {RelClass::stuffle, pack_m(u), pack_m(v)});
        }
      }
    }
  }

  void shuffles(int eq_depth_cap) {
    if (!cfg.use_shuffle && !cfg.use_divergent_shuffle) return;
    int w = cfg.weight;
    // Multiplier of depth one (Z_1 is the basic divergent object); the other
    // factor may carry a single leading one.
    for (int wm = 1; wm < w; wm++) {
      for (int sm : {1, -1}) {
        if (sm < 0 && cfg.kind == Kind::mzv) continue;
        SumWord mult = make_sum_word({sm * wm});
        bool mult_div = mult.divergent();
        int wo = w - wm;
        auto others = all_sum_words(cfg.kind, wo,
                                    cfg.max_depth > 0 ? cfg.max_depth : wo, false);
        for (auto& other : others) {
          if (1 + other.len > eq_depth_cap) continue;
          bool other_div = other.divergent();
          if (other_div) {
            if (other.len >= 2 && other.c[1] == 1) continue;  // double divergence
            if (other.len == 1) continue;                      // Z_1 enumerated as mult
          }
          if (mult_div && other_div) continue;
          bool divergent_pair = mult_div || other_div;
          if (divergent_pair && !cfg.use_divergent_shuffle) continue;
          if (!divergent_pair && !cfg.use_shuffle) continue;
          if (other.len == 1) {  // unordered depth-one pairs
            int om = first_mag(other);
            if (other.divergent()) continue;
            if (wm > om) continue;
            if (wm == om && pack_m(mult) > pack_m(other)) continue;
          }
          if (cfg.skip_trivial_shuffles && !divergent_pair &&
              trivial_shuffle_skip(mult, other))
            continue;
          Key k{};
          k[0] = 1;
          k[1] = 1 + other.len;
          k[2] = -int64_t(wm);
          k[3] = count_abs(mult, 1) + count_abs(other, 1);
          k[4] = -std::max(sum_sq(mult), sum_sq(other));
          k[5] = -std::min(first_mag(mult), first_mag(other));
          k[6] = -(first_mag(mult) + first_mag(other));
          k[7] = int64_t(pack_m(mult));
          k[8] = int64_t(pack_m(other));
          add(k, {RelClass::shuffle, pack_m(mult), pack_m(other)});
        }
      }
    }
  }

  void doublings(int eq_depth_cap) {
    if (!cfg.use_doubling || cfg.kind == Kind::mzv) return;
    auto words = enumerate_targets(Kind::mzv, cfg.weight,
                                   std::min(eq_depth_cap, cfg.max_depth > 0 ? cfg.max_depth
                                                                            : cfg.weight),
                                   false);
    for (auto& hw : words) {
      Key k{};
      k[0] = 2;
      k[1] = hw.depth();
      k[2] = int64_t(pack_word(hw, Kind::euler).v);
      add(k, {RelClass::doubling, pack_word(hw, Kind::euler).v, 0});
    }
  }

  void gdrs() {
    if (!cfg.use_gdr || cfg.kind == Kind::mzv) return;
    int w = cfg.weight;
    // Depth-two instances only.  Deeper content reaches every weight anyway:
    // the lower-weight tables carry it and the stuffle equations lift it.
    int maxd = cfg.max_depth > 0 ? std::min(cfg.max_depth, 2) : 2;
    SumWord cur;
    std::function<void(int)> rec = [&](int left) {
      if (cur.len >= 2 && left == 0) {
        Key k{};
        k[0] = 3;
        k[1] = cur.len;
        k[2] = int64_t(pack_m(cur));
        add(k, {RelClass::gdr, pack_m(cur), 0});
      }
      if (left == 0 || cur.len >= maxd) return;
      for (int n = 1; n <= left; n++)
        for (int s : {1, -1}) {
          if (cur.len == 0 && s < 0) continue;  // first index forced positive
          cur.push(s * n);
          rec(left - n);
          cur.len--;
        }
    };
    rec(w);
  }

  void pseudo_dualities() {
    if (!cfg.use_pseudo_duality || cfg.kind == Kind::mzv) return;
    // Depth mixing: the image touches every depth, so only whole-weight runs
    // can use these.
    if (cfg.max_depth > 0 && cfg.max_depth < cfg.weight) return;
    for (auto& hw : enumerate_targets(Kind::euler, cfg.weight, cfg.weight, false)) {
      Key k{};
      k[0] = 4;
      k[1] = hw.depth();
      k[2] = int64_t(pack_word(hw, Kind::euler).v);
      add(k, {RelClass::pseudo_duality, pack_word(hw, Kind::euler).v, 0});
    }
  }
};

template <class F>
struct MasterState {
  Kind kind;
  bool dedupe;
  std::vector<uint64_t> keys;
  std::unordered_map<uint64_t, uint32_t> index;
  std::vector<Expr<F>> entry;
  std::vector<uint8_t> solved;

  uint32_t idx_of(uint64_t key) const {
    auto it = index.find(key);
    if (it == index.end())
      throw RunError("word outside the master expression: " +
                     unpack_word(WordKey{key}, kind).str());
    return it->second;
  }
};

// Shared context for expanding one weight's equations.
template <class F>
struct RunCtx {
  Session<F>& session;
  const RunConfig& cfg;
  MasterState<F>& master;
  std::unordered_map<uint64_t, Expr<F>> reg_cache;  // current-weight divergent words
  std::shared_mutex reg_mu;
  AtomId sinf_atom;

  TargetRef fold(const IntegralWord& h) const {
    return fold_target(h, cfg.kind, cfg.kind == Kind::mzv && cfg.use_duality);
  }

  // Current-weight divergent Z word -> expression in unresolved targets,
  // atoms and sinf (master-independent, cached).
  Expr<F> regularize_now(const SumWord& z) {
    uint64_t key = pack_m(z);
    {
      std::shared_lock lock(reg_mu);
      auto it = reg_cache.find(key);
      if (it != reg_cache.end()) return it->second;
    }
    Expr<F> e = stuffle_regularize<F>(z, session, [&](const SumWord& s) {
      int sg = 0;
      IntegralWord h = z_value_to_h_word(s, sg);
      TargetRef ref = fold(h);
      return Expr<F>::of(Monomial::of_pending(ref.key),
                         FieldOps<F>::from_long(sg * ref.sign));
    });
    {
      std::unique_lock lock(reg_mu);
      reg_cache.emplace(key, e);
    }
    return e;
  }

  // Adds expr (whose unresolved words are master targets) with current
  // master knowledge substituted in.
  void expand_into(ExprAccum<F>& acc, const Expr<F>& expr, const F& scale) {
    for (auto& t : expr.terms()) {
      F c = t.c;
      c *= scale;
      if (t.m.has_pending()) {
        uint32_t i = master.idx_of(t.m.pending);
        acc.add_product(t.m.without_pending(), c, master.entry[i]);
      } else {
        acc.add(t.m, c);
      }
    }
  }

  void add_current_z(ExprAccum<F>& acc, const SumWord& z, const F& coeff) {
    if (coeff.is_zero()) return;
    if (z.divergent()) {
      Expr<F> reg = regularize_now(z);
      expand_into(acc, reg, coeff);
      return;
    }
    int sg = 0;
    IntegralWord h = z_value_to_h_word(z, sg);
    TargetRef ref = fold(h);
    uint32_t i = master.idx_of(ref.key.v);
    F c = coeff;
    if (sg * ref.sign < 0) c = -c;
    acc.add_product(Monomial::unit(), c, master.entry[i]);
  }

  Expr<F> expand(const RelDesc& d) {
    ExprAccum<F> acc(64);
    if (cfg.drop_products) acc.set_drop_products(cfg.weight);
    switch (d.cls) {
      case RelClass::stuffle: {
        SumWord u = unpack_m(d.a), v = unpack_m(d.b);
        for (auto& [t, cnt] : stuffle_z(u, v))
          add_current_z(acc, t, FieldOps<F>::from_long(cnt));
        Expr<F> lhs = Expr<F>::mul(session.value_z(u), session.value_z(v));
        acc.add_expr(lhs, FieldOps<F>::from_long(-1));
        break;
      }
      case RelClass::shuffle: {
        SumWord mu = unpack_m(d.a), mv = unpack_m(d.b);
        IntegralWord hu = to_integral(mu), hv = to_integral(mv);
        for (auto& [t, cnt] : shuffle(hu, hv)) {
          SignedSum sz = h_word_value(t);
          add_current_z(acc, sz.w, FieldOps<F>::from_long(cnt * sz.sign));
        }
        Expr<F> lhs = Expr<F>::mul(session.value_h(hu), session.value_h(hv));
        acc.add_expr(lhs, FieldOps<F>::from_long(-1));
        break;
      }
      case RelClass::doubling: {
        IntegralWord hw = unpack_word(WordKey{d.a}, Kind::euler);
        TargetRef ref = fold(hw);
        acc.add_product(Monomial::unit(), FieldOps<F>::from_long(ref.sign),
                        master.entry[master.idx_of(ref.key.v)]);
        DoublingRhs rhs = doubling_rhs(hw);
        F factor = FieldOps<F>::from_rat(pow2(rhs.zeros));
        for (auto& [s, t] : rhs.terms) {
          SignedSum sz = h_word_value(t);
          F c = factor;
          if (s * sz.sign < 0) c = -c;
          add_current_z(acc, sz.w, -c);
        }
        break;
      }
      case RelClass::gdr: {
        SumWord tuple = unpack_m(d.a);
        GdrTerms g = gdr_generic(tuple);
        for (auto& [q, zw] : g.words) add_current_z(acc, zw, FieldOps<F>::from_rat(q));
        for (auto& [q, wa, wb] : g.prods) {
          Expr<F> p = Expr<F>::mul(session.value_z(wa), session.value_z(wb));
          acc.add_expr(p, FieldOps<F>::from_rat(q));
        }
        break;
      }
      case RelClass::pseudo_duality: {
        IntegralWord hw = unpack_word(WordKey{d.a}, Kind::euler);
        TargetRef ref = fold(hw);
        acc.add_product(Monomial::unit(), FieldOps<F>::from_long(ref.sign),
                        master.entry[master.idx_of(ref.key.v)]);
        for (auto& [s, t] : euler_pseudo_dual(hw)) {
          SignedSum sz = h_word_value(t);
          add_current_z(acc, sz.w, FieldOps<F>::from_long(-s * sz.sign));
        }
        break;
      }
      case RelClass::duality: {
        IntegralWord hw = unpack_word(WordKey{d.a}, Kind::mzv);
        acc.add_product(Monomial::unit(), FieldOps<F>::one(),
                        master.entry[master.idx_of(pack_word(hw, cfg.kind).v)]);
        IntegralWord dw = mzv_dual(hw);
        acc.add_product(Monomial::unit(), FieldOps<F>::from_long(-1),
                        master.entry[master.idx_of(pack_word(dw, cfg.kind).v)]);
        break;
      }
    }
    Expr<F> row = acc.take();
    if (d.cls == RelClass::shuffle || d.cls == RelClass::gdr ||
        d.cls == RelClass::pseudo_duality) {
      bool has_sinf = false;
      for (auto& t : row.terms())
        for (int i = 0; i < t.m.nf; i++)
          if (Monomial::factor_atom(t.m.f[i]) == sinf_atom) has_sinf = true;
      if (has_sinf) {
        if (d.cls == RelClass::shuffle)
          throw RunError("leftover divergence in shuffle relation");
        // Doubly-divergent instantiations of the generalized doubling
        // relations are not regularization-safe; the class is redundant
        // enough that they can be discarded.
        return Expr<F>::zero();
      }
    }
    return row;
  }
};

// Pivot choice.  Among the unresolved words of a row,基 eliminate the one we
// least want to keep; fixed policies never eliminate basis words.
template <class F>
struct PivotPolicy {
  Kind kind;
  BasisPolicy policy;
  std::unordered_set<uint64_t> fixed;

  bool is_basis(uint64_t key) const {
    if (policy == BasisPolicy::greedy) return false;
    if (policy == BasisPolicy::lyndon_odd)
      return is_lyndon_odd_basis_word(unpack_word(WordKey{key}, kind));
    return fixed.count(key) != 0;
  }

  // Returns index into row terms or -1.
  long pick(const Expr<F>& row) const {
    long best = -1;
    SumWord best_m;
    size_t np = row.pending_count();
    for (size_t i = 0; i < np; i++) {
      uint64_t key = row.terms()[i].m.pending;
      if (is_basis(key)) continue;
      SumWord m = to_sum(unpack_word(WordKey{key}, kind));
      if (best < 0 || eliminate_before(m, best_m)) {
        best = long(i);
        best_m = m;
      }
    }
    return best;
  }
};

template <class F>
void apply_group_subs(MasterState<F>& master,
                      const std::unordered_map<uint64_t, Expr<F>>& subs, int threads,
                      bool drop_products, int weight) {
  long n = long(master.entry.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#endif
  for (long i = 0; i < n; i++) {
    Expr<F>& e = master.entry[i];
    size_t np = e.pending_count();
    bool hit = false;
    for (size_t k = 0; k < np; k++)
      if (subs.count(e.terms()[k].m.pending)) {
        hit = true;
        break;
      }
    if (!hit) continue;
    ExprAccum<F> acc(e.size() * 2);
    if (drop_products) acc.set_drop_products(weight);
    for (auto& t : e.terms()) {
      auto it = t.m.has_pending() ? subs.find(t.m.pending) : subs.end();
      if (it != subs.end())
        acc.add_product(t.m.without_pending(), t.c, it->second);
      else
        acc.add(t.m, t.c);
    }
    e = acc.take();
  }
}

template <class F>
Expr<F> reduce_row(const Expr<F>& row, const std::unordered_map<uint64_t, Expr<F>>& subs,
                   bool drop_products, int weight) {
  size_t np = row.pending_count();
  bool hit = false;
  for (size_t k = 0; k < np; k++)
    if (subs.count(row.terms()[k].m.pending)) {
      hit = true;
      break;
    }
  if (!hit) return row;
  ExprAccum<F> acc(row.size() * 2);
  if (drop_products) acc.set_drop_products(weight);
  for (auto& t : row.terms()) {
    auto it = t.m.has_pending() ? subs.find(t.m.pending) : subs.end();
    if (it != subs.end())
      acc.add_product(t.m.without_pending(), t.c, it->second);
    else
      acc.add(t.m, t.c);
  }
  return acc.take();
}

AtomId promote_word_atom(const IntegralWord& h) {
  auto& at = AtomTable::instance();
  SumWord m = to_sum(h);
  bool all_pos = true, all_neg = true;
  for (int i = 0; i < m.len; i++) (m.c[i] > 0 ? all_neg : all_pos) = false;
  if (all_pos) return at.zword(m);
  if (all_neg) {
    if (m.len == 1) return -m.c[0] == 1 ? at.ln2() : at.eta(-m.c[0]);
    SumWord mag;
    for (int i = 0; i < m.len; i++) mag.push(-m.c[i]);
    return at.hword(mag);
  }
  return at.hmixed(m);
}

}  // namespace

std::vector<RelDesc> equation_stream(const RunConfig& cfg) {
  StreamBuilder sb{cfg, {}};
  int w = cfg.weight;
  int cap = cfg.max_depth > 0 ? cfg.max_depth : w;
  if (cfg.kind == Kind::mzv && cfg.use_duality) cap = std::min(cap, w / 2);
  sb.stuffles(cap);
  sb.shuffles(cap);
  sb.doublings(cap);
  sb.gdrs();
  sb.pseudo_dualities();
  std::stable_sort(sb.out.begin(), sb.out.end(),
                   [](const DescWithKey& a, const DescWithKey& b) { return a.key < b.key; });
  std::vector<RelDesc> out;
  out.reserve(sb.out.size());
  for (auto& d : sb.out) out.push_back(d.d);
  return out;
}

template <class F>
ReductionTable<F> run_reduction(Session<F>& session, RunConfig cfg) {
  auto t0 = std::chrono::steady_clock::now();
  if (cfg.policy == BasisPolicy::automatic)
    cfg.policy = cfg.kind == Kind::euler ? BasisPolicy::lyndon_odd : BasisPolicy::greedy;
  if (cfg.kind == Kind::mzv) {
    cfg.use_doubling = false;
    cfg.use_gdr = false;
  }
  if (cfg.weight < 1) throw RunError("run_reduction: weight must be positive");
  int threads = cfg.threads > 0 ? cfg.threads : 0;
#ifdef _OPENMP
  if (threads == 0) threads = omp_get_max_threads();
#else
  threads = 1;
#endif

  if (!cfg.drop_products)
    for (int w = 1; w < cfg.weight; w++) session.table(w);

  bool dedupe = cfg.kind == Kind::mzv && cfg.use_duality;
  int maxd = cfg.max_depth > 0 ? cfg.max_depth : cfg.weight;

  MasterState<F> master;
  master.kind = cfg.kind;
  master.dedupe = dedupe;
  auto targets = enumerate_targets(cfg.kind, cfg.weight, maxd, dedupe);
  master.keys.reserve(targets.size());
  for (auto& h : targets) {
    uint64_t key = pack_word(h, cfg.kind).v;
    master.index.emplace(key, uint32_t(master.keys.size()));
    master.keys.push_back(key);
  }
  master.entry.resize(master.keys.size());
  master.solved.assign(master.keys.size(), 0);
  for (size_t i = 0; i < master.keys.size(); i++)
    master.entry[i] = Expr<F>::of_pending(WordKey{master.keys[i]});

  RunCtx<F> ctx{session, cfg, master, {}, {}, AtomTable::instance().sinf()};

  PivotPolicy<F> policy;
  policy.kind = cfg.kind;
  policy.policy = cfg.policy;
  if (cfg.policy == BasisPolicy::fixed_set)
    for (auto& m : cfg.fixed_basis) {
      TargetRef ref = fold_target(to_integral(m), cfg.kind, dedupe);
      policy.fixed.insert(ref.key.v);
    }

  auto stream = equation_stream(cfg);
  RunStats stats;
  int group_size = cfg.group_size > 0 ? cfg.group_size
                                      : default_group_size(cfg.kind, cfg.weight);

  std::vector<Expr<F>> rows;
  size_t pos = 0;
  while (pos < stream.size()) {
    size_t end = std::min(stream.size(), pos + size_t(group_size));
    // Keep one group within one relation class so diagnostics stay honest.
    RelClass cls = stream[pos].cls;
    while (end > pos + 1 && stream[end - 1].cls != cls) end--;
    long n = long(end - pos);
    rows.assign(n, Expr<F>());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (long i = 0; i < n; i++) rows[i] = ctx.expand(stream[pos + i]);

    std::unordered_map<uint64_t, Expr<F>> subs;
    std::vector<uint64_t> new_pivots;
    for (long i = 0; i < n; i++) {
      Expr<F> row = reduce_row(rows[i], subs, cfg.drop_products, cfg.weight);
      rows[i] = Expr<F>();
      stats.equations_considered++;
      if (row.is_zero()) {
        stats.equations_trivial++;
        continue;
      }
      long p = policy.pick(row);
      if (p < 0) {
        if (row.pending_count() > 0)
          throw RunError("relation between basis elements from " +
                         std::string(rel_class_name(stream[pos + i].cls)) + " at weight " +
                         std::to_string(cfg.weight));
        throw RunError("inconsistent equation (nonzero constant) from " +
                       std::string(rel_class_name(stream[pos + i].cls)) + " at weight " +
                       std::to_string(cfg.weight));
      }
      uint64_t pivot = row.terms()[p].m.pending;
      F inv = FieldOps<F>::one() / row.terms()[p].c;
      Expr<F> value;
      auto& vt = value.terms_mut();
      vt.reserve(row.size() - 1);
      for (auto& t : row.terms()) {
        if (t.m.pending == pivot && !t.m.has_pending()) {
        }
        if (t.m.has_pending() && t.m.pending == pivot) continue;
        F c = t.c;
        c *= inv;
        vt.push_back({t.m, -c});
      }
      value.canonicalize();
      // Keep the group table fully reduced (above and below the diagonal).
      for (auto& kv : subs) kv.second = kv.second.substituted(WordKey{pivot}, value);
      subs.emplace(pivot, std::move(value));
      new_pivots.push_back(pivot);
    }
    if (!subs.empty()) {
      apply_group_subs(master, subs, threads, cfg.drop_products, cfg.weight);
      for (uint64_t p : new_pivots) master.solved[master.idx_of(p)] = 1;
      stats.substitutions += long(subs.size());
    }
    stats.groups++;
    size_t total = 0;
    for (auto& e : master.entry) total += e.size();
    stats.max_master_terms = std::max(stats.max_master_terms, total);
    pos = end;
  }

  // Promote the unresolved words to basis atoms and close the table.
  ReductionTable<F> table;
  table.kind = cfg.kind;
  table.weight = cfg.weight;
  table.max_depth = cfg.max_depth;
  table.drop_products = cfg.drop_products;
  table.prime = FieldOps<F>::exact_rational ? 0 : Fp::modulus();
  std::unordered_map<uint64_t, Expr<F>> promo;
  for (size_t i = 0; i < master.keys.size(); i++) {
    if (master.solved[i]) continue;
    IntegralWord h = unpack_word(WordKey{master.keys[i]}, cfg.kind);
    AtomId id = promote_word_atom(h);
    table.remaining.push_back(id);
    table.remaining_by_depth[h.depth()]++;
    promo.emplace(master.keys[i],
                  Expr<F>::of(Monomial::of_atom(id), FieldOps<F>::one()));
  }
  apply_group_subs(master, promo, threads, cfg.drop_products, cfg.weight);
  table.order.reserve(master.keys.size());
  for (size_t i = 0; i < master.keys.size(); i++) {
    table.order.push_back(WordKey{master.keys[i]});
    table.values.emplace(master.keys[i], std::move(master.entry[i]));
  }
  stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  table.stats = stats;
  return table;
}

template <class F>
bool verify_relation(const Expr<F>& expr, const ReductionTable<F>& table,
                     Session<F>& session) {
  ExprAccum<F> acc(expr.size() * 4);
  for (auto& t : expr.terms()) {
    if (!t.m.has_pending()) {
      acc.add(t.m, t.c);
      continue;
    }
    const Expr<F>* v = table.find(WordKey{t.m.pending});
    if (!v) {
      IntegralWord h = unpack_word(WordKey{t.m.pending}, table.kind);
      if (table.kind == Kind::mzv) {
        v = table.find(pack_word(mzv_dual(h), table.kind));
      }
      if (!v) throw RunError("verify_relation: word not covered: " + h.str());
    }
    acc.add_product(t.m.without_pending(), t.c, *v);
  }
  (void)session;
  return acc.take().is_zero();
}

template ReductionTable<Rat> run_reduction<Rat>(Session<Rat>&, RunConfig);
template ReductionTable<Fp> run_reduction<Fp>(Session<Fp>&, RunConfig);
template bool verify_relation<Rat>(const Expr<Rat>&, const ReductionTable<Rat>&,
                                   Session<Rat>&);
template bool verify_relation<Fp>(const Expr<Fp>&, const ReductionTable<Fp>&, Session<Fp>&);

}  // namespace zsum
