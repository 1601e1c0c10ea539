#include "zsum/tables.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "zsum/algebra.hpp"
#include "zsum/solver.hpp"

namespace zsum {

namespace {
std::shared_mutex g_cache_mu;
}

TargetRef fold_target(const IntegralWord& h, Kind kind, bool dedupe_duality) {
  if (kind == Kind::mzv && dedupe_duality) {
    IntegralWord d = mzv_dual(h);
    if (d.lex_less_mzv(h)) return {1, pack_word(d, kind)};
  }
  return {1, pack_word(h, kind)};
}

template <class F>
Session<F>::Session(RunConfig proto) : proto_(std::move(proto)) {
  if (proto_.policy == BasisPolicy::automatic)
    proto_.policy = proto_.kind == Kind::euler ? BasisPolicy::lyndon_odd : BasisPolicy::greedy;
}

template <class F>
const ReductionTable<F>& Session<F>::table(int weight) {
  auto it = tables_.find(weight);
  if (it != tables_.end()) return it->second;
  ReductionTable<F> t = run_reduction(*this, proto_.with_weight(weight));
  return tables_.emplace(weight, std::move(t)).first->second;
}

template <class F>
Expr<F> Session<F>::value_h(const IntegralWord& h) {
  if (proto_.drop_products) return Expr<F>::zero();  // products of lower weight vanish
  int w = h.weight();
  if (w == 0) return Expr<F>::of(Monomial::unit(), FieldOps<F>::one());
  if (h.convergent()) {
    const ReductionTable<F>* tab;
    {
      std::shared_lock lock(g_cache_mu);
      auto it = tables_.find(w);
      tab = it == tables_.end() ? nullptr : &it->second;
    }
    if (!tab) throw std::logic_error("value_h: table for weight " + std::to_string(w) +
                                     " not built");
    TargetRef ref = fold_target(h, proto_.kind, proto_.kind == Kind::mzv && proto_.use_duality);
    const Expr<F>* e = tab->find(ref.key);
    if (!e) throw std::logic_error("value_h: word missing from table: " + h.str());
    return *e;
  }
  uint64_t key = pack_word(h, proto_.kind).v;
  {
    std::shared_lock lock(g_cache_mu);
    auto it = divergent_cache_.find(key);
    if (it != divergent_cache_.end()) return it->second;
  }
  SignedSum z = h_word_value(h);
  Expr<F> reg = stuffle_regularize<F>(z.w, *this, [&](const SumWord& s) {
    return this->value_z(s);
  });
  reg.scale(FieldOps<F>::from_long(z.sign));
  {
    std::unique_lock lock(g_cache_mu);
    divergent_cache_.emplace(key, reg);
  }
  return reg;
}

template <class F>
Expr<F> Session<F>::value_z(const SumWord& z) {
  if (z.len == 0) return Expr<F>::of(Monomial::unit(), FieldOps<F>::one());
  int sign = 0;
  IntegralWord h = z_value_to_h_word(z, sign);
  Expr<F> e = value_h(h);
  if (sign < 0) e.negate();
  return e;
}

template <class F>
Expr<F> stuffle_regularize(const SumWord& z, Session<F>& session,
                           const std::function<Expr<F>(const SumWord&)>& resolve_now) {
  const int w = z.weight();
  // Words of weight w route through resolve_now (convergent) or recursion
  // (divergent); everything lighter comes out of the completed tables.
  std::function<Expr<F>(const SumWord&)> resolve_any = [&](const SumWord& s) -> Expr<F> {
    if (s.weight() < w) return session.value_z(s);
    if (!s.divergent()) return resolve_now(s);
    return stuffle_regularize<F>(s, session, resolve_now);
  };

  int k = z.leading_ones();
  if (k == 0) return resolve_any(z);

  if (k == z.len) {
    // All-ones word: k * Z_{1^k} = sinf * Z_{1^(k-1)} - sum of merged words.
    Expr<F> e;
    Expr<F> prev = k == 1 ? Expr<F>::of(Monomial::unit(), FieldOps<F>::one())
                          : resolve_any(z.suffix(1));
    AtomId sinf = AtomTable::instance().sinf();
    e.add(Expr<F>::mul(Expr<F>::of(Monomial::of_atom(sinf), FieldOps<F>::one()), prev));
    for (int i = 0; i <= k - 2; i++) {
      SumWord m;
      for (int j = 0; j < i; j++) m.push(1);
      m.push(2);
      for (int j = i + 2; j < k; j++) m.push(1);
      e.add(resolve_any(m), FieldOps<F>::from_long(-1));
    }
    e.scale(FieldOps<F>::one() / FieldOps<F>::from_long(k));
    return e;
  }

  // Peel the leading block: Z_{1^k} * Z_v = c0 * z + other terms.
  SumWord ones;
  for (int i = 0; i < k; i++) ones.push(1);
  SumWord v = z.suffix(k);
  auto terms = stuffle_z(ones, v);
  int64_t c0 = 0;
  Expr<F> e = Expr<F>::mul(resolve_any(ones), session.value_z(v));
  for (auto& [t, cnt] : terms) {
    if (t == z) {
      c0 = cnt;
      continue;
    }
    e.add(resolve_any(t), FieldOps<F>::from_long(-cnt));
  }
  if (c0 == 0) throw std::logic_error("stuffle_regularize: target vanished");
  e.scale(FieldOps<F>::one() / FieldOps<F>::from_long(c0));
  return e;
}

template class Session<Rat>;
template class Session<Fp>;
template Expr<Rat> stuffle_regularize<Rat>(const SumWord&, Session<Rat>&,
                                           const std::function<Expr<Rat>(const SumWord&)>&);
template Expr<Fp> stuffle_regularize<Fp>(const SumWord&, Session<Fp>&,
                                         const std::function<Expr<Fp>(const SumWord&)>&);

}  // namespace zsum
