#include "zsum/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsum {

void Monomial::mul_atom(AtomId id, unsigned pow) {
  if (pow == 0) return;
  int i = 0;
  while (i < nf && factor_atom(f[i]) < id) i++;
  if (i < nf && factor_atom(f[i]) == id) {
    unsigned np = factor_pow(f[i]) + pow;
    if (np > 63) throw std::overflow_error("Monomial: power overflow");
    f[i] = make_factor(id, np);
    return;
  }
  if (nf >= kMaxFactors) throw std::overflow_error("Monomial: too many distinct atoms");
  for (int j = nf; j > i; j--) f[j] = f[j - 1];
  f[i] = make_factor(id, pow);
  nf++;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  if (a.pending && b.pending)
    throw std::invalid_argument("Monomial::mul: both factors carry unresolved words");
  Monomial r;
  r.pending = a.pending ? a.pending : b.pending;
  int i = 0, j = 0;
  while (i < a.nf || j < b.nf) {
    uint32_t pick;
    if (j >= b.nf || (i < a.nf && factor_atom(a.f[i]) < factor_atom(b.f[j]))) {
      pick = a.f[i++];
    } else if (i >= a.nf || factor_atom(b.f[j]) < factor_atom(a.f[i])) {
      pick = b.f[j++];
    } else {
      unsigned p = factor_pow(a.f[i]) + factor_pow(b.f[j]);
      if (p > 63) throw std::overflow_error("Monomial: power overflow");
      pick = make_factor(factor_atom(a.f[i]), p);
      i++;
      j++;
    }
    if (r.nf >= kMaxFactors) throw std::overflow_error("Monomial: too many distinct atoms");
    r.f[r.nf++] = pick;
  }
  return r;
}

int Monomial::atom_weight() const {
  auto& at = AtomTable::instance();
  int w = 0;
  for (int i = 0; i < nf; i++) w += int(factor_pow(f[i])) * at.weight(factor_atom(f[i]));
  return w;
}

std::string Monomial::str(Kind kind) const {
  auto& at = AtomTable::instance();
  std::string s;
  for (int i = 0; i < nf; i++) {
    if (!s.empty()) s += "*";
    s += at.name(factor_atom(f[i]));
    if (factor_pow(f[i]) > 1) s += "^" + std::to_string(factor_pow(f[i]));
  }
  if (pending) {
    if (!s.empty()) s += "*";
    s += "H" + unpack_word(WordKey{pending}, kind).str();
  }
  return s.empty() ? "1" : s;
}

int monomial_weight(const Monomial& m, Kind kind) {
  int w = m.atom_weight();
  if (m.pending) w += unpack_word(WordKey{m.pending}, kind).weight();
  return w;
}

template <class F>
const F* Expr<F>::coeff_of(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.m < k; });
  if (it != t_.end() && it->m == m) return &it->c;
  return nullptr;
}

template <class F>
void Expr<F>::negate() {
  for (auto& t : t_) t.c = -t.c;
}

template <class F>
void Expr<F>::scale(const F& c) {
  if (c.is_zero()) {
    t_.clear();
    return;
  }
  if (c.is_one()) return;
  for (auto& t : t_) t.c *= c;
}

template <class F>
void Expr<F>::canonicalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
  size_t out = 0;
  for (size_t i = 0; i < t_.size();) {
    Monomial m = t_[i].m;
    F c = std::move(t_[i].c);
    size_t j = i + 1;
    while (j < t_.size() && t_[j].m == m) c += t_[j++].c;
    if (!c.is_zero()) t_[out++] = {m, std::move(c)};
    i = j;
  }
  t_.resize(out);
}

template <class F>
void Expr<F>::add(const Expr& o, const F& scale) {
  if (o.is_zero() || scale.is_zero()) return;
  std::vector<Term> merged;
  merged.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j >= o.t_.size() || (i < t_.size() && t_[i].m < o.t_[j].m)) {
      merged.push_back(std::move(t_[i++]));
    } else if (i >= t_.size() || o.t_[j].m < t_[i].m) {
      F c = o.t_[j].c;
      c *= scale;
      if (!c.is_zero()) merged.push_back({o.t_[j].m, std::move(c)});
      j++;
    } else {
      F c = o.t_[j].c;
      c *= scale;
      c += t_[i].c;
      if (!c.is_zero()) merged.push_back({t_[i].m, std::move(c)});
      i++;
      j++;
    }
  }
  t_ = std::move(merged);
}

template <class F>
Expr<F> Expr<F>::mul(const Expr& a, const Expr& b) {
  ExprAccum<F> acc(a.size() * b.size() + 1);
  for (auto& ta : a.t_)
    for (auto& tb : b.t_) {
      F c = ta.c;
      c *= tb.c;
      acc.add(Monomial::mul(ta.m, tb.m), c);
    }
  return acc.take();
}

template <class F>
Expr<F> Expr<F>::times_monomial(const Monomial& m, const F& c) const {
  Expr r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) {
    F nc = t.c;
    nc *= c;
    r.t_.push_back({Monomial::mul(t.m, m), std::move(nc)});
  }
  r.canonicalize();
  return r;
}

template <class F>
Expr<F> Expr<F>::substituted(WordKey key, const Expr& value) const {
  bool hit = false;
  for (size_t i = 0; i < t_.size() && t_[i].m.has_pending(); i++)
    if (t_[i].m.pending == key.v) {
      hit = true;
      break;
    }
  if (!hit) return *this;
  ExprAccum<F> acc(t_.size() + value.size());
  for (auto& t : t_) {
    if (t.m.pending == key.v) {
      acc.add_product(t.m.without_pending(), t.c, value);
    } else {
      acc.add(t.m, t.c);
    }
  }
  return acc.take();
}

template <class F>
bool Expr<F>::operator==(const Expr& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); i++)
    if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
  return true;
}

template <class F>
std::string Expr<F>::str(Kind kind) const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& t : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + t.c.str() + ")*" + t.m.str(kind);
  }
  return s;
}

template <class F>
ExprAccum<F>::ExprAccum(size_t expected) {
  size_t cap = 16;
  while (cap < expected * 2) cap <<= 1;
  slots_.resize(cap);
  mask_ = cap - 1;
}

template <class F>
void ExprAccum<F>::grow() {
  std::vector<Slot> old = std::move(slots_);
  slots_.clear();
  slots_.resize(old.size() * 2);
  mask_ = slots_.size() - 1;
  size_ = 0;
  for (auto& s : old)
    if (s.used && !s.c.is_zero()) add(s.m, s.c);
}

template <class F>
bool ExprAccum<F>::keep(const Monomial& m) const {
  if (drop_weight_ == 0) return true;
  // Keep bare unresolved words and single same-weight atoms; drop all
  // products of lower-weight objects.
  if (m.has_pending()) return m.nf == 0;
  if (m.nf != 1 || Monomial::factor_pow(m.f[0]) != 1) return false;
  return AtomTable::instance().weight(Monomial::factor_atom(m.f[0])) == drop_weight_;
}

template <class F>
void ExprAccum<F>::add(const Monomial& m, const F& c) {
  if (c.is_zero() || !keep(m)) return;
  MonomialHash h;
  size_t i = h(m) & mask_;
  while (true) {
    Slot& s = slots_[i];
    if (!s.used) {
      if (size_ * 2 >= slots_.size()) {
        grow();
        add(m, c);
        return;
      }
      s.used = true;
      s.m = m;
      s.c = c;
      size_++;
      return;
    }
    if (s.m == m) {
      s.c += c;
      return;
    }
    i = (i + 1) & mask_;
  }
}

template <class F>
void ExprAccum<F>::add_expr(const Expr<F>& e, const F& scale) {
  if (scale.is_zero()) return;
  for (auto& t : e.terms()) {
    F c = t.c;
    c *= scale;
    add(t.m, c);
  }
}

template <class F>
void ExprAccum<F>::add_product(const Monomial& base, const F& c, const Expr<F>& e) {
  if (c.is_zero()) return;
  if (base.is_unit()) {
    add_expr(e, c);
    return;
  }
  for (auto& t : e.terms()) {
    F nc = t.c;
    nc *= c;
    add(Monomial::mul(base, t.m), nc);
  }
}

template <class F>
Expr<F> ExprAccum<F>::take() {
  Expr<F> e;
  auto& ts = e.terms_mut();
  ts.reserve(size_);
  for (auto& s : slots_)
    if (s.used && !s.c.is_zero()) ts.push_back({s.m, std::move(s.c)});
  slots_.clear();
  slots_.resize(16);
  mask_ = 15;
  size_ = 0;
  e.canonicalize();
  return e;
}

template <class F>
int assert_homogeneous(const Expr<F>& e, Kind kind) {
  int w = 0;
  bool first = true;
  for (auto& t : e.terms()) {
    int tw = monomial_weight(t.m, kind);
    if (first) {
      w = tw;
      first = false;
    } else if (tw != w) {
      throw std::logic_error("expression not weight-homogeneous: " + e.str(kind));
    }
  }
  return w;
}

template class Expr<Rat>;
template class Expr<Fp>;
template class ExprAccum<Rat>;
template class ExprAccum<Fp>;
template int assert_homogeneous<Rat>(const Expr<Rat>&, Kind);
template int assert_homogeneous<Fp>(const Expr<Fp>&, Kind);

}  // namespace zsum
