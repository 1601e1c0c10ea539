#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "zsum/atoms.hpp"
#include "zsum/rational.hpp"
#include "zsum/words.hpp"

namespace zsum {

// A product of basis atoms and at most one unresolved word.  Factors are
// (atom id << 6 | power), sorted by atom id; power fits in 6 bits.
struct Monomial {
  static constexpr int kMaxFactors = 7;
  uint64_t pending = 0;  // packed WordKey, 0 when absent
  uint32_t f[kMaxFactors] = {};
  uint8_t nf = 0;
  uint8_t pad[3] = {};

  static uint32_t make_factor(AtomId id, unsigned pow) {
    return (id << 6) | (pow & 63u);
  }
  static AtomId factor_atom(uint32_t f) { return f >> 6; }
  static unsigned factor_pow(uint32_t f) { return f & 63u; }

  bool has_pending() const { return pending != 0; }
  bool is_unit() const { return pending == 0 && nf == 0; }

  static Monomial unit() { return Monomial{}; }
  static Monomial of_pending(WordKey k) {
    Monomial m;
    m.pending = k.v;
    return m;
  }
  static Monomial of_atom(AtomId id, unsigned pow = 1) {
    Monomial m;
    m.f[0] = make_factor(id, pow);
    m.nf = 1;
    return m;
  }

  void mul_atom(AtomId id, unsigned pow);
  // Product of atom parts; takes the pending from whichever side has one.
  // Throws if both sides carry a pending.
  static Monomial mul(const Monomial& a, const Monomial& b);
  Monomial without_pending() const {
    Monomial m = *this;
    m.pending = 0;
    return m;
  }

  bool operator==(const Monomial& o) const {
    return std::memcmp(this, &o, sizeof(Monomial)) == 0;
  }
  // Canonical term order: unresolved words first (by key), then atom products.
  bool operator<(const Monomial& o) const {
    bool ap = pending == 0, bp = o.pending == 0;
    if (ap != bp) return bp;  // pending-bearing terms first
    if (pending != o.pending) return pending < o.pending;
    if (nf != o.nf) return nf < o.nf;
    return std::memcmp(f, o.f, sizeof(uint32_t) * nf) < 0;
  }
  int atom_weight() const;  // total weight of the atom part
  std::string str(Kind kind) const;
};
static_assert(sizeof(Monomial) == 40);

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    const uint64_t* p = reinterpret_cast<const uint64_t*>(&m);
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < 5; i++) {
      h ^= p[i];
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 31;
    }
    return size_t(h);
  }
};

// Sparse weight-homogeneous linear combination in canonical order: sorted
// monomials, no zero coefficients.
template <class F>
class Expr {
 public:
  struct Term {
    Monomial m;
    F c;
  };

  Expr() = default;

  static Expr zero() { return Expr(); }
  static Expr of(const Monomial& m, F c) {
    Expr e;
    if (!c.is_zero()) e.t_.push_back({m, std::move(c)});
    return e;
  }
  static Expr of_pending(WordKey k) { return of(Monomial::of_pending(k), FieldOps<F>::one()); }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  std::vector<Term>& terms_mut() { return t_; }

  // Number of leading terms that carry an unresolved word.
  size_t pending_count() const {
    size_t n = 0;
    while (n < t_.size() && t_[n].m.has_pending()) n++;
    return n;
  }
  const F* coeff_of(const Monomial& m) const;

  void negate();
  void scale(const F& c);
  Expr scaled(const F& c) const {
    Expr e = *this;
    e.scale(c);
    return e;
  }
  void add(const Expr& o, const F& scale);
  void add(const Expr& o) { add(o, FieldOps<F>::one()); }

  // Product; at most one side may contain unresolved words.
  static Expr mul(const Expr& a, const Expr& b);
  Expr times_monomial(const Monomial& m, const F& c) const;

  // Replace one unresolved word by its value everywhere.
  Expr substituted(WordKey key, const Expr& value) const;

  // Sort, combine, drop zeros; used by the accumulator.
  void canonicalize();

  bool operator==(const Expr& o) const;
  std::string str(Kind kind) const;

 private:
  std::vector<Term> t_;
};

// Open-addressing accumulator for building expressions out of many small
// contributions.  Optionally drops every monomial that is a product of
// lower-weight objects (modular basis-size runs).
template <class F>
class ExprAccum {
 public:
  explicit ExprAccum(size_t expected = 16);
  void set_drop_products(int run_weight) { drop_weight_ = run_weight; }

  void add(const Monomial& m, const F& c);
  void add_expr(const Expr<F>& e, const F& scale);
  void add_expr(const Expr<F>& e) { add_expr(e, FieldOps<F>::one()); }
  // Adds c * base_atoms * e, where e's monomials are merged with base.
  void add_product(const Monomial& base, const F& c, const Expr<F>& e);

  Expr<F> take();
  size_t distinct() const { return size_; }

 private:
  void grow();
  bool keep(const Monomial& m) const;

  struct Slot {
    Monomial m;
    F c;
    bool used = false;
  };
  std::vector<Slot> slots_;
  size_t size_ = 0;
  size_t mask_ = 0;
  int drop_weight_ = 0;  // 0 = keep everything
};

// Total weight of a monomial, unresolved word included.
int monomial_weight(const Monomial& m, Kind kind);
// Throws unless every term has the same total weight; returns it (0 if empty).
template <class F>
int assert_homogeneous(const Expr<F>& e, Kind kind);

}  // namespace zsum
