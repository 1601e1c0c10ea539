#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace zsum {

// Exact rational with an inline int64/uint64 representation and a GMP
// fallback for values that do not fit.  Canonical form: den > 0,
// gcd(|num|, den) = 1, zero stored as 0/1.  When den_ == 0 the num_ field
// holds a pointer to a heap mpq_class (always canonicalized).
class Rat {
  int64_t num_;
  uint64_t den_;

  bool is_big() const { return den_ == 0; }
  mpq_class* big() const { return reinterpret_cast<mpq_class*>(static_cast<intptr_t>(num_)); }
  void set_big(mpq_class* p) {
    num_ = static_cast<int64_t>(reinterpret_cast<intptr_t>(p));
    den_ = 0;
  }
  void destroy() {
    if (is_big()) delete big();
  }
  // Adopt an mpq value, demoting to the inline form when it fits.
  void adopt(mpq_class&& q);
  void normalize_small(__int128 n, unsigned __int128 d);

 public:
  Rat() : num_(0), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}
  Rat(long n, unsigned long d) { normalize_small(n, d); }
  explicit Rat(const mpq_class& q) {
    mpq_class t(q);
    t.canonicalize();
    adopt(std::move(t));
  }
  Rat(const Rat& o) {
    if (o.is_big()) set_big(new mpq_class(*o.big()));
    else { num_ = o.num_; den_ = o.den_; }
  }
  Rat(Rat&& o) noexcept : num_(o.num_), den_(o.den_) { o.num_ = 0; o.den_ = 1; }
  Rat& operator=(const Rat& o) {
    if (this != &o) { destroy(); if (o.is_big()) set_big(new mpq_class(*o.big())); else { num_ = o.num_; den_ = o.den_; } }
    return *this;
  }
  Rat& operator=(Rat&& o) noexcept {
    if (this != &o) { destroy(); num_ = o.num_; den_ = o.den_; o.num_ = 0; o.den_ = 1; }
    return *this;
  }
  ~Rat() { destroy(); }

  static Rat from_string(const std::string& s);

  bool is_zero() const { return !is_big() && num_ == 0; }
  bool is_one() const { return !is_big() && num_ == 1 && den_ == 1; }
  int sign() const;

  mpq_class to_mpq() const {
    if (is_big()) return *big();
    mpq_class q(static_cast<long>(num_));
    if (den_ != 1) { mpq_class d(static_cast<unsigned long>(den_)); q /= d; }
    return q;
  }
  // Inline accessors valid only when fits_small().
  bool fits_small() const { return !is_big(); }
  int64_t small_num() const { return num_; }
  uint64_t small_den() const { return den_; }

  double to_double() const { return is_big() ? big()->get_d() : double(num_) / double(den_); }
  long double to_long_double() const {
    return is_big() ? static_cast<long double>(big()->get_d())
                    : static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);
  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  Rat inverse() const;

  bool operator==(const Rat& o) const;
  bool operator!=(const Rat& o) const { return !(*this == o); }
  // Total order (by value), used only for deterministic output.
  bool operator<(const Rat& o) const;

  std::string str() const;
};

Rat pow2(int e);                 // 2^e for any integer e
Rat rat_factorial(unsigned n);
Rat rat_binomial(long n, long k);

// Residues modulo a fixed 31-bit prime.  The modulus is process-global and
// set once before any arithmetic; the default matches the table headers.
class Fp {
 public:
  static constexpr uint32_t kDefaultPrime = 2147479273u;
  static void set_modulus(uint32_t p);
  static uint32_t modulus() { return p_; }

  Fp() : r_(0) {}
  Fp(long v) {
    long m = v % long(p_);
    if (m < 0) m += p_;
    r_ = uint32_t(m);
  }
  static Fp from_raw(uint32_t r) { Fp f; f.r_ = r; return f; }
  // Projection of an exact rational; throws if the denominator vanishes mod p.
  static Fp from_rat(const Rat& q);

  uint32_t raw() const { return r_; }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Fp operator-() const { return from_raw(r_ == 0 ? 0 : p_ - r_); }
  Fp& operator+=(Fp o) {
    uint64_t s = uint64_t(r_) + o.r_;
    if (s >= p_) s -= p_;
    r_ = uint32_t(s);
    return *this;
  }
  Fp& operator-=(Fp o) {
    uint64_t s = uint64_t(r_) + p_ - o.r_;
    if (s >= p_) s -= p_;
    r_ = uint32_t(s);
    return *this;
  }
  Fp& operator*=(Fp o) {
    r_ = uint32_t((uint64_t(r_) * o.r_) % p_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, Fp b) { a += b; return a; }
  friend Fp operator-(Fp a, Fp b) { a -= b; return a; }
  friend Fp operator*(Fp a, Fp b) { a *= b; return a; }
  friend Fp operator/(Fp a, Fp b) { a /= b; return a; }

  Fp inverse() const;

  bool operator==(Fp o) const { return r_ == o.r_; }
  bool operator!=(Fp o) const { return r_ != o.r_; }
  bool operator<(Fp o) const { return r_ < o.r_; }

  std::string str() const { return std::to_string(r_); }

 private:
  static uint32_t p_;
  uint32_t r_;
};

// Field concept shared by Rat and Fp.
template <class F> struct FieldOps;

template <> struct FieldOps<Rat> {
  static Rat zero() { return Rat(); }
  static Rat one() { return Rat(1); }
  static Rat from_long(long v) { return Rat(v); }
  static Rat from_rat(const Rat& q) { return q; }
  static constexpr bool exact_rational = true;
};

template <> struct FieldOps<Fp> {
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static Fp from_long(long v) { return Fp(v); }
  static Fp from_rat(const Rat& q) { return Fp::from_rat(q); }
  static constexpr bool exact_rational = false;
};

}  // namespace zsum
