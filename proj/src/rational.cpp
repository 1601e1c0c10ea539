#include "zsum/rational.hpp"

namespace zsum {

namespace {

uint64_t u128_gcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  // Callers reduce by this gcd, so the result always fits the smaller operand.
  return uint64_t(a > UINT64_MAX ? 1 : a);
}

unsigned __int128 full_gcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_u128(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(v & UINT64_MAX));
  return (hi << 64) + lo;
}

}  // namespace

void Rat::adopt(mpq_class&& q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_ulong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_ui();
  } else {
    set_big(new mpq_class(std::move(q)));
  }
}

void Rat::normalize_small(__int128 n, unsigned __int128 d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (n == 0) { num_ = 0; den_ = 1; return; }
  bool neg = n < 0;
  unsigned __int128 un = neg ? (unsigned __int128)(-n) : (unsigned __int128)n;
  unsigned __int128 g = full_gcd(un, d);
  un /= g;
  d /= g;
  if (un <= (unsigned __int128)INT64_MAX && d <= (unsigned __int128)UINT64_MAX) {
    num_ = neg ? -int64_t(un) : int64_t(un);
    den_ = uint64_t(d);
  } else {
    mpq_class q(mpz_from_u128(un));
    if (neg) q = -q;
    q /= mpq_class(mpz_from_u128(d));
    q.canonicalize();
    set_big(new mpq_class(std::move(q)));
  }
}

Rat Rat::from_string(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  Rat r;
  r.adopt(std::move(q));
  return r;
}

int Rat::sign() const {
  if (is_big()) return sgn(*big());
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rat Rat::operator-() const {
  Rat r(*this);
  if (r.is_big()) *r.big() = -*r.big();
  else if (r.num_ == INT64_MIN) {
    mpq_class q(r.to_mpq());
    q = -q;
    r.destroy();
    r.adopt(std::move(q));
  } else r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!is_big() && !o.is_big()) {
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    unsigned __int128 d = (unsigned __int128)den_ * o.den_;
    destroy();
    normalize_small(n, d);
    return *this;
  }
  mpq_class q = to_mpq() + o.to_mpq();
  q.canonicalize();
  destroy();
  adopt(std::move(q));
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  if (!is_big() && !o.is_big()) {
    __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
    unsigned __int128 d = (unsigned __int128)den_ * o.den_;
    destroy();
    normalize_small(n, d);
    return *this;
  }
  mpq_class q = to_mpq() - o.to_mpq();
  q.canonicalize();
  destroy();
  adopt(std::move(q));
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  if (!is_big() && !o.is_big()) {
    if (num_ == 0 || o.num_ == 0) { destroy(); num_ = 0; den_ = 1; return *this; }
    // Cross-reduce before multiplying to keep intermediates small.
    uint64_t a_mag = num_ < 0 ? uint64_t(-(num_ + 1)) + 1 : uint64_t(num_);
    uint64_t b_mag = o.num_ < 0 ? uint64_t(-(o.num_ + 1)) + 1 : uint64_t(o.num_);
    uint64_t g1 = std::gcd(a_mag, o.den_);
    uint64_t g2 = std::gcd(b_mag, den_);
    __int128 n = (__int128)(num_ / int64_t(g1)) * (o.num_ / int64_t(g2));
    unsigned __int128 d = (unsigned __int128)(den_ / g2) * (o.den_ / g1);
    destroy();
    normalize_small(n, d);
    return *this;
  }
  mpq_class q = to_mpq() * o.to_mpq();
  q.canonicalize();
  destroy();
  adopt(std::move(q));
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  if (!is_big() && !o.is_big()) {
    __int128 n = (__int128)num_ * (o.num_ < 0 ? -(__int128)o.den_ : (__int128)o.den_);
    uint64_t o_mag = o.num_ < 0 ? uint64_t(-(o.num_ + 1)) + 1 : uint64_t(o.num_);
    unsigned __int128 d = (unsigned __int128)den_ * o_mag;
    destroy();
    normalize_small(n, d);
    return *this;
  }
  mpq_class q = to_mpq() / o.to_mpq();
  q.canonicalize();
  destroy();
  adopt(std::move(q));
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r(1);
  r /= *this;
  return r;
}

bool Rat::operator==(const Rat& o) const {
  if (!is_big() && !o.is_big()) return num_ == o.num_ && den_ == o.den_;
  return to_mpq() == o.to_mpq();
}

bool Rat::operator<(const Rat& o) const {
  if (!is_big() && !o.is_big())
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  return to_mpq() < o.to_mpq();
}

std::string Rat::str() const {
  if (is_big()) return big()->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rat pow2(int e) {
  Rat r(1);
  Rat two(2);
  Rat half(1, 2);
  for (int i = 0; i < e; i++) r *= two;
  for (int i = 0; i > e; i--) r *= half;
  return r;
}

Rat rat_factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(mpq_class(f));
}

Rat rat_binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return Rat(mpq_class(b));
}

uint32_t Fp::p_ = Fp::kDefaultPrime;

void Fp::set_modulus(uint32_t p) { p_ = p; }

Fp Fp::from_rat(const Rat& q) {
  if (q.fits_small()) {
    Fp num(0), den(0);
    int64_t n = q.small_num();
    uint64_t neg = n < 0;
    uint64_t mag = neg ? uint64_t(-(n + 1)) + 1 : uint64_t(n);
    num = from_raw(uint32_t(mag % p_));
    if (neg) num = -num;
    den = from_raw(uint32_t(q.small_den() % p_));
    if (den.is_zero())
      throw std::domain_error("Fp: denominator divisible by modulus (spurious zero hazard): " + q.str());
    return num / den;
  }
  mpq_class v = q.to_mpq();
  mpz_class n = v.get_num(), d = v.get_den();
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class nr = n % p, dr = d % p;
  if (nr < 0) nr += p;
  if (dr == 0)
    throw std::domain_error("Fp: denominator divisible by modulus (spurious zero hazard): " + q.str());
  Fp num = from_raw(uint32_t(nr.get_ui()));
  Fp den = from_raw(uint32_t(dr.get_ui()));
  return num / den;
}

Fp Fp::inverse() const {
  if (r_ == 0) throw std::domain_error("Fp: inverse of zero");
  // p is prime: a^(p-2) = a^-1.
  uint64_t base = r_, acc = 1, e = p_ - 2;
  while (e) {
    if (e & 1) acc = (acc * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return from_raw(uint32_t(acc));
}

}  // namespace zsum
