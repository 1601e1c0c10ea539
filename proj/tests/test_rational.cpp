#include <doctest.h>

#include <random>

#include "zsum/rational.hpp"

using namespace zsum;

TEST_CASE("basic rational arithmetic") {
  CHECK(Rat(2, 5) + Rat(1, 10) == Rat(1, 2));
  CHECK((Rat(2, 4)) == Rat(1, 2));
  CHECK(Rat(0).is_zero());
  CHECK((Rat(3) - Rat(3)).is_zero());
  CHECK(Rat(-6, 4).str() == "-3/2");
  CHECK((Rat(2, 3) * Rat(3, 2)).is_one());
  CHECK(Rat(1, 3).inverse() == Rat(3));
  CHECK(Rat(-1, 3) < Rat(1, 7));
}

TEST_CASE("promotion to big integers and back") {
  Rat big(1);
  for (int i = 0; i < 5; i++) big *= Rat(1000000007L);
  Rat inv = big.inverse();
  CHECK((big * inv).is_one());
  Rat back = big;
  for (int i = 0; i < 5; i++) back /= Rat(1000000007L);
  CHECK(back.is_one());
  CHECK(Rat::from_string("97/420") == Rat(97, 420));
  CHECK(Rat::from_string("-2107648/15825").str() == "-2107648/15825");
}

TEST_CASE("random field axioms against gmp") {
  std::mt19937_64 rng(42);
  auto rnd = [&]() {
    long n = long(rng() % 2001) - 1000;
    unsigned long d = 1 + rng() % 1000;
    return Rat(n, d);
  };
  for (int i = 0; i < 100000; i++) {
    Rat a = rnd(), b = rnd(), c = rnd();
    mpq_class qa = a.to_mpq(), qb = b.to_mpq(), qc = c.to_mpq();
    Rat s = a + b;
    REQUIRE(s.to_mpq() == qa + qb);
    Rat p = a * b;
    REQUIRE(p.to_mpq() == qa * qb);
    Rat d = a - c;
    REQUIRE(d.to_mpq() == qa - qc);
    if (!b.is_zero()) {
      Rat q = a / b;
      REQUIRE(q.to_mpq() == qa / qb);
      REQUIRE((q * b) == a);
    }
  }
}

TEST_CASE("big/small boundary torture") {
  std::mt19937_64 rng(7);
  Rat acc;
  mpq_class qacc;
  for (int i = 0; i < 20000; i++) {
    long n = long(rng());  // full 64-bit range
    unsigned long d = 1 + (rng() % 3 ? rng() % 7 : rng());
    Rat r(n, d);
    mpq_class q(n);
    q /= mpq_class(static_cast<unsigned long>(d));
    q.canonicalize();
    REQUIRE(r.to_mpq() == q);
    if (i % 8 == 7) {
      acc = Rat(0);  // keep the accumulator from growing without bound
      qacc = 0;
    }
    if (i % 3 == 0) {
      acc += r;
      qacc += q;
    } else {
      acc *= r;
      qacc *= q;
      qacc.canonicalize();
    }
    REQUIRE(acc.to_mpq() == qacc);
  }
}

TEST_CASE("prime field") {
  Fp::set_modulus(Fp::kDefaultPrime);
  Fp two(2);
  CHECK((two.inverse() * two).is_one());
  CHECK(Fp::from_rat(Rat(2, 5)) == Fp(2) * Fp(5).inverse());
  CHECK(Fp::from_rat(Rat(97, 420)) * Fp(420) == Fp(97));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100000; i++) {
    Fp a(long(rng() % 1000000));
    Fp b(long(1 + rng() % 1000000));
    REQUIRE(((a * b) * b.inverse()) == a);
  }
  // denominator divisible by p is a reported error
  CHECK_THROWS(Fp::from_rat(Rat(1, Fp::kDefaultPrime)));
  CHECK(Fp::from_rat(pow2(-10)) * Fp(1024) == Fp(1));
}

TEST_CASE("pow2 and factorials") {
  CHECK(pow2(10) == Rat(1024));
  CHECK(pow2(-3) == Rat(1, 8));
  CHECK(pow2(0).is_one());
  CHECK(rat_factorial(6) == Rat(720));
  CHECK(rat_binomial(10, 3) == Rat(120));
}
