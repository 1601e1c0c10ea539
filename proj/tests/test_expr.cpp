#include <doctest.h>

#include <random>

#include "zsum/expr.hpp"

using namespace zsum;

namespace {
AtomId z2() { return AtomTable::instance().zword(make_sum_word({2})); }
AtomId e3() { return AtomTable::instance().eta(3); }
}  // namespace

TEST_CASE("monomial ordering and products") {
  Monomial a = Monomial::of_atom(z2(), 2);
  Monomial b = Monomial::of_atom(e3());
  Monomial ab = Monomial::mul(a, b);
  CHECK(ab.atom_weight() == 7);
  Monomial p = Monomial::of_pending(WordKey{123});
  CHECK(p < a);  // unresolved words come first
  CHECK(Monomial::mul(p, a).pending == 123);
  CHECK_THROWS(Monomial::mul(p, p));
}

TEST_CASE("expression arithmetic") {
  using E = Expr<Rat>;
  E x = E::of(Monomial::of_atom(z2()), Rat(1, 2));
  E y = E::of(Monomial::of_atom(z2()), Rat(1, 3));
  E s = x;
  s.add(y);
  CHECK(s.size() == 1);
  CHECK(*s.coeff_of(Monomial::of_atom(z2())) == Rat(5, 6));
  E z = s;
  z.add(s, Rat(-1));
  CHECK(z.is_zero());
  // (z2)*(z2) = z2^2 with weight 4
  E sq = E::mul(E::of(Monomial::of_atom(z2()), Rat(1)),
                E::of(Monomial::of_atom(z2()), Rat(1)));
  CHECK(sq.size() == 1);
  CHECK(sq.terms()[0].m.atom_weight() == 4);
}

TEST_CASE("substitution") {
  using E = Expr<Rat>;
  WordKey k{777};
  E master = E::of(Monomial::of_pending(k), Rat(2));
  E value = E::of(Monomial::of_atom(z2(), 2), Rat(1, 2));
  E out = master.substituted(k, value);
  CHECK(out.size() == 1);
  CHECK(*out.coeff_of(Monomial::of_atom(z2(), 2)) == Rat(1));
  // substituting an absent key returns the expression unchanged
  E same = master.substituted(WordKey{778}, value);
  CHECK(same == master);
}

TEST_CASE("distributivity on random triples") {
  using E = Expr<Rat>;
  std::mt19937_64 rng(9);
  std::vector<AtomId> atoms = {z2(), e3(), AtomTable::instance().ln2(),
                               AtomTable::instance().eta(5)};
  auto rnd_expr = [&]() {
    E e;
    int terms = 1 + int(rng() % 4);
    for (int t = 0; t < terms; t++) {
      Monomial m;
      for (int f = 0; f < 2; f++)
        if (rng() % 2) m.mul_atom(atoms[rng() % atoms.size()], 1 + rng() % 2);
      e.add(E::of(m, Rat(long(rng() % 11) - 5)));
    }
    return e;
  };
  for (int iter = 0; iter < 1000; iter++) {
    E a = rnd_expr(), b = rnd_expr(), c = rnd_expr();
    E bc = b;
    bc.add(c);
    E left = E::mul(a, bc);
    E right = E::mul(a, b);
    right.add(E::mul(a, c));
    REQUIRE(left == right);
  }
}

TEST_CASE("drop-products accumulator keeps only the highest weight") {
  ExprAccum<Rat> acc(8);
  acc.set_drop_products(6);
  acc.add(Monomial::of_pending(WordKey{5}), Rat(1));                 // kept
  acc.add(Monomial::of_atom(AtomTable::instance().eta(5)), Rat(1));  // weight 5: dropped
  Monomial prod = Monomial::of_atom(z2());
  prod.mul_atom(e3(), 1);
  acc.add(prod, Rat(1));  // product: dropped
  Monomial deep = Monomial::of_atom(AtomTable::instance().hword(make_sum_word({5, 1})));
  acc.add(deep, Rat(2));  // single weight-6 atom: kept
  Expr<Rat> e = acc.take();
  CHECK(e.size() == 2);
}

TEST_CASE("homogeneity assertion") {
  using E = Expr<Rat>;
  E good = E::of(Monomial::of_atom(z2(), 3), Rat(1));
  good.add(E::of(Monomial::of_atom(e3(), 2), Rat(1)));
  CHECK(assert_homogeneous(good, Kind::euler) == 6);
  E bad = good;
  bad.add(E::of(Monomial::of_atom(z2()), Rat(1)));
  CHECK_THROWS(assert_homogeneous(bad, Kind::euler));
}
