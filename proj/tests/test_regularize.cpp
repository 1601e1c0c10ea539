#include <doctest.h>

#include "zsum/algebra.hpp"
#include "zsum/solver.hpp"
#include "zsum/tables.hpp"

using namespace zsum;

namespace {

RunConfig euler_cfg() {
  RunConfig cfg;
  cfg.kind = Kind::euler;
  return cfg;
}

}  // namespace

TEST_CASE("divergent values become sinf polynomials") {
  Session<Rat> s(euler_cfg());
  s.table(3);
  AtomId sinf = AtomTable::instance().sinf();
  // Z(1) is the divergence symbol itself.
  Expr<Rat> z1 = s.value_z(make_sum_word({1}));
  REQUIRE(z1.size() == 1);
  CHECK(z1.terms()[0].m == Monomial::of_atom(sinf));
  CHECK(z1.terms()[0].c == Rat(1));
  // Z(1,1) = (sinf^2 - Z(2)) / 2 and Z(2) = zeta_2.
  Expr<Rat> z11 = s.value_z(make_sum_word({1, 1}));
  Expr<Rat> want;
  want.add(Expr<Rat>::of(Monomial::of_atom(sinf, 2), Rat(1, 2)));
  want.add(s.value_z(make_sum_word({2})), Rat(-1, 2));
  CHECK(z11 == want);
}

TEST_CASE("stuffle identities hold for regularized values") {
  Session<Rat> s(euler_cfg());
  s.table(5);
  // Z(1) * Z(v) = sum of stuffle terms, all regularized, for divergent and
  // convergent v alike.
  for (auto v : {make_sum_word({3}), make_sum_word({2, 1}), make_sum_word({-2, 1}),
                 make_sum_word({1, 2}), make_sum_word({1, 1, 1})}) {
    SumWord one = make_sum_word({1});
    Expr<Rat> lhs = Expr<Rat>::mul(s.value_z(one), s.value_z(v));
    Expr<Rat> rhs;
    for (auto& [t, c] : stuffle_z(one, v)) rhs.add(s.value_z(t), Rat(c));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("single-divergence shuffle identities hold") {
  Session<Rat> s(euler_cfg());
  s.table(4);
  // H_1 shuffle H_{0,0,1} should reproduce the same value on both sides
  // once every word is regularized.
  IntegralWord h1 = make_integral_word({1});
  for (auto v : {make_integral_word({0, 0, 1}), make_integral_word({0, 1, 1}),
                 make_integral_word({0, -1, 1})}) {
    Expr<Rat> lhs = Expr<Rat>::mul(s.value_h(h1), s.value_h(v));
    Expr<Rat> rhs;
    for (auto& [t, c] : shuffle(h1, v)) rhs.add(s.value_h(t), Rat(c));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("shuffle-peeled and stuffle-peeled divergents differ only without sinf") {
  Session<Rat> s(euler_cfg());
  s.table(4);
  // Stuffle regularization of H_{1,0,1} = Z(1,2).
  Expr<Rat> stuffle_reg = s.value_z(make_sum_word({1, 2}));
  // Shuffle regularization: solve H_1 * H_{0,1} = shuffle terms for H_{1,0,1}.
  IntegralWord h1 = make_integral_word({1});
  IntegralWord h01 = make_integral_word({0, 1});
  Expr<Rat> rhs = Expr<Rat>::mul(s.value_h(h1), s.value_h(h01));
  int64_t c0 = 0;
  for (auto& [t, c] : shuffle(h1, h01)) {
    if (t == make_integral_word({1, 0, 1})) {
      c0 = c;
      continue;
    }
    rhs.add(s.value_h(t), Rat(-c));
  }
  rhs.scale(Rat(1, c0));
  Expr<Rat> diff = stuffle_reg;
  diff.add(rhs, Rat(-1));
  AtomId sinf = AtomTable::instance().sinf();
  for (auto& t : diff.terms())
    for (int i = 0; i < t.m.nf; i++)
      CHECK(Monomial::factor_atom(t.m.f[i]) != sinf);
  // single-divergence values agree between the two regularizations
  CHECK(diff.is_zero());
}
