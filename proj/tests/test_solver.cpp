#include <doctest.h>

#include "zsum/io.hpp"
#include "zsum/solver.hpp"

using namespace zsum;

namespace {

RunConfig cfg_of(Kind k) {
  RunConfig c;
  c.kind = k;
  return c;
}

Expr<Rat> value_of(Session<Rat>& s, int w, const SumWord& z) {
  s.table(w);
  return s.value_z(z);
}

std::string value_str(Session<Rat>& s, int w, const SumWord& z) {
  return emit_expression(value_of(s, w, z));
}

}  // namespace

TEST_CASE("weight-4 MZV master") {
  Session<Rat> s(cfg_of(Kind::mzv));
  const ReductionTable<Rat>& t = s.table(4);
  REQUIRE(t.order.size() == 3);
  // H(0,0,0,1)=2/5 z2^2, H(0,0,1,1)=1/10 z2^2, H(0,1,0,1)=3/10 z2^2
  CHECK(value_str(s, 4, make_sum_word({4})) == "2/5*z2^2");
  CHECK(value_str(s, 4, make_sum_word({3, 1})) == "1/10*z2^2");
  CHECK(value_str(s, 4, make_sum_word({2, 2})) == "3/10*z2^2");
  CHECK(t.remaining.empty());
}

TEST_CASE("the worked equation order at weight 4") {
  RunConfig cfg = cfg_of(Kind::mzv);
  cfg.weight = 4;
  auto stream = equation_stream(cfg);
  REQUIRE(stream.size() >= 3);
  CHECK(stream[0].cls == RelClass::stuffle);
  CHECK(stream[1].cls == RelClass::shuffle);
  CHECK(stream[2].cls == RelClass::shuffle);
  // the shuffle block starts with H_{0,1} x H_{0,1} and ends with the
  // divergent H_1 x H_{0,0,1}
  SumWord m1 = to_sum(unpack_word(WordKey{stream[1].a}, Kind::euler));
  CHECK(m1 == make_sum_word({2}));
  SumWord m2 = to_sum(unpack_word(WordKey{stream[2].a}, Kind::euler));
  CHECK(m2 == make_sum_word({1}));
}

TEST_CASE("euler tables at low weight") {
  Session<Rat> s(cfg_of(Kind::euler));
  CHECK(s.table(1).remaining.size() == 1);  // h1
  CHECK(s.table(2).remaining.size() == 1);  // z2
  CHECK(s.table(3).remaining.size() == 1);  // e3
  const ReductionTable<Rat>& t4 = s.table(4);
  CHECK(t4.remaining.size() == 1);  // h31
  CHECK(AtomTable::instance().name(t4.remaining[0]) == "h31");
  // Euler's zeta(2,1) = zeta(3) via the table
  CHECK(value_str(s, 3, make_sum_word({2, 1})) == "4/3*e3");
  // eta relation: Z(3) = zeta_3 = (4/3) eta_3
  CHECK(value_str(s, 3, make_sum_word({3})) == "4/3*e3");
  CHECK(value_str(s, 2, make_sum_word({-2})) == "-1/2*z2");
  CHECK(value_str(s, 1, make_sum_word({-1})) == "-h1");
}

TEST_CASE("euler remaining counts through weight 6") {
  Session<Rat> s(cfg_of(Kind::euler));
  CHECK(s.table(4).remaining.size() == 1);
  CHECK(s.table(5).remaining.size() == 2);
  CHECK(s.table(6).remaining.size() == 2);
}

TEST_CASE("mzv remaining counts and depth splits") {
  Session<Rat> s(cfg_of(Kind::mzv));
  CHECK(s.table(3).remaining.size() == 1);
  CHECK(s.table(4).remaining.size() == 0);
  CHECK(s.table(5).remaining.size() == 1);
  CHECK(s.table(6).remaining.size() == 0);
  CHECK(s.table(7).remaining.size() == 1);
  const ReductionTable<Rat>& t8 = s.table(8);
  CHECK(t8.remaining.size() == 1);
  CHECK(t8.remaining_by_depth.at(2) == 1);
}

TEST_CASE("group size one matches the default grouping") {
  RunConfig a = cfg_of(Kind::mzv);
  a.weight = 8;
  Session<Rat> sa(a);
  const ReductionTable<Rat>& ta = sa.table(8);
  RunConfig b = a;
  b.group_size = 1;
  Session<Rat> sb(b);
  ReductionTable<Rat> tb = run_reduction(sb, b);
  REQUIRE(ta.order.size() == tb.order.size());
  for (WordKey k : ta.order) REQUIRE(*ta.find(k) == *tb.find(k));
}

TEST_CASE("verify_relation and Hoffman's relation at weight 8") {
  Session<Rat> s(cfg_of(Kind::mzv));
  const ReductionTable<Rat>& t8 = s.table(8);
  // H_{2,1,2,3} - H_{2,2,2,2} - 2 H_{2,3,3} = 0
  Expr<Rat> e;
  auto add_word = [&](long c, std::initializer_list<int> idx) {
    SumWord z;
    for (int v : idx) z.push(v);
    TargetRef ref = fold_target(to_integral(z), Kind::mzv, true);
    e.add(Expr<Rat>::of(Monomial::of_pending(ref.key), Rat(c)));
  };
  add_word(1, {2, 1, 2, 3});
  add_word(-1, {2, 2, 2, 2});
  add_word(-2, {2, 3, 3});
  CHECK(verify_relation(e, t8, s));
  add_word(5, {5, 3});
  CHECK(!verify_relation(e, t8, s));
}
