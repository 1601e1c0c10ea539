#include <doctest.h>

#include <map>
#include <random>

#include "zsum/algebra.hpp"

using namespace zsum;

namespace {

int64_t binom(int n, int k) {
  int64_t r = 1;
  for (int i = 1; i <= k; i++) r = r * (n - k + i) / i;
  return r;
}

int64_t total_mult(const std::vector<std::pair<IntegralWord, int64_t>>& v) {
  int64_t t = 0;
  for (auto& [w, c] : v) t += c;
  return t;
}

}  // namespace

TEST_CASE("shuffle basics") {
  // H_{0,1} shuffled with itself: 4 H_{0,0,1,1} + 2 H_{0,1,0,1}
  auto r = shuffle(make_integral_word({0, 1}), make_integral_word({0, 1}));
  REQUIRE(r.size() == 2);
  std::map<std::string, int64_t> got;
  for (auto& [w, c] : r) got[w.str()] = c;
  CHECK(got["(0,0,1,1)"] == 4);
  CHECK(got["(0,1,0,1)"] == 2);
  // identity element
  auto e = shuffle(make_integral_word({0, 1}), IntegralWord{});
  REQUIRE(e.size() == 1);
  CHECK(e[0].second == 1);
}

TEST_CASE("shuffle term count of the depth-3 pair") {
  auto u = to_integral(make_sum_word({3, 5, 3}));
  auto v = to_integral(make_sum_word({6, 2, 5}));
  auto r = shuffle(u, v);
  CHECK(r.size() == 2146);
  CHECK(total_mult(r) == binom(24, 11));
}

TEST_CASE("collected shuffle equals the reference on random pairs") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; iter++) {
    auto rnd_word = [&]() {
      IntegralWord w;
      int len = 1 + int(rng() % 5);
      for (int i = 0; i < len; i++) {
        int l = int(rng() % 3);
        w.push(Letter(l == 2 ? -1 : l));
      }
      return w;
    };
    IntegralWord u = rnd_word(), v = rnd_word();
    auto a = shuffle(u, v);
    auto b = shuffle_reference(u, v);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++) {
      REQUIRE(a[i].first == b[i].first);
      REQUIRE(a[i].second == b[i].second);
    }
    // commutativity
    auto c = shuffle(v, u);
    REQUIRE(a.size() == c.size());
    for (size_t i = 0; i < a.size(); i++) REQUIRE(a[i].second == c[i].second);
  }
}

TEST_CASE("stuffle structure") {
  // Z_m Z_n = Z_{m,n} + Z_{n,m} + Z_{m&n}
  auto r = stuffle_z(make_sum_word({3}), make_sum_word({2}));
  REQUIRE(r.size() == 3);
  std::map<std::string, int64_t> got;
  for (auto& [w, c] : r) got[w.str()] = c;
  CHECK(got["Z(3,2)"] == 1);
  CHECK(got["Z(2,3)"] == 1);
  CHECK(got["Z(5)"] == 1);
  // the five-term depth 1 x depth 2 pattern
  auto r2 = stuffle_z(make_sum_word({2}), make_sum_word({3, 4}));
  CHECK(r2.size() == 5);
  // sign rule of the merge
  CHECK(amp_merge(-3, 4) == -7);
  CHECK(amp_merge(-3, -4) == 7);
  // S-flavor flips merged terms
  auto s = stuffle_s(make_sum_word({3}), make_sum_word({2}));
  std::map<std::string, int64_t> ss;
  for (auto& [w, c] : s) ss[w.str()] = c;
  CHECK(ss["Z(5)"] == -1);
  CHECK(ss["Z(3,2)"] == 1);
}

TEST_CASE("stuffle full-depth terms count") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; iter++) {
    SumWord u, v;
    int du = 1 + int(rng() % 3), dv = 1 + int(rng() % 3);
    for (int i = 0; i < du; i++) u.push(2 + int(rng() % 3));
    for (int i = 0; i < dv; i++) v.push(4 + int(rng() % 3));
    auto r = stuffle_z(u, v);
    int64_t full = 0;
    for (auto& [w, c] : r) {
      REQUIRE(w.depth() <= du + dv);
      if (w.depth() == du + dv) full += c;
    }
    REQUIRE(full == binom(du + dv, du));
  }
}

TEST_CASE("stuffle commutativity and associativity at small weight") {
  auto words = std::vector<SumWord>{make_sum_word({1}),  make_sum_word({-1}),
                                    make_sum_word({2}),  make_sum_word({-2}),
                                    make_sum_word({1, 1}), make_sum_word({2, -1})};
  auto key = [](const SumWord& w) { return w.str(); };
  auto as_map = [&](std::vector<std::pair<SumWord, int64_t>> v) {
    std::map<std::string, int64_t> m;
    for (auto& [w, c] : v) m[key(w)] += c;
    return m;
  };
  for (auto& u : words)
    for (auto& v : words) REQUIRE(as_map(stuffle_z(u, v)) == as_map(stuffle_z(v, u)));
  // associativity: (u*v)*w = u*(v*w) expanded through the word lists
  for (auto& u : words)
    for (auto& v : words)
      for (auto& w : words) {
        std::map<std::string, int64_t> left, right;
        for (auto& [uv, c1] : stuffle_z(u, v))
          for (auto& [t, c2] : stuffle_z(uv, w)) left[key(t)] += c1 * c2;
        for (auto& [vw, c1] : stuffle_z(v, w))
          for (auto& [t, c2] : stuffle_z(u, vw)) right[key(t)] += c1 * c2;
        REQUIRE(left == right);
      }
}

TEST_CASE("doubling right-hand side") {
  auto r = doubling_rhs(make_integral_word({1, 0, 1}));
  CHECK(r.zeros == 1);
  REQUIRE(r.terms.size() == 4);
  std::map<std::string, int> got;
  for (auto& [s, w] : r.terms) got[w.str()] = s;
  CHECK(got["(1,0,1)"] == 1);
  CHECK(got["(-1,0,1)"] == -1);
  CHECK(got["(1,0,-1)"] == -1);
  CHECK(got["(-1,0,-1)"] == 1);
}
