#include "zsum/gdr.hpp"

#include <stdexcept>

namespace zsum {

Rat binom_A(int a, int b, int i) {
  if (i < 1 || i > a) throw std::invalid_argument("binom_A: i out of range");
  return rat_factorial(a + b - i - 1) / (rat_factorial(a - i) * rat_factorial(b - 1));
}

Rat binom_B(int a, int b, int i) {
  if (i < 1 || i > b) throw std::invalid_argument("binom_B: i out of range");
  return rat_factorial(a + b - i - 1) / (rat_factorial(b - i) * rat_factorial(a - 1));
}

namespace {

// Intermediate lattice objects of the defect recursion.  A "rider" chain
// sits above the doubled variable u; the partner x exists only in pre-split
// (kP) objects.  With T the top value of the trailing chain:
//   kP: riders, (x+u+T)^mid, (x+2u+T)^part  [sign on the part factor]
//   kA: riders, (u+T)^mid                   [no naked factor]
//   kB: riders, (2u+T)^naked, (u+T)^mid
// Rider factors contain the full defect content below them.
enum class OType { kP, kA, kB };

struct Obj {
  OType type;
  std::vector<std::pair<int, int>> riders;  // (sigma, exponent), outermost first
  int part_sigma = 1, part_exp = 0;         // kP only
  int naked_sigma = 1, naked_exp = 0;       // kB only
  int mid = 0;
  SumWord tail;  // signed indices
};

struct Engine {
  GdrTerms out;

  void emit_word(const Rat& c, const std::vector<std::pair<int, int>>& riders,
                 std::initializer_list<int> core, const SumWord& rest) {
    SumWord w;
    for (auto& [s, e] : riders) w.push(s * e);
    for (int v : core) w.push(v);
    for (int i = 0; i < rest.len; i++) w.push(rest.c[i]);
    out.words.push_back({c, w});
  }

  void expand(Rat c, const Obj& o) {
    switch (o.type) {
      case OType::kP: expand_p(std::move(c), o); return;
      case OType::kA: expand_a(std::move(c), o); return;
      case OType::kB: expand_b(std::move(c), o); return;
    }
  }

  // kP = Z(riders, part, mid, tail) - kB[naked=part] - kA[rider+=part].
  void expand_p(Rat c, const Obj& o) {
    SumWord core_tail = o.tail;
    {
      SumWord w;
      for (auto& [s, e] : o.riders) w.push(s * e);
      w.push(o.part_sigma * o.part_exp);
      w.push(o.mid);
      for (int i = 0; i < core_tail.len; i++) w.push(core_tail.c[i]);
      out.words.push_back({c, w});
    }
    Obj b;
    b.type = OType::kB;
    b.riders = o.riders;
    b.naked_sigma = o.part_sigma;
    b.naked_exp = o.part_exp;
    b.mid = o.mid;
    b.tail = o.tail;
    expand_b(-c, b);
    Obj a;
    a.type = OType::kA;
    a.riders = o.riders;
    a.riders.push_back({o.part_sigma, o.part_exp});
    a.mid = o.mid;
    a.tail = o.tail;
    expand_a(-c, a);
  }

  // kB with empty tail: substituting the doubled variable gives
  //   riders empty: 2^-naked Z(naked+mid)
  //   otherwise an even projector: 2^(mid-1) [Z(riders, naked+mid) +/- pair].
  // With a tail, partial fraction against the tail top moves the factor 2
  // one level down.
  void expand_b(Rat c, const Obj& o) {
    int b = o.naked_exp, m = o.mid;
    if (o.tail.len == 0) {
      if (o.riders.empty()) {
        emit_word(c * pow2(-b), {}, {b + m}, SumWord{});
      } else {
        Rat h = c * pow2(m - 1);
        emit_word(h, o.riders, {b + m}, SumWord{});
        emit_word(h, o.riders, {-(b + m)}, SumWord{});
      }
      return;
    }
    int n3 = o.tail.c[0] < 0 ? -o.tail.c[0] : o.tail.c[0];
    int s3 = o.tail.c[0] < 0 ? -1 : 1;
    int merged_sigma = o.naked_sigma * s3;
    SumWord rest = o.tail.suffix(1);
    for (int i = 1; i <= n3; i++) {
      Rat coef = c * binom_B(b, n3, i) * pow2(i - b - n3);
      int mid2 = m + b + n3 - i;
      if (o.riders.empty()) {
        SumWord w;
        w.push(mid2);
        w.push(merged_sigma * i);
        for (int k = 0; k < rest.len; k++) w.push(rest.c[k]);
        out.words.push_back({coef, w});
      } else {
        Obj a;
        a.type = OType::kA;
        a.riders = o.riders;
        a.mid = mid2;
        a.tail = SumWord{};
        a.tail.push(merged_sigma * i);
        for (int k = 0; k < rest.len; k++) a.tail.push(rest.c[k]);
        expand_a(coef, a);
      }
    }
    for (int i = 1; i <= b; i++) {
      Rat coef = c * binom_A(b, n3, i) * pow2(i - b - n3);
      Obj p;
      p.type = OType::kP;
      p.riders = o.riders;
      p.mid = m + b + n3 - i;
      p.part_sigma = merged_sigma;
      p.part_exp = i;
      p.tail = rest;
      expand_p(coef, p);
    }
  }

  void expand_a(Rat c, const Obj& o) {
    if (o.riders.empty()) throw std::logic_error("kA object without riders");
    int b = o.mid;
    if (o.tail.len == 0) {
      Rat h = c * pow2(b - 1);
      emit_word(h, o.riders, {b}, SumWord{});
      emit_word(h, o.riders, {-b}, SumWord{});
      return;
    }
    int cc = o.tail.c[0] < 0 ? -o.tail.c[0] : o.tail.c[0];
    int sc = o.tail.c[0] < 0 ? -1 : 1;
    SumWord rest = o.tail.suffix(1);
    Rat sign_c = Rat((cc % 2 == 0) ? 1 - 2 * 0 : 1);  // (-1)^cc handled below
    Rat mcc = (cc % 2 == 0) ? Rat(1) : Rat(-1);
    if (rest.len == 0) {
      // Closing form: everything collapses into two-deep pairs.
      Rat base = c * mcc * pow2(b - 1);
      for (int i = 1; i <= cc; i++) {
        Rat coef = base * binom_B(b, cc, i);
        if (i % 2) coef = -coef;
        emit_word(coef, o.riders, {(b + cc - i), sc * i}, SumWord{});
        emit_word(coef, o.riders, {-(b + cc - i), -sc * i}, SumWord{});
      }
      Rat fact_line;
      for (int i = 1; i <= b; i++) {
        Rat coef = base * binom_A(b, cc, i);
        emit_word(-coef, o.riders, {sc * (b + cc - i), i}, SumWord{});
        emit_word(-coef, o.riders, {sc * (b + cc - i), -i}, SumWord{});
        fact_line += coef;
      }
      emit_word(-fact_line, o.riders, {b + cc}, SumWord{});
      emit_word(-fact_line, o.riders, {-(b + cc)}, SumWord{});
      return;
    }
    // Tail-consuming step: one index moves into the rider chain.
    for (int i = 1; i <= b; i++) {
      Rat coef = c * mcc * binom_A(b, cc, i) * pow2(b - i);
      SumWord w;
      for (auto& [s, e] : o.riders) w.push(s * e);
      w.push(sc * (b + cc - i));
      w.push(i);
      for (int k = 0; k < rest.len; k++) w.push(rest.c[k]);
      out.words.push_back({coef, w});
    }
    for (int i = 1; i <= cc; i++) {
      Rat coef = c * mcc * binom_B(b, cc, i) * pow2(b - 1);
      if (i % 2) coef = -coef;
      SumWord w1, w2;
      for (auto& [s, e] : o.riders) {
        w1.push(s * e);
        w2.push(s * e);
      }
      w1.push(b + cc - i);
      w1.push(sc * i);
      w2.push(-(b + cc - i));
      w2.push(-sc * i);
      for (int k = 0; k < rest.len; k++) {
        w1.push(rest.c[k]);
        w2.push(rest.c[k]);
      }
      out.words.push_back({coef, w1});
      out.words.push_back({coef, w2});
    }
    for (int i = 1; i <= b; i++) {
      Rat coef = c * mcc * binom_A(b, cc, i) * pow2(b - i);
      Obj a;
      a.type = OType::kA;
      a.riders = o.riders;
      a.riders.push_back({sc, b + cc - i});
      a.mid = i;
      a.tail = rest;
      expand_a(-coef, a);
      Obj bb;
      bb.type = OType::kB;
      bb.riders = o.riders;
      bb.naked_sigma = sc;
      bb.naked_exp = b + cc - i;
      bb.mid = i;
      bb.tail = rest;
      expand_b(-coef, bb);
    }
    (void)sign_c;
  }
};

GdrTerms build_relation(const SumWord& tuple) {
  if (tuple.len < 2) throw std::invalid_argument("gdr: depth >= 2 required");
  if (tuple.c[0] < 0) throw std::invalid_argument("gdr: first index must be positive");
  if (tuple.len > 2)
    throw std::domain_error(
        "gdr: the closed reductions of the deeper defect objects are not "
        "available; whole-weight runs cover that content with the "
        "pseudo-duality relations");
  int a = tuple.c[0];
  int b2 = tuple.c[1] < 0 ? -tuple.c[1] : tuple.c[1];
  int s2 = tuple.c[1] < 0 ? -1 : 1;
  SumWord rest = tuple.suffix(2);

  Engine eng;
  Rat half(1, 2);

  // Left side: the even-part combination itself.
  {
    SumWord w1 = tuple;
    eng.out.words.push_back({half, w1});
    SumWord w2 = tuple;
    w2.c[0] = int16_t(-w2.c[0]);
    w2.c[1] = int16_t(-w2.c[1]);
    eng.out.words.push_back({half, w2});
  }

  // Corrections from halving the outer summation range, one per leading
  // index equal to +1.  The deepest one has no cofactor and lives at the
  // full weight.
  {
    Rat sgn = half;
    for (int j = 1; j <= tuple.len; j++) {
      if (tuple.c[j - 1] != 1) break;
      SumWord neg = make_sum_word({-j});
      if (j == tuple.len)
        eng.out.words.push_back({-sgn, neg});
      else
        eng.out.prods.push_back({-sgn, neg, tuple.suffix(j)});
      sgn = -sgn;
    }
  }

  // B-side Z sums and the A-side defect objects.
  for (int i = 1; i <= b2; i++) {
    Rat coef = -(binom_B(a, b2, i) * pow2(i - a - b2));
    SumWord w;
    w.push(a + b2 - i);
    w.push(s2 * i);
    for (int k = 0; k < rest.len; k++) w.push(rest.c[k]);
    eng.out.words.push_back({coef, w});
  }
  for (int i = 1; i <= a; i++) {
    Rat coef = -(binom_A(a, b2, i) * pow2(i - a - b2));
    Obj p;
    p.type = OType::kP;
    p.mid = a + b2 - i;
    p.part_sigma = s2;
    p.part_exp = i;
    p.tail = rest;
    eng.expand_p(coef, p);
  }
  return eng.out;
}

}  // namespace

GdrTerms gdr_generic(const SumWord& tuple) { return build_relation(tuple); }

GdrTerms gdr_depth2(int a, int b, int sb) {
  return build_relation(make_sum_word({a, sb * b}));
}

GdrTerms gdr_depth3(int a, int b, int c, int sb, int sc) {
  return build_relation(make_sum_word({a, sb * b, sc * c}));
}

GdrTerms gdr_depth4(int a, int b, int c, int d, int sb, int sc, int sd) {
  return build_relation(make_sum_word({a, sb * b, sc * c, sd * d}));
}

}  // namespace zsum
