#include "zsum/pushdown.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "zsum/solver.hpp"

namespace zsum {

std::vector<std::pair<int, IntegralWord>> expand_A_h(const SumWord& idx) {
  if (idx.len == 0) throw std::invalid_argument("expand_A: empty index list");
  for (int i = 0; i < idx.len; i++)
    if (idx.c[i] < 2)
      throw std::invalid_argument("expand_A: indices must be >= 2 for convergence");
  std::vector<std::pair<int, IntegralWord>> out;
  int p = idx.len;
  for (unsigned mask = 0; mask < (1u << (p - 1)); mask++) {
    SumWord m;
    int sign = 1;
    for (int i = 0; i < p; i++) {
      bool neg = i < p - 1 && (mask >> i) & 1;
      if (neg) sign = -sign;
      m.push(neg ? -idx.c[i] : idx.c[i]);
    }
    out.push_back({sign, to_integral(m)});
  }
  return out;
}

std::vector<std::pair<int, SumWord>> expand_A_z(const SumWord& idx) {
  std::vector<std::pair<int, SumWord>> out;
  for (auto& [sign, h] : expand_A_h(idx)) {
    SignedSum z = h_word_value(h);
    out.push_back({sign * z.sign, z.w});
  }
  return out;
}

Expr<Rat> a_function_value(Session<Rat>& euler, const SumWord& indices) {
  Expr<Rat> v;
  for (auto& [sign, h] : expand_A_h(indices))
    v.add(euler.value_h(h), Rat(sign));
  return v;
}

std::string PushGen::name(Kind kind) const {
  if (is_a) return atom_name_for_aword(a_indices);
  return mono.str(kind);
}

namespace {

// Dense exact row reduction over monomial coordinates.
struct Solver {
  std::vector<Monomial> cols;
  std::unordered_map<size_t, size_t> col_of;  // MonomialHash -> index (probed)
  std::vector<std::vector<Rat>> rows;         // reduced rows
  std::vector<int> pivot_of_row;
  std::vector<std::vector<Rat>> combo;        // generator combination per row
  size_t ngen = 0;

  size_t col_index(const Monomial& m) {
    for (size_t i = 0; i < cols.size(); i++)
      if (cols[i] == m) return i;
    cols.push_back(m);
    return cols.size() - 1;
  }

  std::vector<Rat> to_vec(const Expr<Rat>& e) {
    std::vector<Rat> v(cols.size());
    for (auto& t : e.terms()) {
      size_t c = col_index(t.m);
      if (c >= v.size()) v.resize(cols.size());
      v[c] = t.c;
    }
    v.resize(cols.size());
    return v;
  }

  // Reduce v against stored rows; track the generator combination.
  void reduce(std::vector<Rat>& v, std::vector<Rat>& comb) const {
    for (size_t r = 0; r < rows.size(); r++) {
      int p = pivot_of_row[r];
      if (size_t(p) >= v.size() || v[p].is_zero()) continue;
      Rat f = v[p];
      for (size_t c = 0; c < rows[r].size() && c < v.size(); c++)
        if (!rows[r][c].is_zero()) v[c] -= f * rows[r][c];
      if (size_t(p) < v.size()) v[p] = Rat(0);
      for (size_t g = 0; g < ngen; g++)
        if (!combo[r][g].is_zero()) comb[g] -= f * combo[r][g];
    }
  }

  void add_generator(const Expr<Rat>& value, size_t gen_idx) {
    std::vector<Rat> v = to_vec(value);
    std::vector<Rat> comb(ngen);
    comb[gen_idx] = Rat(1);
    reduce(v, comb);
    int p = -1;
    for (size_t c = 0; c < v.size(); c++)
      if (!v[c].is_zero()) {
        p = int(c);
        break;
      }
    if (p < 0) return;  // dependent generator
    Rat inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back(std::move(v));
    pivot_of_row.push_back(p);
    combo.push_back(std::move(comb));
  }
};

// All monomials over the given atoms with total weight w (atoms sorted by id).
void monomials_of_weight(const std::vector<AtomId>& atoms, size_t i, int w, Monomial cur,
                         std::vector<Monomial>& out) {
  if (w == 0) {
    out.push_back(cur);
    return;
  }
  if (i >= atoms.size()) return;
  int aw = AtomTable::instance().weight(atoms[i]);
  monomials_of_weight(atoms, i + 1, w, cur, out);
  int maxp = w / aw;
  for (int p = 1; p <= maxp; p++) {
    Monomial m = cur;
    m.mul_atom(atoms[i], p);
    monomials_of_weight(atoms, i + 1, w - p * aw, m, out);
  }
}

// Value of an MZV-session monomial in Euler coordinates.
Expr<Rat> euler_value_of_mzv_monomial(Session<Rat>& euler, const Monomial& m) {
  Expr<Rat> v = Expr<Rat>::of(Monomial::unit(), Rat(1));
  auto& at = AtomTable::instance();
  for (int i = 0; i < m.nf; i++) {
    AtomId id = Monomial::factor_atom(m.f[i]);
    unsigned p = Monomial::factor_pow(m.f[i]);
    const AtomInfo& info = at.info(id);
    if (info.tag != AtomTag::zword)
      throw std::logic_error("MZV generator atom is not a Z word: " + info.name);
    Expr<Rat> av = euler.value_z(info.idx);
    for (unsigned q = 0; q < p; q++) v = Expr<Rat>::mul(v, av);
  }
  return v;
}

struct SpanBuild {
  std::vector<PushGen> gens;
  Solver solver;
};

SpanBuild build_span(Session<Rat>& euler, Session<Rat>& mzv, int weight,
                     const std::vector<SumWord>& candidate_a, int max_same_weight_depth) {
  SpanBuild sb;
  // MZV basis atoms up to this weight (same-weight atoms depth-limited).
  std::vector<AtomId> atoms;
  for (int w = 2; w <= weight; w++) {
    const ReductionTable<Rat>& t = mzv.table(w);
    for (AtomId id : t.remaining) {
      if (w == weight) {
        const AtomInfo& info = AtomTable::instance().info(id);
        if (info.idx.len > max_same_weight_depth) continue;
      }
      atoms.push_back(id);
    }
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<Monomial> monos;
  monomials_of_weight(atoms, 0, weight, Monomial::unit(), monos);
  std::sort(monos.begin(), monos.end());
  for (auto& a : candidate_a) {
    PushGen g;
    g.is_a = true;
    g.a_indices = a;
    sb.gens.push_back(g);
  }
  for (auto& m : monos) {
    PushGen g;
    g.mono = m;
    sb.gens.push_back(g);
  }
  sb.solver.ngen = sb.gens.size();
  for (size_t i = 0; i < sb.gens.size(); i++) {
    Expr<Rat> v = sb.gens[i].is_a ? a_function_value(euler, sb.gens[i].a_indices)
                                  : euler_value_of_mzv_monomial(euler, sb.gens[i].mono);
    sb.solver.add_generator(v, i);
  }
  return sb;
}

std::optional<std::vector<std::pair<Rat, PushGen>>> span_reduce(SpanBuild& sb,
                                                                const Expr<Rat>& value,
                                                                Rat* residual) {
  std::vector<Rat> v = sb.solver.to_vec(value);
  std::vector<Rat> comb(sb.solver.ngen);
  sb.solver.reduce(v, comb);
  Rat res;
  bool zero = true;
  for (auto& x : v)
    if (!x.is_zero()) {
      zero = false;
      if (res.is_zero()) res = x;
    }
  if (residual) *residual = res;
  if (!zero) return std::nullopt;
  std::vector<std::pair<Rat, PushGen>> out;
  for (size_t g = 0; g < comb.size(); g++)
    if (!comb[g].is_zero()) out.push_back({comb[g], sb.gens[g]});
  return out;
}

}  // namespace

MzvSpan::MzvSpan(Session<Rat>& euler, Session<Rat>& mzv, int weight) {
  SpanBuild sb = build_span(euler, mzv, weight, {}, weight);
  gens_ = sb.gens;
  rows_ = std::move(sb.solver.rows);
  pivot_col_ = std::move(sb.solver.pivot_of_row);
  cols_ = std::move(sb.solver.cols);
  combo_ = std::move(sb.solver.combo);
}

std::optional<std::vector<std::pair<Rat, PushGen>>> MzvSpan::reduce(
    const Expr<Rat>& value) const {
  Solver s;
  s.cols = cols_;
  s.rows = rows_;
  s.pivot_of_row = pivot_col_;
  s.combo = combo_;
  s.ngen = gens_.size();
  std::vector<Rat> v = s.to_vec(value);
  std::vector<Rat> comb(s.ngen);
  s.reduce(v, comb);
  for (auto& x : v)
    if (!x.is_zero()) return std::nullopt;
  std::vector<std::pair<Rat, PushGen>> out;
  for (size_t g = 0; g < comb.size(); g++)
    if (!comb[g].is_zero()) out.push_back({comb[g], gens_[g]});
  return out;
}

std::optional<PushdownIdentity> synthesize_pushdown(
    Session<Rat>& euler, Session<Rat>& mzv,
    const std::vector<std::pair<Rat, SumWord>>& target_combo,
    const std::vector<SumWord>& candidate_a, int max_mzv_depth, Rat* residual_norm) {
  if (target_combo.empty()) return std::nullopt;
  int weight = target_combo[0].second.weight();
  Expr<Rat> lhs;
  for (auto& [c, w] : target_combo) lhs.add(euler.value_z(w), c);
  SpanBuild sb = build_span(euler, mzv, weight, candidate_a, max_mzv_depth);
  auto sol = span_reduce(sb, lhs, residual_norm);
  if (!sol) return std::nullopt;
  PushdownIdentity id;
  id.lhs = lhs;
  id.rhs = std::move(*sol);
  return id;
}

std::optional<std::vector<std::pair<Rat, PushGen>>> express_A_in_mzv(
    Session<Rat>& euler, Session<Rat>& mzv, const SumWord& indices) {
  int weight = indices.weight();
  MzvSpan span(euler, mzv, weight);
  return span.reduce(a_function_value(euler, indices));
}

int classify_mzv_expressible(Session<Rat>& euler, Session<Rat>& mzv, int weight,
                             int depth) {
  MzvSpan span(euler, mzv, weight);
  int count = 0;
  for (auto& z : all_sum_words(Kind::euler, weight, depth, true)) {
    if (z.len != depth) continue;
    bool has_neg = false;
    for (int i = 0; i < z.len; i++) has_neg |= z.c[i] < 0;
    if (!has_neg) continue;
    if (span.reduce(euler.value_z(z))) count++;
  }
  return count;
}

int classify_a_mzv_expressible(Session<Rat>& euler, Session<Rat>& mzv, int weight,
                               int depth) {
  MzvSpan span(euler, mzv, weight);
  int count = 0;
  std::function<void(SumWord&, int)> rec = [&](SumWord& cur, int left) {
    if (cur.len == depth) {
      if (left == 0 && span.reduce(a_function_value(euler, cur))) count++;
      return;
    }
    for (int n = 2; n <= left; n++) {
      cur.push(n);
      rec(cur, left - n);
      cur.len--;
    }
  };
  SumWord cur;
  rec(cur, weight);
  return count;
}

}  // namespace zsum
