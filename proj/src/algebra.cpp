#include "zsum/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zsum {

namespace {

// Suffix shuffle cells, keyed by packed suffix word (base 3, marker digit).
struct ShuffleCell {
  std::vector<std::pair<uint64_t, int64_t>> terms;  // packed word -> count
};

uint64_t pow3(int n) {
  uint64_t v = 1;
  while (n--) v *= 3;
  return v;
}

}  // namespace

std::vector<std::pair<IntegralWord, int64_t>> shuffle(const IntegralWord& u,
                                                      const IntegralWord& v) {
  int n = u.len, m = v.len;
  if (n + m > 39) throw std::length_error("shuffle: combined weight too large");
  std::vector<ShuffleCell> cell((n + 1) * (m + 1));
  auto at = [&](int i, int j) -> ShuffleCell& { return cell[i * (m + 1) + j]; };
  at(n, m).terms.push_back({1, 1});  // empty word marker
  auto digit = [](Letter l) -> uint64_t { return l == 0 ? 0 : (l == 1 ? 1 : 2); };
  // Bottom-up over suffix pairs; prepend one letter at a time and collect.
  for (int i = n; i >= 0; i--) {
    for (int j = m; j >= 0; j--) {
      if (i == n && j == m) continue;
      int suffix_len = (n - i) + (m - j) - 1;  // length before prepending
      uint64_t step = pow3(suffix_len);
      std::vector<std::pair<uint64_t, int64_t>> merged;
      auto prepend_from = [&](const ShuffleCell& src, Letter l) {
        uint64_t add = step * (2 + digit(l));
        for (auto& [w, c] : src.terms) merged.push_back({w + add, c});
      };
      if (i < n) prepend_from(at(i + 1, j), u.a[i]);
      if (j < m) prepend_from(at(i, j + 1), v.a[j]);
      std::sort(merged.begin(), merged.end());
      auto& out = at(i, j).terms;
      for (size_t k = 0; k < merged.size();) {
        uint64_t w = merged[k].first;
        int64_t c = 0;
        while (k < merged.size() && merged[k].first == w) c += merged[k++].second;
        out.push_back({w, c});
      }
    }
  }
  std::vector<std::pair<IntegralWord, int64_t>> res;
  res.reserve(at(0, 0).terms.size());
  for (auto& [w, c] : at(0, 0).terms)
    res.push_back({unpack_word(WordKey{w}, Kind::euler), c});
  return res;
}

std::vector<std::pair<IntegralWord, int64_t>> shuffle_reference(const IntegralWord& u,
                                                                const IntegralWord& v) {
  std::map<uint64_t, int64_t> acc;
  IntegralWord cur;
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == u.len && j == v.len) {
      acc[pack_word(cur, Kind::euler).v]++;
      return;
    }
    if (i < u.len) {
      cur.push(u.a[i]);
      rec(i + 1, j);
      cur.len--;
    }
    if (j < v.len) {
      cur.push(v.a[j]);
      rec(i, j + 1);
      cur.len--;
    }
  };
  rec(0, 0);
  std::vector<std::pair<IntegralWord, int64_t>> res;
  for (auto& [w, c] : acc) res.push_back({unpack_word(WordKey{w}, Kind::euler), c});
  return res;
}

namespace {

std::vector<std::pair<SumWord, int64_t>> stuffle_impl(const SumWord& u, const SumWord& v,
                                                      int merge_sign) {
  struct Cell {
    std::vector<std::pair<SumWord, int64_t>> terms;
    bool done = false;
  };
  int n = u.len, m = v.len;
  std::vector<Cell> cell((n + 1) * (m + 1));
  auto key_less = [](const SumWord& a, const SumWord& b) {
    if (a.len != b.len) return a.len < b.len;
    return std::lexicographical_compare(a.c, a.c + a.len, b.c, b.c + b.len);
  };
  std::function<const Cell&(int, int)> get = [&](int i, int j) -> const Cell& {
    Cell& c = cell[i * (m + 1) + j];
    if (c.done) return c;
    c.done = true;
    if (i == n && j == m) {
      c.terms.push_back({SumWord{}, 1});
      return c;
    }
    std::vector<std::pair<SumWord, int64_t>> merged;
    auto prepend = [&](const Cell& src, int head, int64_t sgn) {
      for (auto& [w, cnt] : src.terms) {
        SumWord t;
        t.push(head);
        for (int k = 0; k < w.len; k++) t.push(w.c[k]);
        merged.push_back({t, cnt * sgn});
      }
    };
    if (i < n) prepend(get(i + 1, j), u.c[i], 1);
    if (j < m) prepend(get(i, j + 1), v.c[j], 1);
    if (i < n && j < m) prepend(get(i + 1, j + 1), amp_merge(u.c[i], v.c[j]), merge_sign);
    std::sort(merged.begin(), merged.end(),
              [&](auto& a, auto& b) { return key_less(a.first, b.first); });
    for (size_t k = 0; k < merged.size();) {
      SumWord w = merged[k].first;
      int64_t cnt = 0;
      while (k < merged.size() && merged[k].first == w) cnt += merged[k++].second;
      if (cnt != 0) c.terms.push_back({w, cnt});
    }
    return c;
  };
  return get(0, 0).terms;
}

}  // namespace

std::vector<std::pair<SumWord, int64_t>> stuffle_z(const SumWord& u, const SumWord& v) {
  return stuffle_impl(u, v, 1);
}

std::vector<std::pair<SumWord, int64_t>> stuffle_s(const SumWord& u, const SumWord& v) {
  return stuffle_impl(u, v, -1);
}

DoublingRhs doubling_rhs(const IntegralWord& w) {
  if (!w.is_mzv()) throw std::invalid_argument("doubling_rhs: negative letters in " + w.str());
  DoublingRhs r;
  r.zeros = 0;
  for (int i = 0; i < w.len; i++) r.zeros += w.a[i] == 0;
  r.terms.push_back({1, IntegralWord{}});
  for (int i = 0; i < w.len; i++) {
    std::vector<std::pair<int, IntegralWord>> next;
    next.reserve(r.terms.size() * 2);
    for (auto& [s, word] : r.terms) {
      if (w.a[i] == 0) {
        auto t = word;
        t.push(0);
        next.push_back({s, t});
      } else {
        auto t1 = word;
        t1.push(1);
        next.push_back({s, t1});
        auto t2 = word;
        t2.push(-1);
        next.push_back({-s, t2});
      }
    }
    r.terms = std::move(next);
  }
  return r;
}

}  // namespace zsum
