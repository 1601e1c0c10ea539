#include "zsum/atoms.hpp"

#include <stdexcept>

namespace zsum {

AtomTable& AtomTable::instance() {
  static AtomTable t;
  return t;
}

std::string atom_name_for_zword(const SumWord& idx) {
  std::string s;
  for (int i = 0; i < idx.len; i++) {
    s += idx.c[i] < 0 ? "zm" : "z";
    s += std::to_string(idx.c[i] < 0 ? -idx.c[i] : int(idx.c[i]));
  }
  return s;
}

std::string atom_name_for_hword(const SumWord& mag) {
  // One character per index: 1..9 for -1..-9, A..Z for -10..-35.
  std::string s = "h";
  for (int i = 0; i < mag.len; i++) {
    int a = mag.c[i];
    if (a < 1 || a > 35) throw std::invalid_argument("hword index out of naming range");
    s += a <= 9 ? char('0' + a) : char('A' + a - 10);
  }
  return s;
}

std::string atom_name_for_aword(const SumWord& idx) {
  std::string s;
  for (int i = 0; i < idx.len; i++) s += "a" + std::to_string(int(idx.c[i]));
  return s;
}

AtomId AtomTable::intern(AtomInfo info) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = by_name_.find(info.name);
  if (it != by_name_.end()) return it->second;
  AtomId id = AtomId(atoms_.size());
  by_name_.emplace(info.name, id);
  atoms_.push_back(std::move(info));
  return id;
}

AtomId AtomTable::zword(const SumWord& idx) {
  return intern({AtomTag::zword, idx.weight(), idx, atom_name_for_zword(idx)});
}

AtomId AtomTable::hword(const SumWord& mag) {
  if (mag.len < 2) throw std::invalid_argument("hword atoms have depth >= 2");
  return intern({AtomTag::hword, mag.weight(), mag, atom_name_for_hword(mag)});
}

AtomId AtomTable::aword(const SumWord& idx) {
  return intern({AtomTag::aword, idx.weight(), idx, atom_name_for_aword(idx)});
}

AtomId AtomTable::eta(int k) {
  if (k < 2) throw std::invalid_argument("eta defined for k >= 2");
  return intern({AtomTag::eta, k, make_sum_word({k}), "e" + std::to_string(k)});
}

AtomId AtomTable::ln2() { return intern({AtomTag::ln2, 1, make_sum_word({1}), "h1"}); }

AtomId AtomTable::sinf() { return intern({AtomTag::sinf, 1, SumWord{}, "sinf"}); }

AtomId AtomTable::hmixed(const SumWord& m) {
  std::string s = "H(";
  for (int i = 0; i < m.len; i++) {
    if (i) s += ",";
    s += std::to_string(int(m.c[i]));
  }
  s += ")";
  return intern({AtomTag::hmixed, m.weight(), m, s});
}

long AtomTable::find(const std::string& name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : long(it->second);
}

AtomId AtomTable::by_name(const std::string& name) const {
  long id = find(name);
  if (id < 0) throw std::invalid_argument("unknown symbol: " + name);
  return AtomId(id);
}

}  // namespace zsum
