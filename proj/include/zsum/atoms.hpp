#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsum/words.hpp"

namespace zsum {

// Basis constants that reduction results are written in.  Word-backed atoms
// keep their index list; depth-one alternating sums use the eta notation.
enum class AtomTag : uint8_t {
  zword,   // Z(i1,...,id), signed indices (positive-only for MZV bases)
  hword,   // H(-a1,...,-ad), all indices negative, stored as magnitudes
  aword,   // A(a1,...,ad), positive indices
  eta,     // eta_k = H(-k), k >= 2
  ln2,     // H(-1)
  sinf,    // the symbolic one-fold logarithmic divergence
  hmixed,  // H word with mixed-sign m-notation indices (ablation leftovers)
};

struct AtomInfo {
  AtomTag tag;
  int weight;
  SumWord idx;  // meaning depends on tag; empty for sinf
  std::string name;
};

using AtomId = uint32_t;

// Process-wide interned atom set.  Ids are dense and stable for the lifetime
// of the process; all naming goes through here.
class AtomTable {
 public:
  static AtomTable& instance();

  AtomId zword(const SumWord& idx);
  AtomId zeta(int k) { return zword(make_sum_word({k})); }
  AtomId hword(const SumWord& magnitudes);  // H(-a1,...,-ad), depth >= 2
  AtomId aword(const SumWord& idx);
  AtomId eta(int k);
  AtomId ln2();
  AtomId sinf();
  AtomId hmixed(const SumWord& m_notation);

  const AtomInfo& info(AtomId id) const { return atoms_[id]; }
  int weight(AtomId id) const { return atoms_[id].weight; }
  const std::string& name(AtomId id) const { return atoms_[id].name; }
  // -1 if unknown.
  long find(const std::string& name) const;
  AtomId by_name(const std::string& name) const;  // throws on unknown
  size_t size() const { return atoms_.size(); }

 private:
  AtomTable() = default;
  AtomId intern(AtomInfo info);

  mutable std::mutex mu_;
  std::vector<AtomInfo> atoms_;
  std::unordered_map<std::string, AtomId> by_name_;
};

std::string atom_name_for_zword(const SumWord& idx);
std::string atom_name_for_hword(const SumWord& magnitudes);
std::string atom_name_for_aword(const SumWord& idx);

}  // namespace zsum
