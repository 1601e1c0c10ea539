#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsum/expr.hpp"
#include "zsum/words.hpp"

namespace zsum {

enum class BasisPolicy : uint8_t { automatic, greedy, lyndon_odd, fixed_set };

struct RunConfig {
  Kind kind = Kind::euler;
  int weight = 0;
  int max_depth = 0;  // 0 = unbounded
  bool use_stuffle = true;
  bool use_shuffle = true;
  bool use_divergent_shuffle = true;
  bool use_doubling = true;   // Euler only
  bool use_gdr = true;             // Euler only
  bool use_pseudo_duality = false; // Euler, full depth only (depth mixing)
  bool use_duality = true;         // MZV only: dual-pair dedupe of the targets
  bool drop_products = false; // modular basis-size runs only
  bool skip_trivial_shuffles = false;
  int group_size = 0;  // 0 = auto
  int threads = 0;     // 0 = library default
  BasisPolicy policy = BasisPolicy::automatic;  // resolved per kind when automatic
  std::vector<SumWord> fixed_basis;             // m-notation words for fixed_set

  RunConfig with_weight(int w) const {
    RunConfig c = *this;
    c.weight = w;
    return c;
  }
};

struct RunStats {
  long equations_considered = 0;
  long equations_trivial = 0;
  long substitutions = 0;
  long groups = 0;
  size_t max_master_terms = 0;
  double seconds = 0;
};

template <class F>
struct ReductionTable {
  Kind kind = Kind::euler;
  int weight = 0;
  int max_depth = 0;
  bool drop_products = false;
  uint32_t prime = 0;  // 0 = rational
  std::vector<WordKey> order;                    // enumeration order of the targets
  std::unordered_map<uint64_t, Expr<F>> values;  // closed over atoms
  std::vector<AtomId> remaining;                 // promoted same-weight atoms
  std::map<int, int> remaining_by_depth;         // word depth -> count
  RunStats stats;

  const Expr<F>* find(WordKey k) const {
    auto it = values.find(k.v);
    return it == values.end() ? nullptr : &it->second;
  }
};

// Builds and caches reduction tables weight by weight; resolves values of
// lower-weight sums (convergent from the tables, divergent through stuffle
// regularization in the sinf symbol).
template <class F>
class Session {
 public:
  explicit Session(RunConfig proto);

  const RunConfig& proto() const { return proto_; }
  const ReductionTable<F>& table(int weight);
  bool has_table(int weight) const { return tables_.count(weight) != 0; }
  void put_table(ReductionTable<F> t) { tables_[t.weight] = std::move(t); }

  // Value of an H word (integral letters) of weight below the current run.
  // In drop-products mode every lower-weight value is zero by construction.
  Expr<F> value_h(const IntegralWord& h);
  // Value of a nested sum in Z sign convention; divergent words allowed.
  Expr<F> value_z(const SumWord& z);

 private:
  RunConfig proto_;
  std::map<int, ReductionTable<F>> tables_;
  std::unordered_map<uint64_t, Expr<F>> divergent_cache_;  // packed H word -> value
};

// Stuffle-peeling regularization shared by the session (lower weights) and
// the solver (current weight).  resolve_now maps convergent words of z's own
// weight to expressions; lower-weight values go through the session.
template <class F>
Expr<F> stuffle_regularize(const SumWord& z, Session<F>& session,
                           const std::function<Expr<F>(const SumWord&)>& resolve_now);

// Convergent H-word -> (sign, key) after optional duality folding.
struct TargetRef {
  int sign;
  WordKey key;
};
TargetRef fold_target(const IntegralWord& h, Kind kind, bool dedupe_duality);

}  // namespace zsum
