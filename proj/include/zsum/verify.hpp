#pragma once

#include <string>
#include <vector>

#include "zsum/tables.hpp"

namespace zsum {

struct VerifyLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  bool all_pass() const {
    for (auto& l : lines)
      if (!l.pass) return false;
    return true;
  }
};

// Convenience: a relation sum(coeff * Z(word)) checked against the session's
// tables (current weight included).
bool check_z_relation(Session<Rat>& session, int weight,
                      const std::vector<std::pair<Rat, SumWord>>& terms);

VerifyReport verify_duality(int max_weight);
VerifyReport verify_sum_theorem(int max_weight);
VerifyReport verify_derivation(int max_weight);
VerifyReport verify_partial_derivation(int max_weight);
VerifyReport verify_hoffman(Session<Rat>& mzv);
VerifyReport verify_named(Session<Rat>& mzv, Session<Rat>& euler, int max_euler_weight);
VerifyReport verify_double_shuffle(int max_weight);

}  // namespace zsum
