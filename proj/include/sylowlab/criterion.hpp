#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sylowlab/catalog.hpp"
#include "sylowlab/group.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {

// A consistent=false verdict would contradict a published theorem; the
// checkers throw this (with full context) instead of returning one. The CLI
// maps it to exit code 2.
class inconsistency_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct VpProfile {
  std::string name;
  long long order = 0;
  std::vector<std::pair<long, int>> factorization;   // (p, a), ascending p
  std::vector<SylowReport> entries;                  // one per prime divisor
};

enum class CriterionKind { thm11, thm13, conj12 };

struct Verdict {
  CriterionKind kind;
  bool hypothesis_satisfied = false;
  std::optional<bool> predicted_solvable;   // set only when hypothesis holds
  bool actual_solvable = false;
  bool consistent = false;                  // !hypothesis || actual_solvable
};

VpProfile vp_profile(const Group& g, const std::string& name,
                     const SylowOptions& opts = {});

// thm11: v_2(G) <= 4 implies solvable.
Verdict check_theorem_1_1(const Group& g, const SylowOptions& opts = {});
Verdict check_theorem_1_1(const VpProfile& profile, bool actual_solvable);

// thm13: v_p(G) <= p^2 for every odd prime p | |G| implies solvable.
Verdict check_theorem_1_3(const Group& g, const SylowOptions& opts = {});
Verdict check_theorem_1_3(const VpProfile& profile, bool actual_solvable);

// conj12: v_p(G) <= p^2 - p + 1 for every odd prime p | |G| implies solvable.
Verdict check_conjecture_1_2(const Group& g, const SylowOptions& opts = {});
Verdict check_conjecture_1_2(const VpProfile& profile, bool actual_solvable);

struct ScanRow {
  VpProfile profile;
  bool solvable = false;
  Verdict thm11, thm13, conj12;
};

// One row per group, in input order; throws inconsistency_error on the
// first inconsistent verdict.
std::vector<ScanRow> scan_groups(const std::vector<std::pair<std::string, Group>>& groups,
                                 const SylowOptions& opts = {});
std::vector<ScanRow> scan_corpus(const std::vector<CatalogEntry>& groups,
                                 const SylowOptions& opts = {});

// Numeric replay of the case analysis behind the two theorems: every row
// must violate the thm13 hypothesis (and thm11's where claimed). The A5 row
// doubles as the sharpness pin v_2 = 5 = bound + 1.
struct ReplayViolation {
  long p = 0;
  long long v_p = 0;
  long long bound = 0;   // p^2, or 4 for p = 2
};
struct ReplayRow {
  std::string family;
  std::string instance;                      // e.g. "PSL(2,27)", "Sz(32) [formula]"
  bool computed = false;                     // direct computation vs formula only
  std::vector<ReplayViolation> violations;   // nonempty, or the row aborts
};
std::vector<ReplayRow> replay_contradictions(const SylowOptions& opts = {});

nlohmann::json scan_row_to_json(const ScanRow& row);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace sylowlab
