#include "sylowlab/criterion.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sylowlab/gstruct.hpp"

namespace sylowlab {

namespace {

std::string kind_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::thm11: return "thm11";
    case CriterionKind::thm13: return "thm13";
    case CriterionKind::conj12: return "conj12";
  }
  return "?";
}

[[noreturn]] void abort_inconsistent(CriterionKind kind, const VpProfile& profile) {
  std::ostringstream msg;
  msg << "INCONSISTENT VERDICT for criterion " << kind_name(kind)
      << ": hypothesis holds but the group is not solvable.\n"
      << "  group: " << (profile.name.empty() ? "<unnamed>" : profile.name)
      << ", order " << profile.order << "\n  profile:";
  for (const auto& e : profile.entries)
    msg << " (p=" << e.p << " a=" << e.a << " v_p=" << e.v_p
        << " N=" << e.normalizer_order << ")";
  msg << "\nThis contradicts a published theorem and means a bug in this "
         "library; no result from this run should be trusted.";
  throw inconsistency_error(msg.str());
}

Verdict make_verdict(CriterionKind kind, bool hypothesis, bool actual,
                     const VpProfile& profile) {
  Verdict v;
  v.kind = kind;
  v.hypothesis_satisfied = hypothesis;
  if (hypothesis) v.predicted_solvable = true;
  v.actual_solvable = actual;
  v.consistent = !hypothesis || actual;
  if (!v.consistent) abort_inconsistent(kind, profile);
  return v;
}

long long vp_of(const VpProfile& profile, long p) {
  for (const auto& e : profile.entries)
    if (e.p == p) return e.v_p;
  return 1;   // p does not divide the order
}

}  // namespace

VpProfile vp_profile(const Group& g, const std::string& name, const SylowOptions& opts) {
  VpProfile profile;
  profile.name = name;
  profile.order = g.order();
  profile.factorization = factorize(profile.order);
  for (auto [p, a] : profile.factorization) {
    SylowReport report = count_sylow(g, p, opts);
    if (report.a != a)
      throw std::logic_error("p-part mismatch in vp_profile");
    profile.entries.push_back(std::move(report));
  }
  return profile;
}

Verdict check_theorem_1_1(const VpProfile& profile, bool actual_solvable) {
  return make_verdict(CriterionKind::thm11, vp_of(profile, 2) <= 4, actual_solvable,
                      profile);
}

Verdict check_theorem_1_3(const VpProfile& profile, bool actual_solvable) {
  bool hyp = true;
  for (const auto& e : profile.entries)
    if (e.p != 2 && e.v_p > e.p * e.p) { hyp = false; break; }
  return make_verdict(CriterionKind::thm13, hyp, actual_solvable, profile);
}

Verdict check_conjecture_1_2(const VpProfile& profile, bool actual_solvable) {
  bool hyp = true;
  for (const auto& e : profile.entries)
    if (e.p != 2 && e.v_p > e.p * e.p - e.p + 1) { hyp = false; break; }
  Verdict v = make_verdict(CriterionKind::conj12, hyp, actual_solvable, profile);
  // The conjecture's bound is the stronger one, so its hypothesis implies
  // the theorem's.
  if (v.hypothesis_satisfied &&
      !check_theorem_1_3(profile, actual_solvable).hypothesis_satisfied)
    throw std::logic_error("conj12 hypothesis without thm13 hypothesis");
  return v;
}

Verdict check_theorem_1_1(const Group& g, const SylowOptions& opts) {
  VpProfile profile = vp_profile(g, "", opts);
  return check_theorem_1_1(profile, is_solvable(g));
}

Verdict check_theorem_1_3(const Group& g, const SylowOptions& opts) {
  VpProfile profile = vp_profile(g, "", opts);
  return check_theorem_1_3(profile, is_solvable(g));
}

Verdict check_conjecture_1_2(const Group& g, const SylowOptions& opts) {
  VpProfile profile = vp_profile(g, "", opts);
  return check_conjecture_1_2(profile, is_solvable(g));
}

std::vector<ScanRow> scan_groups(const std::vector<std::pair<std::string, Group>>& groups,
                                 const SylowOptions& opts) {
  std::vector<ScanRow> rows;
  rows.reserve(groups.size());
  for (const auto& [name, group] : groups) {
    ScanRow row;
    row.profile = vp_profile(group, name, opts);
    row.solvable = is_solvable(group);
    row.thm11 = check_theorem_1_1(row.profile, row.solvable);
    row.thm13 = check_theorem_1_3(row.profile, row.solvable);
    row.conj12 = check_conjecture_1_2(row.profile, row.solvable);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScanRow> scan_corpus(const std::vector<CatalogEntry>& groups,
                                 const SylowOptions& opts) {
  std::vector<std::pair<std::string, Group>> named;
  named.reserve(groups.size());
  for (const CatalogEntry& entry : groups) named.emplace_back(entry.name, entry.group);
  return scan_groups(named, opts);
}

namespace {

// Keeps (p, v_p, bound) when it is an actual violation; the per-row checks
// below insist on at least one odd-prime violation (refuting the thm13
// hypothesis) and on v_2 > 4 (refuting thm11's).
class ReplayRowBuilder {
public:
  ReplayRowBuilder(std::string family, std::string instance, bool computed)
      : row_{std::move(family), std::move(instance), computed, {}} {}

  void consider(long p, long long v_p) {
    long long bound = (p == 2) ? 4 : p * p;
    if (v_p > bound) row_.violations.push_back({p, v_p, bound});
    if (p == 2) saw_v2_violation_ |= v_p > bound;
    else saw_odd_violation_ |= v_p > bound;
  }

  ReplayRow finish() {
    if (!saw_odd_violation_ || !saw_v2_violation_)
      throw inconsistency_error(
          "replay: " + row_.instance +
          " fails to violate the required Sylow bounds; the numeric replay "
          "of the case analysis is broken");
    return std::move(row_);
  }

private:
  ReplayRow row_;
  bool saw_odd_violation_ = false;
  bool saw_v2_violation_ = false;
};

}  // namespace

std::vector<ReplayRow> replay_contradictions(const SylowOptions& opts) {
  std::vector<ReplayRow> rows;

  // Direct computation: v_2 plus every odd prime divisor.
  auto computed_row = [&](const std::string& family, const CatalogEntry& entry) {
    ReplayRowBuilder builder(family, entry.name, true);
    for (auto [p, a] : factorize(entry.group.order())) {
      (void)a;
      builder.consider(p, count_sylow(entry.group, p, opts).v_p);
    }
    rows.push_back(builder.finish());
  };

  // A5: the sharpness case, pinned exactly at v_2 = 5 = 4 + 1.
  {
    CatalogEntry a5 = alternating(5);
    if (long long v2 = count_sylow(a5.group, 2, opts).v_p; v2 != 5)
      throw inconsistency_error("replay: v_2(A5) = " + std::to_string(v2) +
                                ", expected the sharpness value 5");
    computed_row("A5 (sharpness)", a5);
  }

  // L2(2^p): computed at q = 8, formula at q = 8 and 32.
  computed_row("L2(2^p)", psl2(8));
  for (long q : {8l, 32l}) {
    ReplayRowBuilder builder("L2(2^p)", "PSL(2," + std::to_string(q) + ") [formula]",
                             false);
    int p = 0;
    for (long t = q; t > 1; t >>= 1) ++p;
    builder.consider(2, formula_v2_psl2_even(p));
    for (auto [r, a] : factorize(q * q - 1)) {
      (void)a;
      builder.consider(r, formula_vr_psl2_even(q, r).realized);
    }
    rows.push_back(builder.finish());
  }

  // L2(3^p): computed at q = 27, formulas for v_3 and the v_2 candidates.
  computed_row("L2(3^p)", psl2(27));
  {
    ReplayRowBuilder builder("L2(3^p)", "PSL(2,27) [formula]", false);
    builder.consider(3, formula_v3_psl2_3p(3));
    auto v2 = formula_v2_psl2_odd(27);
    builder.consider(2, v2.realized.value_or(std::min(v2.first, v2.second)));
    rows.push_back(builder.finish());
  }

  // L2(p): computed at p = 7 and 13.
  computed_row("L2(p)", psl2(7));
  computed_row("L2(p)", psl2(13));

  // L3(3): direct computation of both relevant counts.
  computed_row("L3(3)", psl3_3());

  // Sz(q): computed at q = 8, formula at q = 8, 32, 128.
  computed_row("Sz(q)", suzuki_8());
  for (long q : {8l, 32l, 128l}) {
    SuzukiFormula fm = formula_suzuki(q);
    ReplayRowBuilder builder("Sz(q)", "Sz(" + std::to_string(q) + ") [formula]", false);
    builder.consider(2, fm.v2);
    builder.consider(5, fm.v5);
    rows.push_back(builder.finish());
  }

  return rows;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["hypothesis_satisfied"] = v.hypothesis_satisfied;
  if (v.predicted_solvable)
    j["predicted_solvable"] = *v.predicted_solvable;
  else
    j["predicted_solvable"] = nullptr;
  j["actual_solvable"] = v.actual_solvable;
  j["consistent"] = v.consistent;
  return j;
}

nlohmann::json scan_row_to_json(const ScanRow& row) {
  nlohmann::json j;
  j["group"] = row.profile.name;
  j["order"] = row.profile.order;
  nlohmann::json fact = nlohmann::json::array();
  for (auto [p, a] : row.profile.factorization) fact.push_back({p, a});
  j["factorization"] = fact;
  nlohmann::json prof = nlohmann::json::array();
  for (const auto& e : row.profile.entries)
    prof.push_back({{"p", e.p},
                    {"a", e.a},
                    {"v_p", e.v_p},
                    {"normalizer_order", e.normalizer_order}});
  j["profile"] = prof;
  j["verdicts"] = {{"thm11", verdict_to_json(row.thm11)},
                   {"thm13", verdict_to_json(row.thm13)},
                   {"conj12", verdict_to_json(row.conj12)}};
  return j;
}

}  // namespace sylowlab
