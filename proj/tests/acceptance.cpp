// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-sylowlab-cli> <path-to-groups-dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "sylowlab/catalog.hpp"
#include "sylowlab/criterion.hpp"
#include "sylowlab/gstruct.hpp"
#include "sylowlab/sylow.hpp"

#include "support.hpp"

namespace fs = std::filesystem;
using namespace sylowlab;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_groups_dir;

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double run_timed(const std::function<void()>& body) {
  auto start = Clock::now();
  body();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_time(double seconds, double limit, const std::string& what) {
  require(seconds < limit, what + " took " + std::to_string(seconds) +
                               "s, limit " + std::to_string(limit) + "s");
}

// --- criterion 1: reference-value reproduction, exact, with runtime limits ---
void criterion_reference_values() {
  double t = run_timed([] {
    Group a5 = alternating(5).group;
    require(count_sylow(a5, 2).v_p == 5, "v_2(A5) != 5");
    require(count_sylow(a5, 3).v_p == 10, "v_3(A5) != 10");
  });
  require_time(t, 1.0, "A5 counts");

  t = run_timed([] {
    Group l33 = psl3_3().group;
    require(count_sylow(l33, 2).v_p == 351, "v_2(PSL(3,3)) != 351");
    require(count_sylow(l33, 3).v_p == 52, "v_3(PSL(3,3)) != 52");
  });
  require_time(t, 60.0, "PSL(3,3) counts");

  t = run_timed([] {
    require(count_sylow(psl2(8).group, 2).v_p == formula_v2_psl2_even(3),
            "v_2(PSL(2,8)) != 2^3 + 1");
    require(formula_v2_psl2_even(3) == 9, "formula 2^3+1 != 9");
  });
  require_time(t, 5.0, "PSL(2,8) count");

  t = run_timed([] {
    require(count_sylow(psl2(27).group, 3).v_p == formula_v3_psl2_3p(3),
            "v_3(PSL(2,27)) != 3^3 + 1");
    require(formula_v3_psl2_3p(3) == 28, "formula 3^3+1 != 28");
  });
  require_time(t, 60.0, "PSL(2,27) count");

  t = run_timed([] {
    CatalogEntry sz = suzuki_8();
    SuzukiFormula fm = formula_suzuki(8);
    require(sz.group.order() == 29120, "|Sz(8)| != 29120");
    require(count_sylow(sz.group, 2).v_p == 65, "v_2(Sz(8)) != 65");
    long long v5 = count_sylow(sz.group, 5).v_p;
    require(v5 == 1456, "v_5(Sz(8)) != 1456");
    require(v5 == fm.order / fm.t_order, "v_5(Sz(8)) != |G|/|T|");
  });
  require_time(t, 120.0, "Sz(8) counts");
}

// --- criterion 2: orbit count == brute-force count, |G| <= 5000 ---
void criterion_oracle_equivalence() {
  for (const CatalogEntry& e : builtin_corpus()) {
    if (e.group.order() > 5000) continue;
    for (auto [p, a] : factorize(e.group.order())) {
      (void)a;
      long long fast = count_sylow(e.group, p).v_p;
      long long brute = count_sylow_bruteforce(e.group, p);
      require(fast == brute, e.name + " p=" + std::to_string(p) + ": orbit count " +
                                 std::to_string(fast) + " != brute force " +
                                 std::to_string(brute));
    }
  }
}

// --- criterion 3: Sylow congruence/divisibility/order, full corpus ---
void criterion_sylow_properties() {
  for (const CatalogEntry& e : builtin_corpus()) {
    for (auto [p, a] : factorize(e.group.order())) {
      SylowReport r = count_sylow(e.group, p);
      long long pa = 1;
      for (int i = 0; i < a; ++i) pa *= p;
      std::string ctx = e.name + " p=" + std::to_string(p);
      require(r.subgroup.order() == pa, ctx + ": |P| != p^a");
      require(r.v_p % p == 1, ctx + ": v_p != 1 (mod p)");
      require((e.group.order() / pa) % r.v_p == 0, ctx + ": v_p does not divide |G|/p^a");
    }
  }
}

// --- criterion 4: zero inconsistent verdicts over the corpus; CLI exit != 2 ---
void criterion_theorem_sentinel() {
  auto corpus = builtin_corpus();
  require(corpus.size() >= 30, "corpus smaller than 30 groups");
  std::vector<ScanRow> rows = scan_corpus(corpus);   // throws on inconsistency
  require(rows.size() == corpus.size(), "scan dropped rows");
  for (const ScanRow& row : rows)
    require(row.thm11.consistent && row.thm13.consistent && row.conj12.consistent,
            row.profile.name + ": inconsistent verdict recorded");

  int rc = std::system((g_cli + " scan " + g_groups_dir + " > /dev/null").c_str());
  require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0,
          "CLI scan exited with code " + std::to_string(WEXITSTATUS(rc)));
}

// --- criterion 5: contradiction replay for all five families + A5 pin ---
void criterion_replay() {
  std::vector<ReplayRow> rows = replay_contradictions();
  std::vector<std::string> expected{"A5 (sharpness)", "L2(2^p)", "L2(3^p)",
                                    "L2(p)", "L3(3)", "Sz(q)"};
  for (const std::string& fam : expected) {
    bool found = false;
    for (const ReplayRow& row : rows)
      if (row.family == fam && !row.violations.empty()) { found = true; break; }
    require(found, "no violating replay row for family " + fam);
  }
  // Sharpness: A5 violates the v_2 bound by exactly 1.
  for (const ReplayRow& row : rows)
    if (row.family == "A5 (sharpness)")
      for (const ReplayViolation& v : row.violations)
        if (v.p == 2) require(v.v_p == 5 && v.bound == 4, "A5 sharpness pin broken");

  int rc = std::system((g_cli + " replay > /dev/null").c_str());
  require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "CLI replay failed");
}

// --- criterion 6: chain order == BFS enumeration, |G| <= 5000 ---
void criterion_chain_soundness() {
  for (const CatalogEntry& e : builtin_corpus()) {
    if (e.group.order() > 5000) continue;
    auto brute = testsupport::bfs_elements(e.group.generators(), e.group.degree());
    require(e.group.order() == static_cast<long long>(brute.size()),
            e.name + ": chain order " + std::to_string(e.group.order()) +
                " != BFS count " + std::to_string(brute.size()));
  }
}

// --- criterion 7: scan is byte-deterministic under a fixed seed ---
void criterion_determinism() {
  fs::path tmp = fs::temp_directory_path();
  fs::path out1 = tmp / "sylowlab_scan_1.json";
  fs::path out2 = tmp / "sylowlab_scan_2.json";
  for (const fs::path& out : {out1, out2}) {
    std::string cmd = g_cli + " --seed 12345 scan " + g_groups_dir + " --json " +
                      out.string() + " > /dev/null";
    int rc = std::system(cmd.c_str());
    require(rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0, "CLI scan --json failed");
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp(out1), b = slurp(out2);
  require(!a.empty(), "scan JSON output is empty");
  require(a == b, "scan JSON outputs differ between identical runs");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <sylowlab-cli> <groups-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_groups_dir = argv[2];

  struct Criterion {
    std::string name;
    std::function<void()> body;
  };
  std::vector<Criterion> criteria{
      {"1 reference-value reproduction", criterion_reference_values},
      {"2 oracle equivalence (|G| <= 5000)", criterion_oracle_equivalence},
      {"3 Sylow-theorem property suite", criterion_sylow_properties},
      {"4 theorem sentinel (corpus scan)", criterion_theorem_sentinel},
      {"5 contradiction replay", criterion_replay},
      {"6 chain soundness vs BFS", criterion_chain_soundness},
      {"7 scan determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    try {
      double t = run_timed(c.body);
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(1);
      line << "PASS  criterion " << c.name << "  (" << t << "s)";
      std::cout << line.str() << "\n";
    } catch (const Failure& f) {
      std::cout << "FAIL  criterion " << c.name << ": " << f.message << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "FAIL  criterion " << c.name << ": unexpected error: " << e.what()
                << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
