#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sylowlab/catalog.hpp"
#include "sylowlab/criterion.hpp"
#include "sylowlab/gstruct.hpp"
#include "sylowlab/sylow.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sylowlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
// Reserved for the theorem-inconsistency sentinel: a "mathematically
// impossible" result, i.e. a bug in this library, never bad input.
constexpr int kExitInconsistent = 2;

std::string factorization_str(const std::vector<std::pair<long, int>>& fact) {
  std::string out;
  for (auto [p, a] : fact) {
    if (!out.empty()) out += " * ";
    out += std::to_string(p);
    if (a > 1) out += "^" + std::to_string(a);
  }
  return out.empty() ? "1" : out;
}

void print_sylow_line(std::ostream& os, const SylowReport& r) {
  os << "p=" << r.p << " a=" << r.a << " v_p=" << r.v_p
     << " normalizer=" << r.normalizer_order << "\n";
}

void print_verdict(std::ostream& os, const std::string& name, const Verdict& v) {
  os << name << ": hypothesis " << (v.hypothesis_satisfied ? "holds" : "fails");
  if (v.predicted_solvable) os << ", predicts solvable";
  os << "; actually " << (v.actual_solvable ? "solvable" : "non-solvable")
     << "; " << (v.consistent ? "consistent" : "INCONSISTENT") << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"sylowlab: Sylow subgroup counts and solvability criteria for "
               "finite permutation groups"};
  app.require_subcommand(1);

  SylowOptions opts;
  if (const char* env = std::getenv("SYLOWLAB_SEED")) opts.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--enum-cap", opts.enumeration_cap, "element enumeration cap");
  app.add_option("--orbit-cap", opts.orbit_cap, "conjugation orbit cap");
  app.add_option("--seed", opts.seed, "rng seed (overrides SYLOWLAB_SEED)");

  // info
  auto* info = app.add_subcommand("info", "degree, order, solvability, nilpotency");
  std::string info_file;
  bool info_json = false;
  info->add_option("file", info_file, "group file")->required();
  info->add_flag("--json", info_json, "JSON output");

  // sylow
  auto* sylow = app.add_subcommand("sylow", "Sylow subgroup report");
  std::string sylow_file;
  long sylow_p = 0;
  bool sylow_json = false;
  sylow->add_option("file", sylow_file, "group file")->required();
  sylow->add_option("--p", sylow_p, "prime (all prime divisors when omitted)");
  sylow->add_flag("--json", sylow_json, "JSON output");

  // check
  auto* check = app.add_subcommand("check", "evaluate a solvability criterion");
  std::string check_file, check_criterion;
  bool check_json = false;
  check->add_option("file", check_file, "group file")->required();
  check->add_option("--criterion", check_criterion, "thm11 | thm13 | conj12")->required();
  check->add_flag("--json", check_json, "JSON output");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "formula table row, optional export");
  std::string cat_family, cat_export;
  long cat_q = 0;
  int cat_n = 0;
  bool cat_json = false;
  std::string cat_export_dir;
  catalog->add_option("family", cat_family,
                      "alternating|symmetric|cyclic|dihedral|psl2|psl3|suzuki|sl23|corpus")
      ->required();
  catalog->add_option("--n", cat_n, "n for alternating/symmetric/cyclic/dihedral");
  catalog->add_option("--q", cat_q, "q for psl2/suzuki");
  catalog->add_option("--export", cat_export, "write the group file here");
  catalog->add_option("--export-dir", cat_export_dir,
                      "corpus only: write one .grp file per group into this directory");
  catalog->add_flag("--json", cat_json, "JSON output");

  // replay
  auto* replay = app.add_subcommand("replay", "numeric replay of the case analysis");
  bool replay_json = false;
  replay->add_flag("--json", replay_json, "JSON output");

  // scan
  auto* scan = app.add_subcommand("scan", "scan a directory of group files");
  std::string scan_dir, scan_json_out;
  scan->add_option("dir", scan_dir, "directory with .grp files")->required();
  scan->add_option("--json", scan_json_out, "write the JSON report here ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  if (*info) {
    Group g = read_group_file(info_file);
    bool solv = is_solvable(g);
    bool nilp = is_nilpotent(g);
    if (info_json) {
      json j{{"file", info_file},
             {"degree", g.degree()},
             {"order", g.order()},
             {"factorization", json::array()},
             {"solvable", solv},
             {"nilpotent", nilp}};
      for (auto [p, a] : factorize(g.order())) j["factorization"].push_back({p, a});
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "degree " << g.degree() << "\norder " << g.order() << " = "
                << factorization_str(factorize(g.order())) << "\nsolvable "
                << (solv ? "yes" : "no") << "\nnilpotent " << (nilp ? "yes" : "no")
                << "\n";
    }
    return kExitOk;
  }

  if (*sylow) {
    Group g = read_group_file(sylow_file);
    std::vector<SylowReport> reports;
    if (sylow->count("--p")) {
      reports.push_back(count_sylow(g, sylow_p, opts));
    } else {
      for (auto [p, a] : factorize(g.order())) {
        (void)a;
        reports.push_back(count_sylow(g, p, opts));
      }
    }
    if (sylow_json) {
      json arr = json::array();
      for (const auto& r : reports)
        arr.push_back({{"p", r.p},
                       {"a", r.a},
                       {"v_p", r.v_p},
                       {"normalizer_order", r.normalizer_order}});
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& r : reports) print_sylow_line(std::cout, r);
    }
    return kExitOk;
  }

  if (*check) {
    Group g = read_group_file(check_file);
    Verdict v;
    if (check_criterion == "thm11") v = check_theorem_1_1(g, opts);
    else if (check_criterion == "thm13") v = check_theorem_1_3(g, opts);
    else if (check_criterion == "conj12") v = check_conjecture_1_2(g, opts);
    else throw CLI::ValidationError("--criterion must be thm11, thm13 or conj12");
    if (check_json)
      std::cout << verdict_to_json(v).dump(2) << "\n";
    else
      print_verdict(std::cout, check_criterion, v);
    return kExitOk;
  }

  if (*catalog) {
    if (cat_family == "corpus") {
      if (cat_export_dir.empty())
        throw std::invalid_argument("catalog corpus requires --export-dir");
      fs::create_directories(cat_export_dir);
      auto slugify = [](const std::string& name) {
        std::string slug;
        for (char c : name) {
          if (std::isalnum(static_cast<unsigned char>(c)))
            slug += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          else if (!slug.empty() && slug.back() != '_')
            slug += '_';
        }
        while (!slug.empty() && slug.back() == '_') slug.pop_back();
        return slug;
      };
      for (const CatalogEntry& e : builtin_corpus()) {
        fs::path out_path = fs::path(cat_export_dir) / (slugify(e.name) + ".grp");
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path.string());
        out << "# " << e.name << ", order " << e.expected_order << "\n";
        write_group(out, e.group);
        std::cout << out_path.string() << "\n";
      }
      return kExitOk;
    }
    CatalogEntry entry = [&] {
      if (cat_family == "alternating") return alternating(cat_n);
      if (cat_family == "symmetric") return symmetric(cat_n);
      if (cat_family == "cyclic") return cyclic(cat_n);
      if (cat_family == "dihedral") return dihedral(cat_n);
      if (cat_family == "psl2") return psl2(cat_q);
      if (cat_family == "psl3") return psl3_3();
      if (cat_family == "suzuki") {
        if (cat_q != 0 && cat_q != 8)
          throw std::invalid_argument(
              "suzuki: only q=8 has a permutation construction; use --json "
              "formulas for larger q via 'catalog suzuki --q 8'");
        return suzuki_8();
      }
      if (cat_family == "sl23") return sl2_3();
      throw std::invalid_argument("unknown catalog family: " + cat_family);
    }();

    json j{{"name", entry.name},
           {"degree", entry.group.degree()},
           {"order", entry.expected_order}};
    std::string extra;
    if (entry.family == Family::Suzuki) {
      SuzukiFormula fm = formula_suzuki(entry.params[0]);
      j["v2"] = fm.v2;
      j["v5"] = fm.v5;
      j["T_order"] = fm.t_order;
      extra = "v2 " + std::to_string(fm.v2) + "\nv5 " + std::to_string(fm.v5) +
              "\nT_order " + std::to_string(fm.t_order) + "\n";
    } else if (entry.family == Family::PSL2 && entry.params[0] % 2 == 0) {
      long q = entry.params[0];
      json vr = json::object();
      std::string txt;
      for (auto [r, a] : factorize(q * q - 1)) {
        (void)a;
        vr[std::to_string(r)] = formula_vr_psl2_even(q, r).realized;
        txt += "v" + std::to_string(r) + " " +
               std::to_string(formula_vr_psl2_even(q, r).realized) + "\n";
      }
      j["v_r"] = vr;
      extra = txt;
    } else if (entry.family == Family::PSL2) {
      auto v2 = formula_v2_psl2_odd(entry.params[0]);
      j["v2_candidates"] = {v2.first, v2.second};
      extra = "v2 candidates {" + std::to_string(v2.first) + ", " +
              std::to_string(v2.second) + "}\n";
      if (v2.realized) {
        j["v2_realized"] = *v2.realized;
        extra += "v2 realized " + std::to_string(*v2.realized) + "\n";
      }
    }
    if (cat_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << entry.name << "\ndegree " << entry.group.degree() << "\norder "
                << entry.expected_order << "\n" << extra;

    if (!cat_export.empty()) {
      std::ofstream out(cat_export);
      if (!out) throw std::invalid_argument("cannot write " + cat_export);
      out << "# " << entry.name << ", order " << entry.expected_order << "\n";
      write_group(out, entry.group);
    }
    return kExitOk;
  }

  if (*replay) {
    std::vector<ReplayRow> rows = replay_contradictions(opts);
    if (replay_json) {
      json arr = json::array();
      for (const auto& row : rows) {
        json viols = json::array();
        for (const auto& v : row.violations)
          viols.push_back({{"p", v.p}, {"v_p", v.v_p}, {"bound", v.bound}});
        arr.push_back({{"family", row.family},
                       {"instance", row.instance},
                       {"computed", row.computed},
                       {"violations", viols}});
      }
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& row : rows) {
        std::cout << row.family << " | " << row.instance
                  << (row.computed ? " [computed]" : "") << " | violated at";
        for (const auto& v : row.violations)
          std::cout << " p=" << v.p << " (" << v.v_p << " > " << v.bound << ")";
        std::cout << "\n";
      }
      std::cout << "all rows violate the bounds, as the case analysis requires\n";
    }
    return kExitOk;
  }

  if (*scan) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(scan_dir))
      if (e.is_regular_file() && e.path().extension() == ".grp")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());   // lexicographic, for determinism

    std::vector<std::pair<std::string, Group>> groups;
    for (const auto& f : files) groups.emplace_back(f.stem().string(), read_group_file(f.string()));
    std::vector<ScanRow> rows = scan_groups(groups, opts);

    json arr = json::array();
    for (const auto& row : rows) arr.push_back(scan_row_to_json(row));

    if (!scan_json_out.empty()) {
      if (scan_json_out == "-") {
        std::cout << arr.dump(2) << "\n";
      } else {
        std::ofstream out(scan_json_out);
        if (!out) throw std::invalid_argument("cannot write " + scan_json_out);
        out << arr.dump(2) << "\n";
      }
    } else {
      for (const auto& row : rows) {
        std::cout << row.profile.name << " order=" << row.profile.order
                  << " solvable=" << (row.solvable ? "yes" : "no") << " profile=[";
        bool first = true;
        for (const auto& e : row.profile.entries) {
          if (!first) std::cout << " ";
          std::cout << "v" << e.p << "=" << e.v_p;
          first = false;
        }
        std::cout << "] thm11=" << (row.thm11.hypothesis_satisfied ? "hyp" : "-")
                  << " thm13=" << (row.thm13.hypothesis_satisfied ? "hyp" : "-")
                  << " conj12=" << (row.conj12.hypothesis_satisfied ? "hyp" : "-")
                  << "\n";
      }
      std::cout << rows.size() << " groups, zero inconsistent verdicts\n";
    }
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
