#include "sylowlab/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sylowlab {

namespace {

int first_moved_point(const Perm& g) {
  for (int i = 0; i < g.degree(); ++i)
    if (g[i] != i) return i;
  return -1;
}

// Basic orbit of level.base under level.generators, BFS in generator order.
void recompute_orbit(int degree, ChainLevel& level) {
  level.orbit.clear();
  level.transversal.assign(degree, std::nullopt);
  level.orbit.push_back(level.base);
  level.transversal[level.base] = Perm(degree);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    int p = level.orbit[head];
    for (const Perm& s : level.generators) {
      int q = s[p];
      if (!level.transversal[q]) {
        level.transversal[q] = compose(*level.transversal[p], s);
        level.orbit.push_back(q);
      }
    }
  }
}

}  // namespace

StabilizerChain StabilizerChain::build(int degree, const std::vector<Perm>& generators) {
  StabilizerChain chain(degree);

  auto new_level = [&](const Perm& g) {
    ChainLevel level;
    level.base = first_moved_point(g);
    chain.levels_.push_back(std::move(level));
  };

  std::vector<Perm> gens;
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (!gens.empty()) {
    new_level(gens.front());
    chain.levels_[0].generators = gens;
    recompute_orbit(degree, chain.levels_[0]);
  }

  // Deterministic Schreier-Sims: test Schreier generators level by level,
  // sifting each through the lower part of the chain and extending the
  // chain where a nontrivial residue gets stuck.
  int i = static_cast<int>(chain.levels_.size()) - 1;
  while (i >= 0) {
    ChainLevel& level = chain.levels_[i];
    bool restarted = false;
    // Note: new_level may reallocate levels_, so the loop must not touch
    // `level` again once `restarted` is set.
    for (std::size_t oi = 0; !restarted && oi < level.orbit.size(); ++oi) {
      int p = level.orbit[oi];
      for (const Perm& s : level.generators) {
        // u_p * s * u_{p.s}^-1 stabilizes the base point.
        Perm schreier = compose(compose(*level.transversal[p], s),
                                inverse(*level.transversal[s[p]]));
        if (schreier.is_identity()) continue;

        // Sift through levels i+1.. and locate where the residue sticks.
        Perm residue = schreier;
        int j = i + 1;
        for (; j < static_cast<int>(chain.levels_.size()); ++j) {
          if (residue.is_identity()) break;
          ChainLevel& lower = chain.levels_[j];
          int x = residue[lower.base];
          if (!lower.transversal[x]) break;
          residue = compose(residue, inverse(*lower.transversal[x]));
        }
        if (residue.is_identity()) continue;

        if (j == static_cast<int>(chain.levels_.size())) new_level(residue);
        for (int k = i + 1; k <= j; ++k) {
          chain.levels_[k].generators.push_back(residue);
          recompute_orbit(degree, chain.levels_[k]);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  chain.order_ = 1;
  for (const ChainLevel& level : chain.levels_) {
    chain.base_.push_back(level.base);
    chain.order_ *= static_cast<long long>(level.orbit.size());
  }
  return chain;
}

std::vector<Perm> StabilizerChain::strong_generators() const {
  std::vector<Perm> out;
  for (const ChainLevel& level : levels_)
    for (const Perm& g : level.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

Perm StabilizerChain::sift(const Perm& g) const {
  Perm residue = g;
  for (const ChainLevel& level : levels_) {
    if (residue.is_identity()) break;
    int x = residue[level.base];
    if (!level.transversal[x]) return residue;
    residue = compose(residue, inverse(*level.transversal[x]));
  }
  return residue;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).is_identity();
}

struct Group::Data {
  int degree;
  std::vector<Perm> generators;
  mutable std::once_flag chain_once;
  mutable std::unique_ptr<StabilizerChain> chain;
};

Group::Group(int degree, std::vector<Perm> generators) : data_(std::make_shared<Data>()) {
  if (degree <= 0) throw std::invalid_argument("group degree must be positive");
  data_->degree = degree;
  for (Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) data_->generators.push_back(std::move(g));
  }
}

Group Group::trivial(int degree) { return Group(degree, {}); }

int Group::degree() const { return data_->degree; }

const std::vector<Perm>& Group::generators() const { return data_->generators; }

const StabilizerChain& Group::chain() const {
  std::call_once(data_->chain_once, [this] {
    data_->chain = std::make_unique<StabilizerChain>(
        StabilizerChain::build(data_->degree, data_->generators));
  });
  return *data_->chain;
}

OrbitResult Group::orbit(int point) const {
  if (point < 0 || point >= degree())
    throw std::invalid_argument("orbit: point out of range");
  OrbitResult result;
  result.points.push_back(point);
  result.transversal.emplace(point, Perm(degree()));
  for (std::size_t head = 0; head < result.points.size(); ++head) {
    int p = result.points[head];
    for (const Perm& s : generators()) {
      int q = s[p];
      if (!result.transversal.count(q)) {
        result.transversal.emplace(q, compose(result.transversal.at(p), s));
        result.points.push_back(q);
      }
    }
  }
  return result;
}

std::vector<Perm> Group::elements(std::size_t cap) const {
  const StabilizerChain& c = chain();
  if (static_cast<unsigned long long>(c.order()) > cap)
    throw cap_exceeded("enumeration cap " + std::to_string(cap) +
                       " exceeded by group of order " + std::to_string(c.order()));
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(c.order()));
  out.push_back(Perm(degree()));
  // Multiply in one transversal element per level, deepest level first;
  // every element arises from exactly one choice vector.
  for (auto it = c.levels().rbegin(); it != c.levels().rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * it->orbit.size());
    for (const Perm& partial : out)
      for (int p : it->orbit) next.push_back(compose(partial, *it->transversal[p]));
    out = std::move(next);
  }
  return out;
}

Perm Group::random_element(std::mt19937_64& rng) const {
  const StabilizerChain& c = chain();
  Perm result(degree());
  for (auto it = c.levels().rbegin(); it != c.levels().rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    result = compose(result, *it->transversal[it->orbit[pick(rng)]]);
  }
  return result;
}

Group read_group(std::istream& in) {
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::string trimmed = line.substr(start);
    if (trimmed[0] == '#') continue;
    if (degree < 0) {
      std::istringstream head(trimmed);
      std::string kw;
      head >> kw >> degree;
      if (kw != "degree" || head.fail() || degree <= 0)
        throw parse_error("line " + std::to_string(lineno) +
                          ": expected 'degree N' before generators");
      continue;
    }
    try {
      gens.push_back(parse_cycles(trimmed, degree));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree < 0) throw parse_error("missing 'degree N' line");
  if (gens.empty()) throw parse_error("no generators in group file");
  return Group(degree, std::move(gens));
}

Group read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open group file: " + path);
  try {
    return read_group(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_group(std::ostream& out, const Group& g) {
  out << "degree " << g.degree() << "\n";
  if (g.generators().empty()) {
    out << "()\n";
    return;
  }
  for (const Perm& p : g.generators()) out << format_cycles(p) << "\n";
}

}  // namespace sylowlab
