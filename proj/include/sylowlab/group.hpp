#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "sylowlab/perm.hpp"

namespace sylowlab {

inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20;

class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One level of a stabilizer chain: the basic orbit of the base point under
// the level's generators, with a transversal element per orbit point
// carrying the base point there.
struct ChainLevel {
  int base = 0;
  std::vector<Perm> generators;
  std::vector<int> orbit;                         // discovery order
  std::vector<std::optional<Perm>> transversal;   // indexed by point
};

// Base, strong generators and basic orbits computed by the deterministic
// Schreier-Sims algorithm. Base points are always the first moved point at
// each level.
class StabilizerChain {
public:
  static StabilizerChain build(int degree, const std::vector<Perm>& generators);

  long long order() const { return order_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<int>& base() const { return base_; }
  std::vector<Perm> strong_generators() const;

  bool contains(const Perm& g) const;

  // Residue of sifting g through the chain; identity iff g is a member.
  Perm sift(const Perm& g) const;

private:
  explicit StabilizerChain(int degree) : degree_(degree) {}

  int degree_;
  long long order_ = 1;
  std::vector<int> base_;
  std::vector<ChainLevel> levels_;
};

struct OrbitResult {
  std::vector<int> points;                     // discovery order, seed first
  std::unordered_map<int, Perm> transversal;   // point -> element carrying seed there
};

// A permutation group given by generators, with a lazily built (and cached)
// stabilizer chain. Copies share the underlying data; everything is
// immutable after construction, so concurrent reads are safe.
class Group {
public:
  Group(int degree, std::vector<Perm> generators);
  static Group trivial(int degree);

  int degree() const;
  const std::vector<Perm>& generators() const;   // identity filtered out

  const StabilizerChain& chain() const;
  long long order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

  OrbitResult orbit(int point) const;   // 0-based point

  // All group elements, one per element, in deterministic order.
  std::vector<Perm> elements(std::size_t cap = kDefaultEnumerationCap) const;

  // Uniform over the group: one transversal element per chain level.
  Perm random_element(std::mt19937_64& rng) const;

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

// Group file format: comment lines starting with '#', a "degree N" line,
// then one generator per line in cycle notation.
Group read_group(std::istream& in);
Group read_group_file(const std::string& path);
void write_group(std::ostream& out, const Group& g);

}  // namespace sylowlab
