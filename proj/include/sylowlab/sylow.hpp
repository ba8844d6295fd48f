#pragma once

#include <cstdint>
#include <vector>

#include "sylowlab/group.hpp"

namespace sylowlab {

struct SylowOptions {
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::size_t orbit_cap = 1'000'000;
  std::uint64_t seed = 0x53594c4f57ull;   // affects only the initial cyclic seed
};

struct SylowReport {
  long p = 0;
  int a = 0;                       // p^a || |G|
  Group subgroup;                  // one Sylow p-subgroup
  long long v_p = 0;               // number of Sylow p-subgroups
  long long normalizer_order = 0;  // |G| / v_p
};

// Exponent of p in n.
int p_part(long long n, long p);

// One Sylow p-subgroup of g: a cyclic seed from a random element's p-power
// part, then a greedy ascent over the group's p-elements, adjoining y
// whenever <P, y> is a strictly larger p-group. Returns the trivial group
// when p does not divide |g|.
Group sylow_subgroup(const Group& g, long p, const SylowOptions& opts = {});

// v_p as the size of the conjugation orbit of one Sylow p-subgroup, with
// subgroups identified by their sorted element sets.
SylowReport count_sylow(const Group& g, long p, const SylowOptions& opts = {});

// Independent oracle: count distinct conjugates g P g^-1 over all elements
// of the group. Requires |g| <= 5000.
long long count_sylow_bruteforce(const Group& g, long p, const SylowOptions& opts = {});

// Prime factorization of n, ascending primes.
std::vector<std::pair<long, int>> factorize(long long n);

}  // namespace sylowlab
