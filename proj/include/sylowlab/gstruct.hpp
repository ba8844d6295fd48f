#pragma once

#include <vector>

#include "sylowlab/group.hpp"

namespace sylowlab {

struct DerivedSeries {
  // G >= G' >= G'' >= ..., ending with the first repeated term.
  std::vector<Group> terms;
  bool terminated_at_trivial = false;
};

// Smallest subgroup of G containing seeds and closed under conjugation by
// the generators of G. All seeds must lie in G.
Group normal_closure(const Group& g, const std::vector<Perm>& seeds);

// Normal closure of the generator commutators [a,b] = a^-1 b^-1 a b.
Group derived_subgroup(const Group& g);

DerivedSeries derived_series(const Group& g);
bool is_solvable(const Group& g);

// Every generator of h must lie in g.
bool is_normal(const Group& g, const Group& h);

// v_p(G) = 1 for every prime p dividing |G|.
bool is_nilpotent(const Group& g);

}  // namespace sylowlab
