#pragma once

#include <set>
#include <vector>

#include "sylowlab/group.hpp"
#include "sylowlab/perm.hpp"

namespace sylowlab::testsupport {

// Independent brute-force enumeration: close the generator set under
// multiplication, no stabilizer chain involved. The oracle for chain
// soundness and membership.
inline std::vector<Perm> bfs_elements(const std::vector<Perm>& gens, int degree) {
  std::set<std::vector<int>> seen;
  std::vector<Perm> out{Perm(degree)};
  seen.insert(out[0].images());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = compose(out[head], g);
      if (seen.insert(next.images()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

inline bool bfs_contains(const std::vector<Perm>& gens, int degree, const Perm& x) {
  for (const Perm& e : bfs_elements(gens, degree))
    if (e == x) return true;
  return false;
}

}  // namespace sylowlab::testsupport
