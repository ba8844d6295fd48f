#include "sylowlab/gstruct.hpp"

#include "sylowlab/sylow.hpp"

namespace sylowlab {

Group normal_closure(const Group& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const Perm& s : seeds) {
    if (!g.contains(s))
      throw std::invalid_argument("normal_closure: seed element is not in the group");
    if (!s.is_identity()) gens.push_back(s);
  }
  Group h(g.degree(), gens);
  for (;;) {
    std::vector<Perm> fresh;
    for (const Perm& c : g.generators())
      for (const Perm& s : h.generators()) {
        Perm t = conjugate(s, c);
        if (!h.contains(t)) fresh.push_back(std::move(t));
      }
    if (fresh.empty()) break;
    gens.insert(gens.end(), fresh.begin(), fresh.end());
    h = Group(g.degree(), gens);
  }
  return h;
}

Group derived_subgroup(const Group& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, comms);
}

DerivedSeries derived_series(const Group& g) {
  DerivedSeries series;
  series.terms.push_back(g);
  for (;;) {
    Group next = derived_subgroup(series.terms.back());
    series.terms.push_back(next);
    // Orders are canonical; generator sets are not.
    if (next.order() == series.terms[series.terms.size() - 2].order()) break;
  }
  series.terminated_at_trivial = series.terms.back().order() == 1;
  return series;
}

bool is_solvable(const Group& g) { return derived_series(g).terminated_at_trivial; }

bool is_normal(const Group& g, const Group& h) {
  for (const Perm& s : h.generators())
    if (!g.contains(s))
      throw std::invalid_argument("is_normal: H is not a subgroup of G");
  for (const Perm& c : g.generators())
    for (const Perm& s : h.generators())
      if (!h.contains(conjugate(s, c))) return false;
  return true;
}

bool is_nilpotent(const Group& g) {
  for (auto [p, a] : factorize(g.order()))
    if (count_sylow(g, p).v_p != 1) return false;
  return true;
}

}  // namespace sylowlab
