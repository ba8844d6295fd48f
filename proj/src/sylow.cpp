#include "sylowlab/sylow.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sylowlab {

namespace {

// Sorted element image-arrays: exact, hashable-by-comparison canonical key
// for a subgroup. Subgroup orders in scope stay small (<= 64 elements).
using SubgroupKey = std::vector<std::vector<int>>;

SubgroupKey key_of(std::vector<std::vector<int>> images) {
  std::sort(images.begin(), images.end());
  return images;
}

std::vector<std::vector<int>> conjugate_all(const SubgroupKey& key, const Perm& g,
                                            const Perm& ginv) {
  std::vector<std::vector<int>> out;
  out.reserve(key.size());
  const int n = g.degree();
  std::vector<int> img(n);
  for (const auto& h : key) {
    for (int i = 0; i < n; ++i) img[i] = g[h[ginv[i]]];   // (g^-1 h g)(i)
    out.push_back(img);
  }
  return out;
}

SubgroupKey group_key(const Group& g, std::size_t cap) {
  std::vector<std::vector<int>> images;
  for (const Perm& e : g.elements(cap)) images.push_back(e.images());
  return key_of(std::move(images));
}

bool is_power_of(long long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

int p_part(long long n, long p) {
  int a = 0;
  while (n % p == 0) { n /= p; ++a; }
  return a;
}

std::vector<std::pair<long, int>> factorize(long long n) {
  std::vector<std::pair<long, int>> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) { n /= d; ++e; }
    out.emplace_back(static_cast<long>(d), e);
  }
  if (n > 1) out.emplace_back(static_cast<long>(n), 1);
  return out;
}

Group sylow_subgroup(const Group& g, long p, const SylowOptions& opts) {
  const long long n = g.order();
  const int a = p_part(n, p);
  if (a == 0) return Group::trivial(g.degree());
  long long target = 1;
  for (int i = 0; i < a; ++i) target *= p;

  // Cyclic seed: the p-power part of a random element.
  std::mt19937_64 rng(opts.seed);
  Perm seed(g.degree());
  for (int tries = 0; tries < 256 && seed.is_identity(); ++tries) {
    Perm x = g.random_element(rng);
    long long ord = element_order(x);
    long long cofactor = ord;
    while (cofactor % p == 0) cofactor /= p;
    Perm y = Perm(g.degree());
    for (long long k = 0; k < cofactor; ++k) y = compose(y, x);
    seed = y;
  }
  if (seed.is_identity()) {
    // Fall back to the deterministic element list.
    for (const Perm& x : g.elements(opts.enumeration_cap)) {
      long long ord = element_order(x);
      if (ord > 1 && is_power_of(ord, p)) { seed = x; break; }
    }
  }

  std::vector<Perm> pgens{seed};
  Group current(g.degree(), pgens);
  if (current.order() == target) return current;

  // Greedy ascent over the group's p-elements, in deterministic enumeration
  // order. A p-element y normalizing P yields a p-group <P, y> strictly
  // containing P, and such an element exists whenever P is not yet Sylow
  // (N_Q(P) > P inside any Sylow overgroup Q).
  std::vector<Perm> candidates;
  for (const Perm& x : g.elements(opts.enumeration_cap)) {
    long long ord = element_order(x);
    if (ord > 1 && is_power_of(ord, p)) candidates.push_back(x);
  }

  while (current.order() < target) {
    bool grown = false;
    for (const Perm& y : candidates) {
      if (current.contains(y)) continue;
      bool normalizes = true;
      for (const Perm& s : pgens)
        if (!current.contains(conjugate(s, y))) { normalizes = false; break; }
      if (!normalizes) continue;
      pgens.push_back(y);
      Group bigger(g.degree(), pgens);
      if (bigger.order() > current.order() && is_power_of(bigger.order(), p)) {
        current = std::move(bigger);
        grown = true;
        break;
      }
      pgens.pop_back();   // cannot happen for a normalizing p-element
    }
    if (!grown)
      throw std::logic_error("sylow ascent stalled below order p^a");
  }
  return current;
}

SylowReport count_sylow(const Group& g, long p, const SylowOptions& opts) {
  SylowReport report{p, p_part(g.order(), p), Group::trivial(g.degree()), 1, g.order()};
  if (report.a == 0) return report;

  report.subgroup = sylow_subgroup(g, p, opts);

  // Orbit of P under conjugation by the generators of G.
  SubgroupKey start = group_key(report.subgroup, opts.enumeration_cap);
  std::set<SubgroupKey> seen{start};
  std::vector<SubgroupKey> frontier{start};
  std::vector<std::pair<Perm, Perm>> gens;
  for (const Perm& c : g.generators()) gens.emplace_back(c, inverse(c));
  while (!frontier.empty()) {
    std::vector<SubgroupKey> next;
    for (const SubgroupKey& s : frontier)
      for (const auto& [c, cinv] : gens) {
        SubgroupKey t = key_of(conjugate_all(s, c, cinv));
        if (seen.insert(t).second) {
          if (seen.size() > opts.orbit_cap)
            throw cap_exceeded("conjugation orbit exceeded cap " +
                               std::to_string(opts.orbit_cap) + " for p = " +
                               std::to_string(p));
          next.push_back(std::move(t));
        }
      }
    frontier = std::move(next);
  }

  report.v_p = static_cast<long long>(seen.size());
  if (g.order() % report.v_p != 0)
    throw std::logic_error("Sylow count does not divide the group order");
  report.normalizer_order = g.order() / report.v_p;
  return report;
}

long long count_sylow_bruteforce(const Group& g, long p, const SylowOptions& opts) {
  if (g.order() > 5000)
    throw cap_exceeded("brute-force Sylow count limited to order 5000, got " +
                       std::to_string(g.order()));
  if (p_part(g.order(), p) == 0) return 1;
  Group sub = sylow_subgroup(g, p, opts);
  SubgroupKey base = group_key(sub, opts.enumeration_cap);
  std::set<SubgroupKey> seen;
  for (const Perm& c : g.elements(opts.enumeration_cap))
    seen.insert(key_of(conjugate_all(base, c, inverse(c))));
  return static_cast<long long>(seen.size());
}

}  // namespace sylowlab
