#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylowlab/group.hpp"

namespace sylowlab {

enum class Family {
  Alternating,
  Symmetric,
  PSL2,
  PSL3,
  Suzuki,
  Cyclic,
  Dihedral,
  DirectProduct,
  Linear,   // other matrix-group actions (SL(2,3) in the corpus)
};

struct CatalogEntry {
  Family family;
  std::string name;             // e.g. "A5", "PSL(2,27)", "Sz(8)"
  std::vector<long> params;     // family-specific: n, or q, or factor orders
  Group group;
  long long expected_order = 0;
};

// Construction throws std::invalid_argument on bad parameters and
// std::logic_error if the built group's order disagrees with the closed
// form.
CatalogEntry alternating(int n);    // 2 <= n <= 12
CatalogEntry symmetric(int n);      // 2 <= n <= 12
CatalogEntry cyclic(int n);         // n >= 1
CatalogEntry dihedral(int m);       // order-m convention: D_m has ORDER m; m even >= 2
CatalogEntry direct_product(const std::vector<CatalogEntry>& factors);

// PSL(2,q) on the q+1 points of the projective line, 4 <= q <= 32.
CatalogEntry psl2(long q);

// PSL(3,3) on the 13 points of the projective plane over GF(3).
CatalogEntry psl3_3();

// Sz(8) on its 65-point ovoid.
CatalogEntry suzuki_8();

// SL(2,3) on the 8 nonzero vectors of GF(3)^2.
CatalogEntry sl2_3();

// v_2(PSL(2,2^p)) = 2^p + 1 for odd prime p.
long long formula_v2_psl2_even(int p);

// The two candidate v_2 values for PSL(2,q), q odd >= 5: {q^2-1, (q^3-q)/24}.
// realized is the branch matching the actual count when q = +-3 (mod 8)
// (normalizer A4); for q = +-1 (mod 8) neither candidate matches and
// realized is empty.
struct V2OddCandidates {
  long long first = 0;     // q^2 - 1
  long long second = 0;    // (q^3 - q) / 24
  std::optional<long long> realized;
};
V2OddCandidates formula_v2_psl2_odd(long q);

// v_3(PSL(2,3^p)) = 3^p + 1 for odd prime p.
long long formula_v3_psl2_3p(int p);

// v_r(PSL(2,q)) for even q and odd prime r | q^2-1:
// q(q+1)/2 when r | q-1, q(q-1)/2 when r | q+1.
struct VrFormula {
  long long realized = 0;
  long long other = 0;
};
VrFormula formula_vr_psl2_even(long q, long r);

// Order and Sylow data of Sz(q), q = 2^(2m+1), m >= 1, r = 2^(m+1):
// order = (q-1) q^2 (q^2+1), v2 = q^2+1, T_order = 4(q-r+1), v5 = order/T_order.
struct SuzukiFormula {
  long long q = 0;
  long long r = 0;
  long long order = 0;
  long long v2 = 0;
  long long t_order = 0;
  long long v5 = 0;
};
SuzukiFormula formula_suzuki(long q);

// Thompson's five families of minimal simple groups, as catalog metadata.
// A5 is not a separate family; it shows up downstream as the sharpness case
// for the v_2 bound.
struct MinimalSimpleFamily {
  std::string name;         // "L2(2^p)", "L2(3^p)", "L2(p)", "L3(3)", "Sz(q)"
  std::string constraint;   // parameter constraint, human readable
};
std::vector<MinimalSimpleFamily> minimal_simple_list();

// The fixed test corpus: ~30 named groups with orders from 1 to 29120.
std::vector<CatalogEntry> builtin_corpus();

}  // namespace sylowlab
