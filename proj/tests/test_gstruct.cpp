#include <doctest.h>

#include "sylowlab/catalog.hpp"
#include "sylowlab/gstruct.hpp"

using namespace sylowlab;

namespace {

Group s3() {
  return Group(3, {parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
}

}  // namespace

TEST_CASE("derived_subgroup examples") {
  CHECK(derived_subgroup(s3()).order() == 3);                 // A3
  CHECK(derived_subgroup(alternating(5).group).order() == 60);   // A5 perfect

  Group abelian(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)});
  CHECK(derived_subgroup(abelian).order() == 1);
}

TEST_CASE("derived subgroup is normal and the quotient is abelian") {
  for (const Group& g : {s3(), symmetric(4).group, alternating(4).group}) {
    Group d = derived_subgroup(g);
    CHECK(is_normal(g, d));
    // All generator commutators land in the derived subgroup.
    for (const Perm& a : g.generators())
      for (const Perm& b : g.generators()) CHECK(d.contains(commutator(a, b)));
  }
}

TEST_CASE("normal_closure examples") {
  CHECK(normal_closure(s3(), {parse_cycles("(1 2 3)", 3)}).order() == 3);
  CHECK(normal_closure(s3(), {Perm(3)}).order() == 1);
  // A5 is simple, so the closure of any non-identity element is everything.
  Group a5 = alternating(5).group;
  CHECK(normal_closure(a5, {parse_cycles("(1 2)(3 4)", 5)}).order() == 60);
  CHECK_THROWS_AS(normal_closure(a5, {parse_cycles("(1 2)", 5)}),
                  std::invalid_argument);   // seed outside the group
}

TEST_CASE("derived series and solvability") {
  DerivedSeries s4 = derived_series(symmetric(4).group);
  std::vector<long long> orders;
  for (const Group& t : s4.terms) orders.push_back(t.order());
  CHECK(orders == std::vector<long long>{24, 12, 4, 1, 1});
  CHECK(s4.terminated_at_trivial);

  DerivedSeries a5 = derived_series(alternating(5).group);
  CHECK_FALSE(a5.terminated_at_trivial);
  CHECK(a5.terms.back().order() == 60);

  CHECK(is_solvable(Group::trivial(2)));
  CHECK(is_solvable(symmetric(4).group));
  CHECK_FALSE(is_solvable(alternating(5).group));
}

TEST_CASE("series terms are subgroups with decreasing orders") {
  DerivedSeries s = derived_series(symmetric(4).group);
  for (std::size_t i = 1; i < s.terms.size(); ++i) {
    CHECK(s.terms[i - 1].order() % s.terms[i].order() == 0);
    for (const Perm& g : s.terms[i].generators()) CHECK(s.terms[i - 1].contains(g));
    if (i + 1 < s.terms.size()) CHECK(s.terms[i].order() < s.terms[i - 1].order());
  }
}

TEST_CASE("is_nilpotent") {
  Group d8(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
  CHECK(is_nilpotent(d8));            // 2-group
  CHECK_FALSE(is_nilpotent(s3()));    // v_2 = 3
  Group c6(6, {parse_cycles("(1 2 3 4 5 6)", 6)});
  CHECK(is_nilpotent(c6));            // abelian
}

TEST_CASE("is_normal") {
  Group g = s3();
  Group a3(3, {parse_cycles("(1 2 3)", 3)});
  Group c2(3, {parse_cycles("(1 2)", 3)});
  CHECK(is_normal(g, a3));       // index 2
  CHECK_FALSE(is_normal(g, c2));
  CHECK(is_normal(g, g));
  Group outside(3, {parse_cycles("(1 2)", 3)});
  CHECK_THROWS_AS(is_normal(a3, outside), std::invalid_argument);
}

TEST_CASE("nilpotent implies solvable across the corpus") {
  for (const CatalogEntry& entry : builtin_corpus()) {
    if (entry.group.order() > 2000) continue;   // the full run lives in acceptance
    if (is_nilpotent(entry.group)) CHECK(is_solvable(entry.group));
  }
}
