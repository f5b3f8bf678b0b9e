#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <set>

#include "transcat/cayley_ci.hpp"
#include "transcat/vt_graphs.hpp"

using namespace transcat;

namespace {

const std::vector<SmallGroupSeed>& seeds() {
  static const auto s = read_small_groups(std::filesystem::path(TRANSCAT_TEST_DATA_DIR) / "small_groups.txt");
  return s;
}

const SmallGroupSeed& seed(int order, int index) {
  for (const auto& s : seeds()) {
    if (s.order == order && s.index == index) return s;
  }
  throw Error("no such seed");
}

AbstractGroup group_of(const SmallGroupSeed& s) { return AbstractGroup(PermGroup(std::max(s.order, 1), s.generators)); }

// Least sorted unit list over the orbit of `units`.
std::vector<int> brute_canonical(const ConnectionSpace& space, const std::vector<int>& units) {
  std::vector<int> best;
  bool first = true;
  for (const auto& a : space.action()) {
    std::vector<int> img;
    for (int u : units) img.push_back(a[static_cast<std::size_t>(u)]);
    std::sort(img.begin(), img.end());
    if (first || img < best) best = img;
    first = false;
  }
  return best;
}

}  // namespace

TEST(AbstractGroup, TableAndAutomorphismCounts) {
  const auto c4 = group_of(seed(4, 1));
  EXPECT_EQ(c4.mul(1, 1), 2);
  EXPECT_EQ(c4.inv(1), 3);
  EXPECT_EQ(c4.element_order(2), 2);
  EXPECT_EQ(c4.automorphisms().size(), 2u);
  EXPECT_EQ(group_of(seed(4, 2)).automorphisms().size(), 6u);
  EXPECT_EQ(group_of(seed(6, 1)).automorphisms().size(), 6u);
  EXPECT_EQ(group_of(seed(8, 3)).automorphisms().size(), 8u);
  EXPECT_EQ(group_of(seed(8, 4)).automorphisms().size(), 24u);
  EXPECT_EQ(group_of(seed(16, 14)).automorphisms().size(), 20160u);
  EXPECT_THROW(group_of(seed(16, 14)).automorphisms(100), BudgetExceeded);
  EXPECT_THROW(AbstractGroup(PermGroup::symmetric(3)), Error);
}

TEST(AbstractGroup, AutomorphismsAreBijectiveHomomorphisms) {
  for (const auto& s : seeds()) {
    if (s.order > 16) continue;
    const auto g = group_of(s);
    std::set<std::vector<int>> distinct;
    for (const auto& phi : g.automorphisms()) {
      EXPECT_TRUE(distinct.insert(phi).second);
      std::vector<int> sorted = phi;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < g.order(); ++i) ASSERT_EQ(sorted[static_cast<std::size_t>(i)], i);
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          ASSERT_EQ(phi[static_cast<std::size_t>(g.mul(a, b))],
                    g.mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]));
        }
      }
    }
  }
}

TEST(Orderly, CyclicFourAndTwo) {
  const auto c4 = group_of(seed(4, 1));
  const ConnectionSpace s4(c4);
  EXPECT_EQ(s4.size(), 2);
  EXPECT_EQ(orderly_connection_classes(s4).size(), 4u);
  const auto c2 = group_of(seed(2, 1));
  EXPECT_EQ(orderly_connection_classes(ConnectionSpace(c2)).size(), 2u);
}

TEST(Orderly, RepresentativesAreCanonicalAndOrbitsPartition) {
  for (const auto& s : seeds()) {
    if (s.order > 16) continue;
    const auto g = group_of(s);
    const ConnectionSpace space(g);
    std::uint64_t total = 0;
    std::set<std::vector<int>> reps;
    for (const auto& c : orderly_connection_classes(space)) {
      total += c.orbit_size;
      EXPECT_TRUE(reps.insert(c.units).second);
      EXPECT_EQ(brute_canonical(space, c.units), c.units);
      const auto elems = space.elements(c.units);
      for (int x : elems) {
        EXPECT_NE(x, 0);
        EXPECT_TRUE(std::binary_search(elems.begin(), elems.end(), g.inv(x)));
      }
    }
    EXPECT_EQ(total, std::uint64_t{1} << space.size()) << s.name;
  }
}

TEST(CycleIndex, KnownValuesAndAgreementWithOrderly) {
  EXPECT_EQ(count_cayley_sets(ConnectionSpace(group_of(seed(4, 1)))), 4);
  EXPECT_EQ(count_cayley_sets(ConnectionSpace(group_of(seed(1, 1)))), 1);
  for (const auto& s : seeds()) {
    if (s.order > 16) continue;
    const auto g = group_of(s);
    for (bool directed : {false, true}) {
      const ConnectionSpace space(g, directed);
      EXPECT_EQ(count_cayley_sets(space), orderly_connection_classes(space).size()) << s.name << directed;
    }
  }
}

TEST(CycleIndex, DirectedCyclicThree) {
  const ConnectionSpace space(group_of(seed(3, 1)), true);
  EXPECT_EQ(space.size(), 2);
  EXPECT_EQ(count_cayley_sets(space), 3);
}

TEST(CiVerdict, TableRows) {
  EXPECT_TRUE(is_ci_group(seed(8, 1)).ci);
  const auto r = is_ci_group(seed(8, 2));
  EXPECT_FALSE(r.ci);
  EXPECT_EQ(r.to_line(), "8\t2\tNONCI\t18\t10");
  EXPECT_FALSE(is_ci_group(seed(16, 1)).ci);
  EXPECT_TRUE(is_ci_group(seed(8, 4)).ci);
  EXPECT_TRUE(is_ci_group(seed(16, 14)).ci);
}

TEST(CiVerdict, WitnessesAreIsomorphicAndInequivalent) {
  for (const auto& s : seeds()) {
    if (s.order > 16) continue;
    const auto r = is_ci_group(s);
    EXPECT_EQ(r.ci, r.sets == r.graphs);
    EXPECT_EQ(r.ci, !r.witness.has_value());
    if (!r.witness) continue;
    const auto g = group_of(s);
    const ConnectionSpace space(g);
    const auto& [a, b] = *r.witness;
    EXPECT_EQ(canonical_form(g.order(), cayley_arcs(g, a)), canonical_form(g.order(), cayley_arcs(g, b)));
    std::vector<int> ua, ub;
    for (int x : a) ua.push_back(space.unit_of(x));
    for (int x : b) ub.push_back(space.unit_of(x));
    std::sort(ua.begin(), ua.end());
    ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
    std::sort(ub.begin(), ub.end());
    ub.erase(std::unique(ub.begin(), ub.end()), ub.end());
    EXPECT_NE(brute_canonical(space, ua), brute_canonical(space, ub));
  }
}

TEST(CiVerdict, DihedralEightHasPerfectMatchingWitness) {
  // The central involution and a reflection both give 4K2, and no
  // automorphism moves the centre.
  const auto g = group_of(seed(8, 3));
  int central = -1, reflection = -1;
  for (int x = 1; x < 8; ++x) {
    if (g.element_order(x) != 2) continue;
    bool centre = true;
    for (int y = 0; y < 8; ++y) centre = centre && g.mul(x, y) == g.mul(y, x);
    (centre ? central : reflection) = x;
  }
  ASSERT_GE(central, 0);
  ASSERT_GE(reflection, 0);
  EXPECT_EQ(canonical_form(8, cayley_arcs(g, {central})), canonical_form(8, cayley_arcs(g, {reflection})));
  for (const auto& phi : g.automorphisms()) EXPECT_EQ(phi[static_cast<std::size_t>(central)], central);
  EXPECT_FALSE(is_ci_group(seed(8, 3)).ci);
}

TEST(Identify, SeedsIdentifyThemselves) {
  for (const auto& s : seeds()) {
    if (s.order > 16) continue;
    EXPECT_EQ(identify_small_group(PermGroup(std::max(s.order, 1), s.generators), seeds()),
              std::make_pair(s.order, s.index));
  }
}

TEST(Sections, SubgroupsAndQuotientsOfDihedralTwelve) {
  std::set<std::pair<int, int>> ids;
  for (const auto& h : proper_sections(PermGroup(12, seed(12, 4).generators))) ids.insert(identify_small_group(h, seeds()));
  // C2, C3, C2^2, S3, C6, D12's quotients C2, C2^2, S3.
  EXPECT_EQ(ids, (std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}, {6, 1}, {6, 2}}));
}

TEST(MinimalNonCi, SmallBoundsAndMissingVerdicts) {
  CiVerdicts v;
  for (const auto& s : seeds()) {
    if (s.order <= 8) v[{s.order, s.index}] = is_ci_group(s).ci;
  }
  EXPECT_TRUE(minimal_non_ci(4, seeds(), v).empty());
  EXPECT_EQ(minimal_non_ci(8, seeds(), v), (std::vector<std::pair<int, int>>{{8, 2}, {8, 3}}));
  v.erase({8, 5});
  EXPECT_THROW(minimal_non_ci(8, seeds(), v), Error);
}

TEST(MinimalNonCi, SectionsOfMinimalGroupsAreCi) {
  CiVerdicts v;
  for (const auto& s : seeds()) {
    if (s.order <= 16) v[{s.order, s.index}] = is_ci_group(s).ci;
  }
  const auto minimal = minimal_non_ci(16, seeds(), v);
  EXPECT_EQ(minimal, (std::vector<std::pair<int, int>>{{8, 2}, {8, 3}, {12, 4}, {16, 1}}));
  for (const auto& [order, index] : minimal) {
    for (const auto& h : proper_sections(PermGroup(order, seed(order, index).generators))) {
      // Recomputed from scratch on the section itself.
      const auto id = identify_small_group(h, seeds());
      EXPECT_TRUE(is_ci_group(seed(id.first, id.second)).ci);
    }
  }
}

TEST(Bounds, Guards) {
  SmallGroupSeed big;
  big.order = 48;
  big.index = 1;
  big.generators = PermGroup::cyclic(48).generators();
  EXPECT_THROW(is_ci_group(big), Error);
}
