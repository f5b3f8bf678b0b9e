#include <gtest/gtest.h>

#include <map>
#include <set>

#include "transcat/lattice.hpp"

using namespace transcat;

namespace {

// Oracle: every subgroup as a sorted element set, by closing under joins
// with single elements starting from the trivial group.
std::set<std::set<Permutation>> all_subgroups(const PermGroup& g) {
  const auto elems = g.elements();
  std::set<std::set<Permutation>> found;
  std::vector<std::set<Permutation>> queue;
  auto add = [&](const PermGroup& h) {
    const auto e = h.elements();
    std::set<Permutation> s(e.begin(), e.end());
    if (found.insert(s).second) queue.push_back(s);
  };
  add(PermGroup::trivial(g.degree()));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Permutation> gens(queue[i].begin(), queue[i].end());
    for (const auto& x : elems) {
      if (queue[i].count(x)) continue;
      auto with = gens;
      with.push_back(x);
      add(PermGroup(g.degree(), with));
    }
  }
  return found;
}

PermGroup q8_regular() {
  // Quaternion units 1,i,j,k,-1,-i,-j,-k as 0..7; right multiplication by i and j.
  return PermGroup(8, parse_generators("1 4 7 2 5 0 3 6; 2 3 4 5 6 7 0 1", 8));
}

void check_against_oracle(const PermGroup& g) {
  const auto classes = all_subgroup_classes(g);
  const auto oracle = all_subgroups(g);
  std::uint64_t total = 0;
  std::map<std::uint64_t, std::uint64_t> by_order_mine, by_order_oracle;
  for (const auto& c : classes) {
    total += c.class_size;
    by_order_mine[c.representative.order()] += c.class_size;
    EXPECT_TRUE(c.representative.is_subgroup_of(g));
  }
  for (const auto& s : oracle) ++by_order_oracle[s.size()];
  EXPECT_EQ(total, oracle.size());
  EXPECT_EQ(by_order_mine, by_order_oracle);
  // Maximal flag: no other class strictly contains a conjugate.
  for (const auto& c : classes) {
    bool contained = false;
    for (const auto& s : oracle) {
      if (s.size() <= c.representative.order() || s.size() == g.order()) continue;
      for (const auto& x : oracle) {
        if (x.size() != c.representative.order()) continue;
        // x is a conjugate of the representative iff they share the class;
        // a cheap sufficient test is containment plus conjugacy via g.
        bool inside = std::includes(s.begin(), s.end(), x.begin(), x.end());
        if (!inside) continue;
        const auto elems = g.elements();
        for (const auto& t : elems) {
          bool conj = true;
          for (const auto& gen : c.representative.generators()) {
            if (!x.count(gen.conjugate(t))) {
              conj = false;
              break;
            }
          }
          if (conj) {
            contained = true;
            break;
          }
        }
        if (contained) break;
      }
      if (contained) break;
    }
    if (c.representative.order() < g.order()) EXPECT_EQ(c.is_maximal, !contained);
  }
}

}  // namespace

TEST(Lattice, SymmetricFour) {
  const auto classes = all_subgroup_classes(PermGroup::symmetric(4));
  EXPECT_EQ(classes.size(), 11u);
  const auto tmax = transitive_maximal_subgroups(PermGroup::symmetric(4));
  std::multiset<std::uint64_t> orders;
  for (const auto& m : tmax) orders.insert(m.order());
  EXPECT_EQ(orders, (std::multiset<std::uint64_t>{8, 12}));
}

TEST(Lattice, SmallExamples) {
  EXPECT_EQ(all_subgroup_classes(PermGroup::cyclic(6)).size(), 4u);
  EXPECT_EQ(all_subgroup_classes(q8_regular()).size(), 6u);
  EXPECT_TRUE(transitive_maximal_subgroups(PermGroup::cyclic(4)).empty());
  const PermGroup d8(4, parse_generators("(0 1 2 3); (0 2)", 4));
  EXPECT_EQ(transitive_maximal_subgroups(d8).size(), 2u);
}

TEST(Lattice, MatchesExhaustiveClosure) {
  check_against_oracle(PermGroup::symmetric(4));
  check_against_oracle(PermGroup(6, parse_generators("(0 1 2 3 4 5); (0 5)(1 4)(2 3)", 6)));
  check_against_oracle(q8_regular());
  check_against_oracle(PermGroup(6, parse_generators("(0 1 2); (0 1)(2 3)(4 5); (4 5)", 6)));
}

TEST(Lattice, KnownClassCounts) {
  EXPECT_EQ(all_subgroup_classes(PermGroup::symmetric(5)).size(), 19u);
  EXPECT_EQ(all_subgroup_classes(PermGroup::alternating(5)).size(), 9u);
  EXPECT_EQ(all_subgroup_classes(PermGroup::symmetric(6)).size(), 56u);
}

TEST(Lattice, MinimalTransitivity) {
  EXPECT_TRUE(is_minimal_transitive(PermGroup::cyclic(4)));
  EXPECT_FALSE(is_minimal_transitive(PermGroup::symmetric(4)));
  MinimalTransitiveOptions exact;
  exact.random_stage = false;
  for (const auto& g : {PermGroup::cyclic(6), PermGroup::symmetric(4), PermGroup::alternating(4),
                        PermGroup(6, parse_generators("(0 1 2 3 4 5); (0 5)(1 4)(2 3)", 6))}) {
    EXPECT_EQ(is_minimal_transitive(g), is_minimal_transitive(g, exact));
  }
  EXPECT_FALSE(is_minimal_transitive(PermGroup::alternating(4)));
}

TEST(Lattice, NormalSubgroupsMatchClassesOfSizeOne) {
  const auto c2cube = parse_generators("1 0 3 2 5 4 7 6; 2 3 0 1 6 7 4 5; 4 5 6 7 0 1 2 3");
  const std::vector<PermGroup> groups = {PermGroup::symmetric(4), PermGroup::symmetric(5), q8_regular(),
                                         PermGroup(8, c2cube), PermGroup(6, parse_generators("1 0 2 3 4 5; 2 3 4 5 0 1"))};
  for (const auto& g : groups) {
    std::size_t expected = 0;
    for (const auto& c : all_subgroup_classes(g)) expected += (c.class_size == 1);
    const auto normals = normal_subgroups(g);
    EXPECT_EQ(normals.size(), expected) << "order " << g.order();
    for (const auto& n : normals) EXPECT_TRUE(g.normalizes(n));
  }
  EXPECT_EQ(normal_subgroups(PermGroup::symmetric(8)).size(), 3u);
}
