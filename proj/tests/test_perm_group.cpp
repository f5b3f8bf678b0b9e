#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "transcat/perm_group.hpp"

using transcat::Permutation;
using transcat::PermGroup;

namespace {

// Independent oracle: closes the generators under multiplication.
std::set<Permutation> closure(int n, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      auto x = queue[i] * s;
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return seen;
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

std::vector<Permutation> random_gens(int n, std::mt19937_64& rng) {
  std::vector<Permutation> gens;
  const int k = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < k; ++i) {
    // Sparse permutations keep the groups small enough for the oracle.
    auto p = Permutation(n);
    const int swaps = 1 + static_cast<int>(rng() % 3);
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = j;
    for (int s = 0; s < swaps; ++s) {
      std::swap(img[rng() % static_cast<std::size_t>(n)], img[rng() % static_cast<std::size_t>(n)]);
    }
    gens.push_back(Permutation::from_images(img));
  }
  return gens;
}

}  // namespace

TEST(PermGroup, SmallOrders) {
  const auto c4 = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  EXPECT_EQ(PermGroup(4, {c4}).order(), 4u);
  const PermGroup d8(4, {c4, Permutation::from_cycles(4, {{0, 2}})});
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_EQ(d8.elements().size(), 8u);
  EXPECT_EQ(PermGroup::symmetric(7).order(), 5040u);
  EXPECT_EQ(PermGroup::alternating(8).order(), 20160u);
  EXPECT_EQ(PermGroup::cyclic(12).order(), 12u);
  EXPECT_EQ(PermGroup::trivial(5).order(), 1u);
  EXPECT_EQ(PermGroup::symmetric(20).order(), 2432902008176640000ULL);
}

TEST(PermGroup, MathieuM12Order) {
  auto g = transcat::parse_generators(
      "(0 1 2 3 4 5 6 7 8 9 10);(2 6 10 7)(3 9 4 5);(0 11)(1 10)(2 5)(3 7)(4 8)(6 9)", 12);
  EXPECT_EQ(PermGroup(12, g).order(), 95040u);
  g.pop_back();
  EXPECT_EQ(PermGroup(12, g).order(), 7920u);
}

TEST(PermGroup, OrderMatchesClosureOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto gens = random_gens(n, rng);
    const auto oracle = closure(n, gens);
    const PermGroup g(n, gens);
    ASSERT_EQ(g.order(), oracle.size());
    for (int t = 0; t < 20; ++t) {
      const auto x = random_perm(n, rng);
      EXPECT_EQ(g.contains(x), oracle.count(x) == 1);
    }
    const auto elems = g.elements();
    EXPECT_EQ(std::set<Permutation>(elems.begin(), elems.end()), oracle);
  }
}

TEST(PermGroup, KnownOrderHintDoesNotChangeResult) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const auto gens = random_gens(n, rng);
    const PermGroup plain(n, gens);
    transcat::BuildOptions wrong;
    wrong.known_order = plain.order() * 2;
    const PermGroup hinted(n, gens, wrong);
    EXPECT_EQ(hinted.order(), plain.order());
  }
}

TEST(PermGroup, StabilizersAndOrbits) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto gens = random_gens(n, rng);
    const PermGroup g(n, gens);
    const auto oracle = closure(n, gens);
    const int p = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const std::vector<int> pts{p, q};
    std::size_t fix = 0;
    for (const auto& x : oracle) fix += (x[p] == p && x[q] == q);
    EXPECT_EQ(g.pointwise_stabilizer(pts).order(), fix);
    EXPECT_EQ(g.order(), g.orbit(p).size() * g.stabilizer(p).order());
    std::size_t covered = 0;
    for (const auto& o : g.orbits()) covered += o.size();
    EXPECT_EQ(covered, static_cast<std::size_t>(n));
    EXPECT_TRUE(g.rebased(pts).same_group(g));
  }
}

TEST(PermGroup, LexMinInCosetMatchesBruteForce) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto gens = random_gens(n, rng);
    const PermGroup g = PermGroup(n, gens).with_lex_base();
    ASSERT_TRUE(g.has_lex_base());
    const auto elems = g.elements();
    const auto x = random_perm(n, rng);
    Permutation best = elems.front() * x;
    for (const auto& e : elems) best = std::min(best, e * x);
    EXPECT_EQ(g.lex_min_in_coset(x), best);
  }
}

TEST(PermGroup, ConjugacyClassesOfS4) {
  const auto classes = transcat::class_reps(PermGroup::symmetric(4));
  std::multiset<std::uint64_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size);
  EXPECT_EQ(sizes, (std::multiset<std::uint64_t>{1, 3, 6, 6, 8}));
}

TEST(PermGroup, DerivedAndNormalClosure) {
  EXPECT_EQ(transcat::derived_subgroup(PermGroup::symmetric(5)).order(), 60u);
  EXPECT_EQ(transcat::derived_subgroup(PermGroup::symmetric(4)).order(), 12u);
  EXPECT_EQ(transcat::derived_subgroup(PermGroup::alternating(4)).order(), 4u);
  const auto t = Permutation::from_cycles(5, {{0, 1}});
  const std::vector<Permutation> one{t};
  EXPECT_EQ(transcat::normal_closure(PermGroup::symmetric(5), one).order(), 120u);
  const auto s4 = PermGroup::symmetric(4);
  const std::vector<Permutation> dbl{Permutation::from_cycles(4, {{0, 1}, {2, 3}})};
  EXPECT_EQ(transcat::normal_closure(s4, dbl).order(), 4u);
}
