#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"

using namespace transcat;

namespace {

bool conjugate_by(const PermGroup& a, const PermGroup& b, const Permutation& c) {
  for (const auto& x : a.generators()) {
    if (!b.contains(x.conjugate(c))) return false;
  }
  return a.order() == b.order();
}

bool brute_conjugate(const PermGroup& a, const PermGroup& b, const PermGroup* ambient) {
  if (a.order() != b.order()) return false;
  if (ambient) {
    bool found = false;
    ambient->for_each_element([&](const Permutation& c) { found = found || conjugate_by(a, b, c); });
    return found;
  }
  std::vector<int> p(static_cast<std::size_t>(a.degree()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (conjugate_by(a, b, Permutation::from_images(p))) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<PermGroup> random_pool(int n, int count, std::mt19937_64& rng) {
  std::vector<PermGroup> pool;
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int t = 0; t < count; ++t) {
    std::vector<Permutation> gens;
    const int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Permutation::from_images(img));
    }
    PermGroup g(n, gens);
    pool.push_back(g);
    // A random conjugate guarantees positive cases.
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    pool.push_back(g.conjugated(Permutation::from_images(img)));
  }
  return pool;
}

}  // namespace

TEST(Conjugacy, SpecExamples) {
  const auto c4a = PermGroup(4, parse_generators("(0 1 2 3)", 4));
  const auto c4b = PermGroup(4, parse_generators("(0 1 3 2)", 4));
  const auto c4c = PermGroup(4, parse_generators("(0 2 1 3)", 4));
  const auto v4 = PermGroup(4, parse_generators("(0 1)(2 3); (0 2)(1 3)", 4));
  EXPECT_EQ(invariant_key(c4a), invariant_key(c4b));
  EXPECT_FALSE(invariant_key(c4a) == invariant_key(v4));
  const auto s4 = PermGroup::symmetric(4);
  const auto w = are_conjugate(c4a, c4c, &s4);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(conjugate_by(c4a, c4c, *w));
  EXPECT_FALSE(are_conjugate(c4a, v4).has_value());
  // S3 natural plus fixed points versus S3 regular on 6 points.
  const auto s3nat = PermGroup(6, parse_generators("(0 1 2); (0 1)", 6));
  const auto s3reg = PermGroup(6, parse_generators("(0 1 2)(3 4 5); (0 3)(1 5)(2 4)", 6));
  EXPECT_FALSE(are_conjugate(s3nat, s3reg).has_value());
}

TEST(Conjugacy, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 6; ++n) {
    const auto pool = random_pool(n, 10, rng);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i; j < pool.size(); ++j) {
        const auto w = are_conjugate(pool[i], pool[j]);
        ASSERT_EQ(w.has_value(), brute_conjugate(pool[i], pool[j], nullptr)) << n << ' ' << i << ' ' << j;
        if (w) EXPECT_TRUE(conjugate_by(pool[i], pool[j], *w));
      }
    }
  }
}

TEST(Conjugacy, AmbientRestriction) {
  std::mt19937_64 rng(8);
  const auto amb = wreath_product(2, PermGroup::symmetric(3)).product;
  // Random subgroups of the ambient group and their ambient conjugates.
  std::vector<PermGroup> pool;
  for (int t = 0; t < 14; ++t) {
    std::vector<Permutation> gens{amb.random_element(rng)};
    if (t % 2) gens.push_back(amb.random_element(rng));
    PermGroup g(6, gens);
    pool.push_back(g);
    pool.push_back(g.conjugated(amb.random_element(rng)));
    std::vector<int> img{0, 1, 2, 3, 4, 5};
    std::shuffle(img.begin(), img.end(), rng);
    pool.push_back(g.conjugated(Permutation::from_images(img)));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      const auto w = are_conjugate(pool[i], pool[j], &amb);
      ASSERT_EQ(w.has_value(), brute_conjugate(pool[i], pool[j], &amb)) << i << ' ' << j;
      if (w) {
        EXPECT_TRUE(amb.contains(*w));
        EXPECT_TRUE(conjugate_by(pool[i], pool[j], *w));
      }
    }
  }
}

TEST(Conjugacy, RegularGroupsOfOrderSixteen) {
  // C4 x C4 and C4 : C4 share element-order statistics.
  auto reg = [](const std::vector<std::vector<int>>& table_gens) {
    std::vector<Permutation> gens;
    for (const auto& img : table_gens) gens.push_back(Permutation::from_images(img));
    return PermGroup(16, gens);
  };
  // Elements (i, j) -> 4i + j.
  std::vector<int> a(16), b(16), c(16);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a[static_cast<std::size_t>(4 * i + j)] = 4 * ((i + 1) % 4) + j;
      b[static_cast<std::size_t>(4 * i + j)] = 4 * i + (j + 1) % 4;
      // Right multiplication by y in C4 : C4 with y^-1 x y = x^-1.
      c[static_cast<std::size_t>(4 * i + j)] = 4 * ((4 - i) % 4) + (j + 1) % 4;
    }
  }
  const auto g1 = reg({a, b});
  const auto g2 = reg({a, c});
  EXPECT_EQ(g1.order(), 16u);
  EXPECT_EQ(g2.order(), 16u);
  EXPECT_FALSE(are_conjugate(g1, g2).has_value());
  std::mt19937_64 rng(2);
  std::vector<int> img(16);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  const auto h = g2.conjugated(Permutation::from_images(img));
  const auto w = are_conjugate(g2, h);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(conjugate_by(g2, h, *w));
}

TEST(Conjugacy, ClassifierDedups) {
  ConjugacyClassifier cls;
  EXPECT_TRUE(cls.add(PermGroup::cyclic(6)).second);
  EXPECT_FALSE(cls.add(PermGroup(6, parse_generators("(0 2 4 1 3 5)", 6))).second);
  EXPECT_TRUE(cls.add(PermGroup::symmetric(6)).second);
  EXPECT_EQ(cls.size(), 2u);
}
