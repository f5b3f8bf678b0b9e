#include <gtest/gtest.h>

#include <random>

#include "transcat/blocks.hpp"

using namespace transcat;

namespace {

PermGroup klein4() {
  return PermGroup(4, parse_generators("(0 1)(2 3); (0 2)(1 3)", 4));
}

int one_index(const PermGroup&) { return 1; }

// Oracle: all set partitions of {0..n-1} into equal blocks that g preserves.
void partitions(int n, std::vector<int>& assign, int next, int used, std::vector<std::vector<int>>& out) {
  if (next == n) {
    out.push_back(assign);
    return;
  }
  for (int c = 0; c <= used; ++c) {
    assign[static_cast<std::size_t>(next)] = c;
    partitions(n, assign, next + 1, std::max(used, c + 1), out);
  }
}

int count_invariant_systems(const PermGroup& g, int k) {
  const int n = g.degree();
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> all;
  partitions(n, assign, 1, 1, all);
  int count = 0;
  for (const auto& a : all) {
    std::vector<int> sizes(static_cast<std::size_t>(n), 0);
    for (int c : a) ++sizes[static_cast<std::size_t>(c)];
    bool equal = true;
    for (int s : sizes) equal = equal && (s == 0 || s == k);
    if (!equal) continue;
    bool inv = true;
    for (const auto& s : g.generators()) {
      for (int x = 0; x < n && inv; ++x) {
        for (int y = 0; y < n && inv; ++y) {
          if (a[static_cast<std::size_t>(x)] == a[static_cast<std::size_t>(y)]) {
            inv = a[static_cast<std::size_t>(s[x])] == a[static_cast<std::size_t>(s[y])];
          }
        }
      }
    }
    count += inv;
  }
  return count;
}

}  // namespace

TEST(Blocks, CyclicFour) {
  const auto sys = minimal_block_systems(PermGroup::cyclic(4));
  ASSERT_EQ(sys.size(), 1u);
  EXPECT_EQ(sys[0].to_string(), "k=2 | {0,2} {1,3}");
  const auto top = block_action(PermGroup::cyclic(4), sys[0]);
  EXPECT_EQ(top.degree(), 2);
  EXPECT_EQ(top.order(), 2u);
}

TEST(Blocks, KleinHasThreeSystems) {
  EXPECT_EQ(minimal_block_systems(klein4()).size(), 3u);
  EXPECT_EQ(count_invariant_systems(klein4(), 2), 3);
  EXPECT_EQ(signature(klein4(), one_index), (Signature{2, 1}));
}

TEST(Blocks, PrimitiveGroups) {
  EXPECT_TRUE(minimal_block_systems(PermGroup::symmetric(4)).empty());
  EXPECT_TRUE(is_primitive(PermGroup::cyclic(7)));
  EXPECT_FALSE(is_primitive(PermGroup::cyclic(6)));
  EXPECT_THROW(minimal_block_systems(PermGroup(4, parse_generators("(0 1)", 4))), Error);
}

TEST(Blocks, WreathProducts) {
  const auto c2 = PermGroup::cyclic(2);
  const auto w = wreath_product(2, c2);
  EXPECT_EQ(w.product.order(), 8u);
  EXPECT_TRUE(is_invariant(w.product, w.blocks));
  EXPECT_EQ(wreath_product(3, c2).product.order(), 72u);
  const auto w3 = wreath_product(2, PermGroup::symmetric(3));
  EXPECT_EQ(w3.product.order(), 48u);
  EXPECT_TRUE(block_action(w3.product, w3.blocks).same_group(PermGroup::symmetric(3)));
  EXPECT_EQ(block_kernel(w3.product, w3.blocks).order(), 8u);
  EXPECT_EQ(signature(w.product, one_index), (Signature{2, 1}));
}

TEST(Blocks, SystemsMatchPartitionOracle) {
  std::mt19937_64 rng(17);
  const std::vector<PermGroup> groups{
      PermGroup::cyclic(6), PermGroup::cyclic(8), klein4(),
      PermGroup(6, parse_generators("(0 1 2 3 4 5); (1 5)(2 4)", 6)),
      wreath_product(2, PermGroup::cyclic(3)).product,
      wreath_product(3, PermGroup::cyclic(2)).product,
      PermGroup(8, parse_generators("(0 1)(2 3)(4 5)(6 7); (0 2)(1 3)(4 6)(5 7); (0 4)(1 5)(2 6)(3 7)", 8))};
  for (const auto& g : groups) {
    const auto all = all_block_systems(g);
    for (int k = 2; k < g.degree(); ++k) {
      if (g.degree() % k) continue;
      int mine = 0;
      for (const auto& b : all) mine += (b.block_size == k);
      EXPECT_EQ(mine, count_invariant_systems(g, k)) << "k=" << k;
    }
    for (const auto& b : minimal_block_systems(g)) {
      EXPECT_TRUE(is_invariant(g, b));
      // Minimality: nothing strictly finer among all systems.
      for (const auto& o : all) {
        if (o.block_size >= b.block_size) continue;
        const auto of = b.block_of();
        bool finer = true;
        for (const auto& blk : o.blocks) {
          for (int p : blk) finer = finer && of[static_cast<std::size_t>(p)] == of[static_cast<std::size_t>(blk[0])];
        }
        EXPECT_FALSE(finer);
      }
    }
    // Signature is conjugation invariant.
    std::vector<int> img(static_cast<std::size_t>(g.degree()));
    for (int i = 0; i < g.degree(); ++i) img[static_cast<std::size_t>(i)] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const auto h = g.conjugated(Permutation::from_images(img));
    auto by_order = [](const PermGroup& t) { return static_cast<int>(t.order()); };
    EXPECT_EQ(signature(g, by_order), signature(h, by_order));
  }
}
