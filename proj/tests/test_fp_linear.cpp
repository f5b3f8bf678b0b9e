#include <gtest/gtest.h>

#include <random>
#include <set>

#include "transcat/fp_linear.hpp"

using namespace transcat;

namespace {

// Oracle: every subspace, by closing {0} under adding single vectors.
std::vector<Subspace> all_subspaces(int p, int d) {
  std::vector<Vec> vecs;
  int total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (int idx = 0; idx < total; ++idx) {
    Vec v(static_cast<std::size_t>(d));
    int r = idx;
    for (int i = 0; i < d; ++i, r /= p) v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r % p);
    vecs.push_back(v);
  }
  std::vector<Subspace> out{Subspace::zero(p, d)};
  std::set<std::string> seen{out[0].key()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& v : vecs) {
      Subspace s = out[i];
      if (s.insert(v) && seen.insert(s.key()).second) out.push_back(s);
    }
  }
  return out;
}

std::set<std::string> brute_submodules(const Module& m) {
  std::set<std::string> keys;
  for (const auto& s : all_subspaces(m.p, m.d)) {
    bool inv = true;
    for (const auto& a : m.action) inv = inv && s.invariant_under(a);
    if (inv) keys.insert(s.key());
  }
  return keys;
}

std::set<std::string> keys_of(const std::vector<Subspace>& v) {
  std::set<std::string> k;
  for (const auto& s : v) k.insert(s.key());
  return k;
}

}  // namespace

TEST(FpLinear, SubspaceCounts) {
  // Gaussian binomials: F2^3 has 1 + 7 + 7 + 1 subspaces, F3^2 has 1 + 4 + 1.
  EXPECT_EQ(all_subspaces(2, 3).size(), 16u);
  EXPECT_EQ(all_subspaces(3, 2).size(), 6u);
  Module triv{2, 3, {}};
  EXPECT_EQ(submodules(triv).size(), 16u);
}

TEST(FpLinear, SmallModules) {
  Module swap{2, 2, {{{0, 1}, {1, 0}}}};
  EXPECT_EQ(submodules(swap).size(), 3u);
  Module one{2, 1, {{{1}}}};
  EXPECT_EQ(submodules(one).size(), 2u);
  const auto s3 = permutation_module(PermGroup::symmetric(3), 2);
  EXPECT_EQ(submodules(s3).size(), 4u);
  // Over F3 the S3 permutation module is uniserial: 0 < <1,1,1> < sum-zero < V.
  EXPECT_EQ(submodules(permutation_module(PermGroup::symmetric(3), 3)).size(), 4u);
}

TEST(FpLinear, SubmodulesMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = trial % 2 ? 3 : 2;
    const int d = 1 + static_cast<int>(rng() % (p == 2 ? 5 : 3));
    Module m{p, d, {}};
    const int ngens = 1 + static_cast<int>(rng() % 2);
    for (int g = 0; g < ngens; ++g) {
      Matrix a(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d)));
      for (auto& row : a) {
        for (auto& x : row) x = static_cast<std::uint8_t>(rng() % 3 == 0 ? rng() % static_cast<unsigned>(p) : 0);
      }
      m.action.push_back(a);
    }
    EXPECT_EQ(keys_of(submodules(m)), brute_submodules(m)) << "trial " << trial;
  }
}

TEST(FpLinear, PermutationModulesMatchBruteForce) {
  for (const auto* text : {"1 2 3 0", "1 0 2 3; 0 1 3 2", "1 2 0 3 4; 0 1 2 4 3", "1 2 3 4 0"}) {
    const auto gens = parse_generators(text);
    const PermGroup g(gens[0].degree(), gens);
    for (int p : {2, 3}) {
      if (p == 3 && g.degree() > 4) continue;
      const auto m = permutation_module(g, p);
      EXPECT_EQ(keys_of(submodules(m)), brute_submodules(m)) << text << " p=" << p;
    }
  }
}

TEST(FpLinear, MaximalSubmodules) {
  // C4 regular over F2 is uniserial of length 4.
  const auto m = permutation_module(PermGroup::cyclic(4), 2);
  EXPECT_EQ(submodules(m).size(), 5u);
  const auto max = maximal_submodules(m);
  ASSERT_EQ(max.size(), 1u);
  EXPECT_EQ(max[0].dim(), 3);
}

TEST(FpLinear, ElementaryAbelianCoordinates) {
  // Block transpositions of 2 wr C3 and the action of the top rotation.
  const auto gens = parse_generators("1 0 2 3 4 5; 0 1 3 2 4 5; 0 1 2 3 5 4; 1 0 3 2 5 4");
  ElementaryAbelian e(6, gens, 2);
  EXPECT_EQ(e.dim(), 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec v(3);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % 2);
    EXPECT_EQ(e.coords(e.element(v)), v);
  }
  const auto rot = parse_permutation("2 3 4 5 0 1", 6);
  const auto swap = parse_permutation("2 3 0 1 4 5", 6);
  EXPECT_EQ(mat_mul(e.conjugation_matrix(rot), e.conjugation_matrix(swap), 2),
            e.conjugation_matrix(rot * swap));
  EXPECT_THROW(ElementaryAbelian(4, parse_generators("1 2 3 0"), 2), Error);
}
