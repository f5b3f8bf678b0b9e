#include <gtest/gtest.h>

#include <filesystem>

#include "transcat/classify.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/elusive.hpp"
#include "transcat/lattice.hpp"
#include "transcat/orbitals.hpp"

using namespace transcat;

namespace {

CatalogueSet& shared() {
  static CatalogueSet cats([] {
    ClassifyConfig cfg;
    cfg.data_dir = TRANSCAT_TEST_DATA_DIR;
    return cfg;
  }());
  return cats;
}

PermGroup m11_on_twelve() {
  for (const auto& s : read_primitive_seeds(std::filesystem::path(TRANSCAT_TEST_DATA_DIR) / "primitive_groups.txt")) {
    if (s.degree == 12 && s.name == "M11") return PermGroup(12, s.generators);
  }
  throw Error("M11 seed missing");
}

void expect_witness(const PermGroup& g, const Permutation& x) {
  EXPECT_TRUE(g.contains(x));
  EXPECT_EQ(x.fixed_points(), 0);
  const auto f = prime_factors(x.order());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], x.order());
}

}  // namespace

TEST(Derangement, PrimeFactors) {
  EXPECT_EQ(prime_factors(7920), (std::vector<std::uint64_t>{2, 3, 5, 11}));
  EXPECT_TRUE(prime_factors(1).empty());
  EXPECT_EQ(prime_factors(49), (std::vector<std::uint64_t>{7}));
}

TEST(Derangement, SmallExamples) {
  const auto c6 = PermGroup::cyclic(6);
  const auto w = prime_order_derangement(c6);
  ASSERT_TRUE(w);
  expect_witness(c6, *w);
  const auto s4 = PermGroup::symmetric(4);
  const auto v = prime_order_derangement(s4);
  ASSERT_TRUE(v);
  expect_witness(s4, *v);
  EXPECT_EQ(v->cycle_type(), (std::vector<int>{2, 2}));
  EXPECT_FALSE(prime_order_derangement(m11_on_twelve()));
}

TEST(Derangement, ExhaustiveStageRespectsBudget) {
  DerangementOptions exact;
  exact.random_stage = false;
  exact.budget = 1000;
  EXPECT_THROW(prime_order_derangement(m11_on_twelve(), exact), BudgetExceeded);
}

TEST(Derangement, SylowSubgroupsHaveFullOrder) {
  std::mt19937_64 rng(5);
  for (int n = 4; n <= 9; ++n) {
    for (const auto& e : shared().catalogue(n).entries) {
      const PermGroup g = e.group();
      for (auto p : prime_factors(g.order())) {
        const auto s = random_sylow_subgroup(g, p, 400, rng);
        if (!s) continue;
        EXPECT_TRUE(s->is_subgroup_of(g));
        std::uint64_t q = g.order();
        while (q % p == 0) q /= p;
        EXPECT_EQ(s->order() * q, g.order());
      }
    }
  }
}

TEST(Derangement, WitnessesAreValidUpToTen) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& e : shared().catalogue(n).entries) {
      const PermGroup g = e.group();
      const auto w = prime_order_derangement(g);
      ASSERT_TRUE(w) << n << " " << e.index;
      expect_witness(g, *w);
    }
  }
}

TEST(Derangement, RandomStageNeverChangesVerdictsUpToTwelve) {
  DerangementOptions exact;
  exact.random_stage = false;
  exact.budget = 1'000'000'000;
  for (int n = 2; n <= 12; ++n) {
    for (const auto& e : shared().catalogue(n).entries) {
      const PermGroup g = e.group();
      EXPECT_EQ(prime_order_derangement(g).has_value(), prime_order_derangement(g, exact).has_value())
          << n << " " << e.index;
    }
  }
}

TEST(TwoClosure, Examples) {
  EXPECT_EQ(two_closure(PermGroup::symmetric(4)).order(), 24u);
  // The +1 orbital of the regular C4 is a directed 4-cycle.
  EXPECT_EQ(two_closure(PermGroup::cyclic(4)).order(), 4u);
  EXPECT_EQ(two_closure(PermGroup::alternating(4)).order(), 24u);
}

TEST(TwoClosure, ContainsGroupKeepsOrbitalsAndIsIdempotent) {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& e : shared().catalogue(n).entries) {
      const PermGroup g = e.group();
      const PermGroup c = two_closure(g);
      EXPECT_TRUE(g.is_subgroup_of(c));
      EXPECT_EQ(orbital_structure(c).index, orbital_structure(g).index);
      EXPECT_EQ(two_closure(c).order(), c.order());
    }
  }
}

TEST(Census, DegreeTwelveHasMathieuAndFourSubgroups) {
  const auto& cat = shared().catalogue(12);
  const PermGroup m11 = m11_on_twelve();
  std::vector<PermGroup> transitive_subgroups;
  for (auto& c : all_subgroup_classes(m11)) {
    if (c.representative.is_transitive()) transitive_subgroups.push_back(std::move(c.representative));
  }
  int elusive = 0;
  bool has_m11 = false;
  for (const auto& r : elusive_census(cat)) {
    EXPECT_EQ(r.elusive, !r.witness.has_value());
    if (!r.elusive) continue;
    ++elusive;
    EXPECT_FALSE(r.two_closed);
    EXPECT_NE(r.to_line().find("\tELUSIVE\tNOT2CLOSED"), std::string::npos);
    const PermGroup g = cat.entries[static_cast<std::size_t>(r.index - 1)].group();
    has_m11 = has_m11 || are_conjugate(g, m11);
    bool inside = false;
    for (const auto& h : transitive_subgroups) inside = inside || (h.order() == g.order() && are_conjugate(g, h));
    EXPECT_TRUE(inside) << r.index;
  }
  EXPECT_EQ(elusive, 5);
  EXPECT_TRUE(has_m11);
}

TEST(Census, NoOtherDegreeUpToFourteenIsElusive) {
  for (int n = 2; n <= 14; ++n) {
    if (n == 12) continue;
    for (const auto& r : elusive_census(shared().catalogue(n))) {
      EXPECT_FALSE(r.elusive) << n << " " << r.index;
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(r.witness->fixed_points(), 0);
    }
  }
}

TEST(Report, LineFormat) {
  ElusiveReport r;
  r.degree = 4;
  r.index = 1;
  r.witness = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  r.two_closed = true;
  EXPECT_EQ(r.to_line(), "4\t1\t(0 1)(2 3)\t2CLOSED");
}
