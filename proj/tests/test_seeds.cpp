#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/seeds.hpp"

using namespace transcat;

namespace {

const std::filesystem::path kData = TRANSCAT_TEST_DATA_DIR;

const std::vector<PrimitiveSeed>& primitive() {
  static const auto seeds = read_primitive_seeds(kData / "primitive_groups.txt");
  return seeds;
}

const std::vector<SmallGroupSeed>& small() {
  static const auto seeds = read_small_groups(kData / "small_groups.txt");
  return seeds;
}

const PrimitiveSeed* find_primitive(int degree, const std::string& name) {
  for (const auto& s : primitive()) {
    if (s.degree == degree && s.name == name) return &s;
  }
  return nullptr;
}

}  // namespace

TEST(Seeds, ChecksumsMatch) { EXPECT_NO_THROW(verify_checksums(kData)); }

TEST(Seeds, ChecksumMismatchIsReported) {
  const auto dir = std::filesystem::temp_directory_path() / "transcat_checksum_test";
  std::filesystem::create_directories(dir);
  { std::ofstream(dir / "a.txt") << "abc\n"; }
  { std::ofstream(dir / "CHECKSUMS") << text_digest("abc\n") << "  a.txt\n"; }
  EXPECT_NO_THROW(verify_checksums(dir));
  { std::ofstream(dir / "a.txt") << "abd\n"; }
  EXPECT_THROW(verify_checksums(dir), Error);
  std::filesystem::remove_all(dir);
}

TEST(Seeds, FnvDigestKnownValues) {
  EXPECT_EQ(text_digest(""), "cbf29ce484222325");
  EXPECT_EQ(text_digest("a"), "af63dc4c8601ec8c");
}

TEST(Seeds, PrimitiveCountsPerDegree) {
  std::map<int, std::uint64_t> count;
  for (const auto& s : primitive()) ++count[s.degree];
  for (int d = 2; d <= 16; ++d) EXPECT_EQ(count[d], primitive_count(d)) << "degree " << d;
}

TEST(Seeds, PrimitiveSeedsValidate) {
  for (int d = 2; d <= 16; ++d) {
    std::vector<PrimitiveSeed> of;
    for (const auto& s : primitive()) {
      if (s.degree == d) of.push_back(s);
    }
    EXPECT_NO_THROW(validate_primitive_seeds(of, d)) << "degree " << d;
  }
}

TEST(Seeds, NamedPrimitiveOrders) {
  const std::vector<std::tuple<int, std::string, std::uint64_t>> expect = {
      {11, "M11", 7920}, {12, "M11", 7920}, {12, "M12", 95040}, {11, "PSL(2,11)", 660},
      {16, "S16", 20922789888000ULL}};
  for (const auto& [deg, name, order] : expect) {
    const auto* s = find_primitive(deg, name);
    ASSERT_NE(s, nullptr) << name << " on " << deg;
    const PermGroup g(deg, s->generators);
    EXPECT_EQ(g.order(), order) << name;
    EXPECT_TRUE(is_primitive(g)) << name;
  }
}

TEST(Seeds, SmallGroupsValidate) {
  EXPECT_NO_THROW(validate_small_groups(small()));
  std::map<int, int> count;
  for (const auto& s : small()) ++count[s.order];
  for (int n = 1; n <= 31; ++n) EXPECT_EQ(count[n], small_group_count(n)) << "order " << n;
}

TEST(Seeds, SmallGroupDuplicateIsRejected) {
  std::vector<SmallGroupSeed> bad;
  for (const auto& s : small()) {
    if (s.order == 8) bad.push_back(s);
  }
  ASSERT_EQ(bad.size(), 5u);
  bad[4].generators = bad[0].generators;
  EXPECT_THROW(validate_small_groups(bad), Error);
}

TEST(Seeds, RegularNonIsomorphicPairSearchIsFast) {
  // C9xC3 and C9:C3 agree on element orders and derived lengths.
  const SmallGroupSeed *a = nullptr, *b = nullptr;
  for (const auto& s : small()) {
    if (s.order == 27 && s.index == 2) a = &s;
    if (s.order == 27 && s.index == 4) b = &s;
  }
  ASSERT_TRUE(a && b);
  const auto t0 = std::chrono::steady_clock::now();
  EXPECT_FALSE(conjugating_element(PermGroup(27, a->generators), PermGroup(27, b->generators)));
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 5.0);
}

TEST(Seeds, ReferenceTables) {
  const auto t = read_reference_tables(kData / "reference_tables.txt");
  EXPECT_EQ(t.at("g", 12), 301u);
  EXPECT_EQ(t.at("g", 16), 1954u);
  EXPECT_EQ(t.at("m", 16), 75u);
  EXPECT_EQ(t.at("t", 16), 286u);
  EXPECT_EQ(t.at("c", 16), 278u);
  EXPECT_FALSE(t.has("g", 17));
}
