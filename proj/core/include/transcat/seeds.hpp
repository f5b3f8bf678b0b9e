#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

/// Directory holding the shipped seed files: $TRANSCAT_DATA_DIR if set,
/// otherwise the directory configured at build time.
std::filesystem::path default_data_dir();

/// 64-bit FNV-1a of a file's bytes, as 16 lower-case hex digits.
std::string file_digest(const std::filesystem::path& path);
std::string text_digest(std::string_view text);

/// Checks every `<digest>  <file>` line of `<dir>/CHECKSUMS`.  Throws Error
/// on a missing file or mismatch.
void verify_checksums(const std::filesystem::path& dir);

struct PrimitiveSeed {
  int degree = 0;
  std::uint64_t order = 0;
  std::string name;
  std::vector<Permutation> generators;
};

/// Known numbers of primitive groups of degree 1..16 (index = degree).
std::uint64_t primitive_count(int degree);

/// Reads `degree<TAB>order<TAB>name<TAB>generators` lines ('#' comments).
std::vector<PrimitiveSeed> read_primitive_seeds(const std::filesystem::path& path);
void write_primitive_seeds(std::ostream& out, const std::vector<PrimitiveSeed>& seeds);

/// Validates the seeds of one degree: transitive, primitive, stated order,
/// pairwise non-conjugate, and as many as primitive_count(degree).
void validate_primitive_seeds(const std::vector<PrimitiveSeed>& seeds, int degree);

/// An abstract group as a regular permutation representation; element i is
/// the image of point 0 under the group element that maps 0 to i.
struct SmallGroupSeed {
  int order = 0;
  int index = 0;
  std::string name;
  std::vector<Permutation> generators;
};

/// Number of isomorphism types of groups of order 1..31.
int small_group_count(int order);

/// Reads `order<TAB>index<TAB>name<TAB>generators` lines.
std::vector<SmallGroupSeed> read_small_groups(const std::filesystem::path& path);
void write_small_groups(std::ostream& out, const std::vector<SmallGroupSeed>& seeds);
/// Regular, of the stated order, pairwise non-isomorphic within an order,
/// and complete for every order present.
void validate_small_groups(const std::vector<SmallGroupSeed>& seeds);

/// Reference values for the counts reproduced by the catalogue: one row per
/// `<table> <n> <value>` line, e.g. `g 12 301`.
struct ReferenceTables {
  std::map<std::string, std::map<int, std::uint64_t>> rows;
  std::uint64_t at(const std::string& table, int n) const;
  bool has(const std::string& table, int n) const;
};
ReferenceTables read_reference_tables(const std::filesystem::path& path);

}  // namespace transcat
