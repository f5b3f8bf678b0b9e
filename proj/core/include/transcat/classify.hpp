#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transcat/catalogue.hpp"
#include "transcat/perm_group.hpp"
#include "transcat/seeds.hpp"

namespace transcat {

inline constexpr std::uint64_t kDescentBudget = 200'000;
inline constexpr int kMaxCatalogueDegree = 16;

enum class PartEngine { Seeds, Descent, Layered, Goursat };
std::string to_string(PartEngine e);
PartEngine parse_engine(const std::string& s);

struct ClassifyConfig {
  /// Largest |Sym(k) wr H| handed to the descent engine.
  std::uint64_t budget = kDescentBudget;
  std::uint64_t seed = kDefaultSeed;
  /// Seed data directory; empty means default_data_dir().
  std::filesystem::path data_dir;
  /// Where catalogues, part files and manifests go; empty keeps everything
  /// in memory.
  std::filesystem::path work_dir;
  /// Forces one engine for every imprimitive part it can handle.
  std::optional<PartEngine> engine;
};

struct PartSpec {
  std::string id;
  PartEngine engine = PartEngine::Seeds;
  int k = 0;          // 0 for the primitive part
  int top_index = 0;  // in the degree n/k catalogue; 0 for two-block parts
};

/// Engine A: descent from Sym(k) wr H through transitive maximal subgroups
/// whose block action stays H and whose blocks stay at least k.  Returns one
/// group per Sym(k) wr Sym(m)-class, starting with the wreath product.
/// Throws BudgetExceeded when |Sym(k) wr H| > budget.
std::vector<PermGroup> descend_part(int k, const PermGroup& top, std::uint64_t budget = kDescentBudget);

/// Transitive groups of degree 2k whose minimal block size is k, up to
/// conjugacy, from subdirect products of pairs of transitive groups of
/// degree k.  Needs k >= 3.
std::vector<PermGroup> goursat_two_blocks(int k, const Catalogue& degree_k);

/// Catalogues by degree, classified on demand and cached in work_dir.
class CatalogueSet {
 public:
  explicit CatalogueSet(ClassifyConfig cfg = {});

  const ClassifyConfig& config() const { return cfg_; }
  const Catalogue& catalogue(int degree);
  const CatalogueIndex& index(int degree);
  /// Validated primitive seeds of one degree.
  std::vector<PrimitiveSeed> primitive_seeds(int degree);
  void insert(Catalogue cat);
  bool has(int degree) const { return cats_.count(degree) > 0; }

  std::filesystem::path catalogue_path(int degree) const;
  std::filesystem::path manifest_path(int degree) const;
  std::filesystem::path part_path(int degree, const std::string& id) const;

 private:
  ClassifyConfig cfg_;
  std::map<int, Catalogue> cats_;
  std::map<int, std::unique_ptr<CatalogueIndex>> indexes_;
  std::optional<std::vector<PrimitiveSeed>> seeds_;
};

/// The part decomposition of degree n: the primitive part and one part per
/// (k, top) with k a proper divisor, with the engine chosen for each.
std::vector<PartSpec> plan_parts(int n, CatalogueSet& cats);

/// The groups of one part: transitive, with signature (k, top_index) (or
/// primitive), pairwise non-conjugate.
std::vector<PermGroup> run_part(int n, const PartSpec& part, CatalogueSet& cats);

/// Entries (index 0) for the groups of a part, with flags and signatures.
std::vector<CatalogueEntry> part_entries(int n, const std::vector<PermGroup>& groups, CatalogueSet& cats);

/// Worker side of a part: runs it and writes its part file, leaving the
/// manifest alone.  Needs a work_dir.
std::vector<CatalogueEntry> run_part_file(int n, const PartSpec& part, CatalogueSet& cats);

/// Collator side: records a part file written by run_part_file in the
/// manifest of degree n, or marks the part failed with `failure`.  Returns
/// false when the file is missing or its header does not match the part.
bool record_part(int n, const PartSpec& part, CatalogueSet& cats, const std::string& failure = "");

/// Merges all parts of degree n (reusing finished part files listed in the
/// manifest), removes duplicates, orders canonically and flags minimal
/// transitive groups.
Catalogue classify_degree(int n, CatalogueSet& cats);

/// Order-independent description of a group's conjugacy class used to
/// break ties in the canonical order; empty when the search would be too
/// large.
std::string canonical_tiebreak(const PermGroup& g);

struct TableCheck {
  int degree = 0;
  std::string table;  // "g" or "m"
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  bool pass() const { return expected == actual; }
};

std::vector<TableCheck> verify_tables(int from, int to, const ReferenceTables& ref, CatalogueSet& cats);

}  // namespace transcat
