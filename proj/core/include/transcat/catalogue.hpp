#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

struct CatalogueEntry {
  int degree = 0;
  int index = 0;  // 1-based; 0 inside part files
  std::uint64_t order = 0;
  bool primitive = false;
  bool minimal = false;
  std::optional<Signature> signature;
  std::vector<Permutation> generators;

  PermGroup group() const;
};

struct Catalogue {
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<CatalogueEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::size_t minimal_count() const;
};

/// `degree<TAB>index<TAB>order<TAB>P|I<TAB>M|-<TAB>k,idx|-<TAB>generators`
/// after a `# transcat catalogue degree N seed S` header.
void write_catalogue(std::ostream& out, const Catalogue& cat);
void save_catalogue(const std::filesystem::path& path, const Catalogue& cat);
Catalogue read_catalogue(const std::filesystem::path& path);

/// Part files use the catalogue line format without the index column.
void write_part(std::ostream& out, int degree, std::uint64_t seed, const std::string& part_id,
                const std::vector<CatalogueEntry>& entries);
std::vector<CatalogueEntry> read_part(const std::filesystem::path& path);

struct PartRecord {
  std::string id;      // "primitive", "two-block:k" or "k,idx"
  std::string engine;  // seeds, descent, layered, goursat
  std::string status = "pending";  // pending, done, failed
  std::size_t groups = 0;
  std::string digest;  // of the part file, once done
  std::string message;
};

struct PartManifest {
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<PartRecord> parts;

  PartRecord* find(const std::string& id);
};

/// `part<TAB>id<TAB>engine<TAB>status<TAB>groups<TAB>digest<TAB>message`
void write_manifest(std::ostream& out, const PartManifest& m);
void save_manifest(const std::filesystem::path& path, const PartManifest& m);
PartManifest read_manifest(const std::filesystem::path& path);

/// Conjugacy lookup of groups in a catalogue.
class CatalogueIndex {
 public:
  explicit CatalogueIndex(const Catalogue& cat);
  /// 1-based index of the entry conjugate to g; throws Error if none.
  int index_of(const PermGroup& g) const;
  CatalogueLookup lookup() const;
  const Catalogue& catalogue() const { return cat_; }
  const PermGroup& group(int index) const { return groups_[static_cast<std::size_t>(index - 1)]; }

 private:
  Catalogue cat_;
  std::vector<PermGroup> groups_;
  ConjugacyClassifier classes_;
};

}  // namespace transcat
