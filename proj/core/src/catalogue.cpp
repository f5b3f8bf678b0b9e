#include "transcat/catalogue.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "text_io.hpp"

namespace transcat {

PermGroup CatalogueEntry::group() const {
  BuildOptions opts;
  opts.known_order = order;
  return PermGroup(degree, generators, opts);
}

std::size_t Catalogue::minimal_count() const {
  std::size_t c = 0;
  for (const auto& e : entries) c += e.minimal ? 1 : 0;
  return c;
}

namespace {

void write_fields(std::ostream& out, const CatalogueEntry& e, bool with_index) {
  out << e.degree << '\t';
  if (with_index) out << e.index << '\t';
  out << e.order << '\t' << (e.primitive ? 'P' : 'I') << '\t' << (e.minimal ? 'M' : '-') << '\t'
      << (e.signature ? e.signature->to_string() : "-") << '\t' << format_generators(e.generators) << '\n';
}

CatalogueEntry parse_fields(const std::vector<std::string>& f, bool with_index) {
  CatalogueEntry e;
  std::size_t i = 0;
  e.degree = std::stoi(f[i++]);
  if (with_index) e.index = std::stoi(f[i++]);
  e.order = std::stoull(f[i++]);
  const std::string& kind = f[i++];
  if (kind != "P" && kind != "I") throw Error("bad primitivity flag '" + kind + "'");
  e.primitive = kind == "P";
  const std::string& min = f[i++];
  if (min != "M" && min != "-") throw Error("bad minimality flag '" + min + "'");
  e.minimal = min == "M";
  const std::string& sig = f[i++];
  if (sig != "-") {
    const auto comma = sig.find(',');
    if (comma == std::string::npos) throw Error("bad signature '" + sig + "'");
    e.signature = Signature{std::stoi(sig.substr(0, comma)), std::stoi(sig.substr(comma + 1))};
  }
  if (e.primitive == e.signature.has_value()) throw Error("signature must be present exactly for imprimitive groups");
  e.generators = parse_generators(f[i], e.degree);
  return e;
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_catalogue(std::ostream& out, const Catalogue& cat) {
  out << "# transcat catalogue degree " << cat.degree << " seed " << cat.seed << '\n';
  out << "# degree\tindex\torder\tP|I\tM|-\tsignature\tgenerators\n";
  for (const auto& e : cat.entries) write_fields(out, e, true);
}

void save_catalogue(const std::filesystem::path& path, const Catalogue& cat) {
  std::ostringstream os;
  write_catalogue(os, cat);
  save_text(path, os.str());
}

Catalogue read_catalogue(const std::filesystem::path& path) {
  Catalogue cat;
  const std::string text = detail::slurp(path);
  std::istringstream head(text);
  std::string word, kind;
  head >> word >> word >> kind;
  if (kind != "catalogue") throw Error(path.string() + " is not a catalogue file");
  head >> word >> cat.degree >> word >> cat.seed;
  detail::for_each_record(path, 7, [&](const std::vector<std::string>& f) {
    auto e = parse_fields(f, true);
    if (e.degree != cat.degree) throw Error("entry of the wrong degree");
    if (e.index != static_cast<int>(cat.entries.size()) + 1) throw Error("catalogue indices must be 1, 2, ...");
    cat.entries.push_back(std::move(e));
  });
  return cat;
}

void write_part(std::ostream& out, int degree, std::uint64_t seed, const std::string& part_id,
                const std::vector<CatalogueEntry>& entries) {
  out << "# transcat part " << part_id << " degree " << degree << " seed " << seed << '\n';
  for (const auto& e : entries) write_fields(out, e, false);
}

std::vector<CatalogueEntry> read_part(const std::filesystem::path& path) {
  std::vector<CatalogueEntry> out;
  detail::for_each_record(path, 6, [&](const std::vector<std::string>& f) { out.push_back(parse_fields(f, false)); });
  return out;
}

PartRecord* PartManifest::find(const std::string& id) {
  for (auto& p : parts) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

void write_manifest(std::ostream& out, const PartManifest& m) {
  out << "# transcat manifest degree " << m.degree << " seed " << m.seed << '\n';
  out << "# part\tid\tengine\tstatus\tgroups\tdigest\tmessage\n";
  for (const auto& p : m.parts) {
    out << "part\t" << p.id << '\t' << p.engine << '\t' << p.status << '\t' << p.groups << '\t'
        << (p.digest.empty() ? "-" : p.digest) << '\t' << (p.message.empty() ? "-" : p.message) << '\n';
  }
}

void save_manifest(const std::filesystem::path& path, const PartManifest& m) {
  std::ostringstream os;
  write_manifest(os, m);
  save_text(path, os.str());
}

PartManifest read_manifest(const std::filesystem::path& path) {
  PartManifest m;
  std::istringstream head(detail::slurp(path));
  std::string word, kind;
  head >> word >> word >> kind;
  if (kind != "manifest") throw Error(path.string() + " is not a manifest");
  head >> word >> m.degree >> word >> m.seed;
  detail::for_each_record(path, 7, [&](const std::vector<std::string>& f) {
    if (f[0] != "part") throw Error("expected a part record");
    PartRecord p{f[1], f[2], f[3], std::stoull(f[4]), f[5] == "-" ? "" : f[5], f[6] == "-" ? "" : f[6]};
    m.parts.push_back(std::move(p));
  });
  return m;
}

CatalogueIndex::CatalogueIndex(const Catalogue& cat) : cat_(cat) {
  groups_.reserve(cat_.entries.size());
  for (const auto& e : cat_.entries) {
    groups_.push_back(e.group());
    if (!classes_.add(groups_.back()).second) {
      throw Error("catalogue of degree " + std::to_string(cat_.degree) + " has conjugate entries");
    }
  }
}

int CatalogueIndex::index_of(const PermGroup& g) const {
  const int i = classes_.find(g);
  if (i < 0) {
    throw Error("group of order " + std::to_string(g.order()) + " is missing from the degree " +
                std::to_string(cat_.degree) + " catalogue");
  }
  return i + 1;
}

CatalogueLookup CatalogueIndex::lookup() const {
  return [this](const PermGroup& g) { return index_of(g); };
}

}  // namespace transcat
