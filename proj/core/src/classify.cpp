#include "transcat/classify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "transcat/blocks.hpp"
#include "transcat/canonical.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/lattice.hpp"
#include "transcat/layer_engine.hpp"
#include "transcat/orbitals.hpp"

namespace transcat {

std::string to_string(PartEngine e) {
  switch (e) {
    case PartEngine::Seeds: return "seeds";
    case PartEngine::Descent: return "descent";
    case PartEngine::Layered: return "layered";
    case PartEngine::Goursat: return "goursat";
  }
  return "?";
}

PartEngine parse_engine(const std::string& s) {
  for (auto e : {PartEngine::Seeds, PartEngine::Descent, PartEngine::Layered, PartEngine::Goursat}) {
    if (to_string(e) == s) return e;
  }
  throw Error("unknown engine '" + s + "'");
}

CatalogueSet::CatalogueSet(ClassifyConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.data_dir.empty()) cfg_.data_dir = default_data_dir();
  if (cfg_.budget < 10'000) throw Error("engine budget must be at least 10000");
}

std::filesystem::path CatalogueSet::catalogue_path(int degree) const {
  return cfg_.work_dir / ("transitive-" + std::to_string(degree) + ".txt");
}

std::filesystem::path CatalogueSet::manifest_path(int degree) const {
  return cfg_.work_dir / ("transitive-" + std::to_string(degree) + ".manifest");
}

std::filesystem::path CatalogueSet::part_path(int degree, const std::string& id) const {
  std::string name = id;
  std::replace(name.begin(), name.end(), ':', '-');
  std::replace(name.begin(), name.end(), ',', '_');
  return cfg_.work_dir / "parts" / std::to_string(degree) / (name + ".part");
}

const Catalogue& CatalogueSet::catalogue(int degree) {
  if (auto it = cats_.find(degree); it != cats_.end()) return it->second;
  if (degree < 2 || degree > kMaxCatalogueDegree) {
    throw Error("catalogues cover degrees 2.." + std::to_string(kMaxCatalogueDegree));
  }
  if (!cfg_.work_dir.empty() && std::filesystem::exists(catalogue_path(degree))) {
    Catalogue cat = read_catalogue(catalogue_path(degree));
    if (cat.degree != degree) throw Error(catalogue_path(degree).string() + " holds the wrong degree");
    if (cat.seed == cfg_.seed) {
      insert(std::move(cat));
      return cats_.at(degree);
    }
  }
  Catalogue cat = classify_degree(degree, *this);
  if (!cfg_.work_dir.empty()) save_catalogue(catalogue_path(degree), cat);
  insert(std::move(cat));
  return cats_.at(degree);
}

const CatalogueIndex& CatalogueSet::index(int degree) {
  if (auto it = indexes_.find(degree); it != indexes_.end()) return *it->second;
  const Catalogue& cat = catalogue(degree);
  auto [it, ok] = indexes_.emplace(degree, std::make_unique<CatalogueIndex>(cat));
  return *it->second;
}

void CatalogueSet::insert(Catalogue cat) {
  const int d = cat.degree;
  indexes_.erase(d);
  cats_[d] = std::move(cat);
}

std::vector<PrimitiveSeed> CatalogueSet::primitive_seeds(int degree) {
  if (!seeds_) {
    verify_checksums(cfg_.data_dir);
    seeds_ = read_primitive_seeds(cfg_.data_dir / "primitive_groups.txt");
  }
  std::vector<PrimitiveSeed> out;
  for (const auto& s : *seeds_) {
    if (s.degree == degree) out.push_back(s);
  }
  validate_primitive_seeds(out, degree);
  return out;
}

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// |Sym(k) wr H|, saturating.
std::uint64_t wreath_order(int k, int m, std::uint64_t top) {
  const std::uint64_t base = factorial(k);
  std::uint64_t o = top;
  for (int i = 0; i < m; ++i) {
    if (o > UINT64_MAX / base) return UINT64_MAX;
    o *= base;
  }
  return o;
}

bool engine_applies(PartEngine e, int k, int m, std::uint64_t wreath, std::uint64_t budget) {
  switch (e) {
    case PartEngine::Descent: return wreath <= budget;
    case PartEngine::Layered: return k >= 2 && k <= 4;
    case PartEngine::Goursat: return m == 2 && k >= 3;
    case PartEngine::Seeds: return false;
  }
  return false;
}

PartEngine route(int k, int m, std::uint64_t wreath, const ClassifyConfig& cfg) {
  if (cfg.engine && engine_applies(*cfg.engine, k, m, wreath, cfg.budget)) return *cfg.engine;
  if (k == 2) return wreath <= cfg.budget ? PartEngine::Descent : PartEngine::Layered;
  if (k <= 4) return PartEngine::Layered;
  if (m == 2) return PartEngine::Goursat;
  if (wreath <= cfg.budget) return PartEngine::Descent;
  throw Error("no engine covers block size " + std::to_string(k) + " with " + std::to_string(m) + " blocks");
}

CatalogueLookup multi_lookup(CatalogueSet& cats) {
  return [&cats](const PermGroup& g) { return cats.index(g.degree()).index_of(g); };
}

}  // namespace

std::vector<PartSpec> plan_parts(int n, CatalogueSet& cats) {
  std::vector<PartSpec> parts{{"primitive", PartEngine::Seeds, 0, 0}};
  for (int k = 2; k < n; ++k) {
    if (n % k != 0) continue;
    const int m = n / k;
    const Catalogue& tops = cats.catalogue(m);
    for (const auto& e : tops.entries) {
      const PartEngine eng = route(k, m, wreath_order(k, m, e.order), cats.config());
      if (eng == PartEngine::Goursat) {
        parts.push_back({"two-block:" + std::to_string(k), eng, k, 0});
        break;
      }
      parts.push_back({std::to_string(k) + "," + std::to_string(e.index), eng, k, e.index});
    }
  }
  return parts;
}

std::vector<PermGroup> run_part(int n, const PartSpec& part, CatalogueSet& cats) {
  std::vector<PermGroup> raw;
  if (part.engine == PartEngine::Seeds) {
    for (const auto& s : cats.primitive_seeds(n)) {
      BuildOptions opts;
      opts.known_order = s.order;
      raw.emplace_back(n, s.generators, opts);
    }
    return raw;
  }
  const int k = part.k;
  const int m = n / k;
  const int top_index = part.engine == PartEngine::Goursat ? 1 : part.top_index;
  switch (part.engine) {
    case PartEngine::Descent:
      raw = descend_part(k, cats.index(m).group(top_index), cats.config().budget);
      break;
    case PartEngine::Layered: {
      PartContext ctx;
      ctx.lookup = multi_lookup(cats);
      ctx.top_index = top_index;
      raw = extend_blocks(k, cats.index(m).group(top_index), ctx);
      break;
    }
    case PartEngine::Goursat:
      raw = goursat_two_blocks(k, cats.catalogue(k));
      break;
    case PartEngine::Seeds:
      break;
  }
  const auto lookup = multi_lookup(cats);
  const Signature want{k, top_index};
  std::vector<PermGroup> out;
  ConjugacyClassifier classes;
  for (auto& g : raw) {
    if (!g.is_transitive() || is_primitive(g)) continue;
    if (signature(g, lookup) != want) continue;
    if (classes.add(g).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<CatalogueEntry> part_entries(int n, const std::vector<PermGroup>& groups, CatalogueSet& cats) {
  const auto lookup = multi_lookup(cats);
  MinimalTransitiveOptions mopts;
  mopts.seed = cats.config().seed;
  mopts.random_tries = 256;
  std::vector<CatalogueEntry> out;
  for (const auto& g : groups) {
    CatalogueEntry e;
    e.degree = n;
    e.order = g.order();
    e.primitive = is_primitive(g);
    e.minimal = is_minimal_transitive(g, mopts);
    if (!e.primitive) e.signature = signature(g, lookup);
    e.generators = small_generating_set(g, cats.config().seed);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

std::string part_header(int n, std::uint64_t seed, const std::string& id) {
  std::ostringstream os;
  write_part(os, n, seed, id, {});
  return os.str();
}

PartManifest load_manifest(int n, CatalogueSet& cats) {
  const auto& cfg = cats.config();
  PartManifest manifest{n, cfg.seed, {}};
  if (!cfg.work_dir.empty() && std::filesystem::exists(cats.manifest_path(n))) {
    manifest = read_manifest(cats.manifest_path(n));
    if (manifest.seed != cfg.seed) manifest = PartManifest{n, cfg.seed, {}};
  }
  return manifest;
}

PartRecord& record_for(PartManifest& manifest, const std::string& id) {
  if (PartRecord* rec = manifest.find(id)) return *rec;
  PartRecord fresh;
  fresh.id = id;
  manifest.parts.push_back(std::move(fresh));
  return manifest.parts.back();
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::vector<CatalogueEntry> run_part_file(int n, const PartSpec& part, CatalogueSet& cats) {
  const auto& cfg = cats.config();
  if (cfg.work_dir.empty()) throw Error("part files need a work directory");
  auto entries = part_entries(n, run_part(n, part, cats), cats);
  const auto path = cats.part_path(n, part.id);
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  write_part(out, n, cfg.seed, part.id, entries);
  if (!out) throw Error("cannot write " + path.string());
  return entries;
}

bool record_part(int n, const PartSpec& part, CatalogueSet& cats, const std::string& failure) {
  PartManifest manifest = load_manifest(n, cats);
  PartRecord& rec = record_for(manifest, part.id);
  rec.engine = to_string(part.engine);
  const auto path = cats.part_path(n, part.id);
  bool ok = failure.empty() && std::filesystem::exists(path);
  if (ok) {
    const std::string want = part_header(n, cats.config().seed, part.id);
    std::ifstream in(path, std::ios::binary);
    std::string head(want.size(), '\0');
    in.read(head.data(), static_cast<std::streamsize>(head.size()));
    ok = in.gcount() == static_cast<std::streamsize>(want.size()) && head == want;
  }
  if (ok) {
    rec.status = "done";
    rec.groups = read_part(path).size();
    rec.digest = file_digest(path);
    rec.message.clear();
  } else {
    rec.status = "failed";
    rec.digest.clear();
    rec.message = one_line(failure.empty() ? "part file missing or stale" : failure);
  }
  save_manifest(cats.manifest_path(n), manifest);
  return ok;
}

namespace {

std::vector<CatalogueEntry> load_or_run_part(int n, const PartSpec& part, CatalogueSet& cats, PartManifest& manifest) {
  const auto& cfg = cats.config();
  if (cfg.work_dir.empty()) return part_entries(n, run_part(n, part, cats), cats);
  PartRecord* rec = &record_for(manifest, part.id);
  const auto path = cats.part_path(n, part.id);
  if (rec->status == "done" && std::filesystem::exists(path) && file_digest(path) == rec->digest &&
      rec->engine == to_string(part.engine)) {
    return read_part(path);
  }
  rec->engine = to_string(part.engine);
  try {
    auto entries = part_entries(n, run_part(n, part, cats), cats);
    std::filesystem::create_directories(path.parent_path());
    {
      std::ofstream out(path, std::ios::binary);
      write_part(out, n, cfg.seed, part.id, entries);
    }
    rec->status = "done";
    rec->groups = entries.size();
    rec->digest = file_digest(path);
    rec->message.clear();
    save_manifest(cats.manifest_path(n), manifest);
    return entries;
  } catch (const std::exception& e) {
    rec->status = "failed";
    rec->message = one_line(e.what());
    save_manifest(cats.manifest_path(n), manifest);
    throw;
  }
}

std::string fingerprint(std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  std::string bytes;
  for (const auto& x : elements) {
    for (int i = 0; i < x.degree(); ++i) bytes.push_back(static_cast<char>(x[i]));
  }
  return text_digest(bytes) + text_digest(std::to_string(bytes.size()) + bytes);
}

}  // namespace

std::string canonical_tiebreak(const PermGroup& g) {
  constexpr std::uint64_t kWork = 4'000'000;
  const int n = g.degree();
  if (g.order() > kWork) return "";
  // Labeling-independent digraph: arcs colored by the rank of the orbital
  // color.
  const auto os = orbital_structure(g);
  const auto colors = orbital_colors(os);
  std::vector<std::uint64_t> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto rank = [&](int o) {
    return static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors[static_cast<std::size_t>(o)]) -
                            distinct.begin());
  };
  ColoredDigraph d(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) {
        d.vertex_color[static_cast<std::size_t>(a)] = rank(os.at(a, a));
      } else {
        d.set_arc(a, b, static_cast<std::uint16_t>(rank(os.at(a, b)) + 1));
      }
    }
  }
  const auto cl = canonical_labeling(d);
  const Permutation r = Permutation::from_images(cl.position);
  std::vector<Permutation> auts;
  for (const auto& a : cl.automorphisms) auts.push_back(a.conjugate(r));
  const PermGroup aut(n, auts);
  if (aut.order() > kWork / g.order()) return "";
  std::vector<Permutation> elems;
  g.for_each_element([&](const Permutation& x) { elems.push_back(x.conjugate(r)); });
  std::string best;
  aut.for_each_element([&](const Permutation& c) {
    std::vector<Permutation> conj;
    conj.reserve(elems.size());
    for (const auto& x : elems) conj.push_back(x.conjugate(c));
    std::string f = fingerprint(std::move(conj));
    if (best.empty() || f < best) best = std::move(f);
  });
  return best;
}

Catalogue classify_degree(int n, CatalogueSet& cats) {
  const auto& cfg = cats.config();
  PartManifest manifest = load_manifest(n, cats);
  const auto parts = plan_parts(n, cats);
  std::vector<CatalogueEntry> merged;
  for (const auto& part : parts) {
    auto entries = load_or_run_part(n, part, cats, manifest);
    for (auto& e : entries) merged.push_back(std::move(e));
  }
  if (!cfg.work_dir.empty()) save_manifest(cats.manifest_path(n), manifest);

  struct Item {
    CatalogueEntry entry;
    std::string key;
    std::string tiebreak;
  };
  std::vector<Item> items;
  ConjugacyClassifier classes;
  for (auto& e : merged) {
    const PermGroup g = e.group();
    if (!classes.add(g).second) continue;
    items.push_back({std::move(e), classes.keys().back().serialize(), {}});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.entry.order != b.entry.order) return a.entry.order < b.entry.order;
    return a.key < b.key;
  });
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i + 1;
    while (j < items.size() && items[j].entry.order == items[i].entry.order && items[j].key == items[i].key) ++j;
    if (j - i > 1) {
      for (std::size_t t = i; t < j; ++t) items[t].tiebreak = canonical_tiebreak(items[t].entry.group());
      std::stable_sort(items.begin() + static_cast<std::ptrdiff_t>(i), items.begin() + static_cast<std::ptrdiff_t>(j),
                       [](const Item& a, const Item& b) { return a.tiebreak < b.tiebreak; });
    }
    i = j;
  }
  Catalogue cat{n, cfg.seed, {}};
  for (auto& it : items) {
    it.entry.index = static_cast<int>(cat.entries.size()) + 1;
    cat.entries.push_back(std::move(it.entry));
  }
  return cat;
}

std::vector<TableCheck> verify_tables(int from, int to, const ReferenceTables& ref, CatalogueSet& cats) {
  std::vector<TableCheck> out;
  for (int n = from; n <= to; ++n) {
    const Catalogue& cat = cats.catalogue(n);
    if (ref.has("g", n)) out.push_back({n, "g", ref.at("g", n), cat.size()});
    if (ref.has("m", n)) out.push_back({n, "m", ref.at("m", n), cat.minimal_count()});
  }
  return out;
}

}  // namespace transcat
