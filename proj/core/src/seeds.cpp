#include "transcat/seeds.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"
#include "text_io.hpp"

#ifndef TRANSCAT_DEFAULT_DATA_DIR
#define TRANSCAT_DEFAULT_DATA_DIR "data"
#endif

namespace transcat {

using detail::for_each_record;
using detail::slurp;

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("TRANSCAT_DATA_DIR"); env && *env) return env;
  return TRANSCAT_DEFAULT_DATA_DIR;
}

std::string text_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string file_digest(const std::filesystem::path& path) { return text_digest(slurp(path)); }

void verify_checksums(const std::filesystem::path& dir) {
  std::istringstream in(slurp(dir / "CHECKSUMS"));
  std::string digest, name;
  while (in >> digest >> name) {
    const auto actual = file_digest(dir / name);
    if (actual != digest) throw Error("checksum mismatch for " + name + ": expected " + digest + ", got " + actual);
  }
}

std::uint64_t primitive_count(int degree) {
  static const std::uint64_t counts[] = {0, 0, 1, 2, 2, 5, 4, 7, 7, 11, 9, 8, 6, 9, 4, 6, 22};
  if (degree < 1 || degree > 16) throw Error("no primitive group count for degree " + std::to_string(degree));
  return counts[degree];
}

std::vector<PrimitiveSeed> read_primitive_seeds(const std::filesystem::path& path) {
  std::vector<PrimitiveSeed> out;
  for_each_record(path, 4, [&](const std::vector<std::string>& f) {
    PrimitiveSeed s;
    s.degree = std::stoi(f[0]);
    s.order = std::stoull(f[1]);
    s.name = f[2];
    s.generators = parse_generators(f[3], s.degree);
    out.push_back(std::move(s));
  });
  return out;
}

void write_primitive_seeds(std::ostream& out, const std::vector<PrimitiveSeed>& seeds) {
  out << "# degree\torder\tname\tgenerators (0-based image lists)\n";
  for (const auto& s : seeds) {
    out << s.degree << '\t' << s.order << '\t' << s.name << '\t' << format_generators(s.generators) << '\n';
  }
}

void validate_primitive_seeds(const std::vector<PrimitiveSeed>& seeds, int degree) {
  ConjugacyClassifier classes;
  std::uint64_t count = 0;
  for (const auto& s : seeds) {
    if (s.degree != degree) continue;
    ++count;
    BuildOptions opts;
    opts.known_order = s.order;
    const PermGroup g(degree, s.generators, opts);
    const std::string what = "primitive seed " + s.name + " of degree " + std::to_string(degree);
    if (g.order() != s.order) throw Error(what + " has order " + std::to_string(g.order()));
    if (!g.is_transitive() || !is_primitive(g)) throw Error(what + " is not primitive");
    if (!classes.add(g).second) throw Error(what + " duplicates an earlier seed");
  }
  if (count != primitive_count(degree)) {
    throw Error("degree " + std::to_string(degree) + " has " + std::to_string(count) + " primitive seeds, expected " +
                std::to_string(primitive_count(degree)));
  }
}

int small_group_count(int order) {
  static const int counts[] = {0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14,
                               1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1};
  if (order < 1 || order > 31) throw Error("no group count for order " + std::to_string(order));
  return counts[order];
}

std::vector<SmallGroupSeed> read_small_groups(const std::filesystem::path& path) {
  std::vector<SmallGroupSeed> out;
  for_each_record(path, 4, [&](const std::vector<std::string>& f) {
    SmallGroupSeed s;
    s.order = std::stoi(f[0]);
    s.index = std::stoi(f[1]);
    s.name = f[2];
    if (s.order > 1) s.generators = parse_generators(f[3], s.order);
    out.push_back(std::move(s));
  });
  return out;
}

void write_small_groups(std::ostream& out, const std::vector<SmallGroupSeed>& seeds) {
  out << "# order\tindex\tname\tgenerators of the regular representation\n";
  for (const auto& s : seeds) {
    out << s.order << '\t' << s.index << '\t' << s.name << '\t' << format_generators(s.generators) << '\n';
  }
}

void validate_small_groups(const std::vector<SmallGroupSeed>& seeds) {
  std::map<int, ConjugacyClassifier> by_order;
  std::map<int, std::vector<int>> indices;
  for (const auto& s : seeds) {
    const std::string what = "small group (" + std::to_string(s.order) + "," + std::to_string(s.index) + ")";
    const PermGroup g = s.order == 1 ? PermGroup::trivial(1) : PermGroup(s.order, s.generators);
    if (g.order() != static_cast<std::uint64_t>(s.order) || !g.is_transitive()) {
      throw Error(what + " is not a regular representation");
    }
    // Regular representations are conjugate in Sym(n) iff the groups are isomorphic.
    if (!by_order[s.order].add(g).second) throw Error(what + " is isomorphic to an earlier entry");
    indices[s.order].push_back(s.index);
  }
  for (const auto& [order, idx] : indices) {
    const int expected = small_group_count(order);
    if (static_cast<int>(idx.size()) != expected) {
      throw Error("order " + std::to_string(order) + " has " + std::to_string(idx.size()) + " groups, expected " +
                  std::to_string(expected));
    }
    for (int i = 0; i < expected; ++i) {
      if (idx[static_cast<std::size_t>(i)] != i + 1) throw Error("order " + std::to_string(order) + " indices out of sequence");
    }
  }
}

std::uint64_t ReferenceTables::at(const std::string& table, int n) const {
  const auto t = rows.find(table);
  if (t == rows.end() || !t->second.count(n)) throw Error("no reference value " + table + "(" + std::to_string(n) + ")");
  return t->second.at(n);
}

bool ReferenceTables::has(const std::string& table, int n) const {
  const auto t = rows.find(table);
  return t != rows.end() && t->second.count(n);
}

ReferenceTables read_reference_tables(const std::filesystem::path& path) {
  ReferenceTables t;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    int n = 0;
    std::uint64_t v = 0;
    if (!(ls >> name >> n >> v)) throw Error("bad reference table line: " + line);
    t.rows[name][n] = v;
  }
  return t;
}

}  // namespace transcat
