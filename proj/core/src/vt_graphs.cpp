#include "transcat/vt_graphs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "transcat/abstract_group.hpp"
#include "transcat/canonical.hpp"
#include "transcat/orbitals.hpp"

namespace transcat {

namespace {

std::size_t at(int n, int a, int b) { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b); }

void put_size(std::string& out, int n) {
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw Error("graph6 supports fewer than 258048 vertices");
  }
}

int get_size(std::string_view& s) {
  if (s.empty()) throw Error("empty graph6 string");
  if (s[0] != '~') {
    const int n = s[0] - 63;
    s.remove_prefix(1);
    return n;
  }
  if (s.size() < 4 || s[1] == '~') throw Error("unsupported graph6 size field");
  int n = 0;
  for (int i = 1; i <= 3; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
  s.remove_prefix(4);
  return n;
}

void put_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t j = 0; j < 6; ++j) v = (v << 1) | ((i + j < bits.size() && bits[i + j]) ? 1 : 0);
    out.push_back(static_cast<char>(63 + v));
  }
}

std::vector<bool> get_bits(std::string_view s, std::size_t count) {
  if (s.size() != (count + 5) / 6) throw Error("graph6 body has the wrong length");
  std::vector<bool> bits;
  bits.reserve(s.size() * 6);
  for (char c : s) {
    const int v = c - 63;
    if (v < 0 || v > 63) throw Error("invalid graph6 character");
    for (int j = 5; j >= 0; --j) bits.push_back(((v >> j) & 1) != 0);
  }
  bits.resize(count);
  return bits;
}

}  // namespace

std::vector<Orbital> orbitals(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("orbitals need a transitive group");
  const OrbitalStructure os = orbital_structure(g);
  const int n = g.degree();
  std::vector<int> renum(static_cast<std::size_t>(os.count()), -1);
  std::vector<Orbital> out;
  for (int o = 0; o < os.count(); ++o) {
    if (os.diagonal[static_cast<std::size_t>(o)]) continue;
    renum[static_cast<std::size_t>(o)] = static_cast<int>(out.size());
    Orbital orb;
    orb.index = static_cast<int>(out.size());
    orb.rep = os.rep[static_cast<std::size_t>(o)];
    orb.arcs.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    out.push_back(std::move(orb));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int o = renum[static_cast<std::size_t>(os.at(a, b))];
      if (o >= 0) out[static_cast<std::size_t>(o)].arcs[at(n, a, b)] = 1;
    }
  }
  for (int o = 0; o < os.count(); ++o) {
    const int r = renum[static_cast<std::size_t>(o)];
    if (r >= 0) out[static_cast<std::size_t>(r)].paired_with = renum[static_cast<std::size_t>(os.paired[static_cast<std::size_t>(o)])];
  }
  return out;
}

bool Digraph::is_symmetric() const {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (arc(a, b) != arc(b, a)) return false;
    }
  }
  return true;
}

int Digraph::arc_count() const {
  return static_cast<int>(std::count(arcs.begin(), arcs.end(), std::uint8_t{1}));
}

std::vector<std::uint8_t> canonical_form(int n, const std::vector<std::uint8_t>& arcs) {
  ColoredDigraph d(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) d.set_arc(a, b, arcs[at(n, a, b)]);
  }
  const auto lab = canonical_labeling(d);
  std::vector<std::uint8_t> out(arcs.size(), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out[at(n, lab.position[static_cast<std::size_t>(a)], lab.position[static_cast<std::size_t>(b)])] = arcs[at(n, a, b)];
    }
  }
  return out;
}

Digraph make_digraph(int n, std::vector<std::uint8_t> arcs) {
  if (arcs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw Error("arc matrix has the wrong size");
  for (int a = 0; a < n; ++a) {
    if (arcs[at(n, a, a)] != 0) throw Error("digraphs are loopless");
  }
  Digraph g;
  g.n = n;
  g.canonical = canonical_form(n, arcs);
  g.arcs = std::move(arcs);
  return g;
}

std::string to_graph6(const Digraph& g) {
  if (!g.is_symmetric()) throw Error("graph6 needs an undirected graph");
  std::string out;
  put_size(out, g.n);
  std::vector<bool> bits;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.arc(i, j));
  }
  put_bits(out, bits);
  return out;
}

std::string to_digraph6(const Digraph& g) {
  std::string out = "&";
  put_size(out, g.n);
  std::vector<bool> bits;
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) bits.push_back(g.arc(i, j));
  }
  put_bits(out, bits);
  return out;
}

Digraph from_graph6(std::string_view s) {
  if (!s.empty() && s.front() == '>') throw Error("graph6 headers are not supported");
  const int n = get_size(s);
  const auto bits = get_bits(s, static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2);
  std::vector<std::uint8_t> arcs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits[k]) arcs[at(n, i, j)] = arcs[at(n, j, i)] = 1;
    }
  }
  return make_digraph(n, std::move(arcs));
}

Digraph from_digraph6(std::string_view s) {
  if (s.empty() || s.front() != '&') throw Error("digraph6 strings start with '&'");
  s.remove_prefix(1);
  const int n = get_size(s);
  const auto bits = get_bits(s, static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::uint8_t> arcs(bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) arcs[k] = bits[k] ? 1 : 0;
  return make_digraph(n, std::move(arcs));
}

std::vector<Digraph> invariant_graphs(const PermGroup& g, bool directed) {
  const auto orbs = orbitals(g);
  if (static_cast<int>(orbs.size()) > kMaxOrbitals) throw Error("too many orbitals for subset enumeration");
  const int n = g.degree();
  std::vector<std::vector<int>> units;
  for (const auto& o : orbs) {
    if (directed || o.self_paired()) {
      units.push_back({o.index});
    } else if (o.index < o.paired_with) {
      units.push_back({o.index, o.paired_with});
    }
  }
  const bool regular = g.order() == static_cast<std::uint64_t>(n);
  std::map<std::vector<std::uint8_t>, Digraph> found;
  const std::uint64_t subsets = std::uint64_t{1} << units.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::uint8_t> arcs(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (((mask >> u) & 1) == 0) continue;
      for (int o : units[u]) {
        const auto& oa = orbs[static_cast<std::size_t>(o)].arcs;
        for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] |= oa[i];
      }
    }
    Digraph d = make_digraph(n, std::move(arcs));
    if (regular) d.cayley = CayleyFlag::Yes;
    auto key = d.canonical;
    found.emplace(std::move(key), std::move(d));
  }
  std::vector<Digraph> out;
  for (auto& [key, d] : found) out.push_back(std::move(d));
  std::stable_sort(out.begin(), out.end(), [](const Digraph& a, const Digraph& b) { return a.arc_count() < b.arc_count(); });
  return out;
}

std::string GraphCensus::report(bool directed) const {
  std::ostringstream out;
  out << n << ' ' << total << ' ' << cayley << '\n';
  for (const auto& g : graphs) out << (directed ? to_digraph6(g) : to_graph6(g)) << '\n';
  return out.str();
}

GraphCensus transitive_graph_census(const Catalogue& cat, bool directed) {
  GraphCensus census;
  census.n = cat.degree;
  std::map<std::vector<std::uint8_t>, Digraph> found;
  for (const auto& e : cat.entries) {
    if (!e.minimal) continue;
    for (auto& d : invariant_graphs(e.group(), directed)) {
      auto [it, fresh] = found.try_emplace(d.canonical, d);
      if (!fresh && d.cayley == CayleyFlag::Yes) it->second.cayley = CayleyFlag::Yes;
    }
  }
  for (auto& [key, d] : found) {
    if (d.cayley != CayleyFlag::Yes) d.cayley = CayleyFlag::No;
    census.graphs.push_back(std::move(d));
  }
  std::stable_sort(census.graphs.begin(), census.graphs.end(),
                   [](const Digraph& a, const Digraph& b) { return a.arc_count() < b.arc_count(); });
  census.total = census.graphs.size();
  census.cayley = static_cast<std::uint64_t>(std::count_if(census.graphs.begin(), census.graphs.end(),
                                                           [](const Digraph& d) { return d.cayley == CayleyFlag::Yes; }));
  return census;
}

boost::multiprecision::cpp_rational cayley_count_estimate(const PermGroup& regular) {
  if (regular.degree() > 100) throw Error("automorphism search is limited to groups of order 100");
  const AbstractGroup g(regular);
  unsigned involutions = 0;
  unsigned others = 0;
  for (int x = 1; x < g.order(); ++x) (g.element_order(x) == 2 ? involutions : others) += 1;
  const auto auts = g.automorphisms();
  boost::multiprecision::cpp_int num = 1;
  num <<= involutions + others / 2;
  return boost::multiprecision::cpp_rational(num, static_cast<unsigned long long>(auts.size()));
}

}  // namespace transcat
