#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "transcat/catalogue.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

inline constexpr int kMaxOrbitals = 30;

/// A non-diagonal orbital of a transitive group.
struct Orbital {
  int index = 0;
  std::pair<int, int> rep;
  std::vector<std::uint8_t> arcs;  // n*n, row-major
  int paired_with = 0;
  bool self_paired() const { return paired_with == index; }
};

/// Non-diagonal orbitals, numbered by least arc.
std::vector<Orbital> orbitals(const PermGroup& g);

enum class CayleyFlag { Unknown, Yes, No };

/// A loopless digraph on n vertices as an n*n 0/1 arc matrix.
struct Digraph {
  int n = 0;
  std::vector<std::uint8_t> arcs;
  std::vector<std::uint8_t> canonical;
  CayleyFlag cayley = CayleyFlag::Unknown;

  bool arc(int a, int b) const { return arcs[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] != 0; }
  bool is_symmetric() const;
  int arc_count() const;
};

/// Arc matrix of the canonical relabeling: equal for two digraphs iff they
/// are isomorphic.
std::vector<std::uint8_t> canonical_form(int n, const std::vector<std::uint8_t>& arcs);
Digraph make_digraph(int n, std::vector<std::uint8_t> arcs);

std::string to_graph6(const Digraph& g);
std::string to_digraph6(const Digraph& g);
Digraph from_graph6(std::string_view s);
Digraph from_digraph6(std::string_view s);

/// One digraph per union of orbitals, isomorph-reduced.  Undirected mode
/// takes paired orbitals together.  Regular groups tag their outputs as
/// Cayley.  Throws Error above kMaxOrbitals orbitals.
std::vector<Digraph> invariant_graphs(const PermGroup& g, bool directed = false);

struct GraphCensus {
  int n = 0;
  std::uint64_t total = 0;   // t(n)
  std::uint64_t cayley = 0;  // c(n)
  std::vector<Digraph> graphs;
  /// `n t c` followed by one graph6 (or digraph6) line per graph.
  std::string report(bool directed = false) const;
};

/// Vertex-transitive graphs of order n from the minimal transitive groups of
/// the catalogue; graphs from regular groups are the Cayley graphs.  Sorted
/// by arc count, then canonical form.
GraphCensus transitive_graph_census(const Catalogue& cat, bool directed = false);

/// 2^(a + b/2) / |Aut(G)| for a regular G with a involutions and b other
/// non-identity elements.  Needs |G| <= 100.
boost::multiprecision::cpp_rational cayley_count_estimate(const PermGroup& regular);

}  // namespace transcat
