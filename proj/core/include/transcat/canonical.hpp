#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

/// Digraph with colored vertices and colored arcs (arc color 0 = no arc).
struct ColoredDigraph {
  int n = 0;
  std::vector<int> vertex_color;
  std::vector<std::uint16_t> arcs;

  ColoredDigraph() = default;
  explicit ColoredDigraph(int vertices)
      : n(vertices),
        vertex_color(static_cast<std::size_t>(vertices), 0),
        arcs(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(vertices), 0) {}

  std::uint16_t arc(int a, int b) const {
    return arcs[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
  }
  void set_arc(int a, int b, std::uint16_t c) {
    arcs[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = c;
  }
  /// The same structure relabeled by v -> p(v).
  ColoredDigraph relabeled(const std::vector<int>& p) const;
  bool is_automorphism(const Permutation& p) const;
};

struct CanonicalLabeling {
  /// position[v] is the canonical position of vertex v.
  std::vector<int> position;
  /// Isomorphism certificate: equal for two structures iff they are
  /// isomorphic (color-preserving).
  std::vector<std::uint16_t> form;
  /// Generators of the automorphism group.
  std::vector<Permutation> automorphisms;
  std::uint64_t nodes = 0;
};

CanonicalLabeling canonical_labeling(const ColoredDigraph& g);

/// A color-preserving isomorphism a -> b as a vertex map, if one exists.
std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b);

PermGroup automorphism_group(const ColoredDigraph& g);

}  // namespace transcat
