#pragma once

#include <cstdint>
#include <vector>

#include "transcat/canonical.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

/// Orbits of a group on ordered pairs.  Orbitals are numbered by their
/// least arc in lexicographic order, so the diagonal of a transitive group
/// is orbital 0.
struct OrbitalStructure {
  int n = 0;
  std::vector<int> index;  // n*n entries
  std::vector<std::pair<int, int>> rep;
  std::vector<int> size;
  std::vector<int> paired;
  std::vector<bool> diagonal;

  int count() const { return static_cast<int>(rep.size()); }
  int at(int a, int b) const {
    return index[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)];
  }
  bool self_paired(int o) const { return paired[static_cast<std::size_t>(o)] == o; }
};

OrbitalStructure orbital_structure(const PermGroup& g);

/// Labeling-independent color per orbital, refined by structure constants
/// (counts of two-step paths) until stable.  Values are comparable across
/// different groups.
std::vector<std::uint64_t> orbital_colors(const OrbitalStructure& os);

/// Complete digraph whose arc colors are the orbital numbers (+1); loops
/// carry the diagonal orbital colors.  Its automorphism group is the
/// 2-closure.
ColoredDigraph orbital_digraph(const OrbitalStructure& os);

}  // namespace transcat
