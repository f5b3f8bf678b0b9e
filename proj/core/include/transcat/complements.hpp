#pragma once

#include <vector>

#include "transcat/fp_linear.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

/// G given by generators, an elementary abelian normal subgroup N with
/// coordinates, and a G-invariant subspace U of N.
struct ComplementProblem {
  std::vector<Permutation> gens;
  PermGroup normal;
  ElementaryAbelian layer;
  Subspace lower;
};

struct ComplementClasses {
  bool split = false;
  int z1_dim = 0;
  int b1_dim = 0;
  std::uint64_t quotient_order = 0;
  /// One subgroup C with C / U a complement of N / U in G / U per
  /// N-conjugacy class (equivalently G-class).
  std::vector<PermGroup> complements;
};

/// Solves the cocycle equations over a breadth-first walk of G / N.
/// Throws BudgetExceeded when p^dim H^1 exceeds `limit`.
ComplementClasses complement_classes(const ComplementProblem& problem, std::uint64_t limit = 1u << 16);

}  // namespace transcat
