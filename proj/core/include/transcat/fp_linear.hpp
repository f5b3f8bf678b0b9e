#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

using Vec = std::vector<std::uint8_t>;
/// Row-major; vectors act on the left: v -> v * M.
using Matrix = std::vector<Vec>;

bool is_prime(int p);

Vec vec_add(const Vec& a, const Vec& b, int p);
Vec vec_scale(const Vec& a, int s, int p);
Vec vec_mat(const Vec& v, const Matrix& m, int p);
Matrix mat_mul(const Matrix& a, const Matrix& b, int p);
Matrix identity_matrix(int d);
int inverse_mod(int a, int p);

/// Subspace of F_p^d held as a reduced row echelon basis.
struct Subspace {
  int p = 2;
  int d = 0;
  Matrix basis;
  std::vector<int> pivots;

  static Subspace zero(int p, int d) { return Subspace{p, d, {}, {}}; }
  static Subspace full(int p, int d);
  static Subspace span(int p, int d, const Matrix& vectors);

  int dim() const { return static_cast<int>(basis.size()); }
  /// Reduces v against the basis; zero iff v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; false if it was already inside.
  bool insert(Vec v);
  bool is_subspace_of(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  bool invariant_under(const Matrix& m) const;
  std::string key() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
};

/// A module over F_p given by one matrix per group generator.
struct Module {
  int p = 2;
  int d = 0;
  std::vector<Matrix> action;

  /// Smallest submodule containing v.
  Subspace spin(const Vec& v) const;
  Subspace spin(const Subspace& s) const;
};

inline constexpr int kMaxModuleDimension = 16;

/// Every invariant subspace, including 0 and the full space, sorted by
/// dimension then basis.  Throws Error above kMaxModuleDimension.
std::vector<Subspace> submodules(const Module& m);

/// Maximal proper submodules.
std::vector<Subspace> maximal_submodules(const Module& m);

/// The permutation module of a group of degree m over F_p.
Module permutation_module(const PermGroup& g, int p);

/// An elementary abelian p-group of permutations with coordinates.
class ElementaryAbelian {
 public:
  ElementaryAbelian() = default;
  /// Throws Error unless the generators commute and have order p.
  ElementaryAbelian(int degree, const std::vector<Permutation>& gens, int p);
  /// Uses the given basis (assumed independent).
  static ElementaryAbelian with_basis(int degree, const std::vector<Permutation>& basis, int p);

  int p() const { return p_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int degree() const { return degree_; }
  const std::vector<Permutation>& basis() const { return basis_; }
  Vec coords(const Permutation& x) const;
  bool contains(const Permutation& x) const { return table_.count(x) != 0; }
  Permutation element(const Vec& v) const;
  /// Matrix of x -> c^-1 x c in these coordinates.
  Matrix conjugation_matrix(const Permutation& c) const;
  Module module(const std::vector<Permutation>& gens) const;

 private:
  void build_table();

  int p_ = 2;
  int degree_ = 0;
  std::vector<Permutation> basis_;
  std::unordered_map<Permutation, Vec, PermutationHash> table_;
};

}  // namespace transcat
