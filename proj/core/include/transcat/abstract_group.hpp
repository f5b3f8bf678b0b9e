#pragma once

#include <cstdint>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

inline constexpr std::uint64_t kAutomorphismBudget = 2'000'000;

/// A finite group given by a regular permutation representation.  Element i
/// is the group element mapping point 0 to i, so 0 is the identity and
/// mul(a, b) = b[a] (a first, then b).
class AbstractGroup {
 public:
  explicit AbstractGroup(const PermGroup& regular);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const { return order_of_[static_cast<std::size_t>(a)]; }
  const Permutation& element(int a) const { return elems_[static_cast<std::size_t>(a)]; }
  const PermGroup& regular() const { return regular_; }

  /// Each generator lies outside the subgroup generated by the earlier ones.
  const std::vector<int>& generators() const { return gens_; }
  /// Elements of the subgroup generated by `gens`, in discovery order.
  std::vector<int> closure(const std::vector<int>& gens) const;

  /// All automorphisms as maps on element indices.  Throws BudgetExceeded
  /// once more than `budget` have been found.
  std::vector<std::vector<int>> automorphisms(std::uint64_t budget = kAutomorphismBudget) const;

 private:
  int n_ = 0;
  PermGroup regular_;
  std::vector<Permutation> elems_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> order_of_;
  std::vector<int> gens_;
};

/// The regular action of a semiregular group on the orbit of point 0,
/// relabeled to 0..k-1.
PermGroup restrict_to_orbit_of_zero(const PermGroup& g);

}  // namespace transcat
