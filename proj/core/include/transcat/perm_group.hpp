#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "transcat/permutation.hpp"

namespace transcat {

/// Default seed for every randomized routine; results never depend on it.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Default cap on explicit element enumeration.
inline constexpr std::uint64_t kElementBudget = 10'000'000;

struct BuildOptions {
  /// Base points to place first, in order.  Points fixed by the whole group
  /// are dropped.
  std::vector<int> base_prefix;
  /// Lets the construction use the randomized Schreier-Sims fast path; the
  /// result is still exact (it falls back to the deterministic algorithm).
  std::optional<std::uint64_t> known_order;
  std::uint64_t seed = kDefaultSeed;
};

/// A permutation group with a stabilizer chain.  Immutable once built.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Permutation> gens, const BuildOptions& opts = {});

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);
  static PermGroup alternating(int degree);
  /// Regular cyclic group generated by (0 1 ... n-1).
  static PermGroup cyclic(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& g) const;
  /// Sifts g through the chain.  Returns the residue and the level at which
  /// sifting stopped (== chain_length() when every level was passed).
  std::pair<Permutation, int> sift(const Permutation& g, int from_level = 0) const;

  int chain_length() const { return static_cast<int>(levels_.size()); }
  std::vector<int> base() const;
  int base_point(int level) const { return levels_[static_cast<std::size_t>(level)].base; }
  const std::vector<int>& level_orbit(int level) const {
    return levels_[static_cast<std::size_t>(level)].orbit;
  }
  const std::vector<Permutation>& level_generators(int level) const {
    return levels_[static_cast<std::size_t>(level)].gens;
  }
  /// Element of level `level` mapping its base point to `point`, or nullptr.
  const Permutation* transversal(int level, int point) const;
  std::vector<Permutation> strong_generators() const;

  std::vector<int> orbit(int point) const;
  /// Orbits as sorted cells, ordered by their least point.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  /// The same group with a chain whose base starts with `prefix`.
  PermGroup rebased(std::span<const int> prefix) const;
  PermGroup stabilizer(int point) const;
  PermGroup pointwise_stabilizer(std::span<const int> points) const;
  PermGroup conjugated(const Permutation& c) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;
  bool normalizes(const PermGroup& sub) const;
  bool is_abelian() const;

  /// Uniformly random element (from the chain).
  Permutation random_element(std::mt19937_64& rng) const;

  template <class F>
  void for_each_element(F&& f) const;
  std::vector<Permutation> elements(std::uint64_t budget = kElementBudget) const;

  /// Least element (by image list) of the right coset {n * x : n in this}.
  /// The chain must have an ascending base (see with_lex_base()).
  Permutation lex_min_in_coset(const Permutation& x) const;
  PermGroup with_lex_base() const;
  bool has_lex_base() const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    std::vector<int> orbit;
    std::vector<Permutation> trans;
    std::vector<Permutation> inv;
    std::array<std::int16_t, kMaxDegree> pos{};
  };

  void compute_orbit(Level& lev) const;
  void schreier_sims(std::vector<int> base);
  bool random_schreier_sims(std::vector<int> base, std::uint64_t target, std::uint64_t seed);
  void finish();

  template <class F>
  void enumerate(int level, const Permutation& acc, F& f) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// One conjugacy class of elements.
struct ElementClass {
  Permutation representative;
  std::uint64_t element_order = 1;
  std::uint64_t size = 0;
};

/// One representative per conjugacy class.  Throws BudgetExceeded when |G|
/// is above `budget`.
std::vector<ElementClass> class_reps(const PermGroup& g, std::uint64_t budget = kElementBudget);

/// Normal closure of `gens` under conjugation by `g`.
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> gens);
PermGroup derived_subgroup(const PermGroup& g);
/// The subgroup generated by `a` and `b` (same degree).
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup join(const PermGroup& a, std::span<const Permutation> extra);

/// A generating tuple of g of smallest size found by seeded random search
/// (falls back to the stored generators).
std::vector<Permutation> small_generating_set(const PermGroup& g, std::uint64_t seed = kDefaultSeed);

/// Random elements by product replacement, used where a chain is not yet
/// available.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, int degree, std::uint64_t seed);
  Permutation next();

 private:
  std::vector<Permutation> slots_;
  Permutation acc_;
  std::mt19937_64 rng_;
};

template <class F>
void PermGroup::enumerate(int level, const Permutation& acc, F& f) const {
  if (level < 0) {
    f(acc);
    return;
  }
  const Level& lev = levels_[static_cast<std::size_t>(level)];
  for (const auto& t : lev.trans) enumerate(level - 1, acc * t, f);
}

template <class F>
void PermGroup::for_each_element(F&& f) const {
  enumerate(chain_length() - 1, Permutation(degree_), f);
}

}  // namespace transcat
