#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "transcat/catalogue.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

struct DerangementOptions {
  /// Stage 1: Sylow subgroups grown from random p-elements, then random
  /// prime-order powers.  Off forces the exhaustive stage.
  bool random_stage = true;
  int sylow_tries = 400;
  int random_tries = 200;
  std::uint64_t seed = kDefaultSeed;
  /// Largest group the exhaustive stage will scan.
  std::uint64_t budget = kElementBudget;
};

/// Prime factors of n in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// A Sylow p-subgroup, grown from p-parts of random elements and verified
/// by order; nullopt when `tries` samples do not reach the full p-part.
std::optional<PermGroup> random_sylow_subgroup(const PermGroup& g, std::uint64_t p, int tries, std::mt19937_64& rng);

/// An element of prime order with no fixed point, or nullopt when none
/// exists.  Throws BudgetExceeded when the exhaustive stage is needed for a
/// group above the budget.
std::optional<Permutation> prime_order_derangement(const PermGroup& g, const DerangementOptions& opts = {});

/// Automorphism group of the orbital coloring of ordered pairs.
PermGroup two_closure(const PermGroup& g);

struct ElusiveReport {
  int degree = 0;
  int index = 0;
  bool elusive = false;
  std::optional<Permutation> witness;
  bool two_closed = false;

  /// `degree<TAB>index<TAB>ELUSIVE|witness<TAB>2CLOSED|NOT2CLOSED`, the
  /// witness in cycle notation.
  std::string to_line() const;
};

ElusiveReport elusive_report(int degree, int index, const PermGroup& g, const DerangementOptions& opts = {});
std::vector<ElusiveReport> elusive_census(const Catalogue& cat, const DerangementOptions& opts = {});

}  // namespace transcat
