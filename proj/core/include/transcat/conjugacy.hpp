#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

/// Cycle-type counts are only collected up to this group order.
inline constexpr std::uint64_t kCycleTypeOrderLimit = 500'000;

/// Conjugation-invariant fingerprint of a permutation group.  Equal keys are
/// necessary for conjugacy in Sym(n).
struct InvariantKey {
  std::uint64_t order = 0;
  bool has_cycle_types = false;
  /// (cycle type, number of elements), sorted.
  std::vector<std::pair<std::vector<int>, std::uint64_t>> cycle_types;
  /// Per orbital: (size, self-paired, color), sorted.
  std::vector<std::tuple<int, bool, std::uint64_t>> orbitals;
  /// Block sizes of the minimal block systems, sorted (empty if primitive
  /// or intransitive).
  std::vector<int> minimal_blocks;
  int block_systems = 0;
  /// Orders of G, G', G'', ... down to the first repeat.
  std::vector<std::uint64_t> derived_series;

  std::string serialize() const;
  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey invariant_key(const PermGroup& g);

/// A permutation c with g1^c = g2, if any.  With an ambient group the
/// conjugator is sought inside it.  Complete: never misses a conjugator.
std::optional<Permutation> are_conjugate(const PermGroup& g1, const PermGroup& g2,
                                         const PermGroup* ambient = nullptr);

/// Same, skipping the invariant-key filter (for callers that already
/// compared keys).
std::optional<Permutation> conjugating_element(const PermGroup& g1, const PermGroup& g2,
                                               const PermGroup* ambient = nullptr);

/// Incremental dedup of groups up to conjugacy (optionally inside an
/// ambient group).
class ConjugacyClassifier {
 public:
  explicit ConjugacyClassifier(const PermGroup* ambient = nullptr) : ambient_(ambient) {}

  /// Index of the class of g; adds a new class when g matches none.
  std::pair<int, bool> add(const PermGroup& g);
  /// Index of the class of g, or -1.
  int find(const PermGroup& g) const;
  int find(const PermGroup& g, const InvariantKey& key) const;

  const std::vector<PermGroup>& representatives() const { return reps_; }
  const std::vector<InvariantKey>& keys() const { return keys_; }
  std::size_t size() const { return reps_.size(); }

 private:
  const PermGroup* ambient_;
  std::vector<PermGroup> reps_;
  std::vector<InvariantKey> keys_;
  std::unordered_multimap<std::string, int> bucket_;
};

}  // namespace transcat
