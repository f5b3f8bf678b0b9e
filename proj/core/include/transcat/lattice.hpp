#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

inline constexpr std::uint64_t kLatticeBudget = 200'000;

struct SubgroupClass {
  PermGroup representative;
  std::uint64_t class_size = 0;
  bool is_maximal = false;
};

/// Stops the enumeration early when it returns true for a new class.
using SubgroupStop = std::function<bool(const PermGroup&)>;

/// One representative per conjugacy class of subgroups, sorted by order.
/// Throws BudgetExceeded when |g| > budget.
std::vector<SubgroupClass> all_subgroup_classes(const PermGroup& g, std::uint64_t budget = kLatticeBudget,
                                                const SubgroupStop& stop = {});

std::vector<PermGroup> transitive_maximal_subgroups(const PermGroup& g, std::uint64_t budget = kLatticeBudget);

/// Normal subgroups, sorted by order.  Needs only the conjugacy classes, so
/// the budget bounds |g| for class_reps.
std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::uint64_t budget = kLatticeBudget);

struct MinimalTransitiveOptions {
  bool random_stage = true;
  int random_tries = 64;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kLatticeBudget;
};

/// True iff g has no proper transitive subgroup.
bool is_minimal_transitive(const PermGroup& g, const MinimalTransitiveOptions& opts = {});

}  // namespace transcat
