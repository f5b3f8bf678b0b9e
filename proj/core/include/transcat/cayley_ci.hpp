#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "transcat/abstract_group.hpp"
#include "transcat/seeds.hpp"

namespace transcat {

inline constexpr int kMaxOrderlyOrder = 100;
inline constexpr int kMaxCycleIndexOrder = 200;
inline constexpr int kMaxCiOrder = 47;

/// The units connection sets are built from: inverse pairs {g, g^-1} of
/// non-identity elements (undirected), or single non-identity elements
/// (directed).  Units are ordered by their least element index.
class ConnectionSpace {
 public:
  ConnectionSpace(const AbstractGroup& g, bool directed = false);

  const AbstractGroup& group() const { return *g_; }
  bool directed() const { return directed_; }
  int size() const { return static_cast<int>(units_.size()); }
  const std::vector<int>& unit(int i) const { return units_[static_cast<std::size_t>(i)]; }
  int unit_of(int element) const { return unit_of_[static_cast<std::size_t>(element)]; }
  /// Aut(G) acting on unit indices.
  const std::vector<std::vector<int>>& action() const { return action_; }
  /// Element indices of a set of units.
  std::vector<int> elements(const std::vector<int>& units) const;

 private:
  const AbstractGroup* g_;
  bool directed_;
  std::vector<std::vector<int>> units_;
  std::vector<int> unit_of_;
  std::vector<std::vector<int>> action_;
};

/// One Aut(G)-orbit of connection sets: its canonical member (the
/// lexicographically least sorted unit list) and the orbit length.
struct ConnectionClass {
  std::vector<int> units;
  std::uint64_t orbit_size = 0;
};

/// Orderly generation: one canonical representative per Aut(G)-orbit on
/// subsets of units.  Needs |G| <= kMaxOrderlyOrder.
std::vector<ConnectionClass> orderly_connection_classes(const ConnectionSpace& s);

/// Z(A; 2, 2, ...) for A = Aut(G) acting on units.  Needs |G| <=
/// kMaxCycleIndexOrder.
boost::multiprecision::cpp_int count_cayley_sets(const ConnectionSpace& s);

/// Adjacency of Cay(G, S): x -> x*s for s in S.
std::vector<std::uint8_t> cayley_arcs(const AbstractGroup& g, const std::vector<int>& elements);

struct CiReport {
  int order = 0;
  int index = 0;
  bool ci = true;
  /// Two connection sets (element indices) with isomorphic Cayley graphs in
  /// different Aut(G)-orbits.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
  std::uint64_t sets = 0;
  std::uint64_t graphs = 0;

  /// `order<TAB>idx<TAB>CI|NONCI<TAB>sets<TAB>graphs`
  std::string to_line() const;
};

/// Compares Aut(G)-classes of connection sets with isomorphism classes of
/// their Cayley graphs.  Needs |G| <= kMaxCiOrder.
CiReport is_ci_group(const SmallGroupSeed& seed, bool directed = false);

/// (order, index) of the seed group isomorphic to a regular group.
std::pair<int, int> identify_small_group(const PermGroup& regular, const std::vector<SmallGroupSeed>& seeds);

using CiVerdicts = std::map<std::pair<int, int>, bool>;

/// Non-CI groups of order <= bound all of whose proper subgroups and proper
/// quotients are CI.  `verdicts` maps (order, index) to the CI flag and
/// must cover every seed group of order <= bound.
std::vector<std::pair<int, int>> minimal_non_ci(int bound, const std::vector<SmallGroupSeed>& seeds,
                                                const CiVerdicts& verdicts);

/// Regular representations of the proper nontrivial subgroups (up to
/// conjugacy) and proper nontrivial quotients of a regular group.
std::vector<PermGroup> proper_sections(const PermGroup& regular);

}  // namespace transcat
