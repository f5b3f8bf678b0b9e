#include "transcat/cayley_ci.hpp"

#include <algorithm>
#include <sstream>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/lattice.hpp"
#include "transcat/vt_graphs.hpp"

namespace transcat {

namespace {

using Mask = unsigned __int128;

class Orderly {
 public:
  explicit Orderly(const ConnectionSpace& s) : s_(s), m_(s.size()), aut_count_(s.action().size()) {}

  std::vector<ConnectionClass> run() {
    std::vector<int> units;
    out_.push_back({{}, 1});
    dfs(0, 0, units);
    return std::move(out_);
  }

 private:
  Mask bit(int u) const { return Mask{1} << (m_ - 1 - u); }

  // Canonical iff no automorphism maps x to a larger mask; returns the
  // stabilizer order, or 0 when x is not canonical.
  std::uint64_t canonical(Mask x, const std::vector<int>& units) const {
    std::uint64_t stab = 0;
    for (const auto& a : s_.action()) {
      Mask img = 0;
      for (int u : units) img |= bit(a[static_cast<std::size_t>(u)]);
      if (img > x) return 0;
      if (img == x) ++stab;
    }
    return stab;
  }

  void dfs(Mask x, int next, std::vector<int>& units) {
    for (int u = next; u < m_; ++u) {
      units.push_back(u);
      const Mask child = x | bit(u);
      if (const auto stab = canonical(child, units)) {
        out_.push_back({units, aut_count_ / stab});
        dfs(child, u + 1, units);
      }
      units.pop_back();
    }
  }

  const ConnectionSpace& s_;
  int m_;
  std::uint64_t aut_count_;
  std::vector<ConnectionClass> out_;
};

}  // namespace

ConnectionSpace::ConnectionSpace(const AbstractGroup& g, bool directed) : g_(&g), directed_(directed) {
  unit_of_.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 1; x < g.order(); ++x) {
    if (unit_of_[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> u{x};
    if (!directed && g.inv(x) != x) u.push_back(g.inv(x));
    for (int y : u) unit_of_[static_cast<std::size_t>(y)] = static_cast<int>(units_.size());
    units_.push_back(std::move(u));
  }
  for (const auto& phi : g.automorphisms()) {
    std::vector<int> act(units_.size());
    for (std::size_t i = 0; i < units_.size(); ++i) act[i] = unit_of(phi[static_cast<std::size_t>(units_[i][0])]);
    action_.push_back(std::move(act));
  }
}

std::vector<int> ConnectionSpace::elements(const std::vector<int>& units) const {
  std::vector<int> out;
  for (int u : units) {
    for (int x : unit(u)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConnectionClass> orderly_connection_classes(const ConnectionSpace& s) {
  if (s.group().order() > kMaxOrderlyOrder) throw Error("orderly generation is limited to groups of order 100");
  return Orderly(s).run();
}

boost::multiprecision::cpp_int count_cayley_sets(const ConnectionSpace& s) {
  if (s.group().order() > kMaxCycleIndexOrder) throw Error("cycle index is limited to groups of order 200");
  boost::multiprecision::cpp_int sum = 0;
  std::vector<bool> seen;
  for (const auto& a : s.action()) {
    seen.assign(a.size(), false);
    unsigned cycles = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) seen[j] = true;
    }
    boost::multiprecision::cpp_int term = 1;
    term <<= cycles;
    sum += term;
  }
  const boost::multiprecision::cpp_int count = s.action().size();
  if (sum % count != 0) throw Error("cycle index evaluation is not an integer");
  return sum / count;
}

std::vector<std::uint8_t> cayley_arcs(const AbstractGroup& g, const std::vector<int>& elements) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::uint8_t> arcs(n * n, 0);
  for (int x = 0; x < g.order(); ++x) {
    for (int s : elements) arcs[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(g.mul(x, s))] = 1;
  }
  return arcs;
}

std::string CiReport::to_line() const {
  std::ostringstream out;
  out << order << '\t' << index << '\t' << (ci ? "CI" : "NONCI") << '\t' << sets << '\t' << graphs;
  return out.str();
}

CiReport is_ci_group(const SmallGroupSeed& seed, bool directed) {
  if (seed.order > kMaxCiOrder) throw Error("CI test is limited to groups of order 47");
  const AbstractGroup g(PermGroup(std::max(seed.order, 1), seed.generators));
  const ConnectionSpace space(g, directed);
  const auto classes = orderly_connection_classes(space);
  CiReport r;
  r.order = seed.order;
  r.index = seed.index;
  std::map<std::vector<std::uint8_t>, std::size_t> forms;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto elems = space.elements(classes[i].units);
    auto form = canonical_form(g.order(), cayley_arcs(g, elems));
    auto [it, fresh] = forms.emplace(std::move(form), i);
    if (!fresh && !r.witness) r.witness.emplace(space.elements(classes[it->second].units), elems);
  }
  r.sets = classes.size();
  r.graphs = forms.size();
  r.ci = r.sets == r.graphs;
  return r;
}

std::pair<int, int> identify_small_group(const PermGroup& regular, const std::vector<SmallGroupSeed>& seeds) {
  const auto n = static_cast<int>(regular.order());
  for (const auto& s : seeds) {
    if (s.order != n) continue;
    if (are_conjugate(regular, PermGroup(std::max(n, 1), s.generators))) return {s.order, s.index};
  }
  throw Error("no seed group of order " + std::to_string(n) + " matches");
}

std::vector<PermGroup> proper_sections(const PermGroup& regular) {
  const std::uint64_t n = regular.order();
  std::vector<PermGroup> out;
  for (const auto& c : all_subgroup_classes(regular)) {
    const std::uint64_t k = c.representative.order();
    if (k > 1 && k < n) out.push_back(restrict_to_orbit_of_zero(c.representative));
  }
  for (const auto& nsub : normal_subgroups(regular)) {
    const std::uint64_t k = nsub.order();
    if (k <= 1 || k >= n) continue;
    BlockSystem b;
    b.block_size = static_cast<int>(k);
    b.blocks = nsub.orbits();
    out.push_back(block_action(regular, b));
  }
  return out;
}

std::vector<std::pair<int, int>> minimal_non_ci(int bound, const std::vector<SmallGroupSeed>& seeds,
                                                const CiVerdicts& verdicts) {
  auto verdict = [&](std::pair<int, int> id) {
    const auto it = verdicts.find(id);
    if (it == verdicts.end()) {
      throw Error("missing CI verdict for group " + std::to_string(id.first) + "," + std::to_string(id.second));
    }
    return it->second;
  };
  std::vector<std::pair<int, int>> out;
  for (const auto& s : seeds) {
    if (s.order > bound || verdict({s.order, s.index})) continue;
    bool minimal = true;
    for (const auto& h : proper_sections(PermGroup(s.order, s.generators))) {
      if (!verdict(identify_small_group(h, seeds))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.emplace_back(s.order, s.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace transcat
