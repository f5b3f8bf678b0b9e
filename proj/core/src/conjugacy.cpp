#include "transcat/conjugacy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "transcat/blocks.hpp"
#include "transcat/orbitals.hpp"

namespace transcat {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kKnown = 1ULL << 63;

struct Side {
  const PermGroup* g;
  OrbitalStructure os;
  std::vector<std::uint64_t> color;
};

struct Node {
  std::vector<int> cell1, cell2;
  int ncells = 0;
  std::vector<int> sigma12, sigma21;  // orbital -> pair id, or -1
  int pairs = 0;
  PermGroup s1, s2;
  std::vector<int> path1, path2;
};

class ConjugacySearch {
 public:
  ConjugacySearch(const PermGroup& g1, const PermGroup& g2, const PermGroup* ambient)
      : n_(g1.degree()), ambient_(ambient) {
    a_ = {&g1, orbital_structure(g1), {}};
    b_ = {&g2, orbital_structure(g2), {}};
    a_.color = orbital_colors(a_.os);
    b_.color = orbital_colors(b_.os);
    if (ambient_) {
      amb_ = orbital_structure(*ambient_);
      prune_side2_ = g2.is_subgroup_of(*ambient_);
    }
  }

  std::optional<Permutation> run() {
    if (a_.os.count() != b_.os.count()) return std::nullopt;
    Node root;
    root.cell1.assign(static_cast<std::size_t>(n_), 0);
    root.cell2.assign(static_cast<std::size_t>(n_), 0);
    root.ncells = 1;
    root.sigma12.assign(static_cast<std::size_t>(a_.os.count()), -1);
    root.sigma21.assign(static_cast<std::size_t>(b_.os.count()), -1);
    root.s1 = *a_.g;
    root.s2 = *b_.g;
    return dfs(std::move(root));
  }

 private:
  std::uint64_t code(const Side& s, const std::vector<int>& sigma, int x, int y) const {
    const int o = s.os.at(x, y);
    std::uint64_t c = sigma[static_cast<std::size_t>(o)] >= 0
                          ? kKnown | static_cast<std::uint64_t>(sigma[static_cast<std::size_t>(o)])
                          : s.color[static_cast<std::size_t>(o)] & ~kKnown;
    if (ambient_) c = mix(c ^ (static_cast<std::uint64_t>(amb_.at(x, y)) << 40));
    return c;
  }

  // Refines both partitions in lockstep; false if they become incompatible.
  bool refine(Node& nd) const {
    std::vector<int> size1(static_cast<std::size_t>(n_)), size2(static_cast<std::size_t>(n_));
    for (const auto& orb : nd.s1.orbits()) {
      for (int p : orb) size1[static_cast<std::size_t>(p)] = static_cast<int>(orb.size());
    }
    for (const auto& orb : nd.s2.orbits()) {
      for (int p : orb) size2[static_cast<std::size_t>(p)] = static_cast<int>(orb.size());
    }
    std::vector<std::uint64_t> sig1(static_cast<std::size_t>(n_)), sig2(static_cast<std::size_t>(n_));
    std::vector<int> ord1(static_cast<std::size_t>(n_)), ord2(static_cast<std::size_t>(n_));
    while (true) {
      auto signatures = [&](const Side& s, const std::vector<int>& sigma, const std::vector<int>& cell,
                            const std::vector<int>& osize, std::vector<std::uint64_t>& sig) {
        for (int v = 0; v < n_; ++v) {
          std::uint64_t h = mix(static_cast<std::uint64_t>(osize[static_cast<std::size_t>(v)]));
          for (int u = 0; u < n_; ++u) {
            const auto cu = static_cast<std::uint64_t>(cell[static_cast<std::size_t>(u)]) << 48;
            h += mix(cu ^ code(s, sigma, v, u));
            h += mix(cu ^ (code(s, sigma, u, v) * 3 + 1));
          }
          sig[static_cast<std::size_t>(v)] = h;
        }
      };
      signatures(a_, nd.sigma12, nd.cell1, size1, sig1);
      signatures(b_, nd.sigma21, nd.cell2, size2, sig2);
      auto order = [&](const std::vector<int>& cell, const std::vector<std::uint64_t>& sig, std::vector<int>& ord) {
        for (int v = 0; v < n_; ++v) ord[static_cast<std::size_t>(v)] = v;
        std::sort(ord.begin(), ord.end(), [&](int x, int y) {
          const int cx = cell[static_cast<std::size_t>(x)];
          const int cy = cell[static_cast<std::size_t>(y)];
          if (cx != cy) return cx < cy;
          if (sig[static_cast<std::size_t>(x)] != sig[static_cast<std::size_t>(y)]) {
            return sig[static_cast<std::size_t>(x)] < sig[static_cast<std::size_t>(y)];
          }
          return x < y;
        });
      };
      order(nd.cell1, sig1, ord1);
      order(nd.cell2, sig2, ord2);
      for (int i = 0; i < n_; ++i) {
        const int x = ord1[static_cast<std::size_t>(i)];
        const int y = ord2[static_cast<std::size_t>(i)];
        if (nd.cell1[static_cast<std::size_t>(x)] != nd.cell2[static_cast<std::size_t>(y)] ||
            sig1[static_cast<std::size_t>(x)] != sig2[static_cast<std::size_t>(y)]) {
          return false;
        }
      }
      std::vector<int> next1(static_cast<std::size_t>(n_)), next2(static_cast<std::size_t>(n_));
      int id = 0;
      for (int i = 0; i < n_; ++i) {
        const int x = ord1[static_cast<std::size_t>(i)];
        if (i > 0) {
          const int px = ord1[static_cast<std::size_t>(i - 1)];
          if (nd.cell1[static_cast<std::size_t>(px)] != nd.cell1[static_cast<std::size_t>(x)] ||
              sig1[static_cast<std::size_t>(px)] != sig1[static_cast<std::size_t>(x)]) {
            ++id;
          }
        }
        next1[static_cast<std::size_t>(x)] = id;
        next2[static_cast<std::size_t>(ord2[static_cast<std::size_t>(i)])] = id;
      }
      const int count = id + 1;
      if (count == nd.ncells) return true;
      nd.cell1 = std::move(next1);
      nd.cell2 = std::move(next2);
      nd.ncells = count;
    }
  }

  bool learn(Node& nd, int v, int w) const {
    auto bind = [&](int o1, int o2) {
      int& f = nd.sigma12[static_cast<std::size_t>(o1)];
      int& r = nd.sigma21[static_cast<std::size_t>(o2)];
      if (f < 0 && r < 0) {
        f = r = nd.pairs++;
        return true;
      }
      return f >= 0 && f == r;
    };
    if (!bind(a_.os.at(v, v), b_.os.at(w, w))) return false;
    for (std::size_t i = 0; i < nd.path1.size(); ++i) {
      const int x = nd.path1[i];
      const int y = nd.path2[i];
      if (!bind(a_.os.at(x, v), b_.os.at(y, w))) return false;
      if (!bind(a_.os.at(v, x), b_.os.at(w, y))) return false;
    }
    return true;
  }

  std::optional<Permutation> leaf(const Node& nd) const {
    std::vector<int> at2(static_cast<std::size_t>(n_));
    for (int y = 0; y < n_; ++y) at2[static_cast<std::size_t>(nd.cell2[static_cast<std::size_t>(y)])] = y;
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) img[static_cast<std::size_t>(x)] = at2[static_cast<std::size_t>(nd.cell1[static_cast<std::size_t>(x)])];
    Permutation c = Permutation::from_images(img);
    if (ambient_ && !ambient_->contains(c)) return std::nullopt;
    for (const auto& x : a_.g->generators()) {
      if (!b_.g->contains(x.conjugate(c))) return std::nullopt;
    }
    return c;
  }

  static void individualize(std::vector<int>& cell, int v) {
    const int c = cell[static_cast<std::size_t>(v)];
    for (std::size_t u = 0; u < cell.size(); ++u) {
      if (cell[u] > c || (cell[u] == c && static_cast<int>(u) != v)) ++cell[u];
    }
  }

  std::optional<Permutation> dfs(Node nd) {
    ++nodes_;
    if (!refine(nd)) return std::nullopt;
    // Singleton cells are forced pairs: learn their orbital correspondence
    // and refine again until nothing changes.
    while (nd.ncells < n_) {
      std::vector<int> count(static_cast<std::size_t>(nd.ncells), 0);
      for (int c : nd.cell1) ++count[static_cast<std::size_t>(c)];
      std::vector<int> at2(static_cast<std::size_t>(nd.ncells), -1);
      for (int y = 0; y < n_; ++y) at2[static_cast<std::size_t>(nd.cell2[static_cast<std::size_t>(y)])] = y;
      const int before = nd.pairs;
      for (int x = 0; x < n_; ++x) {
        const int c = nd.cell1[static_cast<std::size_t>(x)];
        if (count[static_cast<std::size_t>(c)] != 1) continue;
        if (std::find(nd.path1.begin(), nd.path1.end(), x) != nd.path1.end()) continue;
        const int y = at2[static_cast<std::size_t>(c)];
        if (!learn(nd, x, y)) return std::nullopt;
        nd.path1.push_back(x);
        nd.path2.push_back(y);
      }
      if (nd.pairs == before) break;
      const int cells = nd.ncells;
      if (!refine(nd)) return std::nullopt;
      if (nd.ncells == cells) break;
    }
    if (nd.ncells == n_) return leaf(nd);
    std::vector<int> size(static_cast<std::size_t>(nd.ncells), 0);
    for (int c : nd.cell1) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < nd.ncells; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) {
        target = c;
      }
    }
    int v = -1;
    for (int x = 0; x < n_ && v < 0; ++x) {
      if (nd.cell1[static_cast<std::size_t>(x)] == target) v = x;
    }
    const PermGroup s1 = nd.s1.stabilizer(v);
    std::vector<bool> covered(static_cast<std::size_t>(n_), false);
    for (int w = 0; w < n_; ++w) {
      if (nd.cell2[static_cast<std::size_t>(w)] != target || covered[static_cast<std::size_t>(w)]) continue;
      if (prune_side2_) {
        for (int u : nd.s2.orbit(w)) covered[static_cast<std::size_t>(u)] = true;
      }
      PermGroup s2 = nd.s2.stabilizer(w);
      if (s2.order() != s1.order()) continue;
      Node child;
      child.sigma12 = nd.sigma12;
      child.sigma21 = nd.sigma21;
      child.pairs = nd.pairs;
      child.path1 = nd.path1;
      child.path2 = nd.path2;
      if (!learn(child, v, w)) continue;
      child.cell1 = nd.cell1;
      child.cell2 = nd.cell2;
      individualize(child.cell1, v);
      individualize(child.cell2, w);
      child.ncells = nd.ncells + 1;
      child.s1 = s1;
      child.s2 = std::move(s2);
      child.path1.push_back(v);
      child.path2.push_back(w);
      if (auto r = dfs(std::move(child))) return r;
    }
    return std::nullopt;
  }

  int n_;
  const PermGroup* ambient_;
  Side a_, b_;
  OrbitalStructure amb_;
  bool prune_side2_ = true;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string InvariantKey::serialize() const {
  std::ostringstream out;
  out << order << '|';
  if (has_cycle_types) {
    for (const auto& [ct, count] : cycle_types) {
      for (int c : ct) out << c << '.';
      out << ':' << count << ',';
    }
  } else {
    out << '*';
  }
  out << '|';
  for (const auto& [sz, sp, col] : orbitals) out << sz << (sp ? 's' : 'p') << std::hex << col << std::dec << ',';
  out << '|';
  for (int b : minimal_blocks) out << b << ',';
  out << '|' << block_systems << '|';
  for (auto d : derived_series) out << d << ',';
  return out.str();
}

InvariantKey invariant_key(const PermGroup& g) {
  InvariantKey key;
  key.order = g.order();
  if (g.order() <= kCycleTypeOrderLimit) {
    key.has_cycle_types = true;
    std::map<std::vector<int>, std::uint64_t> counts;
    g.for_each_element([&](const Permutation& x) { ++counts[x.cycle_type()]; });
    key.cycle_types.assign(counts.begin(), counts.end());
  }
  const auto os = orbital_structure(g);
  const auto colors = orbital_colors(os);
  for (int o = 0; o < os.count(); ++o) {
    key.orbitals.emplace_back(os.size[static_cast<std::size_t>(o)], os.self_paired(o), colors[static_cast<std::size_t>(o)]);
  }
  std::sort(key.orbitals.begin(), key.orbitals.end());
  if (g.is_transitive()) {
    for (const auto& b : minimal_block_systems(g)) key.minimal_blocks.push_back(b.block_size);
    key.block_systems = static_cast<int>(all_block_systems(g).size());
  }
  PermGroup d = g;
  key.derived_series.push_back(d.order());
  while (d.order() > 1) {
    PermGroup next = derived_subgroup(d);
    if (next.order() == d.order()) break;
    d = std::move(next);
    key.derived_series.push_back(d.order());
  }
  return key;
}

std::optional<Permutation> conjugating_element(const PermGroup& g1, const PermGroup& g2, const PermGroup* ambient) {
  if (g1.degree() != g2.degree()) return std::nullopt;
  if (ambient && ambient->degree() != g1.degree()) throw Error("ambient group has the wrong degree");
  if (g1.order() != g2.order()) return std::nullopt;
  return ConjugacySearch(g1, g2, ambient).run();
}

std::optional<Permutation> are_conjugate(const PermGroup& g1, const PermGroup& g2, const PermGroup* ambient) {
  if (ambient && ambient->degree() != g1.degree()) throw Error("ambient group has the wrong degree");
  if (g1.degree() != g2.degree() || g1.order() != g2.order()) return std::nullopt;
  if (!(invariant_key(g1) == invariant_key(g2))) return std::nullopt;
  return conjugating_element(g1, g2, ambient);
}

int ConjugacyClassifier::find(const PermGroup& g) const { return find(g, invariant_key(g)); }

int ConjugacyClassifier::find(const PermGroup& g, const InvariantKey& key) const {
  const auto range = bucket_.equal_range(key.serialize());
  for (auto it = range.first; it != range.second; ++it) {
    if (conjugating_element(reps_[static_cast<std::size_t>(it->second)], g, ambient_)) return it->second;
  }
  return -1;
}

std::pair<int, bool> ConjugacyClassifier::add(const PermGroup& g) {
  auto key = invariant_key(g);
  const int found = find(g, key);
  if (found >= 0) return {found, false};
  const int id = static_cast<int>(reps_.size());
  bucket_.emplace(key.serialize(), id);
  reps_.push_back(g);
  keys_.push_back(std::move(key));
  return {id, true};
}

}  // namespace transcat
