#include "transcat/blocks.hpp"

#include <algorithm>
#include <numeric>

namespace transcat {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  std::vector<int> parent;
};

BlockSystem from_partition(UnionFind& uf, int n) {
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) cells[static_cast<std::size_t>(uf.find(p))].push_back(p);
  BlockSystem b;
  for (auto& c : cells) {
    if (!c.empty()) b.blocks.push_back(std::move(c));
  }
  b.block_size = static_cast<int>(b.blocks.front().size());
  for (const auto& c : b.blocks) {
    if (static_cast<int>(c.size()) != b.block_size) b.block_size = -1;
  }
  return b;
}

Permutation truncated(const Permutation& x, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = x[i];
  return Permutation::from_images(img);
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  const auto of = coarse.block_of();
  for (const auto& blk : fine.blocks) {
    for (int p : blk) {
      if (of[static_cast<std::size_t>(p)] != of[static_cast<std::size_t>(blk.front())]) return false;
    }
  }
  return true;
}

void sort_systems(std::vector<BlockSystem>& v) {
  std::sort(v.begin(), v.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block_size != b.block_size) return a.block_size < b.block_size;
    return a.blocks < b.blocks;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<int> BlockSystem::block_of() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  std::vector<int> of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int p : blocks[i]) of[static_cast<std::size_t>(p)] = static_cast<int>(i);
  }
  return of;
}

std::string BlockSystem::to_string() const {
  std::string s = "k=" + std::to_string(block_size) + " |";
  for (const auto& b : blocks) {
    s += " {";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

BlockSystem block_closure(const PermGroup& g, const std::vector<int>& seed) {
  const int n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> queue;
  for (std::size_t i = 1; i < seed.size(); ++i) {
    if (uf.unite(seed[0], seed[i])) queue.emplace_back(seed[0], seed[i]);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const auto& s : g.generators()) {
      const int x = s[a];
      const int y = s[b];
      if (uf.unite(x, y)) queue.emplace_back(x, y);
    }
  }
  return from_partition(uf, n);
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("block systems requested for an intransitive group");
  const int n = g.degree();
  std::vector<BlockSystem> cands;
  for (int w = 1; w < n; ++w) {
    auto b = block_closure(g, {0, w});
    if (b.block_size < n) cands.push_back(std::move(b));
  }
  sort_systems(cands);
  std::vector<BlockSystem> out;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& o : cands) {
      if (o.block_size < c.block_size && refines(o, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<BlockSystem> all_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw Error("block systems requested for an intransitive group");
  const int n = g.degree();
  std::vector<BlockSystem> found = minimal_block_systems(g);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::vector<int> blk = found[i].blocks.front();
    for (int w = 1; w < n; ++w) {
      if (std::binary_search(blk.begin(), blk.end(), w)) continue;
      std::vector<int> seed = blk;
      seed.push_back(w);
      auto b = block_closure(g, seed);
      if (b.block_size < n && std::find(found.begin(), found.end(), b) == found.end()) {
        found.push_back(std::move(b));
      }
    }
  }
  sort_systems(found);
  return found;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) return false;
  for (int w = 1; w < g.degree(); ++w) {
    if (block_closure(g, {0, w}).block_size < g.degree()) return false;
  }
  return true;
}

bool is_invariant(const PermGroup& g, const BlockSystem& b) {
  const auto of = b.block_of();
  for (const auto& s : g.generators()) {
    for (const auto& blk : b.blocks) {
      const int target = of[static_cast<std::size_t>(s[blk.front()])];
      for (int p : blk) {
        if (of[static_cast<std::size_t>(s[p])] != target) return false;
      }
    }
  }
  return true;
}

Permutation block_image(const Permutation& x, const BlockSystem& b) {
  const auto of = b.block_of();
  std::vector<int> img(b.blocks.size());
  for (std::size_t i = 0; i < b.blocks.size(); ++i) {
    img[i] = of[static_cast<std::size_t>(x[b.blocks[i].front()])];
  }
  return Permutation::from_images(img);
}

PermGroup block_action(const PermGroup& g, const BlockSystem& b) {
  if (!is_invariant(g, b)) throw Error("block system is not invariant: " + b.to_string());
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(block_image(s, b));
  return PermGroup(b.block_count(), std::move(gens));
}

PermGroup block_kernel(const PermGroup& g, const BlockSystem& b) {
  const int n = g.degree();
  const int m = b.block_count();
  if (n + m > kMaxDegree) throw Error("block kernel: degree too large");
  std::vector<Permutation> ext;
  for (const auto& s : g.generators()) {
    const Permutation bi = block_image(s, b);
    std::vector<int> img(static_cast<std::size_t>(n + m));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = s[i];
    for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(n + j)] = n + bi[j];
    ext.push_back(Permutation::from_images(img));
  }
  BuildOptions opts;
  for (int j = 0; j < m; ++j) opts.base_prefix.push_back(n + j);
  opts.known_order = g.order();
  const PermGroup big(n + m, std::move(ext), opts);
  const auto stab = big.pointwise_stabilizer(opts.base_prefix);
  std::vector<Permutation> gens;
  for (const auto& s : stab.generators()) gens.push_back(truncated(s, n));
  BuildOptions kopts;
  kopts.known_order = stab.order();
  return PermGroup(n, std::move(gens), kopts);
}

BlockSystem canonical_blocks(int k, int m) {
  BlockSystem b;
  b.block_size = k;
  for (int j = 0; j < m; ++j) {
    std::vector<int> blk(static_cast<std::size_t>(k));
    std::iota(blk.begin(), blk.end(), j * k);
    b.blocks.push_back(std::move(blk));
  }
  return b;
}

Permutation lift_block_permutation(const Permutation& h, int k) {
  const int m = h.degree();
  std::vector<int> img(static_cast<std::size_t>(k * m));
  for (int b = 0; b < m; ++b) {
    for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(b * k + i)] = h[b] * k + i;
  }
  return Permutation::from_images(img);
}

WreathFrame wreath_product(int k, const PermGroup& top) {
  if (k < 2) throw Error("wreath product needs block size at least 2");
  if (!top.is_transitive()) throw Error("wreath product top group must be transitive");
  const int m = top.degree();
  const int n = k * m;
  if (n > kMaxDegree) throw Error("wreath product degree too large");
  std::vector<Permutation> gens;
  std::vector<int> cyc(static_cast<std::size_t>(k));
  std::iota(cyc.begin(), cyc.end(), 0);
  if (k > 2) gens.push_back(Permutation::from_cycles(n, {cyc}));
  gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  for (const auto& h : top.generators()) gens.push_back(lift_block_permutation(h, k));
  std::uint64_t fact = 1;
  for (int i = 2; i <= k; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t ord = top.order();
  for (int j = 0; j < m; ++j) ord *= fact;
  BuildOptions opts;
  opts.known_order = ord;
  WreathFrame w;
  w.base_degree = k;
  w.top = top;
  w.product = PermGroup(n, std::move(gens), opts);
  w.blocks = canonical_blocks(k, m);
  return w;
}

std::string Signature::to_string() const { return std::to_string(k) + "," + std::to_string(top_index); }

Signature system_signature(const PermGroup& g, const BlockSystem& b, const CatalogueLookup& lookup) {
  return Signature{b.block_size, lookup(block_action(g, b))};
}

Signature signature(const PermGroup& g, const CatalogueLookup& lookup) {
  const auto systems = minimal_block_systems(g);
  if (systems.empty()) throw Error("signature requested for a primitive group");
  const int kmin = systems.front().block_size;
  Signature best{kmin, 0};
  for (const auto& b : systems) {
    if (b.block_size != kmin) break;
    const Signature s = system_signature(g, b, lookup);
    if (best.top_index == 0 || s < best) best = s;
  }
  return best;
}

}  // namespace transcat
