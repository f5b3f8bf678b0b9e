#include "transcat/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace transcat {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Partition {
  std::vector<int> cell;
  int ncells = 0;
};

class Searcher {
 public:
  explicit Searcher(const ColoredDigraph& g) : g_(g), n_(g.n) {}

  CanonicalLabeling run() {
    Partition root;
    root.cell.assign(static_cast<std::size_t>(n_), 0);
    std::vector<int> colors(g_.vertex_color);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    for (int v = 0; v < n_; ++v) {
      root.cell[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(colors.begin(), colors.end(), g_.vertex_color[static_cast<std::size_t>(v)]) -
          colors.begin());
    }
    root.ncells = static_cast<int>(colors.size());
    if (n_ > 0) dfs(root, 0, true, 0);
    CanonicalLabeling out;
    out.position.assign(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) out.position[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] = i;
    out.form = std::move(best_form_);
    out.automorphisms = std::move(auts_);
    out.nodes = nodes_;
    return out;
  }

 private:
  // Refines p to a stable partition; returns a hash of the refinement trace.
  std::uint64_t refine(Partition& p) const {
    std::uint64_t trace = mix(static_cast<std::uint64_t>(p.ncells));
    std::vector<std::uint64_t> sig(static_cast<std::size_t>(n_));
    std::vector<int> order(static_cast<std::size_t>(n_));
    while (p.ncells < n_) {
      for (int v = 0; v < n_; ++v) {
        std::uint64_t h = 0;
        const std::size_t row = static_cast<std::size_t>(v) * static_cast<std::size_t>(n_);
        for (int w = 0; w < n_; ++w) {
          const std::uint16_t out = g_.arcs[row + static_cast<std::size_t>(w)];
          const std::uint16_t in = g_.arcs[static_cast<std::size_t>(w) * static_cast<std::size_t>(n_) +
                                           static_cast<std::size_t>(v)];
          const auto cw = static_cast<std::uint64_t>(p.cell[static_cast<std::size_t>(w)]);
          if (out) h += mix((cw << 20) ^ (static_cast<std::uint64_t>(out) << 1));
          if (in) h += mix((cw << 20) ^ (static_cast<std::uint64_t>(in) << 1) ^ 1ULL);
        }
        sig[static_cast<std::size_t>(v)] = h;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ca = p.cell[static_cast<std::size_t>(a)];
        const int cb = p.cell[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
      });
      std::vector<int> next(static_cast<std::size_t>(n_));
      int id = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        if (i > 0) {
          const int u = order[i - 1];
          if (p.cell[static_cast<std::size_t>(u)] != p.cell[static_cast<std::size_t>(v)] ||
              sig[static_cast<std::size_t>(u)] != sig[static_cast<std::size_t>(v)]) {
            ++id;
            trace = mix(trace ^ sig[static_cast<std::size_t>(v)] ^ static_cast<std::uint64_t>(i));
          }
        }
        next[static_cast<std::size_t>(v)] = id;
      }
      const int count = id + 1;
      trace = mix(trace + static_cast<std::uint64_t>(count));
      if (count == p.ncells) break;
      p.cell = std::move(next);
      p.ncells = count;
    }
    return trace;
  }

  static Partition individualize(const Partition& p, int v) {
    Partition q = p;
    const int c = p.cell[static_cast<std::size_t>(v)];
    for (std::size_t w = 0; w < q.cell.size(); ++w) {
      if (q.cell[w] > c || (q.cell[w] == c && static_cast<int>(w) != v)) ++q.cell[w];
    }
    ++q.ncells;
    return q;
  }

  std::vector<std::uint16_t> leaf_form(const std::vector<int>& order) const {
    std::vector<std::uint16_t> form;
    form.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ + 1));
    for (int i = 0; i < n_; ++i) {
      form.push_back(static_cast<std::uint16_t>(g_.vertex_color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]));
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) form.push_back(g_.arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
    }
    return form;
  }

  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> img(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) img[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    Permutation a = Permutation::from_images(img);
    if (!a.is_identity() && std::find(auts_.begin(), auts_.end(), a) == auts_.end()) auts_.push_back(std::move(a));
  }

  static int divergence(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t d = 0;
    while (d < a.size() && d < b.size() && a[d] == b[d]) ++d;
    return static_cast<int>(d);
  }

  int leaf(const Partition& p, int level, bool eq_first, int cmp_best) {
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] = v;
    auto form = leaf_form(order);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = best_trace_ = traces_;
      first_form_ = best_form_ = std::move(form);
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path_;
      return level;
    }
    if (eq_first && form == first_form_) {
      add_automorphism(order, first_order_);
      return divergence(path_, first_path_);
    }
    if (cmp_best < 0 || (cmp_best == 0 && form < best_form_)) {
      best_trace_ = traces_;
      best_form_ = std::move(form);
      best_order_ = order;
      best_path_ = path_;
      return level;
    }
    if (cmp_best == 0 && form == best_form_) {
      add_automorphism(order, best_order_);
      return divergence(path_, best_path_);
    }
    return level;
  }

  int dfs(Partition p, int level, bool eq_first, int cmp_best) {
    ++nodes_;
    const std::uint64_t t = refine(p);
    traces_.resize(static_cast<std::size_t>(level) + 1);
    traces_[static_cast<std::size_t>(level)] = t;
    if (have_first_) {
      const auto L = static_cast<std::size_t>(level);
      if (eq_first) eq_first = L < first_trace_.size() && first_trace_[L] == t;
      if (cmp_best == 0) {
        if (L >= best_trace_.size()) {
          cmp_best = 1;
        } else if (t != best_trace_[L]) {
          cmp_best = t < best_trace_[L] ? -1 : 1;
        }
      }
      if (!eq_first && cmp_best > 0) return level;
    }
    if (p.ncells == n_) return leaf(p, level, eq_first, cmp_best);

    // Target cell: first smallest non-singleton.
    std::vector<int> size(static_cast<std::size_t>(p.ncells), 0);
    for (int c : p.cell) ++size[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < p.ncells; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)])) {
        target = c;
      }
    }
    std::vector<int> cands;
    for (int v = 0; v < n_; ++v) {
      if (p.cell[static_cast<std::size_t>(v)] == target) cands.push_back(v);
    }
    std::vector<int> explored;
    std::vector<int> orbit_root;
    std::size_t auts_seen = static_cast<std::size_t>(-1);
    for (int v : cands) {
      if (auts_.size() != auts_seen) {
        auts_seen = auts_.size();
        orbit_root = prefix_orbits(level);
      }
      const int rv = orbit_root[static_cast<std::size_t>(v)];
      bool skip = false;
      for (int u : explored) {
        if (orbit_root[static_cast<std::size_t>(u)] == rv) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      path_.push_back(v);
      const int r = dfs(individualize(p, v), level + 1, eq_first, cmp_best);
      path_.pop_back();
      explored.push_back(v);
      if (r < level) return r;
    }
    return level;
  }

  // Orbits of the automorphisms found so far that fix the current path prefix.
  std::vector<int> prefix_orbits(int level) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& a : auts_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = a[path_[static_cast<std::size_t>(i)]] == path_[static_cast<std::size_t>(i)];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int x = find(v);
        int y = find(a[v]);
        if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  const ColoredDigraph& g_;
  int n_;
  std::uint64_t nodes_ = 0;
  std::vector<Permutation> auts_;
  std::vector<int> path_;
  std::vector<std::uint64_t> traces_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<std::uint16_t> first_form_, best_form_;
  std::vector<int> first_order_, best_order_;
  std::vector<int> first_path_, best_path_;
};

}  // namespace

ColoredDigraph ColoredDigraph::relabeled(const std::vector<int>& p) const {
  ColoredDigraph r(n);
  for (int v = 0; v < n; ++v) r.vertex_color[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] = vertex_color[static_cast<std::size_t>(v)];
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r.set_arc(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)], arc(a, b));
  }
  return r;
}

bool ColoredDigraph::is_automorphism(const Permutation& p) const {
  for (int v = 0; v < n; ++v) {
    if (vertex_color[static_cast<std::size_t>(v)] != vertex_color[static_cast<std::size_t>(p[v])]) return false;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (arc(a, b) != arc(p[a], p[b])) return false;
    }
  }
  return true;
}

CanonicalLabeling canonical_labeling(const ColoredDigraph& g) {
  if (g.n > kMaxDegree) throw Error("canonical labeling supports at most 64 vertices");
  for (int c : g.vertex_color) {
    if (c < 0 || c > 0xffff) throw Error("vertex color out of range");
  }
  return Searcher(g).run();
}

std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b) {
  if (a.n != b.n) return std::nullopt;
  const auto ca = canonical_labeling(a);
  const auto cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  std::vector<int> at(static_cast<std::size_t>(a.n));
  for (int v = 0; v < b.n; ++v) at[static_cast<std::size_t>(cb.position[static_cast<std::size_t>(v)])] = v;
  std::vector<int> map(static_cast<std::size_t>(a.n));
  for (int v = 0; v < a.n; ++v) map[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(ca.position[static_cast<std::size_t>(v)])];
  return map;
}

PermGroup automorphism_group(const ColoredDigraph& g) {
  auto c = canonical_labeling(g);
  return PermGroup(std::max(g.n, 1), std::move(c.automorphisms));
}

}  // namespace transcat
