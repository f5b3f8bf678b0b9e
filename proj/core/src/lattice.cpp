#include "transcat/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace transcat {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Fingerprint {
  std::uint64_t a = 0, b = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintHash {
  std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f.a ^ (f.b * 31)); }
};

Fingerprint fingerprint(const std::vector<int>& members) {
  Fingerprint f;
  for (int i : members) {
    f.a += mix(static_cast<std::uint64_t>(i));
    f.b += mix(static_cast<std::uint64_t>(i) ^ 0x5555555555555555ULL);
  }
  return f;
}

class Lattice {
 public:
  Lattice(const PermGroup& g, std::uint64_t budget) : g_(g) {
    elems_ = g.elements(budget);
    index_.reserve(elems_.size() * 2);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
    for (const auto& s : g.generators()) {
      std::vector<int> t(elems_.size());
      for (std::size_t i = 0; i < elems_.size(); ++i) t[i] = index_.at(elems_[i].conjugate(s));
      conj_.push_back(std::move(t));
    }
  }

  std::vector<SubgroupClass> run() {
    add(PermGroup::trivial(g_.degree()));
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (stopped_) break;
      const PermGroup a = classes_[c].rep.with_lex_base();
      if (a.order() == g_.order()) continue;
      std::vector<bool> in_a(elems_.size(), false);
      for (int i : classes_[c].members) in_a[static_cast<std::size_t>(i)] = true;
      std::unordered_set<Permutation, PermutationHash> cosets;
      for (std::size_t i = 0; i < elems_.size() && !stopped_; ++i) {
        if (in_a[i]) continue;
        if (!cosets.insert(a.lex_min_in_coset(elems_[i])).second) continue;
        const Permutation x[1] = {elems_[i]};
        const PermGroup j = join(a, x);
        if (j.order() != g_.order()) classes_[c].maximal = false;
        add(j);
      }
    }
    std::vector<SubgroupClass> out;
    for (auto& c : classes_) {
      out.push_back({std::move(c.rep), c.size, c.maximal && c.rep_order != g_.order()});
    }
    std::stable_sort(out.begin(), out.end(), [](const SubgroupClass& x, const SubgroupClass& y) {
      return x.representative.order() < y.representative.order();
    });
    return out;
  }

  void set_stop(const SubgroupStop& stop) { stop_fn_ = stop; }

 private:
  struct Class {
    PermGroup rep;
    std::vector<int> members;
    std::uint64_t size = 0;
    std::uint64_t rep_order = 0;
    bool maximal = true;
  };

  std::vector<int> members_of(const PermGroup& h) const {
    std::vector<int> m;
    m.reserve(h.order());
    h.for_each_element([&](const Permutation& x) { m.push_back(index_.at(x)); });
    std::sort(m.begin(), m.end());
    return m;
  }

  // Returns the class id of h, registering a new class if needed.
  int add(const PermGroup& h) {
    if (h.order() == g_.order() && whole_ >= 0) return whole_;
    auto members = members_of(h);
    const Fingerprint f = fingerprint(members);
    if (auto it = seen_.find(f); it != seen_.end()) {
      const auto [cid, conj] = it->second;
      const PermGroup& rep = classes_[static_cast<std::size_t>(cid)].rep;
      const Permutation& c = elems_[static_cast<std::size_t>(conj)];
      bool same = rep.order() == h.order();
      for (const auto& x : h.generators()) {
        if (!same) break;
        same = rep.contains(x.conjugate(c.inverse()));
      }
      if (same) return cid;
      throw Error("subgroup fingerprint collision");
    }
    const int cid = static_cast<int>(classes_.size());
    // Orbit of the member set under conjugation.
    std::vector<std::vector<int>> queue{members};
    std::vector<int> conjugator{index_.at(Permutation(g_.degree()))};
    seen_.emplace(f, std::make_pair(cid, conjugator[0]));
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::size_t s = 0; s < conj_.size(); ++s) {
        std::vector<int> img(queue[q].size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = conj_[s][static_cast<std::size_t>(queue[q][i])];
        std::sort(img.begin(), img.end());
        const Fingerprint fi = fingerprint(img);
        if (seen_.count(fi)) continue;
        const Permutation gc = elems_[static_cast<std::size_t>(conjugator[q])] * g_.generators()[s];
        const int gi = index_.at(gc);
        seen_.emplace(fi, std::make_pair(cid, gi));
        queue.push_back(std::move(img));
        conjugator.push_back(gi);
      }
      // Member sets of far conjugates are no longer needed.
      if (q > 0) std::vector<int>().swap(queue[q]);
    }
    Class c;
    c.rep = h;
    c.members = std::move(members);
    c.size = queue.size();
    c.rep_order = h.order();
    classes_.push_back(std::move(c));
    if (h.order() == g_.order()) whole_ = cid;
    if (stop_fn_ && stop_fn_(h)) stopped_ = true;
    return cid;
  }

  const PermGroup& g_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<std::vector<int>> conj_;
  std::vector<Class> classes_;
  std::unordered_map<Fingerprint, std::pair<int, int>, FingerprintHash> seen_;
  int whole_ = -1;
  SubgroupStop stop_fn_;
  bool stopped_ = false;
};

}  // namespace

std::vector<SubgroupClass> all_subgroup_classes(const PermGroup& g, std::uint64_t budget, const SubgroupStop& stop) {
  if (g.order() > budget) throw BudgetExceeded("subgroup lattice budget exceeded", g.order());
  Lattice lat(g, budget);
  lat.set_stop(stop);
  return lat.run();
}

std::vector<PermGroup> transitive_maximal_subgroups(const PermGroup& g, std::uint64_t budget) {
  std::vector<PermGroup> out;
  for (auto& c : all_subgroup_classes(g, budget)) {
    if (c.is_maximal && c.representative.is_transitive()) out.push_back(std::move(c.representative));
  }
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, std::uint64_t budget) {
  // Every normal subgroup is a product of normal closures of single classes.
  std::vector<PermGroup> out{PermGroup::trivial(g.degree())};
  auto add = [&](PermGroup h) {
    for (const auto& o : out) {
      if (o.order() == h.order() && o.same_group(h)) return false;
    }
    out.push_back(std::move(h));
    return true;
  };
  std::vector<PermGroup> closures;
  for (const auto& c : class_reps(g, budget)) {
    if (c.representative.is_identity()) continue;
    const Permutation x = c.representative;
    PermGroup h = normal_closure(g, std::span<const Permutation>(&x, 1));
    if (add(h)) closures.push_back(std::move(h));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subgroup_of(out[i])) continue;
      add(join(out[i], c));
    }
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

bool is_minimal_transitive(const PermGroup& g, const MinimalTransitiveOptions& opts) {
  if (!g.is_transitive()) throw Error("minimal transitivity requested for an intransitive group");
  if (opts.random_stage) {
    std::mt19937_64 rng(opts.seed);
    for (int t = 0; t < opts.random_tries; ++t) {
      std::vector<Permutation> gens{g.random_element(rng)};
      if (t % 2) gens.push_back(g.random_element(rng));
      const PermGroup h(g.degree(), gens);
      if (h.order() < g.order() && h.is_transitive()) return false;
    }
  }
  const std::uint64_t order = g.order();
  if (order > opts.budget) {
    // Too large for the lattice: look for structural witnesses instead.
    const int n = g.degree();
    std::uint64_t half = 1;
    for (int i = 3; i <= n; ++i) half *= static_cast<std::uint64_t>(i);
    if (n >= 4 && order >= half) return false;
    const PermGroup d = derived_subgroup(g);
    if (d.order() < order && d.is_transitive()) return false;
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    // Powers of x of prime order.
    auto prime_powers = [](const Permutation& x) {
      std::vector<Permutation> out;
      const std::uint64_t o = x.order();
      std::uint64_t rest = o;
      for (std::uint64_t p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        out.push_back(x.pow(static_cast<long long>(o / p)));
      }
      return out;
    };
    auto witness = [&](std::vector<Permutation> gens) {
      const PermGroup h(n, std::move(gens));
      return h.order() < order && h.is_transitive();
    };
    for (int t = 0; t < opts.random_tries; ++t) {
      const Permutation x = g.random_element(rng);
      const Permutation y = g.random_element(rng);
      const auto px = prime_powers(x);
      const auto py = prime_powers(y);
      for (const auto& a : px) {
        for (const auto& b : py) {
          if (witness({a, b})) return false;
        }
        if (witness({a, y}) || witness({x, a})) return false;
      }
      if (t % 8 == 0) {
        for (const auto& z : px) {
          const PermGroup nc = normal_closure(g, std::span<const Permutation>(&z, 1));
          if (nc.order() < order && nc.is_transitive()) return false;
        }
      }
    }
    throw BudgetExceeded("minimal transitivity of a group beyond the lattice budget", order);
  }
  bool found = false;
  all_subgroup_classes(g, opts.budget, [&](const PermGroup& h) {
    found = h.order() < order && h.is_transitive();
    return found;
  });
  return !found;
}

}  // namespace transcat
