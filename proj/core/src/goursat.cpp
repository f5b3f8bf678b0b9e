#include <algorithm>
#include <set>

#include "transcat/blocks.hpp"
#include "transcat/classify.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/lattice.hpp"

namespace transcat {

namespace {

// (a, b) acting on {0..k-1} and {k..2k-1}.
Permutation pair(const Permutation& a, const Permutation& b) {
  const int k = a.degree();
  std::vector<int> img(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    img[static_cast<std::size_t>(i)] = a[i];
    img[static_cast<std::size_t>(k + i)] = k + b[i];
  }
  return Permutation::from_images(img);
}

// (1, z) followed by the swap i <-> k + i.
Permutation swap_with(const Permutation& z) {
  const int k = z.degree();
  std::vector<int> img(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    img[static_cast<std::size_t>(i)] = k + i;
    img[static_cast<std::size_t>(k + i)] = z[i];
  }
  return Permutation::from_images(img);
}

// Smallest t > 0 with x^t in n.
int order_mod(const Permutation& x, const PermGroup& n) {
  Permutation y = x;
  int t = 1;
  while (!n.contains(y)) {
    y = y * x;
    ++t;
  }
  return t;
}

// Words in the generators whose orders modulo the kernels must agree under
// an isomorphism of the quotients.
std::vector<Permutation> test_words(const std::vector<Permutation>& g) {
  std::vector<Permutation> w = g;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      w.push_back(g[i] * g[j]);
      w.push_back(g[i] * g[j].inverse());
      w.push_back(g[i] * g[i] * g[j]);
      w.push_back(g[i].inverse() * g[j].inverse() * g[i] * g[j]);
    }
  }
  return w;
}

struct Quotient {
  PermGroup n;                      // with a lexicographic base
  std::vector<Permutation> transversal;  // canonical coset representatives
};

Quotient quotient_of(const PermGroup& a, const PermGroup& n) {
  Quotient q{n.with_lex_base(), {}};
  std::set<Permutation> seen;
  a.for_each_element([&](const Permutation& x) {
    Permutation c = q.n.lex_min_in_coset(x);
    if (seen.insert(c).second) q.transversal.push_back(std::move(c));
  });
  std::sort(q.transversal.begin(), q.transversal.end());
  return q;
}

class TwoBlockSearch {
 public:
  TwoBlockSearch(int k, const PermGroup& a, std::uint64_t seed)
      : k_(k), a_(a), gens_(small_generating_set(a, seed)), words_(test_words(gens_)) {
    for (const auto& c : class_reps(a)) reps_.push_back(c.representative);
  }

  void run(std::vector<PermGroup>& out) {
    const auto normals = normal_subgroups(a_);
    for (const auto& n2 : normals) {
      const Quotient q2 = quotient_of(a_, n2);
      std::set<Permutation> first;
      for (const auto& r : reps_) {
        Permutation c = q2.n.lex_min_in_coset(r);
        if (first.insert(c).second) x1_.push_back(std::move(c));
      }
      for (const auto& n1 : normals) {
        if (n1.order() != n2.order()) continue;
        word_orders_.clear();
        for (const auto& w : words_) word_orders_.push_back(order_mod(w, n1));
        n1_ = &n1;
        q2_ = &q2;
        x_.assign(gens_.size(), Permutation(k_));
        choose(0, out);
      }
      x1_.clear();
    }
  }

 private:
  // Assigns x_i for generator i, pruning by orders of words mod the kernels.
  void choose(std::size_t i, std::vector<PermGroup>& out) {
    if (i == gens_.size()) {
      build(out);
      return;
    }
    const auto& pool = i == 0 ? x1_ : q2_->transversal;
    for (const auto& x : pool) {
      x_[i] = x;
      if (!orders_agree(i)) continue;
      choose(i + 1, out);
    }
  }

  bool orders_agree(std::size_t upto) const {
    if (order_mod(x_[upto], q2_->n) != word_orders_[upto]) return false;
    if (upto + 1 < gens_.size()) return true;
    const auto w = test_words(x_);
    for (std::size_t j = gens_.size(); j < w.size(); ++j) {
      if (order_mod(w[j], q2_->n) != word_orders_[j]) return false;
    }
    return true;
  }

  void build(std::vector<PermGroup>& out) {
    const PermGroup& n1 = *n1_;
    const PermGroup& n2 = q2_->n;
    std::vector<Permutation> x_n2 = x_;
    for (const auto& y : n2.generators()) x_n2.push_back(y);
    if (PermGroup(k_, x_n2).order() != a_.order()) return;
    std::vector<Permutation> g0_gens;
    const Permutation one(k_);
    for (std::size_t i = 0; i < gens_.size(); ++i) g0_gens.push_back(pair(gens_[i], x_[i]));
    for (const auto& y : n1.generators()) g0_gens.push_back(pair(y, one));
    for (const auto& y : n2.generators()) g0_gens.push_back(pair(one, y));
    const PermGroup g0(2 * k_, g0_gens);
    if (g0.order() != a_.order() * n2.order()) return;
    for (const auto& z : q2_->transversal) {
      const Permutation s = swap_with(z);
      if (!g0.contains(s * s)) continue;
      const Permutation si = s.inverse();
      bool normal = true;
      for (const auto& g : g0_gens) {
        if (!g0.contains(si * g * s)) {
          normal = false;
          break;
        }
      }
      if (!normal) continue;
      std::vector<Permutation> gens = g0_gens;
      gens.push_back(s);
      BuildOptions opts;
      opts.known_order = 2 * g0.order();
      PermGroup g(2 * k_, gens, opts);
      if (!seen_.add(g).second) continue;
      out.push_back(std::move(g));
    }
  }

  int k_;
  PermGroup a_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> words_;
  std::vector<Permutation> reps_;
  std::vector<Permutation> x1_;
  std::vector<Permutation> x_;
  std::vector<int> word_orders_;
  const PermGroup* n1_ = nullptr;
  const Quotient* q2_ = nullptr;
  ConjugacyClassifier seen_;
};

}  // namespace

std::vector<PermGroup> goursat_two_blocks(int k, const Catalogue& degree_k) {
  if (k < 3) throw Error("two-block enumeration needs block size at least 3");
  if (degree_k.degree != k) throw Error("catalogue degree does not match the block size");
  std::vector<PermGroup> candidates;
  for (const auto& e : degree_k.entries) {
    TwoBlockSearch search(k, e.group(), degree_k.seed + static_cast<std::uint64_t>(e.index));
    search.run(candidates);
  }
  std::vector<PermGroup> out;
  ConjugacyClassifier classes;
  for (auto& g : candidates) {
    bool smaller = false;
    for (const auto& b : minimal_block_systems(g)) smaller = smaller || b.block_size < k;
    if (smaller) continue;
    if (classes.add(g).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace transcat
