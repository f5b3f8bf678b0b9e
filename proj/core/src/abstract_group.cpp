#include "transcat/abstract_group.hpp"

#include <algorithm>

namespace transcat {

AbstractGroup::AbstractGroup(const PermGroup& regular) : n_(regular.degree()), regular_(regular) {
  if (regular.order() != static_cast<std::uint64_t>(n_) || !regular.is_transitive()) {
    throw Error("abstract group needs a regular permutation group");
  }
  const auto un = static_cast<std::size_t>(n_);
  elems_.assign(un, Permutation(n_));
  regular.for_each_element([&](const Permutation& x) { elems_[static_cast<std::size_t>(x[0])] = x; });
  table_.resize(un * un);
  inv_.resize(un);
  order_of_.resize(un);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) table_[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = elems_[static_cast<std::size_t>(b)][a];
  }
  for (int a = 0; a < n_; ++a) {
    int x = a;
    int k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    order_of_[static_cast<std::size_t>(a)] = k;
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) inv_[static_cast<std::size_t>(a)] = b;
    }
  }
  // Greedy: the element of largest order outside the current subgroup.
  std::vector<int> sub = closure({});
  while (static_cast<int>(sub.size()) < n_) {
    std::vector<bool> in(un, false);
    for (int x : sub) in[static_cast<std::size_t>(x)] = true;
    int best = -1;
    for (int a = 0; a < n_; ++a) {
      if (!in[static_cast<std::size_t>(a)] && (best < 0 || element_order(a) > element_order(best))) best = a;
    }
    gens_.push_back(best);
    sub = closure(gens_);
  }
}

std::vector<int> AbstractGroup::closure(const std::vector<int>& gens) const {
  std::vector<bool> in(static_cast<std::size_t>(n_), false);
  std::vector<int> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      const int y = mul(out[i], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

namespace {

class AutSearch {
 public:
  AutSearch(const AbstractGroup& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::vector<std::vector<int>> run() {
    images_.clear();
    extend(0);
    return std::move(out_);
  }

 private:
  // Map on <gens[0..k)> induced by the chosen images, or empty when the
  // images do not define an injective homomorphism.
  std::vector<int> induced(std::size_t k) const {
    const auto& gens = g_.generators();
    const auto n = static_cast<std::size_t>(g_.order());
    std::vector<int> phi(n, -1);
    std::vector<bool> hit(n, false);
    phi[0] = 0;
    hit[0] = true;
    std::vector<int> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        const int y = g_.mul(x, gens[j]);
        const int fy = g_.mul(phi[static_cast<std::size_t>(x)], images_[j]);
        if (phi[static_cast<std::size_t>(y)] < 0) {
          if (hit[static_cast<std::size_t>(fy)]) return {};
          phi[static_cast<std::size_t>(y)] = fy;
          hit[static_cast<std::size_t>(fy)] = true;
          queue.push_back(y);
        } else if (phi[static_cast<std::size_t>(y)] != fy) {
          return {};
        }
      }
    }
    return phi;
  }

  void extend(std::size_t k) {
    const auto& gens = g_.generators();
    if (k == gens.size()) {
      auto phi = induced(k);
      if (phi.empty()) return;
      if (out_.size() >= budget_) throw BudgetExceeded("automorphism search", out_.size() + 1);
      out_.push_back(std::move(phi));
      return;
    }
    const int want = g_.element_order(gens[k]);
    std::vector<bool> used(static_cast<std::size_t>(g_.order()), false);
    for (int x : g_.closure(images_)) used[static_cast<std::size_t>(x)] = true;
    for (int y = 0; y < g_.order(); ++y) {
      if (used[static_cast<std::size_t>(y)] || g_.element_order(y) != want) continue;
      images_.push_back(y);
      if (!induced(k + 1).empty()) extend(k + 1);
      images_.pop_back();
    }
  }

  const AbstractGroup& g_;
  std::uint64_t budget_;
  std::vector<int> images_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> AbstractGroup::automorphisms(std::uint64_t budget) const {
  return AutSearch(*this, budget).run();
}

PermGroup restrict_to_orbit_of_zero(const PermGroup& g) {
  std::vector<int> orbit = g.orbit(0);
  std::sort(orbit.begin(), orbit.end());
  std::vector<int> pos(static_cast<std::size_t>(g.degree()), -1);
  for (std::size_t i = 0; i < orbit.size(); ++i) pos[static_cast<std::size_t>(orbit[i])] = static_cast<int>(i);
  const int k = static_cast<int>(orbit.size());
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) img[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(s[orbit[static_cast<std::size_t>(i)]])];
    gens.push_back(Permutation::from_images(img));
  }
  return PermGroup(std::max(k, 1), std::move(gens));
}

}  // namespace transcat
