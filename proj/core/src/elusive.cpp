#include "transcat/elusive.hpp"

#include <algorithm>

#include "transcat/canonical.hpp"
#include "transcat/orbitals.hpp"

namespace transcat {

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// The p-part of x, i.e. x raised to the p'-part of its order.
Permutation p_element(const Permutation& x, std::uint64_t p) {
  const std::uint64_t o = x.order();
  return x.pow(static_cast<long long>(o / p_part(o, p)));
}

bool is_witness(const Permutation& x, std::uint64_t p) { return x.fixed_points() == 0 && x.order() == p; }

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PermGroup> random_sylow_subgroup(const PermGroup& g, std::uint64_t p, int tries, std::mt19937_64& rng) {
  const std::uint64_t target = p_part(g.order(), p);
  PermGroup sylow = PermGroup::trivial(g.degree());
  if (target == 1) return sylow;
  for (int t = 0; t < tries; ++t) {
    const Permutation x = p_element(g.random_element(rng), p);
    if (x.is_identity() || sylow.contains(x)) continue;
    PermGroup bigger = join(sylow, std::vector<Permutation>{x});
    if (!is_power_of(bigger.order(), p)) continue;
    sylow = std::move(bigger);
    if (sylow.order() == target) return sylow;
  }
  return std::nullopt;
}

std::optional<Permutation> prime_order_derangement(const PermGroup& g, const DerangementOptions& opts) {
  const int n = g.degree();
  // A derangement of prime order p has only p-cycles, so p divides n.
  std::vector<std::uint64_t> open;
  for (auto p : prime_factors(g.order())) {
    if (static_cast<std::uint64_t>(n) % p == 0) open.push_back(p);
  }
  if (opts.random_stage) {
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint64_t> unsettled;
    for (auto p : open) {
      // Every element of order p is conjugate into a Sylow p-subgroup.
      const auto sylow = random_sylow_subgroup(g, p, opts.sylow_tries, rng);
      if (!sylow || sylow->order() > opts.budget) {
        unsettled.push_back(p);
        continue;
      }
      std::optional<Permutation> found;
      sylow->for_each_element([&](const Permutation& x) {
        if (!found && is_witness(x, p)) found = x;
      });
      if (found) return found;
    }
    for (int t = 0; t < opts.random_tries && !unsettled.empty(); ++t) {
      const Permutation x = g.random_element(rng);
      const std::uint64_t o = x.order();
      for (auto p : unsettled) {
        if (o % p != 0) continue;
        Permutation y = x.pow(static_cast<long long>(o / p));
        if (y.fixed_points() == 0) return y;
      }
    }
    open = std::move(unsettled);
  }
  if (open.empty()) return std::nullopt;
  if (g.order() > opts.budget) throw BudgetExceeded("derangement scan", g.order());
  std::optional<Permutation> found;
  g.for_each_element([&](const Permutation& x) {
    if (found || x.fixed_points() != 0) return;
    const std::uint64_t o = x.order();
    if (std::find(open.begin(), open.end(), o) != open.end()) found = x;
  });
  return found;
}

PermGroup two_closure(const PermGroup& g) { return automorphism_group(orbital_digraph(orbital_structure(g))); }

std::string ElusiveReport::to_line() const {
  return std::to_string(degree) + '\t' + std::to_string(index) + '\t' +
         (elusive ? std::string("ELUSIVE") : witness->to_cycle_string()) + '\t' +
         (two_closed ? "2CLOSED" : "NOT2CLOSED");
}

ElusiveReport elusive_report(int degree, int index, const PermGroup& g, const DerangementOptions& opts) {
  ElusiveReport r;
  r.degree = degree;
  r.index = index;
  r.witness = prime_order_derangement(g, opts);
  r.elusive = !r.witness.has_value();
  r.two_closed = two_closure(g).order() == g.order();
  return r;
}

std::vector<ElusiveReport> elusive_census(const Catalogue& cat, const DerangementOptions& opts) {
  std::vector<ElusiveReport> out;
  for (const auto& e : cat.entries) out.push_back(elusive_report(cat.degree, e.index, e.group(), opts));
  return out;
}

}  // namespace transcat
