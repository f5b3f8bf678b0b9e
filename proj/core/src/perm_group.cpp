#include "transcat/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace transcat {

namespace {

int first_moved_point(const Permutation& g) {
  for (int i = 0; i < g.degree(); ++i) {
    if (g[i] != i) return i;
  }
  return -1;
}

bool fixes_all(const Permutation& g, const std::vector<int>& pts, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    if (g[pts[i]] != pts[i]) return false;
  }
  return true;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, const BuildOptions& opts)
    : degree_(degree) {
  if (degree <= 0 || degree > kMaxDegree) {
    throw Error("group degree out of range: " + std::to_string(degree));
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error("generator degree " + std::to_string(g.degree()) + " does not match group degree " +
                  std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
      gens_.push_back(g);
    }
  }
  std::vector<int> base;
  for (int p : opts.base_prefix) {
    if (p < 0 || p >= degree) throw Error("base point out of range");
    if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
  }
  bool done = false;
  if (opts.known_order) {
    done = random_schreier_sims(base, *opts.known_order, opts.seed);
  }
  if (!done) schreier_sims(base);
  finish();
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> cyc(static_cast<std::size_t>(degree));
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Permutation::from_cycles(degree, {cyc}));
    gens.push_back(Permutation::from_cycles(degree, {{0, 1}}));
  }
  std::uint64_t ord = 1;
  for (int i = 2; i <= degree; ++i) ord *= static_cast<std::uint64_t>(i);
  BuildOptions opts;
  opts.known_order = ord;
  return PermGroup(degree, std::move(gens), opts);
}

PermGroup PermGroup::alternating(int degree) {
  std::vector<Permutation> gens;
  for (int i = 2; i < degree; ++i) gens.push_back(Permutation::from_cycles(degree, {{0, 1, i}}));
  std::uint64_t ord = 1;
  for (int i = 3; i <= degree; ++i) ord *= static_cast<std::uint64_t>(i);
  BuildOptions opts;
  opts.known_order = ord;
  return PermGroup(degree, std::move(gens), opts);
}

PermGroup PermGroup::cyclic(int degree) {
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  std::iota(cyc.begin(), cyc.end(), 0);
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(Permutation::from_cycles(degree, {cyc}));
  return PermGroup(degree, std::move(gens));
}

void PermGroup::compute_orbit(Level& lev) const {
  lev.pos.fill(-1);
  lev.orbit.assign(1, lev.base);
  lev.trans.assign(1, Permutation(degree_));
  lev.inv.assign(1, Permutation(degree_));
  lev.pos[static_cast<std::size_t>(lev.base)] = 0;
  for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
    const int p = lev.orbit[i];
    for (const auto& s : lev.gens) {
      const int q = s[p];
      if (lev.pos[static_cast<std::size_t>(q)] < 0) {
        lev.pos[static_cast<std::size_t>(q)] = static_cast<std::int16_t>(lev.orbit.size());
        lev.orbit.push_back(q);
        Permutation t = lev.trans[i] * s;
        lev.inv.push_back(t.inverse());
        lev.trans.push_back(std::move(t));
      }
    }
  }
}

std::pair<Permutation, int> PermGroup::sift(const Permutation& g, int from_level) const {
  Permutation h = g;
  for (int l = from_level; l < chain_length(); ++l) {
    const Level& lev = levels_[static_cast<std::size_t>(l)];
    const int p = h[lev.base];
    const int idx = lev.pos[static_cast<std::size_t>(p)];
    if (idx < 0) return {h, l};
    if (idx > 0) h *= lev.inv[static_cast<std::size_t>(idx)];
  }
  return {h, chain_length()};
}

void PermGroup::schreier_sims(std::vector<int> base) {
  // Deterministic Schreier-Sims.
  for (const auto& s : gens_) {
    if (fixes_all(s, base, base.size())) base.push_back(first_moved_point(s));
  }
  levels_.clear();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level lev;
    lev.base = base[i];
    for (const auto& s : gens_) {
      if (fixes_all(s, base, i)) lev.gens.push_back(s);
    }
    compute_orbit(lev);
    levels_.push_back(std::move(lev));
  }
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level& lev = levels_[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; !restart && a < lev.orbit.size(); ++a) {
      for (std::size_t si = 0; !restart && si < lev.gens.size(); ++si) {
        const Permutation& s = lev.gens[si];
        const int q = s[lev.orbit[a]];
        const int qi = lev.pos[static_cast<std::size_t>(q)];
        Permutation h = lev.trans[a] * s;
        h *= lev.inv[static_cast<std::size_t>(qi)];
        if (h.is_identity()) continue;
        auto [res, j] = sift(h, i + 1);
        if (j == chain_length() && res.is_identity()) continue;
        if (j == chain_length()) {
          Level extra;
          extra.base = first_moved_point(res);
          levels_.push_back(std::move(extra));
        }
        for (int l = i + 1; l <= j; ++l) {
          Level& target = levels_[static_cast<std::size_t>(l)];
          target.gens.push_back(res);
          compute_orbit(target);
        }
        i = j;
        restart = true;
      }
    }
    if (!restart) --i;
  }
  // Drop levels whose orbit is trivial; they carry no information.
  std::vector<Level> kept;
  for (auto& lev : levels_) {
    if (lev.orbit.size() > 1) kept.push_back(std::move(lev));
  }
  levels_ = std::move(kept);
}

bool PermGroup::random_schreier_sims(std::vector<int> base, std::uint64_t target, std::uint64_t seed) {
  for (const auto& s : gens_) {
    if (fixes_all(s, base, base.size())) base.push_back(first_moved_point(s));
  }
  levels_.clear();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level lev;
    lev.base = base[i];
    for (const auto& s : gens_) {
      if (fixes_all(s, base, i)) lev.gens.push_back(s);
    }
    compute_orbit(lev);
    levels_.push_back(std::move(lev));
  }
  auto current = [&]() {
    std::uint64_t o = 1;
    for (const auto& lev : levels_) o *= lev.orbit.size();
    return o;
  };
  if (gens_.empty()) return target == 1;
  ProductReplacement pr(gens_, degree_, seed);
  int misses = 0;
  constexpr int kMaxMisses = 64;
  while (current() < target && misses < kMaxMisses) {
    auto [res, j] = sift(pr.next());
    if (j == chain_length() && res.is_identity()) {
      ++misses;
      continue;
    }
    misses = 0;
    if (j == chain_length()) {
      Level extra;
      extra.base = first_moved_point(res);
      levels_.push_back(std::move(extra));
    }
    for (int l = 1; l <= j; ++l) {
      Level& lev = levels_[static_cast<std::size_t>(l)];
      lev.gens.push_back(res);
      compute_orbit(lev);
    }
  }
  if (current() != target) {
    // Either the order hint was wrong or sampling was unlucky: keep the
    // generators found so far and verify deterministically.
    levels_.clear();
    return false;
  }
  std::vector<Level> kept;
  for (auto& lev : levels_) {
    if (lev.orbit.size() > 1) kept.push_back(std::move(lev));
  }
  levels_ = std::move(kept);
  return true;
}

void PermGroup::finish() {
  order_ = 1;
  for (const auto& lev : levels_) order_ *= lev.orbit.size();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [res, j] = sift(g);
  return j == chain_length() && res.is_identity();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lev : levels_) b.push_back(lev.base);
  return b;
}

const Permutation* PermGroup::transversal(int level, int point) const {
  const Level& lev = levels_[static_cast<std::size_t>(level)];
  const int idx = lev.pos[static_cast<std::size_t>(point)];
  return idx < 0 ? nullptr : &lev.trans[static_cast<std::size_t>(idx)];
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lev : levels_) {
    for (const auto& s : lev.gens) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> orb{point};
  std::array<bool, kMaxDegree> seen{};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const auto& s : gens_) {
      const int q = s[orb[i]];
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = true;
        orb.push_back(q);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int p = 0; p < degree_; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    auto orb = orbit(p);
    for (int q : orb) seen[static_cast<std::size_t>(q)] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return static_cast<int>(orbit(0).size()) == degree_; }

PermGroup PermGroup::rebased(std::span<const int> prefix) const {
  BuildOptions opts;
  opts.base_prefix.assign(prefix.begin(), prefix.end());
  opts.known_order = order_;
  return PermGroup(degree_, strong_generators(), opts);
}

PermGroup PermGroup::stabilizer(int point) const {
  const int pts[1] = {point};
  return pointwise_stabilizer(pts);
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const int> points) const {
  if (is_trivial()) return *this;
  const PermGroup re = rebased(points);
  // Levels whose base point lies in `points` come first in `re`.
  int l = 0;
  while (l < re.chain_length() &&
         std::find(points.begin(), points.end(), re.base_point(l)) != points.end()) {
    ++l;
  }
  std::uint64_t ord = 1;
  std::vector<Permutation> gens;
  for (int k = l; k < re.chain_length(); ++k) ord *= re.level_orbit(k).size();
  if (l < re.chain_length()) gens = re.level_generators(l);
  BuildOptions opts;
  opts.known_order = ord;
  return PermGroup(degree_, std::move(gens), opts);
}

PermGroup PermGroup::conjugated(const Permutation& c) const {
  std::vector<Permutation> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.conjugate(c));
  BuildOptions opts;
  opts.known_order = order_;
  return PermGroup(degree_, std::move(gens), opts);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_ || other.order_ % order_ != 0) return false;
  return std::all_of(gens_.begin(), gens_.end(), [&](const auto& g) { return other.contains(g); });
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

bool PermGroup::normalizes(const PermGroup& sub) const {
  for (const auto& g : gens_) {
    for (const auto& s : sub.generators()) {
      if (!sub.contains(s.conjugate(g))) return false;
    }
  }
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    for (std::size_t j = i + 1; j < gens_.size(); ++j) {
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    }
  }
  return true;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (int l = chain_length() - 1; l >= 0; --l) {
    const Level& lev = levels_[static_cast<std::size_t>(l)];
    std::uniform_int_distribution<std::size_t> pick(0, lev.trans.size() - 1);
    g *= lev.trans[pick(rng)];
  }
  return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t budget) const {
  if (order_ > budget) throw BudgetExceeded("element enumeration budget exceeded", order_);
  std::vector<Permutation> out;
  out.reserve(order_);
  for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

bool PermGroup::has_lex_base() const {
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (levels_[i].base <= levels_[i - 1].base) return false;
  }
  // Every point below the last base point that is not a base point must be
  // fixed by the corresponding stabilizer; a full ascending prefix ensures it.
  return true;
}

PermGroup PermGroup::with_lex_base() const {
  std::vector<int> all(static_cast<std::size_t>(degree_));
  std::iota(all.begin(), all.end(), 0);
  return rebased(all);
}

Permutation PermGroup::lex_min_in_coset(const Permutation& x) const {
  // Elements n * x map p to x(n(p)).  With an ascending base the greedy
  // choice level by level yields the least image list.
  Permutation h = x;
  for (const auto& lev : levels_) {
    int best = -1;
    int best_img = kMaxDegree;
    for (std::size_t i = 0; i < lev.orbit.size(); ++i) {
      const int img = h[lev.orbit[i]];
      if (img < best_img) {
        best_img = img;
        best = static_cast<int>(i);
      }
    }
    if (best > 0) h = lev.trans[static_cast<std::size_t>(best)] * h;
  }
  return h;
}

std::vector<ElementClass> class_reps(const PermGroup& g, std::uint64_t budget) {
  const auto elems = g.elements(budget);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> seen(elems.size(), false);
  std::vector<ElementClass> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    Permutation rep = elems[i];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      for (const auto& s : g.generators()) {
        const Permutation c = elems[cls[k]].conjugate(s);
        const std::size_t j = index.at(c);
        if (!seen[j]) {
          seen[j] = true;
          cls.push_back(j);
          if (c < rep) rep = c;
        }
      }
    }
    out.push_back({rep, rep.order(), cls.size()});
  }
  std::sort(out.begin(), out.end(), [](const ElementClass& a, const ElementClass& b) {
    if (a.element_order != b.element_order) return a.element_order < b.element_order;
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  return out;
}

PermGroup join(const PermGroup& a, std::span<const Permutation> extra) {
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup join(const PermGroup& a, const PermGroup& b) { return join(a, b.generators()); }

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> gens) {
  std::vector<Permutation> cur;
  for (const auto& x : gens) {
    if (!x.is_identity()) cur.push_back(x);
  }
  PermGroup n(g.degree(), cur);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = n.generators();
    for (const auto& x : snapshot) {
      for (const auto& s : g.generators()) {
        const Permutation c = x.conjugate(s);
        if (!n.contains(c)) {
          cur.push_back(c);
          n = PermGroup(g.degree(), cur);
          grew = true;
        }
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(c);
    }
  }
  return normal_closure(g, comms);
}

ProductReplacement::ProductReplacement(std::span<const Permutation> gens, int degree, std::uint64_t seed)
    : acc_(degree), rng_(seed) {
  slots_.assign(gens.begin(), gens.end());
  if (slots_.empty()) slots_.push_back(Permutation(degree));
  const std::size_t n0 = slots_.size();
  while (slots_.size() < 10) slots_.push_back(slots_[slots_.size() % n0]);
  for (int i = 0; i < 50; ++i) next();
}

Permutation ProductReplacement::next() {
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  const std::size_t i = pick(rng_);
  std::size_t j = pick(rng_);
  while (j == i) j = pick(rng_);
  if (rng_() & 1) {
    slots_[i] = slots_[i] * slots_[j];
  } else {
    slots_[i] = slots_[j] * slots_[i];
  }
  acc_ = acc_ * slots_[i];
  return acc_;
}

std::vector<Permutation> small_generating_set(const PermGroup& g, std::uint64_t seed) {
  if (g.order() == 1) return {};
  std::mt19937_64 rng(seed);
  for (std::size_t d = 1; d < g.generators().size(); ++d) {
    for (int attempt = 0; attempt < 400; ++attempt) {
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < d; ++i) gens.push_back(g.random_element(rng));
      if (PermGroup(g.degree(), gens).order() == g.order()) return gens;
    }
  }
  return g.generators();
}

}  // namespace transcat
