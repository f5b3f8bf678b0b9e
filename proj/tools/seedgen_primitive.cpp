#include "seedgen.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <numeric>
#include <random>

#include "transcat/blocks.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/lattice.hpp"

namespace seedgen {

using namespace transcat;

Field::Field(int p_, int e_) : p(p_), e(e_), q(1) {
  for (int i = 0; i < e; ++i) q *= p;
  // Find a monic polynomial of degree e for which x generates the unit group.
  for (int tail = 0; tail < q; ++tail) {
    std::vector<int> log(static_cast<std::size_t>(q), -1);
    std::vector<int> exp;
    int cur = 1;
    bool ok = true;
    for (int k = 0; k < q - 1; ++k) {
      if (log[static_cast<std::size_t>(cur)] != -1) {
        ok = false;
        break;
      }
      log[static_cast<std::size_t>(cur)] = k;
      exp.push_back(cur);
      cur = times_x(cur, tail);
    }
    if (ok && cur == 1) {
      log_ = std::move(log);
      exp_ = std::move(exp);
      return;
    }
  }
  throw Error("no primitive polynomial");
}

int Field::times_x(int a, int tail) const {
  // a(x) * x mod (x^e - tail(x)), digits base p, low degree first.
  std::vector<int> c(static_cast<std::size_t>(e + 1), 0);
  for (int i = 0, r = a; i < e; ++i, r /= p) c[static_cast<std::size_t>(i + 1)] = r % p;
  const int top = c[static_cast<std::size_t>(e)];
  int out = 0;
  for (int i = e - 1, t = tail; i >= 0; --i) {
    int pw = 1;
    for (int j = 0; j < i; ++j) pw *= p;
    const int ti = (t / pw) % p;
    out += ((c[static_cast<std::size_t>(i)] + top * ti) % p) * pw;
  }
  return out;
}

int Field::add(int a, int b) const {
  int out = 0;
  for (int pw = 1; pw < q; pw *= p) out += (((a / pw) % p + (b / pw) % p) % p) * pw;
  return out;
}

int Field::neg(int a) const {
  int out = 0;
  for (int pw = 1; pw < q; pw *= p) out += ((p - (a / pw) % p) % p) * pw;
  return out;
}

int Field::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>((log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)]) % (q - 1))];
}

int Field::inv(int a) const {
  if (a == 0) throw Error("inverse of zero");
  return exp_[static_cast<std::size_t>((q - 1 - log_[static_cast<std::size_t>(a)]) % (q - 1))];
}

int Field::pow(int a, int k) const {
  int r = 1;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Projective line: points 0..q-1 are field elements, q is infinity.
Permutation mobius(const Field& f, int a, int b, int c, int d, int frob = 1) {
  const int inf = f.q;
  std::vector<int> img(static_cast<std::size_t>(f.q + 1));
  for (int x = 0; x <= f.q; ++x) {
    int num, den;
    if (x == inf) {
      num = a;
      den = c;
    } else {
      const int y = f.pow(x, frob);
      num = f.add(f.mul(a, y), b);
      den = f.add(f.mul(c, y), d);
    }
    img[static_cast<std::size_t>(x)] = den == 0 ? inf : f.mul(num, f.inv(den));
  }
  return Permutation::from_images(img);
}

std::vector<Permutation> psl2(const Field& f) {
  return {mobius(f, 1, 1, 0, 1), mobius(f, f.mul(f.gen(), f.gen()), 0, 0, 1), mobius(f, 0, f.neg(1), 1, 0)};
}

Permutation diagonal(const Field& f) { return mobius(f, f.gen(), 0, 0, 1); }
Permutation frobenius(const Field& f) { return mobius(f, 1, 0, 0, 1, f.p); }

PermGroup make(int n, std::vector<Permutation> gens) { return PermGroup(n, std::move(gens)); }

// Points of PG(d-1, p) as normalized vectors, with SL(d, p) acting.
PermGroup projective_special_linear(int d, int p) {
  std::vector<std::vector<int>> pts;
  std::map<std::vector<int>, int> index;
  const int total = ipow(p, d);
  for (int v = 1; v < total; ++v) {
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int i = 0, r = v; i < d; ++i, r /= p) c[static_cast<std::size_t>(i)] = r % p;
    const auto lead = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (*lead != 1) continue;
    index[c] = static_cast<int>(pts.size());
    pts.push_back(c);
  }
  auto normalize = [&](std::vector<int> c) {
    const int lead = *std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    int inv = 1;
    while ((inv * lead) % p != 1) ++inv;
    for (int& x : c) x = (x * inv) % p;
    return c;
  };
  std::vector<Permutation> gens;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      std::vector<int> img;
      for (const auto& c : pts) {
        auto w = c;
        w[static_cast<std::size_t>(j)] = (w[static_cast<std::size_t>(j)] + c[static_cast<std::size_t>(i)]) % p;
        img.push_back(index.at(normalize(w)));
      }
      gens.push_back(Permutation::from_images(img));
    }
  }
  return make(static_cast<int>(pts.size()), gens);
}

// Sym(k) or Alt(k) acting on 2-subsets.
PermGroup on_pairs(const PermGroup& g) {
  const int k = g.degree();
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) index[{i, j}] = static_cast<int>(index.size());
  }
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<int> img(index.size());
    for (const auto& [pr, id] : index) {
      const int a = x[pr.first], b = x[pr.second];
      img[static_cast<std::size_t>(id)] = index.at({std::min(a, b), std::max(a, b)});
    }
    gens.push_back(Permutation::from_images(img));
  }
  return make(static_cast<int>(index.size()), gens);
}

// GL(d, p) on the p^d vectors (vectors as base-p integers).
PermGroup general_linear(int d, int p) {
  const int n = ipow(p, d);
  auto apply = [&](const std::vector<std::vector<int>>& rows) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> w(static_cast<std::size_t>(d), 0);
      for (int i = 0, r = v; i < d; ++i, r /= p) {
        for (int j = 0; j < d; ++j) {
          w[static_cast<std::size_t>(j)] += (r % p) * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
      }
      int out = 0;
      for (int j = d - 1; j >= 0; --j) out = out * p + w[static_cast<std::size_t>(j)] % p;
      img[static_cast<std::size_t>(v)] = out;
    }
    return Permutation::from_images(img);
  };
  std::vector<Permutation> gens;
  auto ident = [&] {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      auto m = ident();
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      gens.push_back(apply(m));
    }
  }
  int prim = 1;
  for (int a = 2; a < p; ++a) {
    int x = a, ord = 1;
    while (x != 1) {
      x = (x * a) % p;
      ++ord;
    }
    if (ord == p - 1) {
      prim = a;
      break;
    }
  }
  if (p > 2) {
    auto m = ident();
    m[0][0] = prim;
    gens.push_back(apply(m));
  }
  return make(n, gens);
}

std::vector<Permutation> translations(int d, int p) {
  const int n = ipow(p, d);
  std::vector<Permutation> out;
  for (int i = 0, unit = 1; i < d; ++i, unit *= p) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const int digit = (v / unit) % p;
      img[static_cast<std::size_t>(v)] = v - digit * unit + ((digit + 1) % p) * unit;
    }
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

// Affine groups p^d : G0 for the irreducible G0 <= GL(d, p), up to conjugacy.
std::vector<PermGroup> affine_primitive(int d, int p) {
  const auto gl = general_linear(d, p);
  const int n = gl.degree();
  std::vector<PermGroup> out;
  for (const auto& cls : all_subgroup_classes(gl)) {
    const auto& g0 = cls.representative;
    bool irreducible = true;
    for (int v = 1; v < n && irreducible; ++v) {
      // Span of the orbit of v: closure of the orbit under addition.
      std::vector<bool> in(static_cast<std::size_t>(n), false);
      std::vector<int> span{0};
      in[0] = true;
      for (int w : g0.orbit(v)) {
        if (in[static_cast<std::size_t>(w)]) continue;
        const std::size_t cur = span.size();
        for (std::size_t i = 0; i < cur; ++i) {
          int x = span[i];
          for (int m = 1; m < p; ++m) {
            // x + m*w, digit-wise.
            int sum = 0;
            for (int pw = 1, a = x, b = w; pw < n; pw *= p, a /= p, b /= p) sum += ((a % p + m * (b % p)) % p) * pw;
            if (!in[static_cast<std::size_t>(sum)]) {
              in[static_cast<std::size_t>(sum)] = true;
              span.push_back(sum);
            }
          }
        }
      }
      irreducible = static_cast<int>(span.size()) == n;
    }
    if (!irreducible) continue;
    auto gens = translations(d, p);
    for (const auto& x : g0.generators()) gens.push_back(x);
    out.push_back(make(n, gens));
  }
  return out;
}

std::vector<Permutation> one_based(int n, const char* text) {
  auto gens = parse_generators(text, n + 1);
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<int> img;
    for (int i = 1; i <= n; ++i) img.push_back(g[i] - 1);
    out.push_back(Permutation::from_images(img));
  }
  return out;
}

PermGroup mathieu11() { return make(11, one_based(11, "(1 2 3 4 5 6 7 8 9 10 11); (3 7 11 8)(4 10 5 6)")); }

PermGroup mathieu12() {
  return make(12, one_based(12, "(1 2 3 4 5 6 7 8 9 10 11); (3 7 11 8)(4 10 5 6); (1 12)(2 11)(3 6)(4 8)(5 9)(7 10)"));
}

// A subgroup of the given order generated by two random elements.
PermGroup random_subgroup(const PermGroup& g, std::uint64_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 200000; ++t) {
    const PermGroup h(g.degree(), {g.random_element(rng), g.random_element(rng)});
    if (h.order() == order) return h;
  }
  throw Error("no subgroup of order " + std::to_string(order) + " found");
}

// Action of g on the right cosets of h.
PermGroup coset_action(const PermGroup& g, const PermGroup& h) {
  const PermGroup hl = h.with_lex_base();
  std::map<Permutation, int> index;
  std::vector<Permutation> reps{Permutation(g.degree())};
  index[hl.lex_min_in_coset(reps[0])] = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto& x : g.generators()) {
      const Permutation y = reps[i] * x;
      if (index.emplace(hl.lex_min_in_coset(y), static_cast<int>(reps.size())).second) reps.push_back(y);
    }
  }
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    std::vector<int> img;
    for (const auto& r : reps) img.push_back(index.at(hl.lex_min_in_coset(r * x)));
    gens.push_back(Permutation::from_images(img));
  }
  return make(static_cast<int>(reps.size()), gens);
}

std::string affine_name(int d, int p, std::uint64_t order) {
  std::uint64_t pd = 1;
  for (int i = 0; i < d; ++i) pd *= static_cast<std::uint64_t>(p);
  return std::to_string(p) + (d > 1 ? "^" + std::to_string(d) : "") + ":" + std::to_string(order / pd);
}

}  // namespace

std::vector<PrimitiveSeed> primitive_seeds(int max_degree) {
  std::vector<std::pair<std::string, PermGroup>> cand;
  auto add = [&](std::string name, PermGroup g) { cand.emplace_back(std::move(name), std::move(g)); };

  for (int n = 2; n <= max_degree; ++n) {
    add("A" + std::to_string(n), n > 2 ? PermGroup::alternating(n) : PermGroup::symmetric(2));
    add("S" + std::to_string(n), PermGroup::symmetric(n));
  }
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int d = 1; d <= 4; ++d) {
      int n = 1;
      for (int i = 0; i < d; ++i) n *= p;
      if (n > max_degree || n < 3) continue;
      for (auto& g : affine_primitive(d, p)) add(affine_name(d, p, g.order()), std::move(g));
    }
  }
  for (auto [p, e] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}}) {
    const Field f(p, e);
    if (f.q + 1 > max_degree) continue;
    const std::string q = std::to_string(f.q);
    const int n = f.q + 1;
    auto gens = psl2(f);
    add("PSL(2," + q + ")", make(n, gens));
    auto pgl = gens;
    pgl.push_back(diagonal(f));
    add("PGL(2," + q + ")", make(n, pgl));
    if (e > 1) {
      auto pgaml = pgl;
      pgaml.push_back(frobenius(f));
      add("PGammaL(2," + q + ")", make(n, pgaml));
      auto psigma = gens;
      psigma.push_back(frobenius(f));
      add("PSigmaL(2," + q + ")", make(n, psigma));
      if (f.q == 9) {
        auto m10 = gens;
        m10.push_back(mobius(f, f.gen(), 0, 0, 1, 3));
        add("M10", make(n, m10));
      }
    }
  }
  if (max_degree >= 7) add("PSL(3,2)", projective_special_linear(3, 2));
  if (max_degree >= 13) add("PSL(3,3)", projective_special_linear(3, 3));
  if (max_degree >= 15) {
    const auto l42 = projective_special_linear(4, 2);
    add("PSL(4,2)", l42);
    add("A7", random_subgroup(l42, 2520, 7));
  }
  if (max_degree >= 10) {
    add("A5", on_pairs(PermGroup::alternating(5)));
    add("S5", on_pairs(PermGroup::symmetric(5)));
  }
  if (max_degree >= 15) {
    add("A6", on_pairs(PermGroup::alternating(6)));
    add("S6", on_pairs(PermGroup::symmetric(6)));
  }
  if (max_degree >= 11) {
    const auto m11 = mathieu11();
    add("M11", m11);
    const auto l211 = random_subgroup(m11, 660, 11);
    add("PSL(2,11)", l211);
    if (max_degree >= 12) {
      add("M11", coset_action(m11, l211));
      add("M12", mathieu12());
    }
  }

  // Keep the first name for each Sym(n)-class, ordered by degree then order.
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
    if (a.second.degree() != b.second.degree()) return a.second.degree() < b.second.degree();
    return a.second.order() < b.second.order();
  });
  std::map<int, ConjugacyClassifier> classes;
  std::vector<PrimitiveSeed> out;
  for (auto& [name, g] : cand) {
    if (!g.is_transitive() || !is_primitive(g)) continue;
    if (!classes[g.degree()].add(g).second) continue;
    out.push_back({g.degree(), g.order(), name, g.generators()});
  }
  return out;
}

}  // namespace seedgen
