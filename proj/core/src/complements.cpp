#include "transcat/complements.hpp"

#include <algorithm>
#include <unordered_map>

namespace transcat {

namespace {

// Affine map from the unknown vector c (length nv) to V' = N / U:
// z = c * lin + off.
struct Affine {
  Matrix lin;
  Vec off;
};

struct Quotient {
  int p;
  const Subspace* lower;
  std::vector<int> free;  // non-pivot columns, the coordinates of N / U

  int dim() const { return static_cast<int>(free.size()); }
  Vec project(const Vec& v) const {
    const Vec r = lower->reduce(v);
    Vec out(free.size());
    for (std::size_t i = 0; i < free.size(); ++i) out[i] = r[static_cast<std::size_t>(free[i])];
    return out;
  }
  Vec lift(const Vec& q, int d) const {
    Vec v(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < free.size(); ++i) v[static_cast<std::size_t>(free[i])] = q[i];
    return v;
  }
};

Matrix zero_matrix(int rows, int cols) {
  return Matrix(static_cast<std::size_t>(rows), Vec(static_cast<std::size_t>(cols), 0));
}

}  // namespace

ComplementClasses complement_classes(const ComplementProblem& pr, std::uint64_t limit) {
  const int p = pr.layer.p();
  const int d = pr.layer.dim();
  const int degree = pr.layer.degree();
  Quotient q{p, &pr.lower, {}};
  for (int j = 0; j < d; ++j) {
    if (!std::binary_search(pr.lower.pivots.begin(), pr.lower.pivots.end(), j)) q.free.push_back(j);
  }
  const int dq = q.dim();
  const int r = static_cast<int>(pr.gens.size());
  const int nv = dq * r;

  std::vector<Matrix> act;
  for (const auto& g : pr.gens) {
    const Matrix full = pr.layer.conjugation_matrix(g);
    Matrix a;
    for (int f : q.free) a.push_back(q.project(full[static_cast<std::size_t>(f)]));
    act.push_back(std::move(a));
  }

  const PermGroup nlex = pr.normal.has_lex_base() ? pr.normal : pr.normal.with_lex_base();

  // Equations a . c = b stored as rows [a | b].
  Subspace eqs = Subspace::zero(p, nv + 1);
  bool inconsistent = false;

  std::unordered_map<Permutation, int, PermutationHash> index;
  std::vector<Permutation> rep;
  std::vector<Affine> z;
  index.emplace(nlex.lex_min_in_coset(Permutation(degree)), 0);
  rep.emplace_back(degree);
  z.push_back({zero_matrix(nv, dq), Vec(static_cast<std::size_t>(dq), 0)});

  for (std::size_t h = 0; h < rep.size() && !inconsistent; ++h) {
    for (int j = 0; j < r && !inconsistent; ++j) {
      const auto& g = pr.gens[static_cast<std::size_t>(j)];
      const auto& a = act[static_cast<std::size_t>(j)];
      const Permutation x = rep[h] * g;
      // Candidate value z(h) * A_j + c_j.
      Affine cand{mat_mul(z[h].lin, a, p), vec_mat(z[h].off, a, p)};
      for (int t = 0; t < dq; ++t) {
        cand.lin[static_cast<std::size_t>(j * dq + t)][static_cast<std::size_t>(t)] =
            static_cast<std::uint8_t>((cand.lin[static_cast<std::size_t>(j * dq + t)][static_cast<std::size_t>(t)] + 1) % p);
      }
      const Permutation key = nlex.lex_min_in_coset(x);
      const auto it = index.find(key);
      if (it == index.end()) {
        index.emplace(key, static_cast<int>(rep.size()));
        rep.push_back(x);
        z.push_back(std::move(cand));
        continue;
      }
      const auto o = static_cast<std::size_t>(it->second);
      const Vec rho = q.project(pr.layer.coords(rep[o].inverse() * x));
      // rho + cand - z(o) = 0.
      for (int t = 0; t < dq; ++t) {
        const auto tt = static_cast<std::size_t>(t);
        Vec row(static_cast<std::size_t>(nv + 1));
        for (int i = 0; i < nv; ++i) {
          const auto ii = static_cast<std::size_t>(i);
          row[ii] = static_cast<std::uint8_t>((cand.lin[ii][tt] + p - z[o].lin[ii][tt]) % p);
        }
        const int c = (rho[tt] + cand.off[tt] + p - z[o].off[tt]) % p;
        row[static_cast<std::size_t>(nv)] = static_cast<std::uint8_t>((p - c) % p);
        eqs.insert(std::move(row));
      }
      if (!eqs.pivots.empty() && eqs.pivots.back() == nv) inconsistent = true;
    }
  }

  ComplementClasses out;
  if (inconsistent) return out;
  out.quotient_order = rep.size();
  out.split = true;

  // Particular solution and kernel basis from the echelon form.
  std::vector<int> pivot_of(static_cast<std::size_t>(nv), -1);
  for (std::size_t i = 0; i < eqs.pivots.size(); ++i) pivot_of[static_cast<std::size_t>(eqs.pivots[i])] = static_cast<int>(i);
  Vec particular(static_cast<std::size_t>(nv), 0);
  for (std::size_t i = 0; i < eqs.pivots.size(); ++i) {
    particular[static_cast<std::size_t>(eqs.pivots[i])] = eqs.basis[i][static_cast<std::size_t>(nv)];
  }
  Matrix kernel;
  for (int f = 0; f < nv; ++f) {
    if (pivot_of[static_cast<std::size_t>(f)] >= 0) continue;
    Vec v(static_cast<std::size_t>(nv), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < eqs.pivots.size(); ++i) {
      const int c = eqs.basis[i][static_cast<std::size_t>(f)];
      v[static_cast<std::size_t>(eqs.pivots[i])] = static_cast<std::uint8_t>((p - c) % p);
    }
    kernel.push_back(std::move(v));
  }
  out.z1_dim = static_cast<int>(kernel.size());

  Subspace coboundaries = Subspace::zero(p, nv);
  for (int b = 0; b < dq; ++b) {
    Vec e(static_cast<std::size_t>(dq), 0);
    e[static_cast<std::size_t>(b)] = 1;
    Vec v(static_cast<std::size_t>(nv), 0);
    for (int j = 0; j < r; ++j) {
      const Vec w = vec_mat(e, act[static_cast<std::size_t>(j)], p);
      for (int t = 0; t < dq; ++t) {
        v[static_cast<std::size_t>(j * dq + t)] =
            static_cast<std::uint8_t>((e[static_cast<std::size_t>(t)] + p - w[static_cast<std::size_t>(t)]) % p);
      }
    }
    coboundaries.insert(std::move(v));
  }
  out.b1_dim = coboundaries.dim();
  Matrix classes_basis;
  Subspace grow = coboundaries;
  for (const auto& v : kernel) {
    if (grow.insert(v)) classes_basis.push_back(v);
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < classes_basis.size(); ++i) {
    count *= static_cast<std::uint64_t>(p);
    if (count > limit) throw BudgetExceeded("complement classes", count);
  }

  std::vector<Permutation> lower_elems;
  for (const auto& u : pr.lower.basis) lower_elems.push_back(pr.layer.element(u));
  std::uint64_t lower_order = 1;
  for (int i = 0; i < pr.lower.dim(); ++i) lower_order *= static_cast<std::uint64_t>(p);

  std::vector<int> digits(classes_basis.size(), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rem = idx;
    Vec c = particular;
    for (std::size_t i = 0; i < classes_basis.size(); ++i) {
      const int a = static_cast<int>(rem % static_cast<std::uint64_t>(p));
      rem /= static_cast<std::uint64_t>(p);
      if (a) c = vec_add(c, vec_scale(classes_basis[i], a, p), p);
    }
    std::vector<Permutation> gens = lower_elems;
    for (int j = 0; j < r; ++j) {
      Vec cj(c.begin() + j * dq, c.begin() + (j + 1) * dq);
      gens.push_back(pr.gens[static_cast<std::size_t>(j)] * pr.layer.element(q.lift(cj, d)));
    }
    BuildOptions opts;
    opts.known_order = out.quotient_order * lower_order;
    PermGroup comp(degree, std::move(gens), opts);
    if (comp.order() != *opts.known_order) throw Error("complement construction produced a subgroup of the wrong order");
    out.complements.push_back(std::move(comp));
  }
  return out;
}

}  // namespace transcat
