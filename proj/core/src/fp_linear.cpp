#include "transcat/fp_linear.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace transcat {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  throw Error("no inverse modulo " + std::to_string(p));
}

Vec vec_add(const Vec& a, const Vec& b, int p) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
  return r;
}

Vec vec_scale(const Vec& a, int s, int p) {
  s %= p;
  if (s < 0) s += p;
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint8_t>((a[i] * s) % p);
  return r;
}

Vec vec_mat(const Vec& v, const Matrix& m, int p) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> acc(cols, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) acc[j] += v[i] * m[i][j];
  }
  Vec r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = static_cast<std::uint8_t>(acc[j] % p);
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, int p) {
  Matrix r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(vec_mat(row, b, p));
  return r;
}

Matrix identity_matrix(int d) {
  Matrix m(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), 0));
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Subspace Subspace::full(int p, int d) {
  Subspace s{p, d, identity_matrix(d), {}};
  for (int i = 0; i < d; ++i) s.pivots.push_back(i);
  return s;
}

Subspace Subspace::span(int p, int d, const Matrix& vectors) {
  Subspace s = zero(p, d);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const int c = v[static_cast<std::size_t>(pivots[r])];
    if (c == 0) continue;
    const int f = p - c;
    for (int j = 0; j < d; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      v[jj] = static_cast<std::uint8_t>((v[jj] + f * basis[r][jj]) % p);
    }
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::uint8_t x) { return x == 0; });
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int j = 0; j < d; ++j) {
    if (v[static_cast<std::size_t>(j)] != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return false;
  v = vec_scale(v, inverse_mod(v[static_cast<std::size_t>(piv)], p), p);
  // Clear the new pivot column from the existing rows.
  for (auto& row : basis) {
    const int c = row[static_cast<std::size_t>(piv)];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      row[jj] = static_cast<std::uint8_t>((row[jj] + (p - c) * v[jj]) % p);
    }
  }
  const auto at = std::lower_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
  pivots.insert(pivots.begin() + at, piv);
  basis.insert(basis.begin() + at, std::move(v));
  return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis.begin(), basis.end(), [&](const Vec& v) { return other.contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis) s.insert(v);
  return s;
}

bool Subspace::invariant_under(const Matrix& m) const {
  return std::all_of(basis.begin(), basis.end(), [&](const Vec& v) { return contains(vec_mat(v, m, p)); });
}

std::string Subspace::key() const {
  std::string s;
  s.reserve(basis.size() * static_cast<std::size_t>(d) + 1);
  for (const auto& v : basis) {
    for (auto x : v) s += static_cast<char>('0' + x);
    s += '|';
  }
  return s;
}

namespace {

void spin_into(const Module& m, Subspace& s, std::deque<Vec> queue) {
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : m.action) {
      Vec w = vec_mat(v, a, m.p);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
}

}  // namespace

Subspace Module::spin(const Vec& v) const {
  Subspace s = Subspace::zero(p, d);
  if (s.insert(v)) spin_into(*this, s, {v});
  return s;
}

Subspace Module::spin(const Subspace& start) const {
  Subspace s = start;
  spin_into(*this, s, std::deque<Vec>(start.basis.begin(), start.basis.end()));
  return s;
}

namespace {

constexpr std::size_t kSubmoduleBudget = 1'000'000;

// Non-zero vectors of F_p^d with first non-zero entry 1, supported off the
// given pivot columns.
template <class F>
void for_each_projective(int p, int d, const std::vector<int>& skip, F&& f) {
  std::vector<int> free;
  for (int j = 0; j < d; ++j) {
    if (!std::binary_search(skip.begin(), skip.end(), j)) free.push_back(j);
  }
  const int k = static_cast<int>(free.size());
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    int i = k - 1;
    while (i >= 0 && digits[static_cast<std::size_t>(i)] == p - 1) digits[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++digits[static_cast<std::size_t>(i)];
    int lead = -1;
    for (int t = 0; t < k; ++t) {
      if (digits[static_cast<std::size_t>(t)] != 0) {
        lead = t;
        break;
      }
    }
    if (digits[static_cast<std::size_t>(lead)] != 1) continue;
    Vec v(static_cast<std::size_t>(d), 0);
    for (int t = 0; t < k; ++t) {
      v[static_cast<std::size_t>(free[static_cast<std::size_t>(t)])] =
          static_cast<std::uint8_t>(digits[static_cast<std::size_t>(t)]);
    }
    f(v);
  }
}

}  // namespace

std::vector<Subspace> submodules(const Module& m) {
  if (m.d > kMaxModuleDimension) {
    throw Error("module dimension " + std::to_string(m.d) + " above " +
                std::to_string(kMaxModuleDimension));
  }
  std::vector<Subspace> out{Subspace::zero(m.p, m.d)};
  std::unordered_set<std::string> seen{out[0].key()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Subspace u = out[i];
    if (u.dim() == m.d) continue;
    for_each_projective(m.p, m.d, u.pivots, [&](const Vec& v) {
      Subspace s = u;
      if (!s.insert(v)) return;
      spin_into(m, s, {v});
      if (seen.insert(s.key()).second) {
        out.push_back(std::move(s));
        if (out.size() > kSubmoduleBudget) throw BudgetExceeded("submodule enumeration", out.size());
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis < b.basis;
  });
  return out;
}

std::vector<Subspace> maximal_submodules(const Module& m) {
  const auto all = submodules(m);
  std::vector<Subspace> out;
  for (const auto& u : all) {
    if (u.dim() == m.d) continue;
    bool maximal = true;
    for (const auto& w : all) {
      if (w.dim() > u.dim() && w.dim() < m.d && u.is_subspace_of(w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(u);
  }
  return out;
}

Module permutation_module(const PermGroup& g, int p) {
  Module m{p, g.degree(), {}};
  for (const auto& x : g.generators()) {
    Matrix a(static_cast<std::size_t>(m.d), Vec(static_cast<std::size_t>(m.d), 0));
    for (int i = 0; i < m.d; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[i])] = 1;
    m.action.push_back(std::move(a));
  }
  return m;
}

namespace {

constexpr std::size_t kElementaryAbelianLimit = std::size_t{1} << 20;

}  // namespace

ElementaryAbelian::ElementaryAbelian(int degree, const std::vector<Permutation>& gens, int p)
    : p_(p), degree_(degree) {
  if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].pow(p).is_identity()) throw Error("generator does not have exponent p");
    for (std::size_t j = 0; j < i; ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) throw Error("generators do not commute");
    }
  }
  std::unordered_set<Permutation, PermutationHash> span{Permutation(degree)};
  for (const auto& g : gens) {
    if (span.count(g)) continue;
    basis_.push_back(g);
    std::vector<Permutation> cur(span.begin(), span.end());
    Permutation step = g;
    for (int a = 1; a < p; ++a, step *= g) {
      for (const auto& x : cur) span.insert(x * step);
    }
    if (span.size() > kElementaryAbelianLimit) throw BudgetExceeded("elementary abelian group", span.size());
  }
  build_table();
}

ElementaryAbelian ElementaryAbelian::with_basis(int degree, const std::vector<Permutation>& basis, int p) {
  ElementaryAbelian e;
  e.p_ = p;
  e.degree_ = degree;
  e.basis_ = basis;
  e.build_table();
  return e;
}

void ElementaryAbelian::build_table() {
  table_.clear();
  const int d = dim();
  Vec v(static_cast<std::size_t>(d), 0);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    total *= static_cast<std::size_t>(p_);
    if (total > kElementaryAbelianLimit) throw BudgetExceeded("elementary abelian group", total);
  }
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r % static_cast<std::size_t>(p_));
      r /= static_cast<std::size_t>(p_);
    }
    table_.emplace(element(v), v);
  }
  if (table_.size() != total) throw Error("basis elements are not independent");
}

Vec ElementaryAbelian::coords(const Permutation& x) const {
  const auto it = table_.find(x);
  if (it == table_.end()) throw Error("element outside the elementary abelian group");
  return it->second;
}

Permutation ElementaryAbelian::element(const Vec& v) const {
  Permutation r(degree_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v[i]) r *= basis_[i].pow(v[i]);
  }
  return r;
}

Matrix ElementaryAbelian::conjugation_matrix(const Permutation& c) const {
  Matrix m;
  m.reserve(basis_.size());
  for (const auto& b : basis_) m.push_back(coords(b.conjugate(c)));
  return m;
}

Module ElementaryAbelian::module(const std::vector<Permutation>& gens) const {
  Module m{p_, dim(), {}};
  for (const auto& g : gens) m.action.push_back(conjugation_matrix(g));
  return m;
}

}  // namespace transcat
