#include "transcat/layer_engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "transcat/complements.hpp"
#include "transcat/conjugacy.hpp"

namespace transcat {

ElementaryAbelian LayerSpec::group(int k, int m) const {
  const int n = k * m;
  std::vector<Permutation> basis;
  for (int b = 0; b < m; ++b) {
    for (const auto& cycles : per_block) {
      auto shifted = cycles;
      for (auto& c : shifted) {
        for (int& x : c) x += b * k;
      }
      basis.push_back(Permutation::from_cycles(n, shifted));
    }
  }
  return ElementaryAbelian::with_basis(n, basis, p);
}

std::vector<LayerSpec> layer_series(int k) {
  switch (k) {
    case 2:
      return {{2, {{{0, 1}}}}};
    case 3:
      return {{2, {{{1, 2}}}}, {3, {{{0, 1, 2}}}}};
    case 4:
      return {{2, {{{2, 3}}}}, {3, {{{1, 2, 3}}}}, {2, {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}}}};
    default:
      throw Error("no layer series for block size " + std::to_string(k));
  }
}

Module kernel_module(const PermGroup& hbar, int p) {
  if (!is_prime(p)) throw Error("not a prime: " + std::to_string(p));
  return permutation_module(hbar, p);
}

namespace {

PermGroup lifted_top(int k, const PermGroup& hbar) {
  std::vector<Permutation> gens;
  for (const auto& h : hbar.generators()) gens.push_back(lift_block_permutation(h, k));
  BuildOptions opts;
  opts.known_order = hbar.order();
  return PermGroup(k * hbar.degree(), gens, opts);
}

Subspace image(const Subspace& s, const Matrix& m) {
  Matrix rows;
  for (const auto& v : s.basis) rows.push_back(vec_mat(v, m, s.p));
  return Subspace::span(s.p, s.d, rows);
}

// One submodule per orbit of the given matrices.
std::vector<Subspace> orbit_representatives(const std::vector<Subspace>& subs, const std::vector<Matrix>& mats) {
  std::unordered_set<std::string> seen;
  std::vector<Subspace> reps;
  for (const auto& s : subs) {
    if (seen.count(s.key())) continue;
    reps.push_back(s);
    std::vector<Subspace> queue{s};
    seen.insert(s.key());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& m : mats) {
        Subspace t = image(queue[i], m);
        if (seen.insert(t.key()).second) queue.push_back(std::move(t));
      }
    }
  }
  return reps;
}

std::vector<PermGroup> lift_layer(int k, int stage, const PermGroup& top, const std::vector<Subspace>& subs) {
  std::vector<PermGroup> out;
  for (const auto& m : subs) {
    auto groups = complements_mod_H1({k, stage, top, m});
    for (auto& g : groups) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

ExtensionTask first_layer_task(int k, const PermGroup& hbar, const Subspace& submodule) {
  return {k, 0, lifted_top(k, hbar), submodule};
}

std::vector<PermGroup> complements_mod_H1(const ExtensionTask& task) {
  const auto series = layer_series(task.block_size);
  if (task.stage < 0 || task.stage >= static_cast<int>(series.size())) throw Error("layer stage out of range");
  const int n = task.top.degree();
  if (n % task.block_size != 0) throw Error("top degree is not a multiple of the block size");
  const auto layer = series[static_cast<std::size_t>(task.stage)].group(task.block_size, n / task.block_size);
  if (task.submodule.d != layer.dim() || task.submodule.p != layer.p()) throw Error("submodule does not match the layer");
  const PermGroup normal(n, layer.basis());
  auto res = complement_classes({task.top.generators(), normal, layer, task.submodule});
  if (!res.split) throw Error("cocycle system has no solution for a split extension");
  return std::move(res.complements);
}

std::optional<PermGroup> symmetric_normalizer(const PermGroup& h) {
  const int m = h.degree();
  if (m > 8) return std::nullopt;
  PermGroup norm = h;
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  do {
    const Permutation x = Permutation::from_images(img);
    if (norm.contains(x)) continue;
    bool ok = true;
    for (const auto& g : h.generators()) {
      if (!h.contains(g.conjugate(x))) {
        ok = false;
        break;
      }
    }
    if (ok) norm = join(norm, std::span<const Permutation>(&x, 1));
  } while (std::next_permutation(img.begin(), img.end()));
  return norm;
}

std::vector<PermGroup> layered_candidates(int k, const PermGroup& hbar, bool normalizer_dedup) {
  const auto series = layer_series(k);
  const int m = hbar.degree();
  std::vector<PermGroup> tops{lifted_top(k, hbar)};
  for (int stage = 0; stage < static_cast<int>(series.size()); ++stage) {
    const auto layer = series[static_cast<std::size_t>(stage)].group(k, m);
    std::vector<PermGroup> next;
    for (const auto& top : tops) {
      auto subs = submodules(layer.module(top.generators()));
      if (stage == 0 && normalizer_dedup) {
        if (const auto norm = symmetric_normalizer(hbar)) {
          std::vector<Matrix> mats;
          for (const auto& x : norm->generators()) mats.push_back(layer.conjugation_matrix(lift_block_permutation(x, k)));
          subs = orbit_representatives(subs, mats);
        }
      }
      for (auto& g : lift_layer(k, stage, top, subs)) next.push_back(std::move(g));
    }
    tops = std::move(next);
  }
  return tops;
}

std::vector<PermGroup> extend_blocks(int k, const PermGroup& hbar, const PartContext& ctx) {
  if (!hbar.is_transitive()) throw Error("top group must be transitive");
  ConjugacyClassifier classes;
  for (const auto& g : layered_candidates(k, hbar, ctx.normalizer_dedup)) {
    if (!g.is_transitive()) continue;
    const auto systems = minimal_block_systems(g);
    if (systems.empty() || systems.front().block_size != k) continue;
    if (ctx.lookup) {
      const Signature sig = signature(g, ctx.lookup);
      if (sig.k != k || sig.top_index != ctx.top_index) continue;
    }
    classes.add(g);
  }
  return classes.representatives();
}

std::vector<PermGroup> extend_layered(int k, const PermGroup& hbar, const PartContext& ctx) {
  if (k != 3 && k != 4) throw Error("extend_layered needs block size 3 or 4");
  return extend_blocks(k, hbar, ctx);
}

}  // namespace transcat
