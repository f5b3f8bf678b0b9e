#pragma once

#include <optional>
#include <vector>

#include "transcat/blocks.hpp"
#include "transcat/fp_linear.hpp"
#include "transcat/perm_group.hpp"

namespace transcat {

/// One elementary abelian factor of Sym(k) wr Sym(m), given by the cycles
/// (relative to the block's first point) of its basis elements in one block.
struct LayerSpec {
  int p = 2;
  std::vector<std::vector<std::vector<int>>> per_block;

  /// The factor over all m blocks of size k, basis ordered block by block.
  ElementaryAbelian group(int k, int m) const;
};

/// Series used to peel Sym(k) wr H from the top: for k = 2 one F2 layer;
/// k = 3: F2 then F3; k = 4: F2, F3, then the Klein layer F2^2 per block.
std::vector<LayerSpec> layer_series(int k);

/// Permutation module of hbar over F_p.  Throws Error if p is not prime.
Module kernel_module(const PermGroup& hbar, int p);

/// Lifting data for one layer: a top group on km points complementing the
/// layer, and a submodule M of the layer.
struct ExtensionTask {
  int block_size = 2;
  int stage = 0;
  PermGroup top;
  Subspace submodule;
};

/// Task for the first layer above hbar.
ExtensionTask first_layer_task(int k, const PermGroup& hbar, const Subspace& submodule);

/// One group per class of complements of layer / M in (layer : top) / M,
/// each containing M.
std::vector<PermGroup> complements_mod_H1(const ExtensionTask& task);

/// Sym(m)-normalizer of h by exhaustive search; nullopt above degree 8.
std::optional<PermGroup> symmetric_normalizer(const PermGroup& h);

struct PartContext {
  /// Index lookup in the degree-m catalogue; enables the signature filter.
  CatalogueLookup lookup;
  int top_index = 0;
  bool normalizer_dedup = true;
};

/// Every subgroup of Sym(k) wr hbar projecting onto hbar, up to conjugacy
/// inside the wreath product (with repetitions).  Includes intransitive ones.
std::vector<PermGroup> layered_candidates(int k, const PermGroup& hbar, bool normalizer_dedup = true);

/// Transitive groups of degree km with block action hbar on a minimal
/// system of size k, minimal block size exactly k, pairwise non-conjugate.
/// With a lookup, only those whose signature is (k, top_index) are kept.
std::vector<PermGroup> extend_blocks(int k, const PermGroup& hbar, const PartContext& ctx = {});

inline std::vector<PermGroup> extend_block2(const PermGroup& hbar, const PartContext& ctx = {}) {
  return extend_blocks(2, hbar, ctx);
}

/// k in {3, 4}.
std::vector<PermGroup> extend_layered(int k, const PermGroup& hbar, const PartContext& ctx = {});

}  // namespace transcat
