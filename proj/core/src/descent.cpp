#include <algorithm>

#include "transcat/blocks.hpp"
#include "transcat/classify.hpp"
#include "transcat/complements.hpp"
#include "transcat/conjugacy.hpp"
#include "transcat/fp_linear.hpp"
#include "transcat/lattice.hpp"
#include "transcat/layer_engine.hpp"

namespace transcat {

namespace {

// p if n is a power of the prime p, else 0.
int prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? static_cast<int>(p) : 0;
}

std::optional<ElementaryAbelian> as_elementary_abelian(const PermGroup& n) {
  const int p = prime_power_base(n.order());
  if (p == 0) return std::nullopt;
  try {
    ElementaryAbelian ea(n.degree(), n.generators(), p);
    if (ea.dim() > kMaxModuleDimension) return std::nullopt;
    return ea;
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Maximal subgroups M of g with M * kernel = g, i.e. with block action
// equal to that of g.
std::vector<PermGroup> maximal_with_full_top(const PermGroup& g, const BlockSystem& blocks, const PermGroup& top,
                                             std::uint64_t budget) {
  const PermGroup kernel = block_kernel(g, blocks);
  if (kernel.order() == 1) return {};
  std::vector<PermGroup> out;
  if (auto ea = as_elementary_abelian(kernel)) {
    // M meets the abelian kernel in a g-invariant U with kernel / U
    // irreducible, and M / U complements kernel / U.
    const Module mod = ea->module(g.generators());
    for (const auto& u : maximal_submodules(mod)) {
      auto res = complement_classes({g.generators(), kernel, *ea, u});
      for (auto& c : res.complements) out.push_back(std::move(c));
    }
    return out;
  }
  for (auto& m : transitive_maximal_subgroups(g, budget)) {
    if (block_action(m, blocks).same_group(top)) out.push_back(std::move(m));
  }
  return out;
}

bool has_smaller_blocks(const PermGroup& g, int k) {
  for (const auto& b : minimal_block_systems(g)) {
    if (b.block_size < k) return true;
  }
  return false;
}

}  // namespace

std::vector<PermGroup> descend_part(int k, const PermGroup& top, std::uint64_t budget) {
  if (k < 2) throw Error("block size must be at least 2");
  const int m = top.degree();
  WreathFrame frame = wreath_product(k, top);
  if (frame.product.order() > budget) {
    throw BudgetExceeded("descent from Sym(" + std::to_string(k) + ") wr H", frame.product.order());
  }
  const PermGroup outer_top = symmetric_normalizer(top).value_or(PermGroup::symmetric(m));
  const PermGroup ambient = wreath_product(k, outer_top).product;
  ConjugacyClassifier seen(&ambient);
  seen.add(frame.product);
  std::vector<PermGroup> out{frame.product};
  std::vector<std::size_t> active{0};
  while (!active.empty()) {
    auto it = std::max_element(active.begin(), active.end(), [&](std::size_t a, std::size_t b) {
      return out[a].order() < out[b].order();
    });
    const PermGroup g = out[*it];
    active.erase(it);
    for (auto& mx : maximal_with_full_top(g, frame.blocks, top, budget)) {
      if (!mx.is_transitive()) continue;
      if (k > 2 && has_smaller_blocks(mx, k)) continue;
      if (!seen.add(mx).second) continue;
      active.push_back(out.size());
      out.push_back(std::move(mx));
    }
  }
  return out;
}

}  // namespace transcat
