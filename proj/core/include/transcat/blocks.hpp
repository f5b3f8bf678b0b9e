#pragma once

#include <functional>
#include <string>
#include <vector>

#include "transcat/perm_group.hpp"

namespace transcat {

/// An invariant partition into equal blocks.  Blocks are sorted by least
/// point and every block is sorted.
struct BlockSystem {
  int block_size = 0;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  /// block_of()[p] is the index of the block holding p.
  std::vector<int> block_of() const;
  /// `k=2 | {0,2} {1,3}`
  std::string to_string() const;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest invariant partition in which all of `seed` lie in one block.
BlockSystem block_closure(const PermGroup& g, const std::vector<int>& seed);

/// All minimal block systems, sorted by block size then block lists.  Empty
/// iff g is primitive.  Throws Error if g is intransitive.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

/// Every nontrivial block system (1 < k < n), sorted like the minimal ones.
std::vector<BlockSystem> all_block_systems(const PermGroup& g);

bool is_primitive(const PermGroup& g);

bool is_invariant(const PermGroup& g, const BlockSystem& b);

/// Action on the blocks, numbered in the listed order.
PermGroup block_action(const PermGroup& g, const BlockSystem& b);

/// Image of one permutation on the blocks of b.
Permutation block_image(const Permutation& x, const BlockSystem& b);

/// Kernel of the action on blocks.
PermGroup block_kernel(const PermGroup& g, const BlockSystem& b);

/// Blocks {0..k-1}, {k..2k-1}, ...
BlockSystem canonical_blocks(int k, int m);

struct WreathFrame {
  int base_degree = 0;
  PermGroup top;
  PermGroup product;
  BlockSystem blocks;
};

/// Sym(k) wr H on km points with the canonical block system.
WreathFrame wreath_product(int k, const PermGroup& top);

/// Lifts a permutation of the blocks to one moving whole blocks of size k
/// (point b*k+i goes to h(b)*k+i).
Permutation lift_block_permutation(const Permutation& h, int k);

struct Signature {
  int k = 0;
  int top_index = 0;

  std::string to_string() const;
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Returns the 1-based catalogue index of a transitive group of its degree.
using CatalogueLookup = std::function<int(const PermGroup&)>;

/// Least (k, index of block action) over the minimal block systems.  Throws
/// Error for primitive groups.
Signature signature(const PermGroup& g, const CatalogueLookup& lookup);

/// Signature of one particular minimal system.
Signature system_signature(const PermGroup& g, const BlockSystem& b, const CatalogueLookup& lookup);

}  // namespace transcat
