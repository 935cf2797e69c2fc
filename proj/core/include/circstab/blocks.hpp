#pragma once

#include "circstab/group.hpp"
#include "circstab/perm.hpp"
#include "circstab/zn.hpp"

namespace circstab {

// Blockwise action of sigma on a partition whose blocks it permutes
// setwise. Blocks are indexed canonically (by minimum element). Throws
// ValidationError when sigma does not permute the blocks.
Perm induced_block_permutation(const Perm& sigma, const IndexPartition& p);

bool permutes_blocks(const Perm& sigma, const IndexPartition& p);

// Every generator permutes the blocks setwise.
bool is_block_system(const GeneratedGroup& g, const IndexPartition& p);

// Finest G-congruence merging the classes of `seed` inside `start`:
// union-find closure of start under the generators after merging seed.
IndexPartition block_closure(const GeneratedGroup& g, const IndexPartition& start,
                             int a, int b);

// Minimal block systems strictly thicker than p (transitive G). Returns
// the unique deterministic choice: smallest block size, then
// lexicographic. Errors when p is already the one-block partition.
IndexPartition minimal_block_system_above(const GeneratedGroup& g, const IndexPartition& p);

// Transitive G with only trivial block systems.
bool is_primitive(const GeneratedGroup& g);

}  // namespace circstab
