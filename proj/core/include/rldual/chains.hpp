#ifndef RLDUAL_CHAINS_HPP
#define RLDUAL_CHAINS_HPP

#include <vector>

#include "rldual/algebra.hpp"

namespace rldual {

inline constexpr int kDefaultChainBound = 6;

/// All monotone associative commutative integral monoid tables on the
/// n-chain 0 < 1 < ... < n-1, each packaged as a bounded algebra.
/// Finite chains are rigid, so the list is duplicate-free as produced;
/// the order is deterministic (lexicographic in the free table cells).
std::vector<Algebra> enumerate_mtl_chains(int n, int bound = kDefaultChainBound);

/// Count only (same generation order, no algebra construction).
long count_mtl_chains(int n, int bound = kDefaultChainBound);

}  // namespace rldual

#endif
