#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freefusion/free_product.hpp"

namespace freefusion {

// One block of a colored non-crossing partition.  Position lists are
// ascending indices into the bottom / top letter rows; every position of a
// block carries the block's side.
struct NcpBlock {
    Side side = Side::C;
    std::vector<int> bottom, top;
    friend bool operator==(const NcpBlock&, const NcpBlock&) = default;
};

// Non-crossing partition of a rectangle boundary: bottom letters read left
// to right, top letters read left to right, blocks pairwise non-crossing for
// the boundary walk bottom left->right then top right->left.  Blocks are
// kept sorted by their first position along that walk.
struct ColoredNcp {
    std::vector<Letter> bottom, top;
    std::vector<NcpBlock> blocks;
    friend bool operator==(const ColoredNcp&, const ColoredNcp&) = default;
};

// True iff the blocks partition every position exactly once, each block is
// single-sided and matches its letters' side, and no two blocks interleave
// along the boundary walk.
bool is_valid(const ColoredNcp& ncp);

// dim of the side-ring hom space from the fused bottom subword of the block
// to its fused top subword (empty subwords fuse to the unit).  Throws
// truncation_overflow if the fusion leaves a truncation window.
std::int64_t block_weight(const FreeProduct& fp, const ColoredNcp& ncp, const NcpBlock& blk);

// product of the block weights
std::int64_t ncp_weight(const FreeProduct& fp, const ColoredNcp& ncp);

// All valid colored NCPs for the given boundary letters, including
// zero-weight ones, in a deterministic order.
std::vector<ColoredNcp> enumerate_ncps(const FreeProduct& fp, const std::vector<Letter>& sigma,
                                       const std::vector<Letter>& tau);

// Sum over all NCPs of the product of block weights: an upper bound for the
// free-product hom dimension from sigma to tau.  Between reduced alternating
// words it is exactly 1 on equal words and 0 on distinct ones.
std::int64_t spanning_bound(const FreeProduct& fp, const std::vector<Letter>& sigma,
                            const std::vector<Letter>& tau);

struct NcpComposition {
    ColoredNcp result;               // over (bottom of s, top of t)
    std::vector<NcpBlock> cancelled; // closed blocks; positions index the glued row
    bool scalar_known = false;       // both factors pointed
    std::int64_t scalar = 1;         // product of closed-loop values when known
};

// Stacks t (bottom row tau) on top of s (top row tau); requires the shared
// rows to agree letterwise.  Blocks connected through the shared row merge;
// components with no outer position are returned as cancelled blocks, and
// their scalar value is evaluated only in the pointed case (0 or 1),
// otherwise left symbolic with scalar_known = false.
NcpComposition compose_ncp(const FreeProduct& fp, const ColoredNcp& t, const ColoredNcp& s);

// One-line rendering: boundary letters, then blocks as side-tagged position
// sets written B1..Bm / T1..Tn.
std::string format_ncp(const FreeProduct& fp, const ColoredNcp& ncp);

} // namespace freefusion
