#pragma once

// 3-(l, k, 1) packings: families of k-subsets of [l] in which every triple of
// points lies in at most one block.

#include "suitable/core_model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace suitable {

using Block = std::vector<int>;  // ascending points of [l]

struct BlockPacking {
    int l = 0;
    int k = 0;
    std::vector<Block> blocks;

    friend bool operator==(const BlockPacking&, const BlockPacking&) = default;
};

/// Raised when greedy search misses its block target, or no block
/// assignment satisfies the containment constraint.
class PackingError : public Error {
public:
    PackingError(const std::string& what, std::size_t best) : Error(what), best_size(best) {}
    std::size_t best_size;
};

/// Johnson bound value of D(l, 4, 3), exact for every l >= 4.
std::int64_t johnson_d_l43(int l);

/// C(n, r) with overflow reported as InvalidArgument.
std::int64_t binomial(int n, int r);

struct PackingOptions {
    int restarts = 64;
    unsigned jobs = 1;
};

/// Randomised greedy: each restart scans k-subsets in a seeded random order
/// and keeps every block whose triples are still uncovered. Returns the first
/// restart (in index order) reaching `target` blocks, with blocks sorted.
BlockPacking build_packing(int l, int k, std::size_t target, std::uint64_t seed, const PackingOptions& options = {});

struct PackingCheck {
    bool valid = true;
    std::optional<Block> triple;
    std::size_t first_block = 0;
    std::size_t second_block = 0;
    std::string problem;
};

PackingCheck validate_packing(const BlockPacking& packing);

/// b_prime[i-1] is the block given to symbol i (in symbol space, points of
/// the packing shifted onto R = [c+1, v]); b[i-1] drops i itself when i is in R.
struct BlockAssignment {
    int v = 0;
    int c = 0;
    std::vector<Block> b_prime;
    std::vector<Block> b;
};

/// Gives every symbol of [v] a distinct block, with i in B'_i for each
/// i in R = [c+1, v]. The packing lives on l = v - c points, point p being
/// symbol c + p. Symbols of R are matched by augmenting paths.
BlockAssignment assign_blocks(const BlockPacking& packing, int v, int c);

}  // namespace suitable
