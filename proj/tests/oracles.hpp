#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the PermutationArray and coloring containers.

#include "suitable/packings.hpp"
#include "suitable/ramsey.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using suitable::EdgeMultiColoring;
using suitable::PermutationArray;
using suitable::Row;

inline int popcount(std::uint32_t x)
{
    return __builtin_popcount(x);
}

/// Rows where every symbol ahead of sigma is in tmask (bit s-1 for symbol s).
inline long long c_pre(const PermutationArray& core, int sigma, std::uint32_t tmask)
{
    long long count = 0;
    for (const Row& row : core.rows()) {
        bool ok = true;
        for (int s : row) {
            if (s == sigma)
                break;
            if (! ((tmask >> (s - 1)) & 1U)) {
                ok = false;
                break;
            }
        }
        count += ok;
    }
    return count;
}

/// Every sigma against every T, straight from the definition.
inline bool core_suitable(const PermutationArray& core, int t)
{
    const int v = static_cast<int>(core.n_symbols());
    for (int sigma = 1; sigma <= v; ++sigma) {
        const std::uint32_t others = ((1U << v) - 1) & ~(1U << (sigma - 1));
        for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
            if (mask & ~others)
                continue;
            if (c_pre(core, sigma, mask) < t + 1 - v + popcount(mask))
                return false;
        }
    }
    return true;
}

/// Each symbol ahead of each (t-1)-subset of the others in some row.
inline bool array_suitable(const PermutationArray& array, int t)
{
    const int v = static_cast<int>(array.n_symbols());
    for (int sigma = 1; sigma <= v; ++sigma) {
        for (std::uint32_t mask = 0; mask < (1U << v); ++mask) {
            if ((mask >> (sigma - 1)) & 1U || popcount(mask) != t - 1)
                continue;
            bool covered = false;
            for (std::size_t r = 0; r < array.n_rows() && ! covered; ++r) {
                bool ahead = true;
                for (int s = 1; s <= v; ++s)
                    if ((mask >> (s - 1)) & 1U && array.position(r, s) < array.position(r, sigma))
                        ahead = false;
                covered = ahead;
            }
            if (! covered)
                return false;
        }
    }
    return true;
}

inline PermutationArray random_array(std::mt19937_64& rng, int n, int v)
{
    std::vector<Row> rows(static_cast<std::size_t>(n));
    for (auto& row : rows) {
        row.resize(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i)
            row[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(row.begin(), row.end(), rng);
    }
    return PermutationArray(static_cast<std::size_t>(v), std::move(rows));
}

/// Largest set of k-subsets of [l] with no shared triple, by exhaustive
/// branch and bound over blocks in lexicographic order.
inline std::size_t max_packing(int l, int k)
{
    std::vector<std::uint32_t> blocks;
    for (std::uint32_t mask = 0; mask < (1U << l); ++mask)
        if (popcount(mask) == k)
            blocks.push_back(mask);
    std::size_t best = 0;
    std::vector<std::uint32_t> chosen;
    auto clash = [](std::uint32_t a, std::uint32_t b) { return popcount(a & b) >= 3; };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        best = std::max(best, chosen.size());
        if (chosen.size() + (blocks.size() - from) <= best)
            return;
        for (std::size_t i = from; i < blocks.size(); ++i) {
            bool ok = true;
            for (std::uint32_t c : chosen)
                if (clash(c, blocks[i])) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            chosen.push_back(blocks[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return best;
}

/// All q-cliques of K_n monochromatic in color h, by subset enumeration.
inline std::vector<std::vector<int>> mono_cliques(const EdgeMultiColoring& col, int h, int q)
{
    std::vector<std::vector<int>> found;
    const int n = col.n();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) != q)
            continue;
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1U)
                verts.push_back(i + 1);
        bool mono = true;
        for (std::size_t a = 0; a < verts.size() && mono; ++a)
            for (std::size_t b = a + 1; b < verts.size() && mono; ++b)
                mono = col.has_color(verts[a], verts[b], h);
        if (mono)
            found.push_back(verts);
    }
    return found;
}

inline EdgeMultiColoring random_coloring(std::mt19937_64& rng, int n, int r, int m)
{
    EdgeMultiColoring col(n, r, m);
    std::vector<int> colors(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        colors[static_cast<std::size_t>(i)] = i + 1;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            std::shuffle(colors.begin(), colors.end(), rng);
            col.set_colors(u, v, std::vector<int>(colors.begin(), colors.begin() + m));
        }
    return col;
}

/// Edge lists of the two four-vertex example colorings; colors per edge.
inline EdgeMultiColoring four_vertex_coloring(bool ramsey)
{
    EdgeMultiColoring col(4, 3, 2);
    col.set_colors(1, 2, {1, 3});
    col.set_colors(1, 3, ramsey ? std::vector<int>{2, 3} : std::vector<int>{1, 2});
    col.set_colors(1, 4, {1, 2});
    col.set_colors(2, 3, {1, 2});
    col.set_colors(2, 4, {2, 3});
    col.set_colors(3, 4, {1, 3});
    return col;
}

}  // namespace oracle
