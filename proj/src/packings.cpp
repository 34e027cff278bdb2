#include "suitable/packings.hpp"

#include "suitable/detail/parallel.hpp"
#include "suitable/detail/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

namespace suitable {

namespace {

    constexpr std::int64_t enumeration_limit = 400000;

    class TripleTable {
    public:
        explicit TripleTable(int l) : l_(l), covered_(static_cast<std::size_t>(l) * l * l, 0) {}

        bool free(const Block& block) const
        {
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b)
                    for (std::size_t c = b + 1; c < block.size(); ++c)
                        if (covered_[index(block[a], block[b], block[c])])
                            return false;
            return true;
        }

        void mark(const Block& block)
        {
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b)
                    for (std::size_t c = b + 1; c < block.size(); ++c)
                        covered_[index(block[a], block[b], block[c])] = 1;
        }

    private:
        std::size_t index(int a, int b, int c) const
        {
            return (static_cast<std::size_t>(a - 1) * l_ + static_cast<std::size_t>(b - 1)) * l_
                + static_cast<std::size_t>(c - 1);
        }

        int l_;
        std::vector<char> covered_;
    };

    std::vector<Block> all_subsets(int l, int k)
    {
        std::vector<Block> out;
        Block cur(static_cast<std::size_t>(k));
        std::iota(cur.begin(), cur.end(), 1);
        while (true) {
            out.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == l - (k - 1 - i))
                --i;
            if (i < 0)
                break;
            ++cur[i];
            for (int j = i + 1; j < k; ++j)
                cur[j] = cur[j - 1] + 1;
        }
        return out;
    }

    Block random_subset(int l, int k, std::mt19937_64& rng)
    {
        std::vector<int> points(static_cast<std::size_t>(l));
        std::iota(points.begin(), points.end(), 1);
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, l - 1);
            std::swap(points[i], points[pick(rng)]);
        }
        Block block(points.begin(), points.begin() + k);
        std::sort(block.begin(), block.end());
        return block;
    }

    std::vector<Block> greedy_restart(int l, int k, std::size_t target, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        TripleTable table(l);
        std::vector<Block> blocks;
        if (binomial(l, k) <= enumeration_limit) {
            std::vector<Block> candidates = all_subsets(l, k);
            std::shuffle(candidates.begin(), candidates.end(), rng);
            for (Block& cand : candidates)
                if (table.free(cand)) {
                    table.mark(cand);
                    blocks.push_back(std::move(cand));
                }
        }
        else {
            // Too many k-subsets to list: sample until a long run of misses.
            const std::size_t patience = 2000 + 50 * target;
            std::size_t misses = 0;
            while (misses < patience) {
                Block cand = random_subset(l, k, rng);
                if (table.free(cand)) {
                    table.mark(cand);
                    blocks.push_back(std::move(cand));
                    misses = 0;
                }
                else
                    ++misses;
            }
        }
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    }

}  // namespace

std::int64_t binomial(int n, int r)
{
    if (r < 0 || n < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    std::int64_t result = 1;
    for (int i = 1; i <= r; ++i) {
        const std::int64_t num = n - r + i;
        if (result > std::numeric_limits<std::int64_t>::max() / num)
            throw InvalidArgument("binomial(" + std::to_string(n) + ", " + std::to_string(r) + ") overflows");
        result = result * num / i;
    }
    return result;
}

std::int64_t johnson_d_l43(int l)
{
    if (l < 4)
        throw InvalidArgument("johnson_d_l43: need l >= 4, got " + std::to_string(l));
    const std::int64_t n = l;
    const std::int64_t inner = (n - 1) * ((n - 2) / 2) / 3;
    if (n % 6 != 0)
        return n * inner / 4;
    return n * (inner - 1) / 4;
}

BlockPacking build_packing(int l, int k, std::size_t target, std::uint64_t seed, const PackingOptions& options)
{
    if (k < 3 || k > l)
        throw InvalidArgument("build_packing: need 3 <= k <= l, got l=" + std::to_string(l) + ", k="
                              + std::to_string(k));
    if (l > 256)
        throw InvalidArgument("build_packing: l above 256 is not supported");
    if (options.restarts < 1)
        throw InvalidArgument("build_packing: restarts must be at least 1");
    const std::int64_t ceiling = binomial(l, 3) / binomial(k, 3);
    if (static_cast<std::int64_t>(target) > ceiling)
        throw InvalidArgument("build_packing: target " + std::to_string(target) + " exceeds C(l,3)/C(k,3) = "
                              + std::to_string(ceiling));

    const auto restarts = static_cast<std::size_t>(options.restarts);
    std::vector<std::vector<Block>> results(restarts);
    const std::size_t winner = detail::parallel_first_success(restarts, options.jobs, [&](std::size_t i) {
        results[i] = greedy_restart(l, k, target, detail::derive_seed(seed, i));
        return results[i].size() >= target;
    });

    if (winner == restarts) {
        std::size_t best = 0;
        for (const auto& r : results)
            best = std::max(best, r.size());
        throw PackingError("build_packing: best packing on l=" + std::to_string(l) + ", k=" + std::to_string(k)
                               + " has " + std::to_string(best) + " blocks after " + std::to_string(restarts)
                               + " restarts, target " + std::to_string(target),
                           best);
    }
    return {l, k, std::move(results[winner])};
}

PackingCheck validate_packing(const BlockPacking& packing)
{
    PackingCheck check;
    const int l = packing.l;
    if (l < 0 || packing.k < 0) {
        check.valid = false;
        check.problem = "negative parameters";
        return check;
    }

    for (std::size_t i = 0; i < packing.blocks.size(); ++i) {
        const Block& block = packing.blocks[i];
        bool ok = static_cast<int>(block.size()) == packing.k;
        for (std::size_t j = 0; ok && j < block.size(); ++j)
            ok = block[j] >= 1 && block[j] <= l && (j == 0 || block[j - 1] < block[j]);
        if (! ok) {
            check.valid = false;
            check.first_block = check.second_block = i;
            check.problem = "block " + std::to_string(i + 1) + " is not an ascending " + std::to_string(packing.k)
                + "-subset of [" + std::to_string(l) + "]";
            return check;
        }
    }

    // Owner of each triple, in lexicographic order of blocks then triples.
    std::vector<std::size_t> owner(static_cast<std::size_t>(l) * l * l, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < packing.blocks.size(); ++i) {
        const Block& block = packing.blocks[i];
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                for (std::size_t c = b + 1; c < block.size(); ++c) {
                    const std::size_t idx = (static_cast<std::size_t>(block[a] - 1) * l + (block[b] - 1)) * l
                        + (block[c] - 1);
                    if (owner[idx] != std::numeric_limits<std::size_t>::max()) {
                        check.valid = false;
                        check.triple = Block{block[a], block[b], block[c]};
                        check.first_block = owner[idx];
                        check.second_block = i;
                        check.problem = "triple shared by blocks " + std::to_string(owner[idx] + 1) + " and "
                            + std::to_string(i + 1);
                        return check;
                    }
                    owner[idx] = i;
                }
    }

    // With k < 3 there are no triples; duplicates still break distinctness.
    std::set<Block> distinct(packing.blocks.begin(), packing.blocks.end());
    if (distinct.size() != packing.blocks.size()) {
        check.valid = false;
        check.problem = "repeated block";
    }
    return check;
}

BlockAssignment assign_blocks(const BlockPacking& packing, int v, int c)
{
    if (c < 0 || c > v)
        throw InvalidArgument("assign_blocks: need 0 <= c <= v");
    if (packing.l != v - c)
        throw InvalidArgument("assign_blocks: packing has " + std::to_string(packing.l) + " points but |R| = "
                              + std::to_string(v - c));
    if (packing.k < 2)
        throw InvalidArgument("assign_blocks: block size must be at least 2");

    std::vector<Block> blocks;
    {
        std::set<Block> seen;
        for (const Block& raw : packing.blocks) {
            Block shifted = raw;
            std::sort(shifted.begin(), shifted.end());
            for (int& p : shifted)
                p += c;
            if (seen.insert(shifted).second)
                blocks.push_back(std::move(shifted));
        }
    }
    if (static_cast<int>(blocks.size()) < v)
        throw PackingError("assign_blocks: " + std::to_string(blocks.size()) + " distinct blocks for "
                               + std::to_string(v) + " symbols",
                           blocks.size());

    // Kuhn's augmenting paths: R symbols on the left, blocks on the right.
    const int l = v - c;
    std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(l));
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int p : blocks[b])
            adj[static_cast<std::size_t>(p - c - 1)].push_back(b);

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> block_owner(blocks.size(), none);
    std::vector<char> visited;

    auto augment = [&](auto&& self, std::size_t left) -> bool {
        for (std::size_t b : adj[left]) {
            if (visited[b])
                continue;
            visited[b] = 1;
            if (block_owner[b] == none || self(self, block_owner[b])) {
                block_owner[b] = left;
                return true;
            }
        }
        return false;
    };

    std::size_t matched = 0;
    for (std::size_t left = 0; left < adj.size(); ++left) {
        visited.assign(blocks.size(), 0);
        if (augment(augment, left))
            ++matched;
    }
    if (matched < adj.size())
        throw PackingError("assign_blocks: only " + std::to_string(matched) + " of " + std::to_string(l)
                               + " symbols of R can be matched to blocks containing them",
                           matched);

    BlockAssignment out;
    out.v = v;
    out.c = c;
    out.b_prime.resize(static_cast<std::size_t>(v));
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (block_owner[b] != none)
            out.b_prime[static_cast<std::size_t>(c) + block_owner[b]] = blocks[b];

    std::size_t next_free = 0;
    for (int i = 0; i < c; ++i) {
        while (block_owner[next_free] != none)
            ++next_free;
        out.b_prime[static_cast<std::size_t>(i)] = blocks[next_free++];
    }

    out.b.resize(static_cast<std::size_t>(v));
    for (int i = 1; i <= v; ++i) {
        Block b = out.b_prime[static_cast<std::size_t>(i - 1)];
        if (i > c)
            b.erase(std::remove(b.begin(), b.end(), i), b.end());
        out.b[static_cast<std::size_t>(i - 1)] = std::move(b);
    }
    return out;
}

}  // namespace suitable
