#include "suitable/ramsey.hpp"

#include "suitable/detail/parallel.hpp"
#include "suitable/detail/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace suitable {

namespace {

    using Mask = std::uint64_t;

    Mask bit(int vertex) { return Mask{1} << (vertex - 1); }

    // Number of s-cliques inside `pool` in the graph `adj`.
    std::uint64_t count_cliques(const std::vector<Mask>& adj, Mask pool, int s)
    {
        if (s <= 0)
            return 1;
        if (std::popcount(pool) < s)
            return 0;
        if (s == 1)
            return static_cast<std::uint64_t>(std::popcount(pool));
        std::uint64_t total = 0;
        while (pool) {
            const int u = std::countr_zero(pool) + 1;
            pool &= pool - 1;
            total += count_cliques(adj, pool & adj[u], s - 1);
        }
        return total;
    }

    bool has_clique(const std::vector<Mask>& adj, Mask pool, int s)
    {
        if (s <= 0)
            return true;
        if (std::popcount(pool) < s)
            return false;
        if (s == 1)
            return true;
        while (pool) {
            const int u = std::countr_zero(pool) + 1;
            pool &= pool - 1;
            if (has_clique(adj, pool & adj[u], s - 1))
                return true;
        }
        return false;
    }

    std::vector<ColorSet> all_color_sets(int r, int m)
    {
        std::vector<ColorSet> out;
        for (ColorSet set = 0; set < (ColorSet{1} << r); ++set)
            if (std::popcount(set) == m)
                out.push_back(set);
        return out;
    }

    void check_target(const RamseyTarget& target, int m)
    {
        if (target.k.size() < 2)
            throw InvalidArgument("Ramsey target needs at least two colors");
        if (target.k.size() > 31)
            throw InvalidArgument("at most 31 colors are supported");
        for (int k : target.k)
            if (k < 2)
                throw InvalidArgument("Ramsey target clique sizes must be at least 2");
        if (m < 1 || m >= target.r())
            throw InvalidArgument("colors per edge must satisfy 1 <= m < r");
    }

    // One seeded local-search run.
    class LocalSearch {
    public:
        LocalSearch(int n, const RamseyTarget& target, int m, std::uint64_t seed, double noise)
            : n_(n), r_(target.r()), k_(target.k), sets_(all_color_sets(r_, m)), rng_(seed), noise_(noise),
              col_(n, r_, m), adj_(static_cast<std::size_t>(r_ + 1), std::vector<Mask>(static_cast<std::size_t>(n + 1), 0))
        {
            std::uniform_int_distribution<std::size_t> pick(0, sets_.size() - 1);
            for (int u = 1; u <= n_; ++u)
                for (int v = u + 1; v <= n_; ++v)
                    apply(u, v, sets_[pick(rng_)]);
            for (int h = 1; h <= r_; ++h)
                violations_ += count_cliques(adj_[h], all_vertices(), k_[h - 1]);
        }

        bool run(std::uint64_t flips)
        {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (std::uint64_t step = 0; step < flips && violations_ > 0; ++step) {
                std::vector<std::pair<int, int>> bad;
                for (int u = 1; u <= n_; ++u)
                    for (int v = u + 1; v <= n_; ++v) {
                        const ColorSet cur = col_.colors(u, v);
                        for (int h : color_list(cur))
                            if (edge_cliques(u, v, h) > 0) {
                                bad.emplace_back(u, v);
                                break;
                            }
                    }
                if (bad.empty())
                    throw Error("local search lost track of its violation count");
                std::uniform_int_distribution<std::size_t> pick_edge(0, bad.size() - 1);
                const auto [u, v] = bad[pick_edge(rng_)];
                const ColorSet cur = col_.colors(u, v);

                std::vector<std::uint64_t> cnt(static_cast<std::size_t>(r_ + 1));
                for (int h = 1; h <= r_; ++h)
                    cnt[h] = edge_cliques(u, v, h);

                auto delta_of = [&](ColorSet next) {
                    long long d = 0;
                    for (int h = 1; h <= r_; ++h) {
                        const bool before = (cur >> (h - 1)) & 1U;
                        const bool after = (next >> (h - 1)) & 1U;
                        if (after && ! before)
                            d += static_cast<long long>(cnt[h]);
                        else if (before && ! after)
                            d -= static_cast<long long>(cnt[h]);
                    }
                    return d;
                };

                ColorSet chosen = cur;
                long long chosen_delta = 0;
                if (unit(rng_) < noise_) {
                    std::uniform_int_distribution<std::size_t> pick(0, sets_.size() - 1);
                    chosen = sets_[pick(rng_)];
                    chosen_delta = delta_of(chosen);
                }
                else {
                    long long best = 0;
                    std::vector<ColorSet> ties;
                    for (ColorSet next : sets_) {
                        if (next == cur)
                            continue;
                        const long long d = delta_of(next);
                        if (ties.empty() || d < best) {
                            best = d;
                            ties.assign(1, next);
                        }
                        else if (d == best)
                            ties.push_back(next);
                    }
                    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
                    chosen = ties[pick(rng_)];
                    chosen_delta = best;
                }
                apply(u, v, chosen);
                violations_ = static_cast<std::uint64_t>(static_cast<long long>(violations_) + chosen_delta);
            }
            return violations_ == 0;
        }

        const EdgeMultiColoring& coloring() const { return col_; }

    private:
        Mask all_vertices() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

        // Forbidden cliques of color h that contain the edge {u, v}, counted
        // as if the edge carried h.
        std::uint64_t edge_cliques(int u, int v, int h) const
        {
            const Mask common = adj_[h][u] & adj_[h][v];
            return count_cliques(adj_[h], common, k_[h - 1] - 2);
        }

        void apply(int u, int v, ColorSet next)
        {
            col_.set_colors(u, v, next);
            for (int h = 1; h <= r_; ++h) {
                if ((next >> (h - 1)) & 1U) {
                    adj_[h][u] |= bit(v);
                    adj_[h][v] |= bit(u);
                }
                else {
                    adj_[h][u] &= ~bit(v);
                    adj_[h][v] &= ~bit(u);
                }
            }
        }

        int n_;
        int r_;
        std::vector<int> k_;
        std::vector<ColorSet> sets_;
        std::mt19937_64 rng_;
        double noise_;
        EdgeMultiColoring col_;
        std::vector<std::vector<Mask>> adj_;
        std::uint64_t violations_ = 0;
    };

}  // namespace

EdgeMultiColoring::EdgeMultiColoring(int n, int r, int m) : n_(n), r_(r), m_(m)
{
    if (n < 0 || n > 64)
        throw InvalidArgument("coloring supports 0 <= n <= 64 vertices");
    if (r < 2 || r > 31)
        throw InvalidArgument("coloring needs 2 <= r <= 31 colors");
    if (m < 1 || m >= r)
        throw InvalidArgument("colors per edge must satisfy 1 <= m < r");
    sets_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, (ColorSet{1} << m) - 1);
}

std::size_t EdgeMultiColoring::edge_index(int u, int v) const
{
    if (u > v)
        std::swap(u, v);
    if (u < 1 || v > n_ || u == v)
        throw InvalidArgument("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} is not in K_"
                              + std::to_string(n_));
    // Edges (1,2), (1,3), ..., (1,n), (2,3), ...
    const auto uu = static_cast<std::size_t>(u - 1);
    const auto n = static_cast<std::size_t>(n_);
    return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

void EdgeMultiColoring::set_colors(int u, int v, ColorSet set)
{
    if (std::popcount(set) != m_ || (set >> r_) != 0)
        throw InvalidArgument("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} needs exactly "
                              + std::to_string(m_) + " colors from [" + std::to_string(r_) + "]");
    sets_[edge_index(u, v)] = set;
}

void EdgeMultiColoring::set_colors(int u, int v, const std::vector<int>& colors)
{
    ColorSet set = 0;
    for (int h : colors) {
        if (h < 1 || h > r_)
            throw InvalidArgument("color " + std::to_string(h) + " out of range");
        if ((set >> (h - 1)) & 1U)
            throw InvalidArgument("color " + std::to_string(h) + " repeated on an edge");
        set |= ColorSet{1} << (h - 1);
    }
    set_colors(u, v, set);
}

std::vector<std::uint64_t> EdgeMultiColoring::color_graph(int h) const
{
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_ + 1), 0);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (has_color(u, v, h)) {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
    return adj;
}

EdgeMultiColoring EdgeMultiColoring::without_vertex(int drop) const
{
    EdgeMultiColoring out(n_ - 1, r_, m_);
    auto relabel = [drop](int x) { return x < drop ? x : x - 1; };
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (u != drop && v != drop)
                out.set_colors(relabel(u), relabel(v), colors(u, v));
    return out;
}

std::vector<int> color_list(ColorSet set)
{
    std::vector<int> out;
    for (int h = 1; set; ++h, set >>= 1)
        if (set & 1U)
            out.push_back(h);
    return out;
}

std::optional<std::vector<int>> find_mono_clique(const EdgeMultiColoring& col, int h, int q)
{
    if (h < 1 || h > col.r())
        throw InvalidArgument("color " + std::to_string(h) + " out of range");
    if (q < 1)
        throw InvalidArgument("clique size must be positive");
    const int n = col.n();
    if (q > n)
        return std::nullopt;
    if (q == 1)
        return std::vector<int>{1};

    const std::vector<Mask> adj = col.color_graph(h);

    // Degree-descending vertex order; ties by label.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[i] = i + 1;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });

    std::vector<int> clique;
    auto expand = [&](auto&& self, Mask pool) -> bool {
        if (static_cast<int>(clique.size()) == q)
            return true;
        for (int u : order) {
            if (static_cast<int>(clique.size()) + std::popcount(pool) < q)
                return false;
            if (! (pool & bit(u)))
                continue;
            pool &= ~bit(u);
            if (std::popcount(adj[u]) < q - 1)
                continue;
            clique.push_back(u);
            if (self(self, pool & adj[u]))
                return true;
            clique.pop_back();
        }
        return false;
    };

    const Mask everyone = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (! expand(expand, everyone))
        return std::nullopt;
    std::sort(clique.begin(), clique.end());
    return clique;
}

RamseyCheck validate_ramsey_coloring(const EdgeMultiColoring& col, const RamseyTarget& target)
{
    if (target.r() != col.r())
        throw InvalidArgument("target has " + std::to_string(target.r()) + " clique sizes for "
                              + std::to_string(col.r()) + " colors");
    for (int h = 1; h <= col.r(); ++h)
        if (auto clique = find_mono_clique(col, h, target.k[h - 1]))
            return {false, h, std::move(*clique)};
    return {};
}

std::optional<EdgeMultiColoring> search_coloring(int n, const RamseyTarget& target, int m, std::uint64_t seed,
                                                 std::uint64_t budget, const ColoringSearchOptions& options)
{
    check_target(target, m);
    if (n < 0 || n > 64)
        throw InvalidArgument("search_coloring supports 0 <= n <= 64");
    if (options.stagnation_window == 0)
        throw InvalidArgument("stagnation window must be positive");

    const std::uint64_t window = options.stagnation_window;
    const std::uint64_t attempts = std::max<std::uint64_t>(1, (budget + window - 1) / window);
    std::vector<std::optional<EdgeMultiColoring>> found(attempts);

    const std::size_t winner = detail::parallel_first_success(attempts, options.jobs, [&](std::size_t i) {
        const std::uint64_t flips = std::min<std::uint64_t>(window, budget > i * window ? budget - i * window : 0);
        LocalSearch search(n, target, m, detail::derive_seed(seed, i), options.noise);
        if (! search.run(flips))
            return false;
        found[i] = search.coloring();
        return true;
    });
    if (winner == attempts)
        return std::nullopt;

    // Local search tracks a running count; the exact validator has the last word.
    if (! validate_ramsey_coloring(*found[winner], target).valid)
        throw Error("search_coloring produced an invalid coloring");
    return std::move(found[winner]);
}

ExhaustiveResult exhaustive_search(int n, const RamseyTarget& target, int m, std::uint64_t cap)
{
    check_target(target, m);
    if (n < 0 || n > 64)
        throw InvalidArgument("exhaustive_search supports 0 <= n <= 64");
    const int r = target.r();
    const std::vector<ColorSet> sets = all_color_sets(r, m);
    const std::uint64_t edges = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;

    long double space = 1;
    for (std::uint64_t e = 0; e < edges && space <= static_cast<long double>(cap); ++e)
        space *= static_cast<long double>(sets.size());
    if (space > static_cast<long double>(cap))
        throw CapExceeded("exhaustive_search: C(r,m)^C(n,2) exceeds the enumeration cap of " + std::to_string(cap));

    std::vector<std::pair<int, int>> order;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u)
            order.emplace_back(u, v);

    std::vector<std::vector<Mask>> adj(static_cast<std::size_t>(r + 1), std::vector<Mask>(static_cast<std::size_t>(n + 1), 0));
    std::vector<ColorSet> assigned(order.size(), 0);
    ExhaustiveResult result;

    // Every clique is checked when its last edge in `order` is placed: all
    // of its other vertices are then below the smaller endpoint.
    auto descend = [&](auto&& self, std::size_t idx) -> bool {
        ++result.nodes;
        if (idx == order.size())
            return true;
        const auto [u, v] = order[idx];
        const Mask below = (Mask{1} << (u - 1)) - 1;
        for (ColorSet set : sets) {
            bool ok = true;
            for (int h : color_list(set))
                if (has_clique(adj[h], adj[h][u] & adj[h][v] & below, target.k[h - 1] - 2)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            for (int h : color_list(set)) {
                adj[h][u] |= bit(v);
                adj[h][v] |= bit(u);
            }
            assigned[idx] = set;
            if (self(self, idx + 1))
                return true;
            for (int h : color_list(set)) {
                adj[h][u] &= ~bit(v);
                adj[h][v] &= ~bit(u);
            }
        }
        return false;
    };

    if (descend(descend, 0)) {
        EdgeMultiColoring example(n, r, m);
        for (std::size_t i = 0; i < order.size(); ++i)
            example.set_colors(order[i].first, order[i].second, assigned[i]);
        result.example = std::move(example);
    }
    else
        result.none_exist = true;
    return result;
}

bool exhaustive_nonexistence(int n, const RamseyTarget& target, int m, std::uint64_t cap)
{
    return exhaustive_search(n, target, m, cap).none_exist;
}

}  // namespace suitable
