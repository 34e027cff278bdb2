#pragma once

// Edge (r;m)-colorings of complete graphs and Ramsey bound calculators.
//
// In an (r;m)-coloring each edge of K_n carries an m-subset of the colors
// [r]; a clique is monochromatic in color h when h lies on every one of its
// edges. m = 1 is the classical case. Vertices and colors are 1-based.

#include "suitable/core_model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace suitable {

using ColorSet = std::uint32_t;  // bit h-1 set when color h is present

class EdgeMultiColoring {
public:
    EdgeMultiColoring() = default;

    /// Every edge starts with the m smallest colors.
    EdgeMultiColoring(int n, int r, int m);

    int n() const { return n_; }
    int r() const { return r_; }
    int m() const { return m_; }
    std::size_t edge_count() const { return sets_.size(); }

    /// Index of edge {u, v} in lexicographic order (u < v).
    std::size_t edge_index(int u, int v) const;

    ColorSet colors(int u, int v) const { return sets_[edge_index(u, v)]; }
    bool has_color(int u, int v, int h) const { return (colors(u, v) >> (h - 1)) & 1U; }

    /// Replaces the color set of {u, v}; it must have exactly m colors in [r].
    void set_colors(int u, int v, ColorSet set);
    void set_colors(int u, int v, const std::vector<int>& colors);

    /// Adjacency of color h as one bit mask per vertex (bit w-1 for vertex w).
    std::vector<std::uint64_t> color_graph(int h) const;

    /// Restriction to every vertex except `drop`, relabelled in order.
    EdgeMultiColoring without_vertex(int drop) const;

    const std::vector<ColorSet>& raw() const { return sets_; }

    friend bool operator==(const EdgeMultiColoring&, const EdgeMultiColoring&) = default;

private:
    int n_ = 0;
    int r_ = 0;
    int m_ = 0;
    std::vector<ColorSet> sets_;
};

std::vector<int> color_list(ColorSet set);

/// Clique sizes k_1..k_r that are forbidden in colors 1..r.
struct RamseyTarget {
    std::vector<int> k;

    int r() const { return static_cast<int>(k.size()); }
};

/// A size-q clique whose edges all carry color h, or nothing. Exact search.
std::optional<std::vector<int>> find_mono_clique(const EdgeMultiColoring& col, int h, int q);

struct RamseyCheck {
    bool valid = true;
    int color = 0;
    std::vector<int> clique;
};

/// Valid iff no color i has a monochromatic K_{k_i}.
RamseyCheck validate_ramsey_coloring(const EdgeMultiColoring& col, const RamseyTarget& target);

struct ColoringSearchOptions {
    /// Flips per attempt before restarting from a fresh random coloring.
    std::uint64_t stagnation_window = 20000;
    /// Probability of a random recoloring instead of the best one.
    double noise = 0.1;
    unsigned jobs = 1;
};

/// Local search for a Ramsey coloring of K_n. The flip budget is split into
/// independently seeded attempts; the lowest successful attempt wins.
std::optional<EdgeMultiColoring> search_coloring(int n, const RamseyTarget& target, int m, std::uint64_t seed,
                                                 std::uint64_t budget, const ColoringSearchOptions& options = {});

struct ExhaustiveResult {
    bool none_exist = false;
    std::optional<EdgeMultiColoring> example;
    std::uint64_t nodes = 0;
};

/// Full enumeration of (r;m)-colorings of K_n with pruning on completed
/// cliques. Refuses when C(r,m)^C(n,2) exceeds `cap`.
ExhaustiveResult exhaustive_search(int n, const RamseyTarget& target, int m, std::uint64_t cap = std::uint64_t{1} << 26);

bool exhaustive_nonexistence(int n, const RamseyTarget& target, int m, std::uint64_t cap = std::uint64_t{1} << 26);

// ---------------------------------------------------------------------------
// Bound calculators.

struct BoundQuery {
    std::string formula;  // erdos | robertson | lemma9 | corollary1 | lemma10-recurrence | johnson-d43
    int k = 0;
    int l = 0;
    int m = 1;
    int r = 0;
    std::vector<int> k_vec;
    /// Caller-supplied R(k, l-2) for the Robertson recurrence.
    std::optional<std::int64_t> known_value;
};

struct BoundReport {
    std::string quantity;
    std::string provenance;
    std::string direction;  // lower | upper | exact
    bool valid = true;
    std::optional<std::int64_t> value;
    std::optional<double> raw;
    std::map<std::string, double> side_values;
    std::string note;
};

BoundReport bounds_report(const BoundQuery& query);

/// R(k, k) >= k 2^(k/2) / (e sqrt 2).
double erdos_lower_raw(int k);
/// Probabilistic lower bound on R^m(k; r), without its side condition.
double multicolor_lower_raw(int m, int r, int k);
/// Left side of the side condition (r/m)^((k-1)/2) (e/r)^(1/k) >= 2e.
double multicolor_side_condition(int m, int r, int k);
/// Closed-form upper bound on R^m(k_1..k_r).
double closed_form_upper_raw(int m, std::vector<int> k);
/// Recursive upper bound on R^m(k_1..k_r) with the all-but-m-twos base case.
double recurrence_upper_raw(int m, std::vector<int> k);

}  // namespace suitable
