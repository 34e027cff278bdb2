#pragma once

// Constructions of (N, v, t)-suitable cores with t = 2s + delta, v = s + alpha
// and N = v(t + 1 - v) + l.
//
// Packing route: symbols [c] = [v - l] lead t + 1 - v rows and R = [c+1, v]
// lead one extra row each. A 3-(l, 2 alpha - delta - 2, 1) packing on R gives
// each symbol i a block B_i of symbols that never follow i directly; shared
// block points are placed third after the pair prefixes.
//
// Ramsey route: [c] = [t + 2 - v] lead c - 1 rows each, the r = v - c heavy
// symbols c + h lead c + k_h - 1 rows, and an (r; r-2)-coloring of K_c with
// no monochromatic K_{k_h + 1} in color h decides the third entries of the
// rows starting ij and ji for i, j in [c].

#include "suitable/core_model.hpp"
#include "suitable/packings.hpp"
#include "suitable/ramsey.hpp"
#include "suitable/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace suitable {

enum class Route { packing, ramsey };

std::string_view to_string(Route route);
Route route_from_string(std::string_view text);

/// How a core was obtained, with every ingredient embedded so the witness is
/// self-contained.
struct Provenance {
    std::string route;  // packing | ramsey | array | input
    int s = 0;
    int delta = 0;
    int alpha = 0;
    int l = 0;
    std::vector<int> k_vec;
    std::uint64_t seed = 0;
    std::optional<BlockPacking> packing;
    std::optional<BlockAssignment> assignment;
    std::optional<EdgeMultiColoring> coloring;
};

struct CoreWitness {
    PermutationArray core;
    SuitabilityParams params;
    Provenance provenance;
    Verdict certificate;
};

/// Raised when a build cannot go ahead: infeasible parameters, a missing
/// ingredient, or a construction invariant that fails.
class BuildError : public Error {
public:
    using Error::Error;
};

struct BuildSpec {
    int delta = 1;
    int alpha = 3;
    int s = 3;
    int l = 0;
    Route route = Route::packing;
    std::vector<int> k_vec;  // ramsey route; empty means balanced
    std::uint64_t seed = 0;

    int t() const { return 2 * s + delta; }
    int v() const { return s + alpha; }
    /// t + 1 - v, the row count every light symbol leads.
    int slack() const { return t() + 1 - v(); }
    /// Block size of the packing route.
    int block_size() const { return 2 * alpha - delta - 2; }
    /// Heavy symbol count of the ramsey route.
    int heavy() const { return 2 * alpha - delta - 2; }
    /// Light symbol count: v - l on the packing route, t + 2 - v on the ramsey route.
    int light() const { return route == Route::packing ? v() - l : t() + 2 - v(); }
    int rows() const { return v() * slack() + l; }

    /// Derives s, delta and alpha from t and v.
    static BuildSpec from_strength(int t, int v, int l, Route route);
};

struct BuildOptions {
    VerifyOptions verify;
    PackingOptions packing;
    ColoringSearchOptions coloring;
    std::uint64_t coloring_budget = 400000;
    /// Packing + assignment retries with fresh seeds when matching fails.
    int assignment_attempts = 8;
};

/// Balanced split l / r with the remainder added to the last entry.
std::vector<int> balanced_k_vec(int l, int r);
/// The (3, (l-5)/2, (l-1)/2) split used for three heavy symbols.
std::vector<int> three_color_preset(int l);

CoreWitness build_packing_core(const BuildSpec& spec, const BuildOptions& options = {});
CoreWitness build_ramsey_core(const BuildSpec& spec, const BuildOptions& options = {});
CoreWitness build_core(const BuildSpec& spec, const BuildOptions& options = {});

/// Necessary, then shallow, then exact when v fits the cap. An exact verdict
/// records the shallow status in its note.
Verdict certify_core(const PermutationArray& core, int t, const VerifyOptions& options);

struct PackingPlan {
    bool applicable = false;
    int block_size = 0;
    /// Every l with D(l, k, 3) >= v >= l; for k >= 5 D is replaced by its
    /// counting upper bound, so those entries are only candidates.
    std::vector<int> feasible_l;
    bool exact_window = true;
    int min_rows = 0;
    std::string note;
};

struct RamseyPlan {
    bool applicable = false;
    int light = 0;
    int heavy = 0;
    int colors_per_edge = 0;
    int min_l = 0;
    int min_rows = 0;
    /// Asymptotic guidance: l >= tau ln s, tau from the three-color and
    /// general multicolor existence results.
    double tau_three_color = 0.0;
    double tau_general = 0.0;
    int l_guidance = 0;
    /// Upper bound on the extended Ramsey number for the balanced split at
    /// min_l; light >= this means no coloring exists.
    std::optional<double> coloring_upper_bound;
    std::string note;
};

struct Plan {
    int t = 0;
    int v = 0;
    int s = 0;
    int delta = 0;
    int alpha = 0;
    PackingPlan packing;
    RamseyPlan ramsey;
    /// Set when alpha = 3 and l <= ln s / (6 ln 3) for the l in question:
    /// such cores do not exist once s is large.
    bool small_l_advisory = false;
    double small_l_threshold = 0.0;
};

Plan plan_parameters(int t, int v);

/// Checks a concrete spec against its route's window before building.
/// Returns an empty string when the spec is feasible, else the reason.
std::string infeasibility(const BuildSpec& spec);

}  // namespace suitable
