#pragma once

// Certification of suitable cores.
//
// A core C over [v] is (N, v, t)-suitable iff for every symbol sigma and every
// set T of other symbols, c_pre(C, sigma, T) >= t + 1 - v + |T|. The tiers:
//
//   exact         all 2^(v-1) sets T per symbol via a subset-sum transform
//   condition_ii  direct enumeration of "sigma precedes each s-subset of the
//                 others in at least t - s rows"; an independent oracle
//   shallow       polynomial lower bound built from the first three columns;
//                 may certify, never falsifies
//   necessary     leader-count conditions every suitable core satisfies
//   sample        randomized search for a violating (sigma, T)

#include "suitable/core_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace suitable {

enum class Status { certified, falsified, unknown };
enum class Tier { exact, condition_ii, shallow, necessary, sample };

std::string_view to_string(Status status);
std::string_view to_string(Tier tier);
Status status_from_string(std::string_view text);
Tier tier_from_string(std::string_view text);

/// A (sigma, T) pair with c_pre(core, sigma, T) = count < t + 1 - v + |T|.
struct ViolationWitness {
    Symbol sigma = 0;
    std::vector<Symbol> t_set;  // ascending
    long long count = 0;

    friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

struct VerdictStats {
    std::uint64_t subsets_examined = 0;
    double elapsed_ms = 0.0;
};

struct Verdict {
    Status status = Status::unknown;
    Tier tier = Tier::exact;
    std::optional<ViolationWitness> witness;
    VerdictStats stats;
    std::string note;
};

struct VerifyOptions {
    /// Largest v the exact tier accepts.
    std::size_t exact_cap = 20;
    /// Largest v the condition (ii) oracle accepts.
    std::size_t condition_ii_cap = 16;
    /// Node budget for the shallow tier's minimisation.
    std::uint64_t shallow_node_cap = std::uint64_t{1} << 24;
    /// Worker threads for per-symbol tasks.
    unsigned jobs = 1;
};

/// Default options with the exact cap taken from SUITABLE_VERIFY_CAP when set.
VerifyOptions default_verify_options();

Verdict verify_exact(const PermutationArray& core, int t, const VerifyOptions& options = {});
Verdict verify_condition_ii(const PermutationArray& core, int t, const VerifyOptions& options = {});
Verdict verify_shallow(const PermutationArray& core, int t, const VerifyOptions& options = {});
Verdict verify_necessary(const PermutationArray& core, int t);
Verdict sample_falsify(const PermutationArray& core, int t, std::uint64_t trials, std::uint64_t seed);

/// True iff the witness literally violates the threshold on `core`.
bool witness_holds(const PermutationArray& core, int t, const ViolationWitness& witness);

}  // namespace suitable
