#include "oracles.hpp"

#include "suitable/verifier.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace suitable;

namespace {

// Random core biased toward suitability: light symbols lead many rows.
PermutationArray leader_heavy_core(std::mt19937_64& rng, int n, int v)
{
    auto core = oracle::random_array(rng, n, v);
    std::vector<Row> rows = core.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Symbol lead = 1 + static_cast<Symbol>(r % static_cast<std::size_t>(v));
        auto it = std::find(rows[r].begin(), rows[r].end(), lead);
        std::rotate(rows[r].begin(), it, it + 1);
    }
    return PermutationArray(static_cast<std::size_t>(v), std::move(rows));
}

}  // namespace

TEST_CASE("two-symbol core is certified at t = 3 and falsified at t = 4")
{
    const auto core = PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    const Verdict ok = verify_exact(core, 3);
    CHECK(ok.status == Status::certified);
    CHECK(ok.tier == Tier::exact);
    CHECK_FALSE(ok.witness);
    const Verdict bad = verify_exact(core, 4);
    REQUIRE(bad.status == Status::falsified);
    REQUIRE(bad.witness);
    CHECK(witness_holds(core, 4, *bad.witness));
}

TEST_CASE("exact tier matches the brute-force definition")
{
    std::mt19937_64 rng(3);
    int certified = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 10);
        const int t = std::max(1, v - 1 + static_cast<int>(rng() % 4));
        const auto core = leader_heavy_core(rng, n, v);
        const Verdict got = verify_exact(core, t);
        const bool truth = oracle::core_suitable(core, t);
        REQUIRE((got.status == Status::certified) == truth);
        certified += truth;
        if (! truth) {
            REQUIRE(got.witness);
            CHECK(witness_holds(core, t, *got.witness));
            std::uint32_t mask = 0;
            for (Symbol s : got.witness->t_set)
                mask |= 1U << (s - 1);
            CHECK(oracle::c_pre(core, got.witness->sigma, mask) == got.witness->count);
        }
    }
    CHECK(certified > 50);
}

TEST_CASE("exact and condition (ii) tiers agree on 1000 random arrays")
{
    std::mt19937_64 rng(1000);
    int agree = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 6);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int t = std::max(1, v - 1 + static_cast<int>(rng() % 3));
        const auto core = leader_heavy_core(rng, n, v);
        const Verdict a = verify_exact(core, t);
        const Verdict b = verify_condition_ii(core, t);
        CHECK(b.tier == Tier::condition_ii);
        agree += a.status == b.status;
        if (b.witness)
            CHECK(witness_holds(core, t, *b.witness));
    }
    CHECK(agree == 1000);
}

TEST_CASE("shallow certification implies exact certification")
{
    std::mt19937_64 rng(17);
    int shallow_certified = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 5);
        const int n = 2 + static_cast<int>(rng() % 14);
        const int t = v - 1 + static_cast<int>(rng() % 4);
        const auto core = leader_heavy_core(rng, n, v);
        const Verdict s = verify_shallow(core, t);
        CHECK(s.status != Status::falsified);
        if (s.status == Status::certified) {
            ++shallow_certified;
            CHECK(verify_exact(core, t).status == Status::certified);
        }
    }
    CHECK(shallow_certified > 20);
}

TEST_CASE("necessary tier only falsifies unsuitable cores, with valid witnesses")
{
    std::mt19937_64 rng(23);
    int falsified = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 5);
        const int n = 1 + static_cast<int>(rng() % 10);
        const int t = v - 1 + static_cast<int>(rng() % 4);
        const auto core = leader_heavy_core(rng, n, v);
        const Verdict nec = verify_necessary(core, t);
        CHECK(nec.status != Status::certified);
        if (nec.status == Status::falsified) {
            ++falsified;
            REQUIRE(nec.witness);
            CHECK(witness_holds(core, t, *nec.witness));
            CHECK_FALSE(oracle::core_suitable(core, t));
        }
    }
    CHECK(falsified > 100);
}

TEST_CASE("necessary tier examples")
{
    // Both symbols lead one row at t = 2, v = 2, yet no row starts 1 2 twice over.
    const auto lead_short = PermutationArray::from_rows({{1, 2}, {2, 1}, {2, 1}});
    const Verdict a = verify_necessary(lead_short, 3);
    REQUIRE(a.status == Status::falsified);
    CHECK(a.witness->sigma == 1);
    CHECK(a.witness->t_set.empty());

    // Symbols 2 and 1 each lead exactly t + 1 - v = 1 row, and no row starts 2 1.
    const auto pair_gap = PermutationArray::from_rows({{1, 3, 2}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
    const Verdict b = verify_necessary(pair_gap, 3);
    REQUIRE(b.status == Status::falsified);
    CHECK(b.witness->t_set.size() == 1);
    CHECK(witness_holds(pair_gap, 3, *b.witness));
    CHECK(verify_exact(pair_gap, 3).status == Status::falsified);

    const auto fine = PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    CHECK(verify_necessary(fine, 3).status == Status::unknown);
}

TEST_CASE("sampling finds violations and its witnesses hold")
{
    std::mt19937_64 rng(29);
    int found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 6);
        const auto core = oracle::random_array(rng, 1 + static_cast<int>(rng() % 6), v);
        const int t = v + static_cast<int>(rng() % 2);
        const Verdict s = sample_falsify(core, t, 200, rng());
        CHECK(s.status != Status::certified);
        if (s.status == Status::falsified) {
            ++found;
            CHECK(witness_holds(core, t, *s.witness));
        }
    }
    CHECK(found > 100);
    const auto core = PermutationArray::from_rows({{1, 2}, {2, 1}});
    CHECK_THROWS_AS(sample_falsify(core, 2, 0, 1), InvalidArgument);
}

TEST_CASE("witness_holds rejects fabricated witnesses")
{
    const auto core = PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    CHECK_FALSE(witness_holds(core, 3, ViolationWitness{1, {}, 2}));
    CHECK_FALSE(witness_holds(core, 3, ViolationWitness{1, {}, 1}));
    CHECK_FALSE(witness_holds(core, 3, ViolationWitness{7, {}, 0}));
    CHECK(witness_holds(core, 4, ViolationWitness{1, {}, 2}));
}

TEST_CASE("exact cap and its environment override")
{
    std::mt19937_64 rng(31);
    const auto wide = oracle::random_array(rng, 3, 8);
    VerifyOptions small;
    small.exact_cap = 7;
    CHECK_THROWS_AS(verify_exact(wide, 9, small), CapExceeded);
    small.condition_ii_cap = 7;
    CHECK_THROWS_AS(verify_condition_ii(wide, 9, small), CapExceeded);

    ::setenv("SUITABLE_VERIFY_CAP", "7", 1);
    CHECK(default_verify_options().exact_cap == 7);
    ::setenv("SUITABLE_VERIFY_CAP", "zero", 1);
    CHECK_THROWS_AS(default_verify_options(), InvalidArgument);
    ::unsetenv("SUITABLE_VERIFY_CAP");
    CHECK(default_verify_options().exact_cap == 20);
}

TEST_CASE("parallel exact verification matches serial")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 8);
        const auto core = leader_heavy_core(rng, 4 * v, v);
        const int t = v + 2;
        VerifyOptions par;
        par.jobs = 4;
        const Verdict a = verify_exact(core, t);
        const Verdict b = verify_exact(core, t, par);
        CHECK(a.status == b.status);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("status and tier names round-trip")
{
    for (Status s : {Status::certified, Status::falsified, Status::unknown})
        CHECK(status_from_string(to_string(s)) == s);
    for (Tier t : {Tier::exact, Tier::condition_ii, Tier::shallow, Tier::necessary, Tier::sample})
        CHECK(tier_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(status_from_string("maybe"), InvalidArgument);
}
