#include "oracles.hpp"

#include "suitable/builders.hpp"

#include <doctest.h>

using namespace suitable;

namespace {

BuildSpec packing_spec(int delta, int alpha, int s, int l, std::uint64_t seed = 0)
{
    BuildSpec spec;
    spec.delta = delta;
    spec.alpha = alpha;
    spec.s = s;
    spec.l = l;
    spec.route = Route::packing;
    spec.seed = seed;
    return spec;
}

BuildSpec ramsey_spec(int delta, int alpha, int s, std::vector<int> k, std::uint64_t seed = 0)
{
    BuildSpec spec;
    spec.delta = delta;
    spec.alpha = alpha;
    spec.s = s;
    spec.route = Route::ramsey;
    spec.k_vec = std::move(k);
    spec.l = 0;
    spec.seed = seed;
    return spec;
}

void check_witness(const CoreWitness& w, std::size_t rows, std::size_t v, int t)
{
    CHECK(w.core.n_rows() == rows);
    CHECK(w.core.n_symbols() == v);
    CHECK(w.params.t == t);
    CHECK(w.certificate.status == Status::certified);
    if (v <= 16) {
        CHECK(verify_shallow(w.core, t).status != Status::falsified);
        if (verify_shallow(w.core, t).status == Status::certified)
            CHECK(verify_exact(w.core, t).status == Status::certified);
    }
    if (v <= 20)
        CHECK(verify_exact(w.core, t - 1).status == Status::certified);
    if (w.provenance.packing)
        CHECK(validate_packing(*w.provenance.packing).valid);
}

}  // namespace

TEST_CASE("packing route reproduces the odd-strength examples")
{
    const CoreWitness a = build_packing_core(packing_spec(1, 3, 3, 5));
    check_witness(a, 17, 6, 7);
    CHECK(a.certificate.tier == Tier::exact);
    CHECK(oracle::core_suitable(a.core, 7));

    const CoreWitness b = build_packing_core(packing_spec(1, 3, 4, 5));
    check_witness(b, 26, 7, 9);
    CHECK(oracle::core_suitable(b.core, 9));
}

TEST_CASE("packing route, even strength")
{
    const CoreWitness w = build_packing_core(packing_spec(0, 3, 4, 7));
    check_witness(w, 21, 7, 8);
    REQUIRE(w.provenance.packing);
    CHECK(w.provenance.packing->blocks.size() >= 7);
    CHECK(oracle::core_suitable(w.core, 8));
}

TEST_CASE("packing route across every feasible small parameter set")
{
    int built = 0;
    for (int s = 2; s <= 8; ++s)
        for (int delta = 0; delta <= 1; ++delta)
            for (int alpha = 3; alpha <= 4; ++alpha) {
                const int t = 2 * s + delta;
                const int v = s + alpha;
                if (v > t)
                    continue;
                const Plan plan = plan_parameters(t, v);
                for (int l : plan.packing.feasible_l) {
                    if (! plan.packing.exact_window)
                        continue;
                    CAPTURE(s);
                    CAPTURE(delta);
                    CAPTURE(alpha);
                    CAPTURE(l);
                    const BuildSpec spec = packing_spec(delta, alpha, s, l);
                    REQUIRE(infeasibility(spec).empty());
                    const CoreWitness w = build_packing_core(spec);
                    check_witness(w, static_cast<std::size_t>(spec.rows()), static_cast<std::size_t>(v), t);
                    ++built;
                }
            }
    CHECK(built >= 20);
}

TEST_CASE("packing route builds are reproducible from the seed")
{
    const CoreWitness a = build_packing_core(packing_spec(1, 3, 5, 6, 42));
    const CoreWitness b = build_packing_core(packing_spec(1, 3, 5, 6, 42));
    CHECK(a.core == b.core);
    CHECK(a.provenance.packing == b.provenance.packing);
}

TEST_CASE("ramsey route with three heavy symbols")
{
    const CoreWitness w = build_ramsey_core(ramsey_spec(1, 3, 16, {3, 3, 3}));
    check_witness(w, 294, 19, 33);
    CHECK(verify_shallow(w.core, 33).status == Status::certified);
    REQUIRE(w.provenance.coloring);
    CHECK(w.provenance.coloring->n() == 16);
    CHECK(validate_ramsey_coloring(*w.provenance.coloring, RamseyTarget{{4, 4, 4}}).valid);
}

TEST_CASE("ramsey route with extended colorings")
{
    const CoreWitness w = build_ramsey_core(ramsey_spec(1, 4, 12, {5, 5, 5, 5, 5}));
    check_witness(w, 185, 16, 25);
    REQUIRE(w.provenance.coloring);
    const EdgeMultiColoring& col = *w.provenance.coloring;
    CHECK(col.n() == 11);
    CHECK(col.r() == 5);
    CHECK(col.m() == 3);
    CHECK(validate_ramsey_coloring(col, RamseyTarget{{6, 6, 6, 6, 6}}).valid);
}

TEST_CASE("ramsey route on small instances against brute force")
{
    int built = 0;
    for (int s = 3; s <= 7; ++s) {
        for (int kh = 3; kh <= 4; ++kh) {
            const BuildSpec spec = ramsey_spec(1, 3, s, {kh, kh, kh}, 5);
            if (! infeasibility(spec).empty())
                continue;
            CAPTURE(s);
            CAPTURE(kh);
            const CoreWitness w = build_ramsey_core(spec);
            const auto rows = static_cast<std::size_t>(spec.v() * spec.slack() + 3 * kh);
            check_witness(w, rows, static_cast<std::size_t>(spec.v()), spec.t());
            if (spec.v() <= 10)
                CHECK(oracle::core_suitable(w.core, spec.t()));
            ++built;
        }
    }
    CHECK(built >= 5);
}

TEST_CASE("infeasible specs are reported")
{
    CHECK_FALSE(infeasibility(packing_spec(1, 3, 3, 3)).empty());
    CHECK_FALSE(infeasibility(packing_spec(1, 3, 3, 7)).empty());
    CHECK_FALSE(infeasibility(packing_spec(1, 2, 3, 5)).empty());
    CHECK(infeasibility(packing_spec(1, 3, 3, 5)).empty());
    CHECK_FALSE(infeasibility(ramsey_spec(1, 3, 16, {3, 3})).empty());
    CHECK_FALSE(infeasibility(ramsey_spec(1, 3, 16, {2, 3, 3})).empty());
    // K_2000 exceeds the closed-form bound on R(4,4,4).
    CHECK_FALSE(infeasibility(ramsey_spec(1, 3, 2000, {3, 3, 3})).empty());
    CHECK_THROWS_AS(build_packing_core(packing_spec(1, 3, 3, 7)), BuildError);
}

TEST_CASE("parameter planning")
{
    const Plan p = plan_parameters(7, 6);
    CHECK(p.s == 3);
    CHECK(p.delta == 1);
    CHECK(p.alpha == 3);
    CHECK(p.packing.applicable);
    CHECK(p.packing.block_size == 3);
    CHECK(p.packing.feasible_l == std::vector<int>{5, 6});
    CHECK(p.packing.min_rows == 17);
    CHECK(p.ramsey.heavy == 3);
    CHECK(p.ramsey.min_l == 9);

    const Plan even = plan_parameters(8, 7);
    CHECK(even.packing.block_size == 4);
    CHECK(even.packing.feasible_l == std::vector<int>{7});

    CHECK_THROWS_AS(plan_parameters(7, 8), InvalidArgument);
    CHECK_THROWS_AS(plan_parameters(7, 5), InvalidArgument);

    const Plan far = plan_parameters(2 * 100000 + 1, 100003);
    CHECK(far.small_l_threshold > 1.0);
}

TEST_CASE("balanced clique budgets")
{
    CHECK(balanced_k_vec(9, 3) == std::vector<int>{3, 3, 3});
    CHECK(balanced_k_vec(11, 3) == std::vector<int>{3, 3, 5});
    CHECK(three_color_preset(11) == std::vector<int>{3, 3, 5});
}
