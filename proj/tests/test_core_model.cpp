#include "oracles.hpp"

#include "suitable/core_model.hpp"

#include <doctest.h>

#include <set>

using namespace suitable;

namespace {

PermutationArray six_symbol_array()
{
    return PermutationArray::from_rows({{3, 1, 2, 6, 4, 5}, {4, 6, 1, 5, 2, 3}, {4, 2, 1, 3, 6, 5}, {5, 6, 2, 1, 3, 4}});
}

}  // namespace

TEST_CASE("permutation array validation")
{
    CHECK_THROWS_AS(PermutationArray(3, {{1, 2, 2}}), InvalidArgument);
    CHECK_THROWS_AS(PermutationArray(3, {{1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(PermutationArray(3, {{1, 2, 4}}), InvalidArgument);
    CHECK_THROWS_AS(PermutationArray(3, {}), InvalidArgument);
    const auto a = PermutationArray::from_rows({{2, 3, 1}, {2, 1, 3}});
    CHECK(a.n_rows() == 2);
    CHECK(a.lead_count(2) == 2);
    CHECK(a.lead_count(1) == 0);
    CHECK(a.position(0, 1) == 2);
}

TEST_CASE("c_pre counts rows where only T precedes sigma")
{
    const auto core = PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}, {2, 1}});
    const std::vector<Symbol> none;
    const std::vector<Symbol> two{2};
    CHECK(c_pre(core, 1, none) == 2);
    CHECK(c_pre(core, 1, two) == 4);
    CHECK_THROWS_AS(c_pre(core, 3, none), InvalidArgument);
    const std::vector<Symbol> self{1};
    CHECK_THROWS_AS(c_pre(core, 1, self), InvalidArgument);
}

TEST_CASE("c_pre agrees with direct counting")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 6);
        const auto core = oracle::random_array(rng, 1 + static_cast<int>(rng() % 8), v);
        const int sigma = 1 + static_cast<int>(rng() % static_cast<unsigned>(v));
        const std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1U << v) - 1) & ~(1U << (sigma - 1));
        std::vector<Symbol> t_set;
        for (int s = 1; s <= v; ++s)
            if ((mask >> (s - 1)) & 1U)
                t_set.push_back(s);
        CHECK(static_cast<long long>(c_pre(core, sigma, t_set)) == oracle::c_pre(core, sigma, mask));
    }
}

TEST_CASE("six-symbol example array is 3-suitable and strips to a two-symbol core")
{
    const auto array = six_symbol_array();
    CHECK(is_suitable_array(array, 3).suitable);
    CHECK(oracle::array_suitable(array, 3));
    const CoreExtraction ex = array_to_core(array, 3);
    CHECK(ex.core.n_rows() == 4);
    CHECK(ex.core.n_symbols() == 2);
    CHECK(ex.leaders == std::vector<Symbol>{3, 4, 2, 5});
    CHECK(ex.core == PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}, {2, 1}}));
    CHECK(oracle::core_suitable(ex.core, 3));
}

TEST_CASE("cyclic 3x3 array strips to an empty core")
{
    const auto array = PermutationArray::from_rows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(is_suitable_array(array, 3).suitable);
    const CoreExtraction ex = array_to_core(array, 3);
    CHECK(ex.core.n_rows() == 3);
    CHECK(ex.core.n_symbols() == 0);
}

TEST_CASE("is_suitable_array agrees with brute force and its witnesses hold")
{
    std::mt19937_64 rng(11);
    int suitable_seen = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 5);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(v));
        const auto array = oracle::random_array(rng, n, v);
        const ArraySuitability got = is_suitable_array(array, t);
        REQUIRE(got.suitable == oracle::array_suitable(array, t));
        suitable_seen += got.suitable;
        if (! got.suitable) {
            REQUIRE(got.violation.has_value());
            const ArrayViolation& w = *got.violation;
            CHECK(static_cast<int>(w.subset.size()) == t);
            CHECK(std::is_sorted(w.subset.begin(), w.subset.end()));
            for (std::size_t r = 0; r < array.n_rows(); ++r) {
                bool ahead = true;
                for (Symbol s : w.subset)
                    if (s != w.sigma && array.position(r, s) < array.position(r, w.sigma))
                        ahead = false;
                CHECK_FALSE(ahead);
            }
        }
    }
    CHECK(suitable_seen > 50);
}

TEST_CASE("array_to_core output is a suitable core; core_to_array restores a suitable array")
{
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 150; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 4);
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(v));
        const int t = 2 + static_cast<int>(rng() % static_cast<unsigned>(v - 1));
        const auto array = oracle::random_array(rng, n, v);
        if (! oracle::array_suitable(array, t))
            continue;
        ++checked;
        const CoreExtraction ex = array_to_core(array, t);
        CHECK(ex.core.n_symbols() == static_cast<std::size_t>(v - n));
        CHECK(std::set<Symbol>(ex.leaders.begin(), ex.leaders.end()).size() == static_cast<std::size_t>(n));
        CHECK(oracle::core_suitable(ex.core, t));
        const PermutationArray back = core_to_array(ex.core);
        CHECK(back.n_symbols() == static_cast<std::size_t>(v));
        CHECK(oracle::array_suitable(back, t));
    }
    CHECK(checked >= 100);
}

TEST_CASE("core_to_array extends every suitable core")
{
    std::mt19937_64 rng(19);
    int checked = 0;
    for (int trial = 0; trial < 20000 && checked < 100; ++trial) {
        const int v = 1 + static_cast<int>(rng() % 4);
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto core = oracle::random_array(rng, n, v);
        const int t = v + static_cast<int>(rng() % 3);
        if (! oracle::core_suitable(core, t))
            continue;
        ++checked;
        CHECK(oracle::array_suitable(core_to_array(core), t));
    }
    CHECK(checked >= 50);
}

TEST_CASE("array_to_core rejects unsuitable input and too many rows")
{
    const auto bad = PermutationArray::from_rows({{1, 2, 3}, {1, 3, 2}});
    CHECK_THROWS_AS(array_to_core(bad, 2), InvalidArgument);
    const auto tall = PermutationArray::from_rows({{1, 2}, {2, 1}, {1, 2}});
    CHECK_THROWS_AS(array_to_core(tall, 2), InvalidArgument);
    CHECK_THROWS_AS(is_suitable_array(bad, 4), InvalidArgument);
}
