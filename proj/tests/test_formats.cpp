#include "oracles.hpp"

#include "suitable/formats.hpp"

#include <doctest.h>

using namespace suitable;

TEST_CASE("text arrays round-trip")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const int v = static_cast<int>(rng() % 8);
        const auto array = v == 0 ? PermutationArray(0, {{}, {}}) : oracle::random_array(rng, 1 + static_cast<int>(rng() % 6), v);
        const int t = 1 + static_cast<int>(rng() % 9);
        const std::string text = array_to_text(array, t);
        const TextArray back = array_from_text(text);
        CHECK(back.array == array);
        CHECK(back.t == t);
        CHECK(array_to_text(back.array, back.t) == text);
    }
}

TEST_CASE("malformed text arrays are rejected")
{
    CHECK_THROWS_AS(array_from_text(""), InvalidArgument);
    CHECK_THROWS_AS(array_from_text("2 2 3\n1 2\n"), InvalidArgument);
    CHECK_THROWS_AS(array_from_text("1 2 3\n1 1\n"), InvalidArgument);
    CHECK_THROWS_AS(array_from_text("1 2 3\n1 2\n9\n"), InvalidArgument);
    CHECK_THROWS_AS(array_from_text("1 2 0\n1 2\n"), InvalidArgument);
}

TEST_CASE("packing and coloring JSON round-trip")
{
    const BlockPacking p = build_packing(8, 4, 10, 2);
    CHECK(packing_from_json(packing_to_json(p)) == p);
    const Json j = packing_to_json(p);
    CHECK(j["l"] == 8);
    CHECK(j["blocks"].size() >= 10);

    std::mt19937_64 rng(47);
    const auto col = oracle::random_coloring(rng, 7, 5, 3);
    CHECK(coloring_from_json(coloring_to_json(col)) == col);
    const Json cj = coloring_to_json(oracle::four_vertex_coloring(true));
    CHECK(cj["edges"][0] == Json::parse("[1, 2, [1, 3]]"));

    Json broken = coloring_to_json(col);
    broken["edges"].erase(0);
    CHECK_THROWS_AS(coloring_from_json(broken), InvalidArgument);
}

TEST_CASE("witness JSON round-trips for both routes")
{
    BuildSpec ps;
    ps.s = 3;
    ps.l = 5;
    const CoreWitness a = build_core(ps);
    const Json ja = witness_to_json(a);
    CHECK(ja["schema"] == 1);
    CHECK(ja["n"] == 17);
    CHECK(ja["provenance"]["route"] == "packing");
    CHECK(ja["certificate"]["witness"].is_null());
    const CoreWitness a2 = witness_from_json(ja);
    CHECK(a2.core == a.core);
    CHECK(a2.provenance.packing == a.provenance.packing);
    REQUIRE(a2.provenance.assignment);
    CHECK(a2.provenance.assignment->b == a.provenance.assignment->b);
    CHECK(witness_to_json(a2).dump() == ja.dump());

    BuildSpec rs;
    rs.s = 5;
    rs.route = Route::ramsey;
    rs.k_vec = {3, 3, 3};
    const CoreWitness b = build_core(rs);
    const Json jb = witness_to_json(b);
    const CoreWitness b2 = witness_from_json(jb);
    CHECK(b2.provenance.coloring == b.provenance.coloring);
    CHECK(witness_to_json(b2).dump() == jb.dump());
}

TEST_CASE("falsified certificates keep their witness triple")
{
    Verdict v;
    v.status = Status::falsified;
    v.tier = Tier::sample;
    v.witness = ViolationWitness{2, {1, 3}, 4};
    v.stats.subsets_examined = 9;
    const Json j = verdict_to_json(v);
    CHECK(j["witness"] == Json::parse(R"({"sigma": 2, "t_set": [1, 3], "count": 4})"));
    const Verdict back = verdict_from_json(j);
    CHECK(back.witness == v.witness);
    CHECK(back.status == Status::falsified);
    Json missing = j;
    missing["witness"] = nullptr;
    CHECK_THROWS_AS(verdict_from_json(missing), InvalidArgument);
    CHECK_FALSE(verdict_to_json(v, false)["stats"].contains("elapsed_ms"));
}

TEST_CASE("witness JSON validation")
{
    Json j = Json::parse(R"({"schema": 1, "n": 2, "v": 2, "t": 3, "rows": [[1, 2], [2, 1]]})");
    const CoreWitness w = witness_from_json(j);
    CHECK(w.provenance.route == "input");
    CHECK(w.certificate.status == Status::unknown);
    j["n"] = 3;
    CHECK_THROWS_AS(witness_from_json(j), InvalidArgument);
    j["n"] = 2;
    j["schema"] = 2;
    CHECK_THROWS_AS(witness_from_json(j), InvalidArgument);
    j["schema"] = 1;
    j["rows"] = Json::parse("[[1, 1], [2, 1]]");
    CHECK_THROWS_AS(witness_from_json(j), InvalidArgument);
}
