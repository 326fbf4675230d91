#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grpdfrob/correspondence.hpp"
#include "grpdfrob/fixtures.hpp"
#include "grpdfrob/serialize.hpp"
#include "oracles.hpp"

using namespace grpdfrob;

TEST_CASE("groupoid serialization round-trips and omits derivable composites") {
    for (const auto& name : fixture_names()) {
        Groupoid G = fixture_groupoid(name);
        Json j = groupoid_to_json(G);
        Groupoid back = groupoid_from_json(j);
        CHECK(back == G);
        // writer output is canonical and stable
        CHECK(dump_canonical(groupoid_to_json(back)) == dump_canonical(j));
    }
    // identity and inverse composites may be omitted from files
    Groupoid z2 = fixture_groupoid("z2");
    Json j = groupoid_to_json(z2);
    bool has_identity_comp = false;
    for (const auto& e : j["compose"])
        if (e[0].get<std::string>() == "e" || e[1].get<std::string>() == "e") has_identity_comp = true;
    CHECK(!has_identity_comp);
    CHECK(validate(groupoid_from_json(j)).all_pass());
}

TEST_CASE("malformed groupoid files are parse errors") {
    CHECK_THROWS_AS(groupoid_from_json(Json::object()), Error);
    Json j = groupoid_to_json(fixture_groupoid("z2"));
    Json bad = j;
    bad["compose"].push_back(Json::array({"e", "nope", "g"}));
    CHECK_THROWS_AS(groupoid_from_json(bad), Error);
    bad = j;
    bad["compose"].push_back(Json::array({"g", "g", "e"}));
    bad["compose"].push_back(Json::array({"g", "g", "g"}));  // conflicting explicit entries
    CHECK_THROWS_AS(groupoid_from_json(bad), Error);
    // an explicit entry that contradicts the inverse law parses but fails
    // validation (a broken table, not a malformed file)
    bad = j;
    bad["compose"].push_back(Json::array({"g", "g", "g"}));
    Groupoid loaded = groupoid_from_json(bad);
    CHECK(!validate(loaded).all_pass());
}

TEST_CASE("quantum groupoid serialization round-trips, including the double tag") {
    for (const auto& name : {"z2", "pair2", "z4-on-2"}) {
        QuantumGroupoid H = groupoid_algebra(fixture_groupoid(name));
        CHECK(quantum_groupoid_from_json(quantum_groupoid_to_json(H)) == H);
        DrinfeldDouble dd = drinfeld_double(fixture_groupoid(name));
        QuantumGroupoid back = quantum_groupoid_from_json(quantum_groupoid_to_json(*dd.algebra));
        CHECK(back == *dd.algebra);
        REQUIRE(back.double_tag().has_value());
    }
}

TEST_CASE("gfa and frobenius serialization round-trips on fixtures") {
    for (const auto& name : fixture_names()) {
        Gfa A = groupoid_ring_gfa(fixture_groupoid(name));
        CHECK(gfa_from_json(gfa_to_json(A)) == A);
        FrobeniusObjectData F = gfa_to_frobenius(A);
        FrobeniusObjectData back = frobenius_from_json(frobenius_to_json(F));
        CHECK(back.module == F.module);
        CHECK(back.m == F.m);
        CHECK(back.mu == F.mu);
        CHECK(back.delta == F.delta);
        CHECK(back.eps == F.eps);
        CHECK(back.grading == F.grading);
    }
}

TEST_CASE("module serialization round-trips with grading") {
    DrinfeldDouble dd = drinfeld_double(fixture_groupoid("pair2"));
    HModule M = regular_module(dd.algebra);
    Decomposition dec = decompose(M);
    Json j = module_to_json(M, &dec.grading);
    LoadedModule back = module_from_json(j);
    CHECK(back.module == M);
    REQUIRE(back.grading.has_value());
    CHECK(*back.grading == dec.grading);
    REQUIRE(back.dd.has_value());
}

TEST_CASE("module files may name the groupoid-algebra construction") {
    AlgebraPtr H = std::make_shared<const QuantumGroupoid>(groupoid_algebra(fixture_groupoid("z2")));
    HModule M = regular_module(H);
    Json j;
    j["algebra"] = Json{{"construction", "groupoid-algebra"}, {"groupoid", groupoid_to_json(fixture_groupoid("z2"))}};
    j["carrier"] = M.carrier->labels();
    Json act = Json::object();
    for (int h = 0; h < H->dim(); ++h) act[H->basis()->label(h)] = mat_to_json(M.action_of(h));
    j["action"] = std::move(act);
    LoadedModule back = module_from_json(j);
    CHECK(back.module == M);
    CHECK(!back.dd.has_value());
}

TEST_CASE("randomized serialization round-trips with a fixed seed") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 30; ++i) {
        Rat r = oracles::random_rat(rng);
        CHECK(rat_parse(rat_str(r)) == r);
    }
    for (int i = 0; i < 10; ++i) {
        Groupoid G = oracles::random_groupoid(rng);
        CHECK(groupoid_from_json(groupoid_to_json(G)) == G);
    }
    for (int i = 0; i < 10; ++i) {
        QuantumGroupoid H = oracles::random_quantum_groupoid(rng);
        CHECK(quantum_groupoid_from_json(quantum_groupoid_to_json(H)) == H);
    }
    for (int i = 0; i < 10; ++i) {
        Gfa A = oracles::random_gfa_data(rng);
        CHECK(gfa_from_json(gfa_to_json(A)) == A);
    }
    for (int i = 0; i < 10; ++i) {
        HModule M = oracles::random_module_data(rng);
        Json j = module_to_json(M);
        CHECK(module_from_json(j).module == M);
    }
}

TEST_CASE("content digests are stable and input-sensitive") {
    CHECK(content_digest("") == content_digest(""));
    CHECK(content_digest("a") != content_digest("b"));
    CHECK(content_digest("a").size() == 16);
}
