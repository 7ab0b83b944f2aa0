#include <doctest.h>

#include <sstream>

#include "mbc/io.hpp"
#include "mbc/verify.hpp"
#include "support.hpp"

using namespace mbc;
using namespace mbc::testing;

TEST_CASE("collection and matrix round trips") {
    const auto c = coll(4, {{1}, {2, 3, 4}});
    CHECK(collection_to_json(c) == R"({"n":4,"sets":[[1],[2,3,4]]})");
    CHECK(collection_from_json(collection_to_json(c)) == c);
    const ZeroOneMatrix m(3, sets_of({{2, 3}, {1}}));
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(weights_from_json(weights_to_json(weights({"1/2", "-3"}))) == weights({"1/2", "-3"}));

    CHECK_THROWS_AS(collection_from_json(R"({"n":3,"sets":[[4]]})"), Error);
    CHECK_THROWS_AS(collection_from_json(R"({"n":3,"sets":[[1,1]]})"), Error);
    CHECK_THROWS_AS(collection_from_json(R"({"n":3})"), Error);
    try {
        collection_from_json("{");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parse);
    }
}

TEST_CASE("certificate round trip") {
    for (const auto& c : {coll(3, {{1}, {2, 3}}), coll(3, {{1}, {1, 2}}), coll(3, {{1}, {2, 3}, {1, 2, 3}}),
                          coll(3, {{1}, {2}, {1, 2}, {1, 3}})}) {
        const auto cert = minimality_certificate(c);
        const auto back = certificate_from_json(certificate_to_json(cert));
        CHECK(back.kind == cert.kind);
        CHECK(back.weights == cert.weights);
        CHECK(back.witness == cert.witness);
    }
}

TEST_CASE("count table and bound report round trips") {
    const auto t = count_minimal_balanced_table(5);
    CHECK(count_table_to_json(t) == R"({"n":5,"per_m":["1","15","50","250","976"],"total":"1292"})");
    CHECK(count_table_from_json(count_table_to_json(t)) == t);
    const auto b = total_count_bounds(5, t.total);
    const auto back = bound_report_from_json(bound_report_to_json(b));
    CHECK(back.count == b.count);
    CHECK(back.lower == b.lower);
    CHECK(back.upper == b.upper);
    CHECK(back.holds() == b.holds());
}

TEST_CASE("game and core report round trips") {
    const auto g = majority_game(Rational::parse("3/2"));
    CHECK(game_to_json(g) == R"({"n":3,"v":["0","0","0","1","0","1","1","3/2"]})");
    CHECK(game_from_json(game_to_json(g)) == g);
    CHECK_THROWS_AS(game_from_json(R"({"n":2,"v":["1","0","0","0"]})"), Error);

    const auto mbcs = enumerate_minimal(3, EnumerationMode::search);
    for (const auto& game : {g, majority_game(1)}) {
        const auto r = core_nonempty_bondareva(game, mbcs);
        const auto back = core_report_from_json(core_report_to_json(r));
        CHECK(back.nonempty == r.nonempty);
        CHECK(back.allocation == r.allocation);
        CHECK(back.violation_index == r.violation_index);
        CHECK(back.violating.has_value() == r.violating.has_value());
        if (r.violating) {
            CHECK(back.violating->collection == r.violating->collection);
            CHECK(back.violating->weights == r.violating->weights);
        }
    }
}

TEST_CASE("collection lines round trip through a stream") {
    const auto r = enumerate_minimal(4, EnumerationMode::search);
    std::stringstream ss;
    for (std::size_t i = 0; i < r.size(); ++i) ss << minimal_balanced_to_json_line(r.at(i)) << '\n';
    const auto back = read_collections(ss, 4);
    CHECK(back.size() == r.size());
    CHECK(back.checksum() == r.checksum());
    CHECK(back.digest() == r.digest());

    std::stringstream bad(R"({"n":3,"sets":[[1],[2]],"weights":["1","1"]})");
    CHECK_THROWS_AS(read_collections(bad, 3), Error);
}

TEST_CASE("orbit summary json") {
    const ZeroOneMatrix tri(3, sets_of({{1, 2}, {1, 3}, {2, 3}}));
    const auto j = orbit_summary_to_json(orbit_summary(tri, true), true);
    CHECK(j.find("\"size_nonzero\":5") != std::string::npos);
    CHECK(j.find("\"entries\"") != std::string::npos);
}

TEST_CASE("fast verify suites pass") {
    VerifyOptions o;
    o.max_n = 5;
    o.samples = 50;
    for (const char* name : {"tables", "formulas", "bounds", "orbits", "lambda", "games"}) {
        const auto s = run_suite(name, o);
        CAPTURE(name);
        CHECK(s.pass());
        CHECK(s.checks > 0);
    }
    const auto tables = run_suite("tables", o);
    CHECK(tables.reported.at("B(5)") == "1292");
    CHECK(verify_suite_to_json(tables).find("\"outcome\":\"pass\"") != std::string::npos);
    CHECK_THROWS_AS(run_suite("nope"), Error);
}

TEST_CASE("two-element suite reports the published seven-player value as a diff") {
    VerifyOptions o;
    o.max_n = 6;
    CHECK(run_suite("two-element", o).pass());
    o.max_n = 7;
    const auto s = run_suite("two-element", o);
    REQUIRE(s.diffs.size() == 1);
    CHECK(s.diffs[0].key == "two-element(7)");
    CHECK(s.diffs[0].expected == "712");
    CHECK(s.diffs[0].computed == "717");
}
