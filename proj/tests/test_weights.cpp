#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "mbc/weights.hpp"
#include "support.hpp"
#include "weights_internal.hpp"

using namespace mbc;
using namespace mbc::testing;

namespace {

// Rank of every k-subset of rows, counted directly with the rational rank.
BigInt subset_rank_oracle(const UnificatorSet& u, int k, int m) {
    const std::size_t total = u.rows.size();
    BigInt count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << total); ++pick) {
        if (std::popcount(pick) != k) continue;
        std::vector<Mask> rows;
        for (std::size_t j = 0; j < total; ++j) {
            if ((pick >> j) & 1U) rows.push_back(u.rows[j]);
        }
        QMatrix a(rows.size(), static_cast<std::size_t>(m));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (int c = 0; c < m; ++c) a(r, static_cast<std::size_t>(c)) = static_cast<int>((rows[r] >> c) & 1U);
        }
        if (rank_q(a) == static_cast<std::size_t>(m)) count += 1;
    }
    return count;
}

WeightVector uniform_weights(int m, int k) {
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(m), Rational(BigInt(1), BigInt(k))));
}

}  // namespace

TEST_CASE("unificators examples") {
    const auto a = unificators(weights({"1", "1", "1"}));
    CHECK(a.rows == std::vector<Mask>{0b001, 0b010, 0b100});
    CHECK(a.rank == 3);
    const auto b = unificators(uniform_weights(4, 2));
    CHECK(b.rows.size() == 6);
    CHECK(std::all_of(b.rows.begin(), b.rows.end(), [](Mask r) { return popcount(r) == 2; }));
    CHECK(b.rank == 4);
    const auto c = unificators(weights({"2", "2"}));
    CHECK(c.rows.empty());
    CHECK(c.rank == 0);
    CHECK_THROWS_AS(unificators(WeightVector(std::vector<Rational>(17, Rational(1)))), Error);
}

TEST_CASE("is_in_lambda examples") {
    CHECK(is_in_lambda(weights({"1", "1"})));
    CHECK(is_in_lambda(weights({"1/2", "1/2", "1/2"})));
    CHECK_FALSE(is_in_lambda(weights({"1/3", "1/3"})));
    CHECK_FALSE(is_in_lambda(weights({"1", "0"})));
    CHECK_FALSE(is_in_lambda(weights({"2", "-1"})));
}

TEST_CASE("uniform vectors belong for every k below m") {
    for (int m = 2; m <= 10; ++m) {
        for (int k = 1; k < m; ++k) CHECK(is_in_lambda(uniform_weights(m, k)));
        // U is the single all-ones row.
        CHECK_FALSE(is_in_lambda(uniform_weights(m, m)));
    }
}

TEST_CASE("lambda class multiplicity") {
    const auto c = lambda_class_of(weights({"1/3", "2/3", "1/3", "2/3", "1/3"}));
    CHECK(c.canonical == weights({"2/3", "2/3", "1/3", "1/3", "1/3"}));
    CHECK(c.multiplicity == 10);
    CHECK(lambda_class_of(weights({"1", "1", "1"})).multiplicity == 1);
}

TEST_CASE("generate_lambda small examples") {
    CHECK(generate_lambda(1).classes == std::vector<LambdaClass>{{weights({"1"}), 1}});
    CHECK(generate_lambda(2).classes == std::vector<LambdaClass>{{weights({"1", "1"}), 1}});
    const auto three = generate_lambda(3);
    REQUIRE(three.classes.size() == 2);
    CHECK(three.classes[0].canonical == weights({"1", "1", "1"}));
    CHECK(three.classes[1].canonical == weights({"1/2", "1/2", "1/2"}));
}

TEST_CASE("generate_lambda agrees with the matrix-scan oracle") {
    for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(generate_lambda(m) == lambda_bruteforce_oracle(m));
    }
    CHECK_THROWS_AS(lambda_bruteforce_oracle(6), Error);
}

TEST_CASE("rank prefilter on the segment operation is conservative") {
    for (int m = 1; m <= 5; ++m) {
        CAPTURE(m);
        CHECK(detail::generate_lambda_unfiltered(m, 0) == generate_lambda(m));
    }
}

TEST_CASE("class and vector counts") {
    const int classes[] = {1, 1, 2, 5, 17, 92};
    const long vectors[] = {1, 1, 2, 11, 169, 7334};
    LambdaStore store;
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        const auto set = generate_lambda(m, &store);
        CHECK(set.classes.size() == static_cast<std::size_t>(classes[m - 1]));
        CHECK(set.vector_count() == BigInt(vectors[m - 1]));
    }
}

TEST_CASE("every generated vector passes membership and its unificators are an antichain") {
    LambdaStore store;
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        const auto set = generate_lambda(m, &store);
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        for (const auto& c : set.classes) {
            CHECK(is_in_lambda(c.canonical));
            CHECK(lambda_class_of(c.canonical) == c);
            const auto u = unificators(c.canonical);
            lo = std::min(lo, u.rows.size());
            hi = std::max(hi, u.rows.size());
            for (Mask a : u.rows) {
                for (Mask b : u.rows) {
                    if (a != b) CHECK((a & b) != a);
                }
            }
        }
        CHECK(lo == static_cast<std::size_t>(m));
        CHECK(hi == binomial(static_cast<unsigned>(m), static_cast<unsigned>((m + 1) / 2)));
    }
}

TEST_CASE("generation statistics are consistent") {
    GenerationStats stats;
    const auto set = generate_lambda(5, nullptr, {0, &stats});
    CHECK(stats.admitted == set.classes.size());
    CHECK(stats.distinct_candidates == stats.admitted + stats.rejected);
    CHECK(stats.insert_candidates > 0);
    CHECK(stats.segment_candidates > 0);
}

TEST_CASE("count_full_rank_subsets examples") {
    const auto ones = unificators(weights({"1", "1", "1"}));
    CHECK(count_full_rank_subsets(ones, 3) == 1);
    CHECK(count_full_rank_subsets(ones, 2) == 0);
    const auto halves = unificators(weights({"1/2", "1/2", "1/2"}));
    CHECK(count_full_rank_subsets(halves, 3) == 1);
}

TEST_CASE("full-rank subset counts match the rational rank oracle") {
    for (int m = 2; m <= 5; ++m) {
        const auto set = generate_lambda(m);
        for (const auto& c : set.classes) {
            const auto u = unificators(c.canonical);
            if (u.rows.size() > 12) continue;
            const int kmax = static_cast<int>(u.rows.size());
            const auto counts = full_rank_subset_counts(u, kmax);
            for (int k = 0; k <= kmax; ++k) {
                CAPTURE(c.canonical.str());
                CAPTURE(k);
                CHECK(counts[static_cast<std::size_t>(k)] == subset_rank_oracle(u, k, m));
            }
        }
    }
}

TEST_CASE("lambda set json round trip and store") {
    const auto set = generate_lambda(4);
    CHECK(lambda_set_from_json(lambda_set_to_json(set)) == set);
    CHECK_THROWS_AS(lambda_set_from_json("{\"m\": 2}"), Error);
    CHECK_THROWS_AS(lambda_set_from_json("not json"), Error);

    const auto dir = std::filesystem::temp_directory_path() / "mbc_test_store";
    std::filesystem::remove_all(dir);
    {
        LambdaStore store(dir);
        generate_lambda(4, &store);
        CHECK(std::filesystem::exists(store.file_for(4)));
        CHECK(std::filesystem::exists(store.file_for(3)));
    }
    LambdaStore reopened(dir);
    const auto cached = reopened.find(4);
    REQUIRE(cached.has_value());
    CHECK(*cached == set);
    std::filesystem::remove_all(dir);
}
