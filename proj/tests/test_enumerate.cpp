#include <doctest.h>

#include <set>

#include "mbc/enumerate.hpp"
#include "support.hpp"

using namespace mbc;
using namespace mbc::testing;

namespace {

const std::vector<std::uint64_t> kPerM[] = {
    {1},
    {1, 1},
    {1, 3, 2},
    {1, 7, 12, 22},
    {1, 15, 50, 250, 976},
    {1, 31, 180, 1910, 18780, 179312},
};

std::set<std::vector<Mask>> as_set(const EnumerationResult& r) {
    std::set<std::vector<Mask>> out;
    for (std::size_t i = 0; i < r.size(); ++i) out.emplace(r.sets(i).begin(), r.sets(i).end());
    return out;
}

}  // namespace

TEST_CASE("n = 3 collections") {
    const auto r = enumerate_minimal(3, EnumerationMode::search);
    const std::set<std::vector<Mask>> want = {
        coll(3, {{1, 2, 3}}).sets(),
        coll(3, {{1}, {2, 3}}).sets(),
        coll(3, {{2}, {1, 3}}).sets(),
        coll(3, {{3}, {1, 2}}).sets(),
        coll(3, {{1}, {2}, {3}}).sets(),
        coll(3, {{1, 2}, {1, 3}, {2, 3}}).sets(),
    };
    CHECK(as_set(r) == want);
    CHECK(r.total() == 6);
    CHECK(r.complete());
}

TEST_CASE("per-size counts for both modes") {
    LambdaStore store;
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        EnumerateOptions opt;
        opt.store = &store;
        const auto a = enumerate_minimal(n, EnumerationMode::search, opt);
        const auto b = enumerate_minimal(n, EnumerationMode::lambda_route, opt);
        CHECK(a.per_m_counts() == kPerM[n - 1]);
        CHECK(b.per_m_counts() == kPerM[n - 1]);
        CHECK(a.checksum() == b.checksum());
        CHECK(a.digest() == b.digest());
        CHECK(as_set(a) == as_set(b));
    }
    const auto six = enumerate_minimal(6, EnumerationMode::lambda_route, {0, 0, {}, &store});
    CHECK(six.per_m_counts() == kPerM[5]);
    CHECK(six.total() == 200214);
}

TEST_CASE("results are sorted, distinct and certified") {
    for (int n = 1; n <= 5; ++n) {
        const auto r = enumerate_minimal(n, EnumerationMode::lambda_route);
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto e = r.at(i);
            CHECK(e.weights.all_positive());
            CHECK(sums_to_ones(n, e.collection.sets(), e.weights));
            if (i > 0) {
                const auto p = r.sets(i - 1);
                const auto c = r.sets(i);
                const bool ordered = p.size() < c.size() ||
                                     (p.size() == c.size() && std::lexicographical_compare(p.begin(), p.end(), c.begin(), c.end()));
                CHECK(ordered);
            }
            if (n <= 4 || i % 17 == 0) {
                const auto cert = minimality_certificate(e.collection);
                CHECK(cert.kind == BalanceKind::minimal_balanced);
                CHECK(*cert.weights == e.weights);
            }
        }
    }
}

TEST_CASE("definition oracle agrees with the search") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        const auto o = bruteforce_oracle_enumerate(n);
        const auto s = enumerate_minimal(n, EnumerationMode::search);
        CHECK(as_set(o) == as_set(s));
        CHECK(o.checksum() == s.checksum());
        for (std::size_t i = 0; i < o.size(); ++i) CHECK(o.at(i).weights == s.at(i).weights);
    }
    CHECK_THROWS_AS(bruteforce_oracle_enumerate(6), Error);
}

TEST_CASE("thread count does not change the output") {
    const auto one = enumerate_minimal(5, EnumerationMode::search, {1, 0, {}, nullptr});
    const auto three = enumerate_minimal(5, EnumerationMode::search, {3, 0, {}, nullptr});
    CHECK(one.digest() == three.digest());
    const auto r1 = enumerate_minimal(5, EnumerationMode::lambda_route, {1, 0, {}, nullptr});
    const auto r3 = enumerate_minimal(5, EnumerationMode::lambda_route, {3, 0, {}, nullptr});
    CHECK(r1.digest() == r3.digest());
}

TEST_CASE("streaming keeps counts and checksum without storing") {
    const auto stored = enumerate_minimal(5, EnumerationMode::lambda_route);
    for (auto mode : {EnumerationMode::search, EnumerationMode::lambda_route}) {
        std::uint64_t seen = 0;
        EnumerateOptions opt;
        opt.sink = [&](const MinimalBalanced& mb) {
            ++seen;
            CHECK(mb.weights.all_positive());
        };
        const auto r = enumerate_minimal(5, mode, opt);
        CHECK(r.size() == 0);
        CHECK(seen == 1292);
        CHECK(r.total() == 1292);
        CHECK(r.checksum() == stored.checksum());
    }
}

TEST_CASE("resource and size limits") {
    EnumerateOptions opt;
    opt.max_collections = 100;
    const auto r = enumerate_minimal(5, EnumerationMode::search, opt);
    CHECK_FALSE(r.complete());
    CHECK(r.progress() >= 0.0);
    CHECK(r.progress() < 1.0);
    CHECK(r.size() <= 100);
    try {
        enumerate_minimal(7, EnumerationMode::lambda_route);
        FAIL("expected a resource limit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::resource_limit);
    }
    CHECK_THROWS_AS(enumerate_minimal(8, EnumerationMode::lambda_route), Error);
}

TEST_CASE("finish rejects duplicates") {
    EnumerationResult r(3);
    const auto sets = sets_of({{1}, {2, 3}});
    const std::int64_t num[] = {1, 1};
    r.add(sets, num, 1);
    r.add(sets, num, 1);
    CHECK_THROWS_AS(r.finish(), Error);
}

TEST_CASE("matrix space examples") {
    CHECK(scan_matrix_space(2, 2).positive == 2);
    CHECK(scan_matrix_space(3, 3).positive == 12);
    CHECK(scan_matrix_space(3, 2).positive == 6);
    CHECK_THROWS_AS(scan_matrix_space(5, 5), Error);
}

TEST_CASE("matrix space agrees with the counting formula") {
    LambdaStore store;
    for (int n = 1; n <= 5; ++n) {
        for (int m = 1; m <= n && n * m <= kMatrixScanCells; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const auto c = scan_matrix_space(n, m);
            CHECK(c.positive == count_positive_matrices(n, m, generate_lambda(m, &store)));
            CHECK(c.positive == factorial(static_cast<unsigned>(m)) * BigInt(static_cast<unsigned long>(kPerM[n - 1][m - 1])));
            BigInt sum = 0;
            for (const auto& [support, k] : c.by_support) sum += k;
            CHECK(sum == c.with_weights);
            CHECK(c.by_support.at(full_mask(m)) == c.nowhere_zero);
            CHECK(c.positive <= c.nowhere_zero);
        }
    }
}

TEST_CASE("matrix bound checks hold on every census") {
    std::vector<MatrixSpaceCounts> censuses;
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= n; ++m) censuses.push_back(scan_matrix_space(n, m));
    }
    const auto checks = matrix_bound_checks(censuses);
    CHECK(checks.size() > 10);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.n);
        CAPTURE(c.m);
        CHECK(c.holds);
    }
}

TEST_CASE("two-element census examples") {
    CHECK(enumerate_two_element(4).total == 3);
    const auto five = enumerate_two_element(5);
    CHECK(five.total == 22);
    CHECK(five.by_shape.at({5}) == 12);
    CHECK(five.by_shape.at({3, 2}) == 10);
    CHECK(enumerate_two_element(3).total == 1);
    CHECK(enumerate_two_element(6).total == 25);
    CHECK(enumerate_two_element(2).total == 1);
}

TEST_CASE("two-element formula agrees with the pair-subset scan") {
    for (int n = 2; n <= kTwoElementScanLimit; ++n) {
        CAPTURE(n);
        CHECK(enumerate_two_element(n) == two_element_bruteforce(n));
    }
    // Seven players: 360 seven-cycles, 252 five-cycle-plus-edge, 105 triangle-plus-two-edges.
    const auto seven = enumerate_two_element(7);
    CHECK(seven.by_shape.at({7}) == 360);
    CHECK(seven.by_shape.at({5, 2}) == 252);
    CHECK(seven.by_shape.at({3, 2, 2}) == 105);
    CHECK(seven.total == 717);
}

TEST_CASE("two-element census agrees with the general enumerator") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        const auto r = enumerate_minimal(n, EnumerationMode::lambda_route);
        CHECK(BigInt(static_cast<unsigned long>(count_two_element(r))) == enumerate_two_element(n).total);
    }
}

TEST_CASE("harvest_lambda examples and independence of n") {
    const auto three = enumerate_minimal(3, EnumerationMode::search);
    CHECK(harvest_lambda(three, 2).classes == std::vector<LambdaClass>{{weights({"1", "1"}), 1}});
    CHECK(harvest_lambda(three, 3) == generate_lambda(3));
    LambdaStore store;
    for (int n = 1; n <= 6; ++n) {
        const auto r = enumerate_minimal(n, EnumerationMode::lambda_route, {0, 0, {}, &store});
        for (int m = 1; m <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(harvest_lambda(r, m) == generate_lambda(m, &store));
        }
    }
}
