#include <doctest.h>

#include "mbc/counting.hpp"
#include "support.hpp"

using namespace mbc;
using namespace mbc::testing;

namespace {

// Table of B(n, m) for n, m <= 6, rows indexed by m.
const long kTable[6][6] = {
    {1, 1, 1, 1, 1, 1},
    {0, 1, 3, 7, 15, 31},
    {0, 0, 2, 12, 50, 180},
    {0, 0, 0, 22, 250, 1910},
    {0, 0, 0, 0, 976, 18780},
    {0, 0, 0, 0, 0, 179312},
};

// Onto maps [n] -> [k] counted by listing all k^n maps.
long surjection_oracle(int k, int n) {
    if (k == 0) return n == 0 ? 1 : 0;
    long maps = 1;
    for (int i = 0; i < n; ++i) maps *= k;
    long onto = 0;
    for (long code = 0; code < maps; ++code) {
        unsigned hit = 0;
        long c = code;
        for (int i = 0; i < n; ++i) {
            hit |= 1U << (c % k);
            c /= k;
        }
        if (hit == (1U << k) - 1) ++onto;
    }
    return onto;
}

}  // namespace

TEST_CASE("surjections match direct listing") {
    for (int k = 0; k <= 5; ++k) {
        for (int n = 0; n <= 7; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(surjections(static_cast<unsigned>(k), static_cast<unsigned>(n)) == BigInt(surjection_oracle(k, n)));
        }
    }
    CHECK(surjections(3, 4) == 36);
    CHECK(surjections(6, 4) == 0);
}

TEST_CASE("formula reproduces the published table") {
    LambdaStore store;
    for (int n = 1; n <= 6; ++n) {
        const auto t = count_minimal_balanced_table(n, &store);
        BigInt total = 0;
        for (int m = 1; m <= 6; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const BigInt want(kTable[m - 1][n - 1]);
            CHECK(count_minimal_balanced(n, m, &store) == want);
            if (m <= n) CHECK(t.per_m[static_cast<std::size_t>(m - 1)] == want);
            total += want;
        }
        CHECK(t.total == total);
    }
    CHECK(count_minimal_balanced(3, 5) == 0);
    CHECK_THROWS_AS(count_minimal_balanced(17, 2), Error);
}

TEST_CASE("closed forms agree with the formula") {
    LambdaStore store;
    for (int n = 1; n <= 10; ++n) {
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(closed_form_count(n, m) == count_minimal_balanced(n, m, &store));
        }
    }
    CHECK(closed_form_count(6, 4) == 1910);
    CHECK(closed_form_count(5, 2) == 15);
    CHECK_THROWS_AS(closed_form_count(6, 5), Error);
}

TEST_CASE("fixed-size estimate stays below the exact count") {
    LambdaStore store;
    for (int n = 1; n <= 7; ++n) {
        for (int m = 1; m <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(fixed_size_lower_estimate(n, m) <= count_minimal_balanced(n, m, &store));
        }
    }
    // The uniform 1/2 and the all-ones classes of length 3 give every collection of size 3 at n = 3.
    CHECK(fixed_size_lower_estimate(3, 3) == 2);
    // Six unificators cannot be hit by four players.
    CHECK(fixed_size_lower_estimate(4, 4) == 0);
    CHECK(fixed_size_lower_estimate(6, 4) == 30);
}

TEST_CASE("total count bounds hold strictly") {
    const long totals[] = {1, 2, 6, 42, 1292, 200214};
    for (int n = 1; n <= 6; ++n) {
        const auto r = total_count_bounds(n, BigInt(totals[n - 1]));
        CAPTURE(n);
        CHECK(r.lower_holds);
        CHECK(r.upper_holds);
    }
    const auto seven = total_count_bounds(7, BigInt("132422036"));
    CHECK(seven.holds());
    CHECK_FALSE(total_count_bounds(6, BigInt(1)).holds());
}

TEST_CASE("invertible fraction converges from above") {
    Rational prev = invertible_fraction(1);
    CHECK(prev == Rational::parse("1/2"));
    for (unsigned t = 2; t <= 60; ++t) {
        const Rational cur = invertible_fraction(t);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK(Rational::parse("2887/10000") <= prev);
    CHECK(prev <= Rational::parse("2889/10000"));
}

TEST_CASE("square count lower bound") {
    for (int n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(square_count_check(n, BigInt(kTable[n - 1][n - 1])).holds);
    }
    // At n = 1 the bound is 2 / (1 * 1) against a single collection.
    CHECK_FALSE(square_count_check(1, BigInt(1)).holds);
}
