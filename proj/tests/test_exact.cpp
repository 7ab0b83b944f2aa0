#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "int_linalg.hpp"
#include "mbc/exact.hpp"
#include "mbc/lp.hpp"
#include "support.hpp"

using namespace mbc;
using namespace mbc::testing;

namespace {

QMatrix identity(std::size_t k) {
    QMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
    return m;
}

// Independent rank oracle: largest k with a nonzero k x k minor, by cofactor expansion.
Rational det(const std::vector<std::vector<Rational>>& a) {
    const std::size_t k = a.size();
    if (k == 0) return 1;
    Rational acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (a[0][j].is_zero()) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < k; ++c) {
                if (c != j) row.push_back(a[r][c]);
            }
            minor.push_back(row);
        }
        const Rational term = a[0][j] * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::size_t minor_rank(const QMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        for (Mask rs = 0; rs < (Mask{1} << rows); ++rs) {
            if (static_cast<std::size_t>(popcount(rs)) != k) continue;
            for (Mask cs = 0; cs < (Mask{1} << cols); ++cs) {
                if (static_cast<std::size_t>(popcount(cs)) != k) continue;
                std::vector<std::vector<Rational>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!((rs >> r) & 1U)) continue;
                    std::vector<Rational> row;
                    for (std::size_t c = 0; c < cols; ++c) {
                        if ((cs >> c) & 1U) row.push_back(m(r, c));
                    }
                    sub.push_back(row);
                }
                if (!det(sub).is_zero()) return k;
            }
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("rational normal form and arithmetic") {
    const Rational a(BigInt(6), BigInt(-4));
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() == 2);
    CHECK((Rational::parse("1/2") + Rational::parse("1/3")).str() == "5/6");
    CHECK((Rational::parse("2/4")).str() == "1/2");
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational::parse("-0/5").is_zero());
    CHECK(Rational::parse("1/3") < Rational::parse("1/2"));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational round trip through text") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational r = random_rational(rng, 1000, 97);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("big integer helpers") {
    CHECK(binomial(35, 7) == 6724520);
    CHECK(factorial(10) == 3628800);
    CHECK(power(BigInt(3), 0) == 1);
    CHECK(power(BigInt(2), 100) == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("rank_q examples") {
    CHECK(rank_q(identity(4)) == 4);
    QMatrix ones(3, 2);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 2; ++c) ones(r, c) = 1;
    }
    CHECK(rank_q(ones) == 1);
    const auto pairs = sets_of({{1, 2}, {1, 3}, {2, 3}});
    CHECK(rank_q(QMatrix::from_zero_one_columns(3, pairs)) == 3);
    CHECK(rank_zero_one(3, pairs) == 3);
}

TEST_CASE("solve_unique examples") {
    auto r1 = solve_unique_ones(QMatrix::from_zero_one_columns(3, sets_of({{1}, {2, 3}})));
    REQUIRE(r1);
    CHECK(*r1.solution == std::vector<Rational>{1, 1});

    auto r2 = solve_unique_ones(QMatrix::from_zero_one_columns(3, sets_of({{1, 2}, {1, 3}, {2, 3}})));
    REQUIRE(r2);
    CHECK(*r2.solution == std::vector<Rational>(3, Rational::parse("1/2")));

    auto r3 = solve_unique_ones(QMatrix::from_zero_one_columns(2, sets_of({{1}, {2}, {1, 2}})));
    CHECK_FALSE(r3);
    CHECK(r3.failure == SolveFailure::rank_deficient);

    auto r4 = solve_unique_ones(QMatrix::from_zero_one_columns(3, sets_of({{1, 2}})));
    CHECK_FALSE(r4);
    CHECK(r4.failure == SolveFailure::inconsistent);
}

TEST_CASE("rank_f2 examples") {
    std::vector<std::uint64_t> id5 = {1, 2, 4, 8, 16};
    CHECK(rank_f2(F2Matrix::from_row_masks(5, id5)) == 5);
    std::vector<std::uint64_t> twins = {0b11, 0b11};
    CHECK(rank_f2(F2Matrix::from_row_masks(2, twins)) == 1);
    // rows 110, 011, 101 written left to right as columns 1..3
    std::vector<std::uint64_t> cyc = {0b011, 0b110, 0b101};
    CHECK(rank_f2(F2Matrix::from_row_masks(3, cyc)) == 2);
}

TEST_CASE("rank_q agrees with the minor oracle on small random matrices") {
    Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 5);
        const int m = uniform_int(rng, 1, 5);
        QMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < m; ++c) a(r, c) = Rational(BigInt(uniform_int(rng, -2, 2)));
        }
        CHECK(rank_q(a) == minor_rank(a));
    }
}

TEST_CASE("rank_f2 never exceeds rank_q on 0-1 matrices up to 8x8") {
    Rng rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = uniform_int(rng, 1, 8);
        const int m = uniform_int(rng, 1, 8);
        const auto cols = random_columns(rng, n, m);
        const auto f2 = rank_f2(F2Matrix::from_zero_one_columns(n, cols));
        const auto q = rank_q(QMatrix::from_zero_one_columns(n, cols));
        CHECK(f2 <= q);
        CHECK(q == rank_zero_one(n, cols));
    }
}

TEST_CASE("rank_q is invariant under row and column permutations") {
    Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 7);
        const int m = uniform_int(rng, 1, 7);
        auto cols = random_columns(rng, n, m);
        const auto base = rank_q(QMatrix::from_zero_one_columns(n, cols));
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto& c : cols) {
            Mask p = 0;
            for (int i = 0; i < n; ++i) {
                if ((c >> i) & 1U) p |= Mask{1} << perm[static_cast<std::size_t>(i)];
            }
            c = p;
        }
        CHECK(rank_q(QMatrix::from_zero_one_columns(n, cols)) == base);
    }
}

TEST_CASE("integer fast path agrees with the rational solver") {
    Rng rng(21);
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = uniform_int(rng, 1, 9);
        const int m = uniform_int(rng, 1, n);
        const auto cols = random_columns(rng, n, m);
        const auto fast = solve_zero_one(n, cols);
        const auto slow = solve_unique_ones(QMatrix::from_zero_one_columns(n, cols));
        REQUIRE(fast.failure == slow.failure);
        if (fast) {
            CHECK(*fast.solution == *slow.solution);
            const auto back = QMatrix::from_zero_one_columns(n, cols).multiply(*fast.solution);
            CHECK(back == std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
        }
    }
}

TEST_CASE("kernel vector lies in the null space") {
    Rng rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const int m = uniform_int(rng, 1, 8);
        const auto a = QMatrix::from_zero_one_columns(n, random_columns(rng, n, m));
        const auto k = kernel_vector(a);
        CHECK(k.has_value() == (rank_q(a) < a.cols()));
        if (k) {
            CHECK(std::any_of(k->begin(), k->end(), [](const Rational& x) { return !x.is_zero(); }));
            CHECK(a.multiply(*k) == std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        }
    }
}

TEST_CASE("solve_lp on small programs") {
    // minimise -x1 - x2 subject to x1 + 2 x2 + s1 = 4, 3 x1 + x2 + s2 = 6
    QMatrix a(2, 4);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(0, 2) = 1;
    a(1, 0) = 3;
    a(1, 1) = 1;
    a(1, 3) = 1;
    const std::vector<Rational> b = {4, 6};
    const std::vector<Rational> c = {-1, -1, 0, 0};
    const auto r = solve_lp(a, b, c);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == Rational::parse("-14/5"));
    CHECK(r.x[0] == Rational::parse("8/5"));
    CHECK(r.x[1] == Rational::parse("6/5"));

    QMatrix inf(1, 1);
    inf(0, 0) = 1;
    const std::vector<Rational> neg = {-1};
    CHECK(solve_lp(inf, neg, std::vector<Rational>{0}).status == LpStatus::infeasible);

    QMatrix unb(1, 2);
    unb(0, 0) = 1;
    unb(0, 1) = -1;
    const std::vector<Rational> one = {1};
    CHECK(solve_lp(unb, one, std::vector<Rational>{0, -1}).status == LpStatus::unbounded);
}

TEST_CASE("solve_lp handles redundant equality rows") {
    QMatrix a(3, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 2;
    a(1, 1) = 2;
    a(2, 0) = 1;
    const std::vector<Rational> b = {2, 4, 1};
    const auto r = solve_lp(a, b, std::vector<Rational>{0, 1});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.x == std::vector<Rational>{1, 1});
}

TEST_CASE("integer echelon tracks the span of masks") {
    detail::IntEchelon e(4);
    CHECK(e.add_mask(0b0011));
    CHECK(e.add_mask(0b0110));
    CHECK_FALSE(e.add_mask(0b0011));
    CHECK(e.in_span(0b0101) == false);
    CHECK(e.add_mask(0b0101));
    CHECK(e.rank() == 3);
}
