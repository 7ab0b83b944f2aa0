#include <doctest.h>

#include <set>

#include "mbc/enumerate.hpp"
#include "mbc/orbits.hpp"
#include "support.hpp"

using namespace mbc;
using namespace mbc::testing;

namespace {

// Every nowhere-zero matrix of the exhaustive range, with its weights.
std::vector<std::pair<ZeroOneMatrix, WeightVector>> nowhere_zero_matrices(int n, int m) {
    std::vector<std::pair<ZeroOneMatrix, WeightVector>> out;
    scan_matrix_space(n, m, [&](std::span<const Mask> cols, const WeightVector& w) {
        if (w.nowhere_zero()) out.emplace_back(ZeroOneMatrix(n, std::vector<Mask>(cols.begin(), cols.end())), w);
    });
    return out;
}

int sign_of(const Rational& x) { return x.sign(); }

}  // namespace

TEST_CASE("apply_inversion examples and group law") {
    const ZeroOneMatrix m(3, sets_of({{1, 2}, {3}}));
    CHECK(apply_inversion(m, {0}) == m);
    CHECK(apply_inversion(m, {0b01}).column(0) == set_of({3}));
    CHECK(apply_inversion(apply_inversion(m, {0b11}), {0b11}) == m);
    CHECK_THROWS_AS(apply_inversion(m, {0b100}), Error);

    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 6);
        const int k = uniform_int(rng, 1, 6);
        const ZeroOneMatrix a(n, random_columns(rng, n, k));
        const InversionElement i{random_mask(rng, k)};
        const InversionElement j{random_mask(rng, k)};
        CHECK(apply_inversion(apply_inversion(a, i), j) == apply_inversion(a, i * j));
    }
}

TEST_CASE("transformed_weights examples") {
    const ZeroOneMatrix part(3, sets_of({{1}, {2, 3}}));
    const auto collapse = transformed_weights(part, {0b10});
    CHECK(collapse.collapsed);
    CHECK_FALSE(collapse.weights.has_value());

    const ZeroOneMatrix tri(3, sets_of({{1, 2}, {1, 3}, {2, 3}}));
    const auto t = transformed_weights(tri, {0b001});
    REQUIRE(t.weights.has_value());
    CHECK(*t.weights == weights({"-1", "1", "1"}));
    CHECK(apply_inversion(tri, {0b001}).columns() == sets_of({{3}, {1, 3}, {2, 3}}));

    const auto id = transformed_weights(tri, {0});
    CHECK(*id.weights == weights({"1/2", "1/2", "1/2"}));
    CHECK_THROWS_AS(transformed_weights(ZeroOneMatrix(2, {1, 1}), {0}), Error);
}

TEST_CASE("orbit_summary of the triangle") {
    const ZeroOneMatrix tri(3, sets_of({{1, 2}, {1, 3}, {2, 3}}));
    const auto s = orbit_summary(tri, true);
    CHECK(s.unificator_count == 3);
    CHECK(s.size_nonzero == 5);
    CHECK(s.size_positive == 2);
    CHECK(s.nonzero_law());
    CHECK(s.positive_law());
    CHECK(s.entries.size() == 8);
    // The full inversion is one of the two positive images.
    CHECK(std::find(s.positive_members.begin(), s.positive_members.end(), InversionElement{0b111}) !=
          s.positive_members.end());
}

TEST_CASE("single-column orbit is reported as observed") {
    for (int n = 1; n <= 4; ++n) {
        const auto s = orbit_summary(ZeroOneMatrix(n, {full_mask(n)}));
        CHECK(s.size_nonzero == 1);
        CHECK(s.size_positive == 1);
        CHECK(s.collapsed == 1);
        CHECK(s.nonzero_law());
        CHECK_FALSE(s.positive_law());
    }
}

TEST_CASE("exhaustive orbit laws for small matrices") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 2; m <= n; ++m) {
            for (const auto& [mat, w] : nowhere_zero_matrices(n, m)) {
                const auto s = orbit_summary(mat, true);
                CAPTURE(mat.collection().str());
                CHECK(s.nonzero_law());
                CHECK(s.positive_law());
                for (const auto& e : s.entries) {
                    const Rational sum = w.sum_over(e.element.columns);
                    if (sum == Rational(1)) {
                        CHECK(e.kind == OrbitClass::collapsed);
                        continue;
                    }
                    REQUIRE(e.weights.has_value());
                    const auto t = transformed_weights(mat, e.element);
                    CHECK(*t.weights == *e.weights);
                    // Signs flip on I below a unit sum and off I above it.
                    const Mask flipped = sum < Rational(1) ? e.element.columns : full_mask(m) & ~e.element.columns;
                    for (int j = 0; j < m; ++j) {
                        const int expect = ((flipped >> j) & 1U) ? -sign_of(w[static_cast<std::size_t>(j)])
                                                                   : sign_of(w[static_cast<std::size_t>(j)]);
                        CHECK(sign_of((*e.weights)[static_cast<std::size_t>(j)]) == expect);
                    }
                    CHECK(unificators(*e.weights).rows.size() == s.unificator_count);
                }
            }
        }
    }
}

TEST_CASE("f2_lift examples") {
    const std::uint64_t rows2[] = {0b01, 0b11};
    const auto lifted = f2_lift(2, F2Matrix::from_row_masks(2, rows2));
    CHECK(lifted.columns() == sets_of({{2}, {1}}));
    CHECK(*lifted.weights().solution == weights({"1", "1"}).coords());

    // Ones column followed by the unit vectors e_2, e_3.
    const std::uint64_t rows3[] = {0b001, 0b011, 0b101};
    const auto three = f2_lift(3, F2Matrix::from_row_masks(3, rows3));
    CHECK(WeightVector(*three.weights().solution).nowhere_zero());

    const std::uint64_t singular[] = {0b01, 0b01};
    CHECK_THROWS_AS(f2_lift(2, F2Matrix::from_row_masks(2, singular)), Error);
    const std::uint64_t no_ones[] = {0b10, 0b01};
    CHECK_THROWS_AS(f2_lift(2, F2Matrix::from_row_masks(2, no_ones)), Error);
}

TEST_CASE("count_f2_matrices examples and exhaustive lift count") {
    CHECK(count_f2_matrices(3, 2) == 6);
    CHECK(count_f2_matrices(1, 1) == 1);
    CHECK(count_f2_matrices(4, 3) == 168);
    for (int n = 1; n <= 4; ++n) {
        const auto all = all_f2_with_ones_column(n);
        CHECK(BigInt(static_cast<unsigned long>(all.size())) == count_f2_matrices(n, n));
        std::set<std::vector<Mask>> images;
        for (const auto& a : all) images.insert(f2_lift(n, a).columns());
        CHECK(BigInt(static_cast<unsigned long>(images.size())) == count_f2_matrices(n, n));
    }
}

TEST_CASE("random lifted matrices obey the orbit laws") {
    Rng rng(2024);
    for (int n = 5; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_f2_with_ones_column(n, rng);
            CHECK(rank_f2(a) == static_cast<std::size_t>(n));
            const auto s = orbit_summary(f2_lift(n, a));
            CHECK(s.nonzero_law());
            CHECK(s.positive_law());
        }
    }
}
