#include "mbc/orbits.hpp"

#include <algorithm>

#include "mbc/weights.hpp"

namespace mbc {

ZeroOneMatrix apply_inversion(const ZeroOneMatrix& m, InversionElement i) {
    require((i.columns & ~full_mask(static_cast<int>(m.m()))) == 0, "inversion selects a column beyond m");
    auto cols = m.columns();
    const Mask all = full_mask(m.n());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((i.columns >> j) & 1U) cols[j] = all & ~cols[j];
    }
    return ZeroOneMatrix(m.n(), std::move(cols));
}

namespace {

WeightVector nowhere_zero_weights(const ZeroOneMatrix& m) {
    const auto s = m.weights();
    require(s.solution.has_value(), "matrix lacks full column rank or has no weight vector");
    WeightVector w(*s.solution);
    require(w.nowhere_zero(), "weight vector has a zero coordinate");
    return w;
}

}  // namespace

TransformedWeights transformed_weights(const ZeroOneMatrix& m, InversionElement i) {
    const WeightVector lambda = nowhere_zero_weights(m);
    const ZeroOneMatrix image = apply_inversion(m, i);
    const Rational s = lambda.sum_over(i.columns);
    TransformedWeights out;
    if (s == Rational(1)) {
        out.collapsed = true;
        ensure(image.rank() < m.m(), "inversion with unit weight sum kept full rank");
        return out;
    }
    const Rational scale = Rational(1) - s;
    std::vector<Rational> coords(lambda.size());
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        coords[j] = ((i.columns >> j) & 1U) ? -lambda[j] / scale : lambda[j] / scale;
    }
    out.weights = WeightVector(std::move(coords));
    ensure(sums_to_ones(image.n(), image.columns(), *out.weights), "transformed weights fail z_I(M) x = 1");
    ensure(image.rank() == m.m(), "inversion with non-unit weight sum dropped rank");
    return out;
}

bool OrbitSummary::nonzero_law() const {
    const std::uint64_t all = std::uint64_t{1} << base.m();
    return size_nonzero + unificator_count == all;
}

bool OrbitSummary::positive_law() const {
    if (size_positive != 2) return false;
    std::vector<Mask> got;
    for (auto e : positive_members) got.push_back(e.columns);
    std::vector<Mask> want = {base_weights.neg_mask(), base_weights.pos_mask()};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    return got == want;
}

OrbitSummary orbit_summary(const ZeroOneMatrix& m, bool keep_entries) {
    if (m.m() > static_cast<std::size_t>(kMaxPlayers)) fail(ErrorCode::size_limit, "orbit walks limited to m <= 16");
    OrbitSummary out{m, nowhere_zero_weights(m), 0, 0, 0, 0, {}, {}};
    out.unificator_count = unificators(out.base_weights).rows.size();
    const Mask top = full_mask(static_cast<int>(m.m()));
    const Mask all = full_mask(m.n());
    auto cols = m.columns();
    for (std::uint64_t g = 0; g <= top; ++g) {
        const Mask code = static_cast<Mask>(g ^ (g >> 1));
        if (g > 0) {
            // Successive Gray codes differ in exactly one column.
            const int j = std::countr_zero(static_cast<Mask>(g));
            cols[static_cast<std::size_t>(j)] = all & ~cols[static_cast<std::size_t>(j)];
        }
        OrbitEntry e;
        e.element = {code};
        const auto s = solve_zero_one(m.n(), cols);
        if (!s) {
            e.kind = OrbitClass::collapsed;
            ++out.collapsed;
        } else {
            WeightVector w(*s.solution);
            if (!w.nowhere_zero()) {
                e.kind = OrbitClass::zero_weight;
            } else {
                ++out.size_nonzero;
                if (w.all_positive()) {
                    e.kind = OrbitClass::positive;
                    ++out.size_positive;
                    out.positive_members.push_back(e.element);
                } else {
                    e.kind = OrbitClass::nowhere_zero;
                }
            }
            e.weights = std::move(w);
        }
        if (keep_entries) out.entries.push_back(std::move(e));
    }
    return out;
}

namespace {

std::vector<Mask> f2_columns(const F2Matrix& a) {
    std::vector<Mask> cols(a.cols(), 0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (a.get(i, j)) cols[j] |= Mask{1} << i;
        }
    }
    return cols;
}

F2Matrix from_columns(int n, const std::vector<Mask>& cols) {
    return F2Matrix::from_zero_one_columns(n, cols);
}

// Reduces v against an F2 basis kept with distinct leading bits; returns the residue.
Mask f2_reduce(const std::vector<Mask>& basis, Mask v) {
    for (Mask b : basis) v = std::min(v, v ^ b);
    return v;
}

void f2_insert(std::vector<Mask>& basis, Mask v) {
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
}

}  // namespace

ZeroOneMatrix f2_lift(int n, const F2Matrix& a) {
    require(n >= 1 && n <= kMaxPlayers, "f2_lift: n out of range");
    require(a.rows() == static_cast<std::size_t>(n) && a.cols() == static_cast<std::size_t>(n), "f2_lift: matrix must be n x n");
    require(rank_f2(a) == static_cast<std::size_t>(n), "f2_lift: matrix is not of full rank over F2");
    const auto cols = f2_columns(a);
    const Mask all = full_mask(n);
    require(cols[0] == all, "f2_lift: first column must be all ones");
    std::vector<Mask> lifted(cols.begin() + 1, cols.end());
    Mask extra = all;
    for (Mask c : lifted) extra ^= c;
    lifted.push_back(extra);
    ZeroOneMatrix out(n, std::move(lifted));
    const auto s = out.weights();
    ensure(s.solution.has_value(), "f2_lift: lifted matrix has no unique weight vector");
    ensure(WeightVector(*s.solution).nowhere_zero(), "f2_lift: lifted weights contain a zero");
    return out;
}

BigInt count_f2_matrices(int n, int m) {
    require(n >= 1 && m >= 1 && m <= n, "count_f2_matrices: need 1 <= m <= n");
    BigInt value = 1;
    const BigInt top = power(BigInt(2), static_cast<unsigned>(n));
    for (int k = 1; k < m; ++k) value *= top - power(BigInt(2), static_cast<unsigned>(k));
    return value;
}

F2Matrix random_f2_with_ones_column(int n, std::mt19937_64& rng) {
    require(n >= 1 && n <= kMaxPlayers, "random_f2_with_ones_column: n out of range");
    const Mask all = full_mask(n);
    std::vector<Mask> cols = {all};
    std::vector<Mask> basis = {all};
    while (static_cast<int>(cols.size()) < n) {
        const Mask v = static_cast<Mask>(rng()) & all;
        const Mask r = f2_reduce(basis, v);
        if (r == 0) continue;
        cols.push_back(v);
        f2_insert(basis, r);
    }
    return from_columns(n, cols);
}

std::vector<F2Matrix> all_f2_with_ones_column(int n) {
    require(n >= 1 && n <= 4, "all_f2_with_ones_column: n limited to 4");
    const Mask all = full_mask(n);
    std::vector<F2Matrix> out;
    std::vector<Mask> cols = {all};
    auto walk = [&](auto&& self, std::vector<Mask> basis) -> void {
        if (static_cast<int>(cols.size()) == n) {
            out.push_back(from_columns(n, cols));
            return;
        }
        for (Mask v = 1; v <= all; ++v) {
            const Mask r = f2_reduce(basis, v);
            if (r == 0) continue;
            auto grown = basis;
            f2_insert(grown, r);
            cols.push_back(v);
            self(self, grown);
            cols.pop_back();
        }
    };
    walk(walk, std::vector<Mask>{all});
    return out;
}

}  // namespace mbc
