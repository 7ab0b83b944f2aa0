#pragma once

// Checked 64-bit integer kernels for small incidence systems. Every routine
// here throws Overflow rather than wrapping; callers fall back to GMP.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>

#include "mbc/common.hpp"
#include "mbc/exact.hpp"

namespace mbc::detail {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline constexpr int kMaxDim = kMaxPlayers;
using IntRow = std::array<std::int64_t, kMaxDim + 1>;

/// Incremental row echelon basis over Q with integer, gcd-normalised rows.
class IntEchelon {
public:
    explicit IntEchelon(int dim = 0) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return rank_; }

    /// Reduces v in place against the basis; returns true when v ends up zero.
    bool reduce(IntRow& v) const {
        for (int k = 0; k < rank_; ++k) {
            const int p = pivot_[k];
            if (v[p] == 0) continue;
            const IntRow& b = rows_[k];
            const std::int64_t bp = b[p];
            const std::int64_t vp = v[p];
            std::int64_t g = 0;
            for (int j = 0; j < dim_; ++j) {
                v[j] = sub(mul(bp, v[j]), mul(vp, b[j]));
                g = gcd64(g, v[j]);
            }
            if (g > 1) {
                for (int j = 0; j < dim_; ++j) v[j] /= g;
            }
        }
        for (int j = 0; j < dim_; ++j) {
            if (v[j] != 0) return false;
        }
        return true;
    }

    /// Inserts v when independent of the basis; returns whether it was inserted.
    bool add(IntRow v) {
        if (reduce(v)) return false;
        int p = 0;
        while (v[p] == 0) ++p;
        rows_[rank_] = v;
        pivot_[rank_] = p;
        ++rank_;
        return true;
    }

    bool add_mask(Mask m) { return add(mask_row(m)); }

    bool in_span(Mask m) const {
        IntRow v = mask_row(m);
        return reduce(v);
    }

    IntRow mask_row(Mask m) const {
        IntRow v{};
        for (int j = 0; j < dim_; ++j) v[j] = (m >> j) & 1U;
        return v;
    }

private:
    int dim_ = 0;
    int rank_ = 0;
    std::array<IntRow, kMaxDim + 1> rows_{};
    std::array<int, kMaxDim + 1> pivot_{};
};

/// Exact solution of M x = 1 for an n x m incidence matrix as x = num / den.
struct IntSolution {
    SolveFailure failure = SolveFailure::none;
    int m = 0;
    std::int64_t den = 1;
    std::array<std::int64_t, kMaxDim + 1> num{};
};

/// Bareiss forward elimination on [M | 1] followed by fraction-free back substitution.
inline IntSolution solve_zero_one_int(int n, std::span<const Mask> columns) {
    IntSolution out;
    const int m = static_cast<int>(columns.size());
    out.m = m;
    if (m > n) {
        out.failure = SolveFailure::rank_deficient;
        return out;
    }
    std::array<IntRow, kMaxDim> a{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = (columns[j] >> i) & 1U;
        a[i][m] = 1;
    }
    std::int64_t prev = 1;
    for (int c = 0; c < m; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) {
            out.failure = SolveFailure::rank_deficient;
            return out;
        }
        if (p != c) std::swap(a[p], a[c]);
        const std::int64_t piv = a[c][c];
        for (int i = c + 1; i < n; ++i) {
            const std::int64_t f = a[i][c];
            for (int j = c + 1; j <= m; ++j) {
                a[i][j] = sub(mul(piv, a[i][j]), mul(f, a[c][j])) / prev;
            }
            a[i][c] = 0;
        }
        prev = piv;
    }
    for (int i = m; i < n; ++i) {
        if (a[i][m] != 0) {
            out.failure = SolveFailure::inconsistent;
            return out;
        }
    }
    if (m == 0) return out;
    const std::int64_t d = a[m - 1][m - 1];
    for (int i = m - 1; i >= 0; --i) {
        std::int64_t acc = mul(d, a[i][m]);
        for (int j = i + 1; j < m; ++j) acc = sub(acc, mul(a[i][j], out.num[j]));
        out.num[i] = acc / a[i][i];
    }
    std::int64_t den = d;
    if (den < 0) {
        den = -den;
        for (int i = 0; i < m; ++i) out.num[i] = -out.num[i];
    }
    std::int64_t g = den;
    for (int i = 0; i < m; ++i) g = gcd64(g, out.num[i]);
    out.den = den / g;
    for (int i = 0; i < m; ++i) out.num[i] /= g;
    return out;
}

inline int rank_zero_one_int(int n, std::span<const Mask> columns) {
    IntEchelon e(n);
    for (Mask c : columns) e.add_mask(c);
    return e.rank();
}

}  // namespace mbc::detail
