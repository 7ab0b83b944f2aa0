#pragma once

// Weight vectors scaled to a common integer denominator, for the hot loops of
// generation, counting and enumeration. lambda_i = num[i] / den, den > 0, and
// gcd(den, num...) = 1 after normalise().

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "int_linalg.hpp"
#include "mbc/weight_vector.hpp"

namespace mbc::detail {

struct IntWeights {
    int m = 0;
    std::int64_t den = 1;
    std::array<std::int64_t, kMaxDim> num{};

    void normalise() {
        if (den < 0) {
            den = -den;
            for (int i = 0; i < m; ++i) num[i] = -num[i];
        }
        std::int64_t g = den;
        for (int i = 0; i < m; ++i) g = gcd64(g, num[i]);
        if (g > 1) {
            den /= g;
            for (int i = 0; i < m; ++i) num[i] /= g;
        }
    }

    void sort_descending() { std::sort(num.begin(), num.begin() + m, std::greater<>()); }

    void canonicalise() {
        normalise();
        sort_descending();
    }

    bool all_positive() const {
        for (int i = 0; i < m; ++i) {
            if (num[i] <= 0) return false;
        }
        return m > 0;
    }

    friend bool operator==(const IntWeights& a, const IntWeights& b) {
        if (a.m != b.m || a.den != b.den) return false;
        for (int i = 0; i < a.m; ++i) {
            if (a.num[i] != b.num[i]) return false;
        }
        return true;
    }
};

struct IntWeightsHash {
    std::size_t operator()(const IntWeights& w) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(w.m);
        auto mix = [&](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        mix(static_cast<std::uint64_t>(w.den));
        for (int i = 0; i < w.m; ++i) mix(static_cast<std::uint64_t>(w.num[i]));
        return static_cast<std::size_t>(h);
    }
};

/// True when a > b in the descending-lexicographic class order (compares values, not scaled numerators).
inline bool precedes(const IntWeights& a, const IntWeights& b) {
    for (int i = 0; i < std::min(a.m, b.m); ++i) {
        const __int128 x = static_cast<__int128>(a.num[i]) * b.den;
        const __int128 y = static_cast<__int128>(b.num[i]) * a.den;
        if (x != y) return x > y;
    }
    return a.m > b.m;
}

inline IntWeights to_int_weights(const WeightVector& w) {
    IntWeights out;
    require(w.size() <= static_cast<std::size_t>(kMaxDim), "weight vector longer than 16");
    out.m = static_cast<int>(w.size());
    BigInt den = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w[i].denominator().get_mpz_t());
    }
    if (!den.fits_slong_p()) throw Overflow{};
    out.den = den.get_si();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const BigInt x = w[i].numerator() * (den / w[i].denominator());
        if (!x.fits_slong_p()) throw Overflow{};
        out.num[i] = x.get_si();
    }
    return out;
}

inline WeightVector to_weight_vector(const IntWeights& w) {
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(w.m));
    for (int i = 0; i < w.m; ++i) coords.emplace_back(BigInt(static_cast<long>(w.num[i])), BigInt(static_cast<long>(w.den)));
    return WeightVector(std::move(coords));
}

/// sums[mask] = sum of num over the bits of mask, for all 2^m masks.
inline void subset_sums(const IntWeights& w, std::vector<std::int64_t>& sums) {
    const std::size_t total = std::size_t{1} << w.m;
    sums.resize(total);
    sums[0] = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + w.num[low];
    }
}

inline std::vector<Mask> unificator_rows(const IntWeights& w) {
    std::vector<std::int64_t> sums;
    subset_sums(w, sums);
    std::vector<Mask> rows;
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        if (sums[mask] == w.den) rows.push_back(static_cast<Mask>(mask));
    }
    return rows;
}

/// Strict positivity plus full rank of the unificator rows.
inline bool in_lambda(const IntWeights& w) {
    if (!w.all_positive()) return false;
    std::vector<std::int64_t> sums;
    subset_sums(w, sums);
    IntEchelon e(w.m);
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        if (sums[mask] != w.den) continue;
        e.add_mask(static_cast<Mask>(mask));
        if (e.rank() == w.m) return true;
    }
    return false;
}

/// m! / prod(repetition counts)! for a vector sorted in any order grouping equal values.
inline std::uint64_t permutation_multiplicity(const IntWeights& sorted) {
    std::uint64_t result = 1;
    int run = 0;
    for (int i = 0; i < sorted.m; ++i) {
        run = (i > 0 && sorted.num[i] == sorted.num[i - 1]) ? run + 1 : 1;
        // multiply by (i+1)/run incrementally keeps the value integral
        result = result * static_cast<std::uint64_t>(i + 1) / static_cast<std::uint64_t>(run);
    }
    return result;
}

}  // namespace mbc::detail
