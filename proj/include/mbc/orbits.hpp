#pragma once

// Column-complement action of Z2^m on n x m incidence matrices, and the
// F2 construction of matrices with nowhere-zero weights.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mbc/exact.hpp"
#include "mbc/model.hpp"

namespace mbc {

/// z_I: complement (within [n]) every column whose index is in `columns`.
struct InversionElement {
    Mask columns = 0;

    /// z_I o z_J = z_{I xor J}
    friend InversionElement operator*(InversionElement a, InversionElement b) { return {a.columns ^ b.columns}; }
    friend bool operator==(InversionElement, InversionElement) = default;
};

ZeroOneMatrix apply_inversion(const ZeroOneMatrix& m, InversionElement i);

struct TransformedWeights {
    bool collapsed = false;                 // the selected weights sum to exactly 1
    std::optional<WeightVector> weights;    // closed-form weights of z_I(M) otherwise
};

/// Weights of z_I(M) from those of M: with s the sum of weights over I,
/// lambda'_i = -lambda_i / (1 - s) on I and lambda_i / (1 - s) off I.
/// Verifies z_I(M) lambda' = 1 (or the rank drop when s = 1) exactly; M must have
/// full column rank and nowhere-zero weights.
TransformedWeights transformed_weights(const ZeroOneMatrix& m, InversionElement i);

enum class OrbitClass { positive, nowhere_zero, zero_weight, collapsed };

struct OrbitEntry {
    InversionElement element;
    OrbitClass kind = OrbitClass::collapsed;
    std::optional<WeightVector> weights;
};

struct OrbitSummary {
    ZeroOneMatrix base;
    WeightVector base_weights;
    std::uint64_t size_nonzero = 0;   // images with nowhere-zero weights (positive included)
    std::uint64_t size_positive = 0;  // images with all weights positive
    std::uint64_t unificator_count = 0;
    std::uint64_t collapsed = 0;
    std::vector<InversionElement> positive_members;
    std::vector<OrbitEntry> entries;  // Gray-code order; filled when requested

    /// size_nonzero = 2^m - |U(lambda)|
    bool nonzero_law() const;
    /// Exactly two positive images, namely z_neg(M) and z_pos(M).
    bool positive_law() const;
};

/// Walks all 2^m inversions in Gray-code order and classifies each image exactly.
/// Requires full column rank and nowhere-zero weights; m <= 16.
OrbitSummary orbit_summary(const ZeroOneMatrix& m, bool keep_entries = false);

/// Drops the all-ones first column of a full-rank n x n F2 matrix and appends
/// 1 + (sum of the remaining columns) mod 2. The result has full rank over Q and
/// no zero weight; both facts are verified.
ZeroOneMatrix f2_lift(int n, const F2Matrix& a);

/// prod_{k=1}^{m-1} (2^n - 2^k): full-rank n x m F2 matrices with a fixed nonzero first column.
BigInt count_f2_matrices(int n, int m);

/// Uniform full-rank n x n F2 matrix with all-ones first column, by column-wise rejection.
F2Matrix random_f2_with_ones_column(int n, std::mt19937_64& rng);

/// Every full-rank n x n F2 matrix with all-ones first column, n <= 4.
std::vector<F2Matrix> all_f2_with_ones_column(int n);

}  // namespace mbc
