#pragma once

// Exact counts of minimal balanced collections: the unificator-subset formula,
// closed forms for small sizes, a fixed-size estimate, and the growth bounds.

#include <map>
#include <string>
#include <vector>

#include "mbc/exact.hpp"
#include "mbc/weights.hpp"

namespace mbc {

/// Number of maps from an n-set onto a k-set: sum_l (-1)^(k-l) C(k,l) l^n.
BigInt surjections(unsigned k, unsigned n);

/// Number of n x m 0-1 matrices of full rank whose weight vector is strictly positive.
/// `lambda` must be the weight-vector set for m.
BigInt count_positive_matrices(int n, int m, const LambdaSet& lambda, unsigned jobs = 0);

/// Number of minimal balanced collections of m coalitions of [n] (positive matrices / m!).
BigInt count_minimal_balanced(int n, int m, LambdaStore* store = nullptr, unsigned jobs = 0);

struct CountTable {
    int n = 0;
    std::vector<BigInt> per_m;  // index m - 1
    BigInt total;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// per_m for m = 1..n and their sum.
CountTable count_minimal_balanced_table(int n, LambdaStore* store = nullptr, unsigned jobs = 0);

/// Polynomial-exponential closed form for m <= 4, evaluated in exact rationals.
BigInt closed_form_count(int n, int m);

/// Contribution of the uniform weight vectors with the largest unificator sets, taken at
/// their full unificator set only: surj(C(m, ceil(m/2)), n) / m!, doubled for odd m >= 3.
/// Always a lower bound for the exact count; zero until n reaches C(m, ceil(m/2)).
BigInt fixed_size_lower_estimate(int n, int m);

struct BoundReport {
    int n = 0;
    BigInt count;
    Rational lower;  // 288/1000 * 2^((n-1)^2) / n!
    Rational upper;  // 120 * 2^(n^2 - n) / n!
    bool lower_holds = false;
    bool upper_holds = false;

    bool holds() const { return lower_holds && upper_holds; }
};

/// Strict two-sided growth bounds on the total number of minimal balanced collections.
BoundReport total_count_bounds(int n, const BigInt& total);

/// prod_{k=1}^{terms} (1 - 2^-k): the limiting fraction of invertible square matrices over F2.
Rational invertible_fraction(unsigned terms);

/// Exhaustive census of all n x m 0-1 matrices.
struct MatrixSpaceCounts {
    int n = 0;
    int m = 0;
    BigInt with_weights;  // full column rank and M x = 1 solvable
    BigInt nowhere_zero;  // ... with no zero weight
    BigInt positive;      // ... with all weights positive
    /// Keyed by the nonzero-support mask of the weight vector (bit i <-> column i).
    std::map<Mask, BigInt> by_support;

    friend bool operator==(const MatrixSpaceCounts&, const MatrixSpaceCounts&) = default;
};

struct BoundCheck {
    std::string name;
    int n = 0;
    int m = 0;
    Rational lhs;
    Rational rhs;
    bool strict = false;
    bool holds = false;
    Rational margin;  // rhs - lhs; holds means margin > 0 (strict) or >= 0
};

/// Checks the matrix-count inequalities against exhaustive censuses:
///   lift lower bound     |nowhere_zero(n, n)| >= prod_{k=1}^{n-1} (2^n - 2^k)
///   orbit sandwich       2/(2^m - m) |nowhere_zero| <= |positive| <= 2/(2^m - C(m, ceil(m/2))) |nowhere_zero|, m >= 2
///   support upper bound  |nowhere_zero(n, m)| < 2^(nm) / ((m + 1) / 2), m < n
std::vector<BoundCheck> matrix_bound_checks(const std::vector<MatrixSpaceCounts>& censuses);

/// Lower bound on the number of minimal balanced collections of n coalitions of [n]
/// obtained from the orbit sandwich and the F2 lift, checked against the exact count.
BoundCheck square_count_check(int n, const BigInt& square_count);

}  // namespace mbc
