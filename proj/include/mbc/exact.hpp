#pragma once

// Exact arithmetic over the rationals and over F2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mbc/common.hpp"

namespace mbc {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);
BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
/// base^exponent by repeated squaring.
BigInt power(const BigInt& base, unsigned exponent);

/// Fraction p/q kept in lowest terms with q > 0.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);
    explicit Rational(mpq_class value);

    /// Accepts "p/q" or "p" with optional sign; rejects q = 0.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when q = 1.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// Dense rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

    /// n x m incidence matrix whose column j is the characteristic vector of columns[j].
    static QMatrix from_zero_one_columns(int n, std::span<const Mask> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    std::vector<Rational> multiply(std::span<const Rational> x) const;
    QMatrix transposed() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> cells_;
};

/// Dimension of the column span over Q.
std::size_t rank_q(const QMatrix& m);

enum class SolveFailure { none, rank_deficient, inconsistent };

struct SolveResult {
    std::optional<std::vector<Rational>> solution;
    SolveFailure failure = SolveFailure::none;

    explicit operator bool() const { return solution.has_value(); }
};

/// A nonzero x with Mx = 0, or nullopt when M has full column rank.
std::optional<std::vector<Rational>> kernel_vector(const QMatrix& m);

/// Unique x with Mx = b; absent when M lacks full column rank or b is outside the span.
SolveResult solve_unique(const QMatrix& m, std::span<const Rational> b);
SolveResult solve_unique_ones(const QMatrix& m);

/// 0-1 matrix with rows packed into 64-bit words.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    /// Row r is given by the low `cols` bits of rows[r].
    static F2Matrix from_row_masks(std::size_t cols, std::span<const std::uint64_t> rows);
    static F2Matrix from_zero_one_columns(int n, std::span<const Mask> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    /// row[target] ^= row[source]
    void add_row(std::size_t target, std::size_t source);
    void swap_rows(std::size_t a, std::size_t b);
    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t rank_f2(const F2Matrix& m);

// Fast paths for incidence systems: columns are subsets of [n], n <= 16. Integer
// fraction-free elimination is exact here because every intermediate value is a
// minor of a 0-1 matrix; any overflow falls back to the GMP routines above.
std::size_t rank_zero_one(int n, std::span<const Mask> columns);
SolveResult solve_zero_one(int n, std::span<const Mask> columns);

}  // namespace mbc
