#include "mbc/exact.hpp"

#include <algorithm>
#include <utility>

#include "int_linalg.hpp"

namespace mbc {

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) fail(ErrorCode::invalid_argument, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9') {
                fail(ErrorCode::parse, "malformed rational '" + std::string(text) + "'");
            }
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt num = parse_int(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        fail(ErrorCode::parse, "negative denominator in '" + std::string(text) + "'");
    }
    const BigInt den = parse_int(den_text);
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::invalid_argument, "division by zero");
    value_ /= o.value_;
    return *this;
}

QMatrix QMatrix::from_zero_one_columns(int n, std::span<const Mask> columns) {
    QMatrix m(static_cast<std::size_t>(n), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (int i = 0; i < n; ++i) {
            if ((columns[j] >> i) & 1U) m(static_cast<std::size_t>(i), j) = 1;
        }
    }
    return m;
}

std::vector<Rational> QMatrix::multiply(std::span<const Rational> x) const {
    require(x.size() == cols_, "QMatrix::multiply: dimension mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        mpq_class acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c).raw();
            if (sgn(a) != 0) acc += a * x[c].raw();
        }
        y[r] = Rational(acc);
    }
    return y;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

namespace {

// Row-reduces `a` (rows x width) in place using the first `pivot_cols` columns for
// pivots; returns the pivot column of each pivot row in order.
std::vector<std::size_t> row_reduce(std::vector<std::vector<mpq_class>>& a, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && sgn(a[p][c]) == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const mpq_class inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const mpq_class f = a[i][c];
            for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<mpq_class>> to_rows(const QMatrix& m, std::size_t extra_cols) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols() + extra_cols));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).raw();
    }
    return a;
}

}  // namespace

std::size_t rank_q(const QMatrix& m) {
    auto a = to_rows(m, 0);
    return row_reduce(a, m.cols()).size();
}

std::optional<std::vector<Rational>> kernel_vector(const QMatrix& m) {
    auto a = to_rows(m, 0);
    const auto pivots = row_reduce(a, m.cols());
    if (pivots.size() == m.cols()) return std::nullopt;
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;
    std::vector<Rational> x(m.cols(), Rational(0));
    x[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size() && pivots[k] < free_col; ++k) {
        x[pivots[k]] = Rational(mpq_class(-a[k][free_col]));
    }
    return x;
}

SolveResult solve_unique(const QMatrix& m, std::span<const Rational> b) {
    require(b.size() == m.rows(), "solve_unique: right-hand side has wrong length");
    auto a = to_rows(m, 1);
    for (std::size_t r = 0; r < m.rows(); ++r) a[r][m.cols()] = b[r].raw();
    const auto pivots = row_reduce(a, m.cols());
    SolveResult out;
    if (pivots.size() < m.cols()) {
        out.failure = SolveFailure::rank_deficient;
        return out;
    }
    for (std::size_t r = pivots.size(); r < a.size(); ++r) {
        if (sgn(a[r][m.cols()]) != 0) {
            out.failure = SolveFailure::inconsistent;
            return out;
        }
    }
    std::vector<Rational> x(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = Rational(a[k][m.cols()]);
    out.solution = std::move(x);
    return out;
}

SolveResult solve_unique_ones(const QMatrix& m) {
    const std::vector<Rational> ones(m.rows(), Rational(1));
    return solve_unique(m, ones);
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), words_(rows * ((cols + 63) / 64)) {}

F2Matrix F2Matrix::from_row_masks(std::size_t cols, std::span<const std::uint64_t> rows) {
    require(cols <= 64, "F2Matrix::from_row_masks supports at most 64 columns");
    F2Matrix m(rows.size(), cols);
    const std::uint64_t keep = cols == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (m.words_per_row_ > 0) m.words_[r * m.words_per_row_] = rows[r] & keep;
    }
    return m;
}

F2Matrix F2Matrix::from_zero_one_columns(int n, std::span<const Mask> columns) {
    F2Matrix m(static_cast<std::size_t>(n), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (int i = 0; i < n; ++i) {
            if ((columns[j] >> i) & 1U) m.set(static_cast<std::size_t>(i), j, true);
        }
    }
    return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
    return (words_[r * words_per_row_ + c / 64] >> (c % 64)) & 1U;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
    auto& w = words_[r * words_per_row_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
}

void F2Matrix::add_row(std::size_t target, std::size_t source) {
    for (std::size_t k = 0; k < words_per_row_; ++k) {
        words_[target * words_per_row_ + k] ^= words_[source * words_per_row_ + k];
    }
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < words_per_row_; ++k) {
        std::swap(words_[a * words_per_row_ + k], words_[b * words_per_row_ + k]);
    }
}

std::size_t rank_f2(const F2Matrix& input) {
    F2Matrix m = input;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.get(i, c)) m.add_row(i, r);
        }
        ++r;
    }
    return r;
}

std::size_t rank_zero_one(int n, std::span<const Mask> columns) {
    require(n >= 0 && n <= kMaxPlayers, "rank_zero_one: n out of range");
    try {
        return static_cast<std::size_t>(detail::rank_zero_one_int(n, columns));
    } catch (const detail::Overflow&) {
        return rank_q(QMatrix::from_zero_one_columns(n, columns));
    }
}

SolveResult solve_zero_one(int n, std::span<const Mask> columns) {
    require(n >= 0 && n <= kMaxPlayers, "solve_zero_one: n out of range");
    if (columns.size() > static_cast<std::size_t>(n)) {
        SolveResult out;
        out.failure = SolveFailure::rank_deficient;
        return out;
    }
    try {
        const auto s = detail::solve_zero_one_int(n, columns);
        SolveResult out;
        out.failure = s.failure;
        if (s.failure == SolveFailure::none) {
            std::vector<Rational> x(columns.size());
            for (int i = 0; i < s.m; ++i) x[i] = Rational(BigInt(s.num[i]), BigInt(s.den));
            out.solution = std::move(x);
        }
        return out;
    } catch (const detail::Overflow&) {
        return solve_unique_ones(QMatrix::from_zero_one_columns(n, columns));
    }
}

}  // namespace mbc
