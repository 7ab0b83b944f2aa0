#include "mbc/counting.hpp"

#include <algorithm>

#include "int_weights.hpp"
#include "parallel.hpp"

namespace mbc {

BigInt surjections(unsigned k, unsigned n) {
    if (k > n) return 0;  // the alternating sum vanishes; skip it
    BigInt total = 0;
    for (unsigned l = 0; l <= k; ++l) {
        BigInt term = binomial(k, l) * power(BigInt(l), n);
        if ((k - l) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

BigInt count_positive_matrices(int n, int m, const LambdaSet& lambda, unsigned jobs) {
    require(n >= 1 && m >= 1, "count_positive_matrices: sizes must be positive");
    require(lambda.m == m, "count_positive_matrices: weight set has the wrong length");
    if (m > n) return 0;
    std::vector<BigInt> onto(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) onto[static_cast<std::size_t>(k)] = surjections(static_cast<unsigned>(k), static_cast<unsigned>(n));
    // A matrix with weights lambda is a map from players onto a rank-m subset of U(lambda).
    std::vector<BigInt> per_class(lambda.classes.size());
    detail::parallel_for(lambda.classes.size(), jobs, [&](std::size_t i, unsigned) {
        const auto& cls = lambda.classes[i];
        const auto u = unificators(cls.canonical);
        const int kmax = std::min<int>(n, static_cast<int>(u.rows.size()));
        const auto counts = full_rank_subset_counts(u, kmax);
        BigInt acc = 0;
        for (int k = m; k <= kmax; ++k) acc += counts[static_cast<std::size_t>(k)] * onto[static_cast<std::size_t>(k)];
        per_class[i] = acc * BigInt(static_cast<unsigned long>(cls.multiplicity));
    });
    BigInt total = 0;
    for (const auto& x : per_class) total += x;
    return total;
}

BigInt count_minimal_balanced(int n, int m, LambdaStore* store, unsigned jobs) {
    require(n >= 1 && m >= 1, "count_minimal_balanced: sizes must be positive");
    if (n > kMaxPlayers) fail(ErrorCode::size_limit, "count_minimal_balanced: n above 16");
    if (m > n) return 0;
    const auto lambda = generate_lambda(m, store, {jobs, nullptr});
    const BigInt positive = count_positive_matrices(n, m, lambda, jobs);
    const BigInt orderings = factorial(static_cast<unsigned>(m));
    ensure(positive % orderings == 0, "positive matrix count not divisible by m!");
    return positive / orderings;
}

CountTable count_minimal_balanced_table(int n, LambdaStore* store, unsigned jobs) {
    require(n >= 1, "count_minimal_balanced_table: n must be positive");
    LambdaStore local;
    LambdaStore& cache = store ? *store : local;
    CountTable t;
    t.n = n;
    t.total = 0;
    for (int m = 1; m <= n; ++m) {
        t.per_m.push_back(count_minimal_balanced(n, m, &cache, jobs));
        t.total += t.per_m.back();
    }
    return t;
}

BigInt closed_form_count(int n, int m) {
    require(n >= 1, "closed_form_count: n must be positive");
    require(m >= 1 && m <= 4, "closed_form_count: closed forms exist for m <= 4 only");
    const unsigned un = static_cast<unsigned>(n);
    auto pw = [&](long base) { return Rational(power(BigInt(base), un)); };
    Rational value;
    switch (m) {
        case 1:
            value = 1;
            break;
        case 2:
            value = Rational(power(BigInt(2), un - 1)) - 1;
            break;
        case 3:
            value = Rational(power(BigInt(3), un - 1)) - pw(2) + 1;
            break;
        default:
            value = Rational::parse("1/24") * pw(6) + Rational::parse("7/24") * pw(4) - Rational(2) * pw(3) +
                    Rational::parse("29/8") * pw(2) - Rational::parse("8/3");
            break;
    }
    ensure(value.is_integer(), "closed form evaluated to a non-integer");
    return value.numerator();
}

BigInt fixed_size_lower_estimate(int n, int m) {
    require(n >= 1 && m >= 1, "fixed_size_lower_estimate: sizes must be positive");
    const unsigned width = static_cast<unsigned>(binomial(static_cast<unsigned>(m), static_cast<unsigned>((m + 1) / 2)).get_ui());
    BigInt value = surjections(width, static_cast<unsigned>(n));
    // Odd m >= 3: the uniform vectors with ceil(m/2)- and floor(m/2)-element unificators both qualify.
    if (m % 2 == 1 && m >= 3) value *= 2;
    const BigInt orderings = factorial(static_cast<unsigned>(m));
    ensure(value % orderings == 0, "fixed-size estimate not divisible by m!");
    return value / orderings;
}

BoundReport total_count_bounds(int n, const BigInt& total) {
    require(n >= 1, "total_count_bounds: n must be positive");
    const unsigned un = static_cast<unsigned>(n);
    const Rational nf(factorial(un));
    BoundReport r;
    r.n = n;
    r.count = total;
    r.lower = Rational::parse("288/1000") * Rational(power(BigInt(2), (un - 1) * (un - 1))) / nf;
    r.upper = Rational(120) * Rational(power(BigInt(2), un * un - un)) / nf;
    r.lower_holds = r.lower < Rational(total);
    r.upper_holds = Rational(total) < r.upper;
    return r;
}

Rational invertible_fraction(unsigned terms) {
    require(terms >= 1, "invertible_fraction: at least one term");
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned k = 1; k <= terms; ++k) {
        const BigInt p = power(BigInt(2), k);
        num *= p - 1;
        den *= p;
    }
    return Rational(num, den);
}

namespace {

BoundCheck make_check(std::string name, int n, int m, Rational lhs, Rational rhs, bool strict) {
    BoundCheck c;
    c.name = std::move(name);
    c.n = n;
    c.m = m;
    c.margin = rhs - lhs;
    c.holds = strict ? c.margin.sign() > 0 : c.margin.sign() >= 0;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.strict = strict;
    return c;
}

BigInt lift_count(int n) {
    BigInt value = 1;
    const BigInt top = power(BigInt(2), static_cast<unsigned>(n));
    for (int k = 1; k < n; ++k) value *= top - power(BigInt(2), static_cast<unsigned>(k));
    return value;
}

}  // namespace

std::vector<BoundCheck> matrix_bound_checks(const std::vector<MatrixSpaceCounts>& censuses) {
    std::vector<BoundCheck> out;
    for (const auto& c : censuses) {
        const unsigned m = static_cast<unsigned>(c.m);
        const Rational nz(c.nowhere_zero);
        if (c.n == c.m) {
            out.push_back(make_check("lift-lower", c.n, c.m, Rational(lift_count(c.n)), nz, false));
        }
        if (c.m >= 2) {
            const Rational full(power(BigInt(2), m));
            const Rational lo = Rational(2) / (full - Rational(static_cast<long>(m))) * nz;
            const Rational hi = Rational(2) / (full - Rational(binomial(m, (m + 1) / 2))) * nz;
            out.push_back(make_check("orbit-lower", c.n, c.m, lo, Rational(c.positive), false));
            out.push_back(make_check("orbit-upper", c.n, c.m, Rational(c.positive), hi, false));
        }
        if (c.m < c.n) {
            const Rational cap = Rational(power(BigInt(2), static_cast<unsigned>(c.n * c.m))) * Rational(2) /
                                 Rational(static_cast<long>(c.m + 1));
            out.push_back(make_check("support-upper", c.n, c.m, nz, cap, true));
        }
    }
    return out;
}

BoundCheck square_count_check(int n, const BigInt& square_count) {
    require(n >= 1, "square_count_check: n must be positive");
    const unsigned un = static_cast<unsigned>(n);
    const Rational lower = Rational(2) * Rational(lift_count(n)) /
                           (Rational(factorial(un)) * (Rational(power(BigInt(2), un)) - Rational(n)));
    return make_check("square-lower", n, n, lower, Rational(square_count), false);
}

}  // namespace mbc
