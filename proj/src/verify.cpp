#include "mbc/verify.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "mbc/counting.hpp"
#include "mbc/enumerate.hpp"
#include "mbc/games.hpp"
#include "mbc/orbits.hpp"

namespace mbc {

namespace {

class Recorder {
public:
    explicit Recorder(VerifySuite& s) : s_(s) {}

    template <class A, class B>
    void equal(const std::string& key, const A& expected, const B& computed) {
        ++s_.checks;
        if (!(expected == computed)) s_.diffs.push_back({key, show(expected), show(computed)});
    }

    void holds(const std::string& key, bool ok, const std::string& detail = "") {
        ++s_.checks;
        if (!ok) s_.diffs.push_back({key, "true", detail.empty() ? "false" : detail});
    }

private:
    static std::string show(const BigInt& x) { return to_string(x); }
    static std::string show(const Rational& x) { return x.str(); }
    static std::string show(std::uint64_t x) { return std::to_string(x); }
    static std::string show(bool x) { return x ? "true" : "false"; }
    static std::string show(const std::string& x) { return x; }
    static std::string show(const LambdaSet& x) { return std::to_string(x.classes.size()) + " classes"; }

    VerifySuite& s_;
};

std::string key(const char* name, int a) { return std::string(name) + "(" + std::to_string(a) + ")"; }
std::string key(const char* name, int a, int b) {
    return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

BigInt big(std::uint64_t x) { return BigInt(static_cast<unsigned long>(x)); }

int scope_or(const VerifyOptions& o, int fallback, int cap) { return std::min(o.max_n > 0 ? o.max_n : fallback, cap); }

void suite_tables(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 6, 7);
    Recorder r(s);
    for (int n = 1; n <= s.scope; ++n) {
        const auto t = count_minimal_balanced_table(n, &store, o.jobs);
        r.equal(key("total", n), big(golden::kTotals[static_cast<std::size_t>(n - 1)]), t.total);
        s.reported[key("B", n)] = to_string(t.total);
        if (n > 6) continue;
        for (int m = 1; m <= n; ++m) {
            r.equal(key("formula", n, m), big(golden::kBySize[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)]),
                    t.per_m[static_cast<std::size_t>(m - 1)]);
        }
        const auto route = enumerate_minimal(n, EnumerationMode::lambda_route, {o.jobs, 0, {}, &store});
        for (int m = 1; m <= n; ++m) {
            r.equal(key("enumerated", n, m), golden::kBySize[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)],
                    route.per_m_counts()[static_cast<std::size_t>(m - 1)]);
        }
        if (n <= 5) {
            const auto search = enumerate_minimal(n, EnumerationMode::search, {o.jobs, 0, {}, &store});
            r.equal(key("mode-checksum", n), route.checksum(), search.checksum());
        }
    }
}

void suite_formulas(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 10, 16);
    Recorder r(s);
    for (int n = 1; n <= s.scope; ++n) {
        for (int m = 1; m <= 4; ++m) r.equal(key("closed-form", n, m), count_minimal_balanced(n, m, &store, o.jobs), closed_form_count(n, m));
    }
}

void suite_bounds(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 7, 7);
    Recorder r(s);
    for (int n = 1; n <= s.scope; ++n) {
        const auto t = count_minimal_balanced_table(n, &store, o.jobs);
        if (n >= 3) {
            const auto b = total_count_bounds(n, t.total);
            r.holds(key("total-lower", n), b.lower_holds, b.lower.str() + " vs " + to_string(b.count));
            r.holds(key("total-upper", n), b.upper_holds, b.upper.str() + " vs " + to_string(b.count));
        }
        for (int m = 1; m <= n; ++m) {
            const auto est = fixed_size_lower_estimate(n, m);
            r.holds(key("size-estimate", n, m), est <= t.per_m[static_cast<std::size_t>(m - 1)], to_string(est));
        }
        if (n >= 2) {
            const auto c = square_count_check(n, t.per_m.back());
            r.holds(key("square-lower", n), c.holds, c.margin.str());
        }
    }
    std::vector<MatrixSpaceCounts> censuses;
    for (int n = 1; n <= std::min(s.scope, 4); ++n) {
        for (int m = 1; m <= n; ++m) censuses.push_back(scan_matrix_space(n, m));
    }
    for (const auto& c : matrix_bound_checks(censuses)) r.holds(c.name + key("", c.n, c.m), c.holds, c.margin.str());
    Rational prev = invertible_fraction(1);
    for (unsigned t = 2; t <= 60; ++t) {
        const Rational cur = invertible_fraction(t);
        r.holds(key("fraction-decreasing", static_cast<int>(t)), cur < prev);
        prev = cur;
    }
    r.holds("fraction(60) in [0.2887, 0.2889]",
            Rational::parse("2887/10000") <= prev && prev <= Rational::parse("2889/10000"), std::to_string(prev.to_double()));
}

void suite_orbits(VerifySuite& s, const VerifyOptions& o) {
    s.scope = scope_or(o, 4, 4);
    Recorder r(s);
    for (int n = 1; n <= s.scope; ++n) {
        for (int m = 2; m <= n; ++m) {
            std::uint64_t bad_nonzero = 0;
            std::uint64_t bad_positive = 0;
            std::uint64_t seen = 0;
            scan_matrix_space(n, m, [&](std::span<const Mask> cols, const WeightVector& w) {
                if (!w.nowhere_zero()) return;
                ++seen;
                const auto sum = orbit_summary(ZeroOneMatrix(n, std::vector<Mask>(cols.begin(), cols.end())));
                bad_nonzero += sum.nonzero_law() ? 0 : 1;
                bad_positive += sum.positive_law() ? 0 : 1;
            });
            r.equal(key("nonzero-law-violations", n, m), std::uint64_t{0}, bad_nonzero);
            r.equal(key("positive-law-violations", n, m), std::uint64_t{0}, bad_positive);
            r.holds(key("matrices-seen", n, m), seen > 0);
        }
    }
    const std::uint64_t samples = o.samples > 0 ? o.samples : 10000;
    std::mt19937_64 rng(o.seed);
    for (int n = 5; n <= 6; ++n) {
        std::uint64_t bad = 0;
        for (std::uint64_t t = 0; t < samples; ++t) {
            const auto sum = orbit_summary(f2_lift(n, random_f2_with_ones_column(n, rng)));
            bad += (sum.nonzero_law() && sum.positive_law()) ? 0 : 1;
        }
        r.equal(key("lifted-violations", n), std::uint64_t{0}, bad);
    }
}

void suite_lambda(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 6, 6);
    Recorder r(s);
    for (int m = 1; m <= std::min(s.scope, kLambdaOracleLimit); ++m) {
        r.equal(key("oracle", m), lambda_bruteforce_oracle(m), generate_lambda(m, &store, {o.jobs, nullptr}));
    }
    for (int m = 1; m <= s.scope; ++m) {
        const auto set = generate_lambda(m, &store, {o.jobs, nullptr});
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        std::uint64_t chains = 0;
        for (const auto& c : set.classes) {
            const auto u = unificators(c.canonical);
            lo = std::min(lo, u.rows.size());
            hi = std::max(hi, u.rows.size());
            for (Mask a : u.rows) {
                for (Mask b : u.rows) chains += (a != b && (a & b) == a) ? 1 : 0;
            }
        }
        r.equal(key("min-unificators", m), std::uint64_t(m), std::uint64_t(lo));
        r.equal(key("max-unificators", m), binomial(static_cast<unsigned>(m), static_cast<unsigned>((m + 1) / 2)), big(hi));
        r.equal(key("inclusions", m), std::uint64_t{0}, chains);
    }
    for (int n = std::min(5, s.scope); n <= s.scope; ++n) {
        const auto result = enumerate_minimal(n, EnumerationMode::lambda_route, {o.jobs, 0, {}, &store});
        for (int m = 1; m <= n; ++m) {
            const auto harvested = harvest_lambda(result, m);
            const auto generated = generate_lambda(m, &store, {o.jobs, nullptr});
            std::uint64_t missing = 0;
            for (const auto& c : harvested.classes) missing += generated.contains(c.canonical) ? 0 : 1;
            r.equal(key("harvest-missing", n, m), std::uint64_t{0}, missing);
        }
    }
}

void suite_two_element(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 7, 7);
    Recorder r(s);
    for (int n = 3; n <= s.scope; ++n) {
        const auto census = enumerate_two_element(n);
        r.equal(key("two-element", n), big(golden::kTwoElement[static_cast<std::size_t>(n - 3)]), census.total);
        s.reported[key("two-element", n)] = to_string(census.total);
        r.holds(key("pair-scan", n), census == two_element_bruteforce(n));
        if (n <= 6) {
            const auto all = enumerate_minimal(n, EnumerationMode::lambda_route, {o.jobs, 0, {}, &store});
            r.equal(key("general-enumerator", n), census.total, big(count_two_element(all)));
        }
    }
}

void suite_games(VerifySuite& s, const VerifyOptions& o, LambdaStore& store) {
    s.scope = scope_or(o, 5, 6);
    Recorder r(s);
    const std::uint64_t samples = o.samples > 0 ? o.samples : 1000;
    std::mt19937_64 rng(o.seed);
    for (int n = 3; n <= s.scope; ++n) {
        const auto mbcs = enumerate_minimal(n, EnumerationMode::lambda_route, {o.jobs, 0, {}, &store});
        std::uint64_t disagree = 0;
        for (std::uint64_t t = 0; t < samples; ++t) {
            const auto g = t % 2 == 0 ? random_uniform_game(n, rng) : random_superadditive_game(n, rng);
            disagree += core_nonempty_bondareva(g, mbcs, o.jobs).nonempty == core_nonempty_lp(g).nonempty ? 0 : 1;
        }
        r.equal(key("disagreements", n), std::uint64_t{0}, disagree);
    }
    const auto three = enumerate_minimal(3, EnumerationMode::search, {o.jobs, 0, {}, &store});
    for (int k = 0; k <= 12; ++k) {
        const auto g = majority_game(Rational(BigInt(k), BigInt(4)));
        const bool a = core_nonempty_bondareva(g, three, o.jobs).nonempty;
        r.equal(key("majority-bondareva", k), k >= 6, a);
        r.equal(key("majority-lp", k), a, core_nonempty_lp(g).nonempty);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"tables", "formulas", "bounds", "orbits", "lambda", "two-element", "games"};
    return names;
}

VerifySuite run_suite(const std::string& name, const VerifyOptions& options) {
    LambdaStore local;
    LambdaStore& store = options.store ? *options.store : local;
    VerifySuite s;
    s.name = name;
    if (name == "tables") {
        suite_tables(s, options, store);
    } else if (name == "formulas") {
        suite_formulas(s, options, store);
    } else if (name == "bounds") {
        suite_bounds(s, options, store);
    } else if (name == "orbits") {
        suite_orbits(s, options);
    } else if (name == "lambda") {
        suite_lambda(s, options, store);
    } else if (name == "two-element") {
        suite_two_element(s, options, store);
    } else if (name == "games") {
        suite_games(s, options, store);
    } else {
        fail(ErrorCode::invalid_argument, "unknown verify suite: " + name);
    }
    return s;
}

std::string verify_suite_to_json(const VerifySuite& s) {
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : s.diffs) diffs.push_back({{"key", d.key}, {"expected", d.expected}, {"computed", d.computed}});
    return nlohmann::json{{"suite", s.name},
                          {"scope", s.scope},
                          {"checks", s.checks},
                          {"outcome", s.pass() ? "pass" : "fail"},
                          {"diffs", diffs},
                          {"reported", s.reported}}
        .dump();
}

}  // namespace mbc
