#include "mbc/model.hpp"

#include <algorithm>

#include "mbc/lp.hpp"

namespace mbc {

WeightVector WeightVector::parse(const std::vector<std::string>& coords) {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(Rational::parse(c));
    return WeightVector(std::move(out));
}

Mask WeightVector::pos_mask() const {
    Mask m = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].sign() > 0) m |= Mask{1} << i;
    }
    return m;
}

Mask WeightVector::neg_mask() const {
    Mask m = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].sign() < 0) m |= Mask{1} << i;
    }
    return m;
}

Mask WeightVector::zero_mask() const {
    Mask m = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) m |= Mask{1} << i;
    }
    return m;
}

Rational WeightVector::sum_over(Mask subset) const {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if ((subset >> i) & 1U) acc += coords_[i].raw();
    }
    return Rational(acc);
}

std::vector<std::string> WeightVector::to_strings() const {
    std::vector<std::string> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(c.str());
    return out;
}

std::string WeightVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) out += ",";
        out += coords_[i].str();
    }
    return out + ")";
}

Coalition::Coalition(int n, Mask mask) : n_(n), mask_(mask) {
    if (n < 1 || n > kMaxPlayers) fail(ErrorCode::size_limit, "coalition ground set must have 1..16 players");
    require(mask != 0, "coalition must be nonempty");
    require((mask & ~full_mask(n)) == 0, "coalition has members outside [n]");
}

Coalition Coalition::from_members(int n, std::span<const int> members) {
    Mask m = 0;
    for (int p : members) {
        require(p >= 1 && p <= n, "player index out of range");
        m |= Mask{1} << (p - 1);
    }
    return Coalition(n, m);
}

std::vector<int> Coalition::members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        if ((mask_ >> i) & 1U) out.push_back(i + 1);
    }
    return out;
}

Coalition Coalition::complement() const { return Coalition(n_, full_mask(n_) & ~mask_); }

Collection::Collection(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
    if (n < 1 || n > kMaxPlayers) fail(ErrorCode::size_limit, "collection ground set must have 1..16 players");
    require(!sets_.empty(), "collection must be nonempty");
    std::sort(sets_.begin(), sets_.end());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        require(sets_[i] != 0, "collection contains the empty coalition");
        require((sets_[i] & ~full_mask(n)) == 0, "coalition has members outside [n]");
        require(i == 0 || sets_[i] != sets_[i - 1], "collection contains a repeated coalition");
    }
}

Collection Collection::subcollection(Mask which) const {
    std::vector<Mask> out;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if ((which >> i) & 1U) out.push_back(sets_[i]);
    }
    return Collection(n_, std::move(out));
}

std::string Collection::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (i > 0) out += ",";
        out += "{";
        bool first = true;
        for (int p : Coalition(n_, sets_[i]).members()) {
            if (!first) out += ",";
            out += std::to_string(p);
            first = false;
        }
        out += "}";
    }
    return out + "}";
}

ZeroOneMatrix::ZeroOneMatrix(int n, std::vector<Mask> columns) : n_(n), columns_(std::move(columns)) {
    if (n < 1 || n > kMaxPlayers) fail(ErrorCode::size_limit, "matrix must have 1..16 rows");
    for (Mask c : columns_) require((c & ~full_mask(n)) == 0, "column has entries outside [n]");
}

Mask ZeroOneMatrix::row(int i) const {
    Mask r = 0;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if ((columns_[j] >> i) & 1U) r |= Mask{1} << j;
    }
    return r;
}

std::vector<Mask> ZeroOneMatrix::rows() const {
    std::vector<Mask> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = row(i);
    return out;
}

bool ZeroOneMatrix::columns_distinct() const {
    auto sorted = columns_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Rational> ZeroOneMatrix::multiply(const WeightVector& w) const {
    require(w.size() == columns_.size(), "weight vector length differs from column count");
    std::vector<Rational> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            if ((columns_[j] >> i) & 1U) acc += w[j].raw();
        }
        out[static_cast<std::size_t>(i)] = Rational(acc);
    }
    return out;
}

bool sums_to_ones(int n, std::span<const Mask> columns, const WeightVector& w) {
    if (w.size() != columns.size()) return false;
    for (int i = 0; i < n; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if ((columns[j] >> i) & 1U) acc += w[j].raw();
        }
        if (acc != 1) return false;
    }
    return true;
}

WeakBalance is_weakly_balanced(const Collection& c) {
    const std::vector<Rational> ones(static_cast<std::size_t>(c.n()), Rational(1));
    auto x = find_feasible(c.matrix(), ones);
    WeakBalance out;
    if (x) {
        out.holds = true;
        out.weights = WeightVector(std::move(*x));
    }
    return out;
}

Balance is_balanced(const Collection& c) {
    // Variables (mu_1..mu_m, t, s): M mu + t M1 = 1, t + s = 1, all >= 0; maximise t.
    // A positive optimum t gives lambda = mu + t 1 > 0, and conversely any
    // positive lambda yields a feasible point with t = min lambda.
    const std::size_t n = static_cast<std::size_t>(c.n());
    const std::size_t m = c.size();
    QMatrix a(n + 1, m + 2);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((c[j] >> i) & 1U) {
                a(i, j) = 1;
                a(i, m) += 1;
            }
        }
    }
    a(n, m) = 1;
    a(n, m + 1) = 1;
    std::vector<Rational> b(n + 1, Rational(1));
    std::vector<Rational> cost(m + 2, Rational(0));
    cost[m] = -1;
    const auto r = solve_lp(a, b, cost);
    Balance out;
    if (r.status != LpStatus::optimal || r.x[m].sign() <= 0) return out;
    std::vector<Rational> lambda(m);
    for (std::size_t j = 0; j < m; ++j) lambda[j] = r.x[j] + r.x[m];
    out.holds = true;
    out.weights = WeightVector(std::move(lambda));
    ensure(sums_to_ones(c.n(), c.sets(), *out.weights), "is_balanced: witness fails Mx = 1");
    return out;
}

std::string to_string(BalanceKind kind) {
    switch (kind) {
        case BalanceKind::not_weakly_balanced: return "not-weakly-balanced";
        case BalanceKind::weakly_balanced: return "weakly-balanced";
        case BalanceKind::balanced: return "balanced";
        case BalanceKind::minimal_balanced: return "minimal-balanced";
    }
    return "unknown";
}

BalanceKind balance_kind_from_string(const std::string& text) {
    for (auto k : {BalanceKind::not_weakly_balanced, BalanceKind::weakly_balanced, BalanceKind::balanced,
                   BalanceKind::minimal_balanced}) {
        if (to_string(k) == text) return k;
    }
    fail(ErrorCode::parse, "unknown balance kind '" + text + "'");
}

namespace {

// Shrinks a balanced collection with strictly positive weights to a minimal
// balanced one: step along a kernel direction until a weight reaches zero and
// drop the zero-weight members. Each step removes at least one member.
Collection shrink_to_minimal(Collection c, WeightVector w) {
    for (;;) {
        auto d = kernel_vector(c.matrix());
        if (!d) return c;
        bool has_negative = false;
        for (const auto& x : *d) has_negative = has_negative || x.sign() < 0;
        if (!has_negative) {
            for (auto& x : *d) x = -x;
        }
        std::optional<Rational> step;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if ((*d)[j].sign() >= 0) continue;
            Rational t = w[j] / -(*d)[j];
            if (!step || t < *step) step = t;
        }
        Mask keep = 0;
        std::vector<Rational> next;
        for (std::size_t j = 0; j < w.size(); ++j) {
            Rational x = w[j] + *step * (*d)[j];
            ensure(x.sign() >= 0, "shrink_to_minimal: step left the nonnegative orthant");
            if (!x.is_zero()) {
                keep |= Mask{1} << j;
                next.push_back(x);
            }
        }
        c = c.subcollection(keep);
        w = WeightVector(std::move(next));
        ensure(sums_to_ones(c.n(), c.sets(), w), "shrink_to_minimal: lost Mx = 1");
    }
}

}  // namespace

BalanceCertificate minimality_certificate(const Collection& c) {
    BalanceCertificate out;
    const auto solved = solve_zero_one(c.n(), c.sets());
    if (solved) {
        WeightVector w(*solved.solution);
        if (w.all_positive()) {
            out.kind = BalanceKind::minimal_balanced;
            out.weights = std::move(w);
            return out;
        }
    }
    if (auto b = is_balanced(c); b.holds) {
        // Full rank with a positive solution was excluded above, so the rank is deficient.
        out.kind = BalanceKind::balanced;
        out.witness = shrink_to_minimal(c, *b.weights);
        ensure(out.witness->size() < c.size(), "minimality_certificate: witness is not proper");
        out.weights = std::move(b.weights);
        return out;
    }
    if (auto wb = is_weakly_balanced(c); wb.holds) {
        out.kind = BalanceKind::weakly_balanced;
        out.weights = std::move(wb.weights);
        return out;
    }
    return out;
}

bool definition_minimality_oracle(const Collection& c) {
    if (c.size() > kDefinitionOracleLimit) {
        fail(ErrorCode::size_limit, "definition oracle limited to 12 members");
    }
    if (!is_balanced(c).holds) return false;
    const Mask all = full_mask(static_cast<int>(c.size()));
    for (Mask s = 1; s < all; ++s) {
        if (is_balanced(c.subcollection(s)).holds) return false;
    }
    return true;
}

}  // namespace mbc
