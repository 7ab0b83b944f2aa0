#include "mbc/lp.hpp"

#include <optional>

namespace mbc {
namespace {

struct Tableau {
    std::vector<std::vector<mpq_class>> t;  // rows x (vars + 1); last column is rhs
    std::vector<mpq_class> cost;            // reduced costs, size vars
    std::vector<std::size_t> basis;
    std::size_t vars = 0;

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = t[row];
        const mpq_class inv = 1 / pr[col];
        for (auto& x : pr) x *= inv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == row || sgn(t[i][col]) == 0) continue;
            const mpq_class f = t[i][col];
            for (std::size_t j = 0; j <= vars; ++j) {
                if (sgn(pr[j]) != 0) t[i][j] -= f * pr[j];
            }
        }
        if (sgn(cost[col]) != 0) {
            const mpq_class f = cost[col];
            for (std::size_t j = 0; j < vars; ++j) {
                if (sgn(pr[j]) != 0) cost[j] -= f * pr[j];
            }
        }
        basis[row] = col;
    }

    // Returns false when unbounded.
    bool run(std::size_t allowed_cols) {
        for (;;) {
            std::size_t enter = allowed_cols;
            for (std::size_t j = 0; j < allowed_cols; ++j) {
                if (sgn(cost[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed_cols) return true;
            std::size_t leave = t.size();
            mpq_class best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (sgn(t[i][enter]) <= 0) continue;
                mpq_class ratio = t[i][vars] / t[i][enter];
                if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == t.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const QMatrix& a, std::span<const Rational> b, std::span<const Rational> c) {
    require(b.size() == a.rows(), "solve_lp: rhs length mismatch");
    require(c.size() == a.cols(), "solve_lp: cost length mismatch");
    const std::size_t rows = a.rows();
    const std::size_t n = a.cols();

    Tableau tab;
    tab.vars = n + rows;
    tab.t.assign(rows, std::vector<mpq_class>(tab.vars + 1));
    tab.basis.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = b[i].sign() < 0;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? mpq_class(-a(i, j).raw()) : a(i, j).raw();
        tab.t[i][n + i] = 1;
        tab.t[i][tab.vars] = flip ? mpq_class(-b[i].raw()) : b[i].raw();
        tab.basis[i] = n + i;
    }
    // Phase 1: minimise the sum of artificials.
    tab.cost.assign(tab.vars, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab.cost[j] -= tab.t[i][j];
    }
    tab.run(tab.vars);

    LpResult out;
    mpq_class infeas = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (tab.basis[i] >= n) infeas += tab.t[i][tab.vars];
    }
    if (sgn(infeas) != 0) {
        out.status = LpStatus::infeasible;
        return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(tab.t[i][j]) != 0) {
                col = j;
                break;
            }
        }
        if (col == n) {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
            continue;
        }
        tab.pivot(i, col);
        ++i;
    }
    // Phase 2 reduced costs.
    tab.cost.assign(tab.vars, 0);
    for (std::size_t j = 0; j < n; ++j) tab.cost[j] = c[j].raw();
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        const mpq_class cb = c[tab.basis[i]].raw();
        if (sgn(cb) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) tab.cost[j] -= cb * tab.t[i][j];
    }
    if (!tab.run(n)) {
        out.status = LpStatus::unbounded;
        return out;
    }
    out.status = LpStatus::optimal;
    out.x.assign(n, Rational(0));
    mpq_class obj = 0;
    for (std::size_t i = 0; i < tab.t.size(); ++i) {
        out.x[tab.basis[i]] = Rational(tab.t[i][tab.vars]);
    }
    for (std::size_t j = 0; j < n; ++j) obj += c[j].raw() * out.x[j].raw();
    out.objective = Rational(obj);
    return out;
}

std::optional<std::vector<Rational>> find_feasible(const QMatrix& a, std::span<const Rational> b) {
    const std::vector<Rational> zero(a.cols(), Rational(0));
    auto r = solve_lp(a, b, zero);
    if (r.status != LpStatus::optimal) return std::nullopt;
    return std::move(r.x);
}

}  // namespace mbc
