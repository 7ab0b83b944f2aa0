#pragma once

#include <span>
#include <vector>

#include "mbc/exact.hpp"

namespace mbc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;  // primal solution when optimal
    Rational objective;
};

/// Exact two-phase simplex with Bland's rule for
///     minimise c.x  subject to  A x = b,  x >= 0.
/// Bland's rule guarantees termination; all arithmetic is rational.
LpResult solve_lp(const QMatrix& a, std::span<const Rational> b, std::span<const Rational> c);

/// Any x >= 0 with A x = b, or nullopt.
std::optional<std::vector<Rational>> find_feasible(const QMatrix& a, std::span<const Rational> b);

}  // namespace mbc
