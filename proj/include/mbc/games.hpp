#pragma once

// Core nonemptiness of transferable-utility games, decided two independent ways.

#include <optional>
#include <random>
#include <vector>

#include "mbc/enumerate.hpp"

namespace mbc {

/// Worths indexed by coalition mask; v(empty) = 0.
class TUGame {
public:
    TUGame(int n, std::vector<Rational> v);

    int n() const { return n_; }
    const Rational& worth(Mask s) const { return v_[s]; }
    const Rational& grand() const { return v_[full_mask(n_)]; }
    const std::vector<Rational>& values() const { return v_; }
    TUGame scaled(const Rational& factor) const;

    friend bool operator==(const TUGame&, const TUGame&) = default;

private:
    int n_;
    std::vector<Rational> v_;
};

/// The scan sets exactly one of `violating` and `allocation`; the LP route never sets `violating`.
struct CoreReport {
    bool nonempty = false;
    std::optional<MinimalBalanced> violating;  // sum lambda_S v(S) > v([n])
    std::optional<std::vector<Rational>> allocation;  // x([n]) = v([n]), x(S) >= v(S)
    /// Index of the violating collection in the scanned result; -1 otherwise.
    long long violation_index = -1;
};

/// sum_S lambda_S v(S) over a weighted collection.
Rational balanced_worth(const TUGame& g, const MinimalBalanced& mb);

/// Re-verifies every coalition constraint of an allocation.
bool is_core_allocation(const TUGame& g, const std::vector<Rational>& x);

/// Scans `mbcs` in canonical order; the first violation is the certificate.
/// When none exists the allocation comes from core_nonempty_lp.
CoreReport core_nonempty_bondareva(const TUGame& g, const EnumerationResult& mbcs, unsigned jobs = 0);

inline constexpr int kCoreLpLimit = 8;

/// Exact LP feasibility of x(S) >= v(S) for all S, x([n]) = v([n]); n <= 8.
CoreReport core_nonempty_lp(const TUGame& g);

/// Each worth is num / den with num uniform in [-range, range], den in [1, max_den].
TUGame random_uniform_game(int n, std::mt19937_64& rng, int range = 6, int max_den = 3);

/// Zero singletons, then every coalition takes the larger of a random draw in
/// [0, range] / max_den and its best split into two parts (superadditive by construction).
TUGame random_superadditive_game(int n, std::mt19937_64& rng, int range = 6, int max_den = 3);

/// The 3-player game with v(pairs) = 1, v(singletons) = 0 and v([3]) = grand.
TUGame majority_game(const Rational& grand);

}  // namespace mbc
