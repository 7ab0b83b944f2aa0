#include "mbc/games.hpp"

#include <atomic>
#include <limits>

#include "mbc/lp.hpp"
#include "parallel.hpp"

namespace mbc {

TUGame::TUGame(int n, std::vector<Rational> v) : n_(n), v_(std::move(v)) {
    require(n >= 1 && n <= kMaxPlayers, "TUGame: n out of range");
    require(v_.size() == (std::size_t{1} << n), "TUGame: need one worth per coalition mask");
    require(v_[0].is_zero(), "TUGame: v(empty) must be 0");
}

TUGame TUGame::scaled(const Rational& factor) const {
    auto v = v_;
    for (auto& x : v) x *= factor;
    return TUGame(n_, std::move(v));
}

Rational balanced_worth(const TUGame& g, const MinimalBalanced& mb) {
    Rational total = 0;
    const auto& sets = mb.collection.sets();
    for (std::size_t j = 0; j < sets.size(); ++j) total += mb.weights[j] * g.worth(sets[j]);
    return total;
}

bool is_core_allocation(const TUGame& g, const std::vector<Rational>& x) {
    if (x.size() != static_cast<std::size_t>(g.n())) return false;
    for (Mask s = 1; s <= full_mask(g.n()); ++s) {
        Rational sum = 0;
        for (int i = 0; i < g.n(); ++i) {
            if ((s >> i) & 1U) sum += x[static_cast<std::size_t>(i)];
        }
        if (s == full_mask(g.n()) ? sum != g.grand() : sum < g.worth(s)) return false;
    }
    return true;
}

CoreReport core_nonempty_bondareva(const TUGame& g, const EnumerationResult& mbcs, unsigned jobs) {
    require(mbcs.n() == g.n(), "core_nonempty_bondareva: collections are for a different n");
    require(mbcs.complete(), "core_nonempty_bondareva: collection list is incomplete");
    // Blocks are scanned in parallel; the smallest violating index wins.
    const std::size_t count = mbcs.size();
    const std::size_t block = 4096;
    const std::size_t blocks = (count + block - 1) / block;
    std::atomic<std::size_t> first{std::numeric_limits<std::size_t>::max()};
    detail::parallel_for(blocks, jobs, [&](std::size_t b, unsigned) {
        const std::size_t begin = b * block;
        const std::size_t end = std::min(count, begin + block);
        for (std::size_t i = begin; i < end && i < first.load(); ++i) {
            if (balanced_worth(g, mbcs.at(i)) > g.grand()) {
                std::size_t cur = first.load();
                while (i < cur && !first.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    });
    CoreReport r;
    if (first.load() != std::numeric_limits<std::size_t>::max()) {
        r.nonempty = false;
        r.violation_index = static_cast<long long>(first.load());
        r.violating = mbcs.at(first.load());
        ensure(balanced_worth(g, *r.violating) > g.grand(), "violating certificate does not re-verify");
        return r;
    }
    r = core_nonempty_lp(g);
    ensure(r.nonempty, "no balanced violation but the core LP is infeasible");
    return r;
}

CoreReport core_nonempty_lp(const TUGame& g) {
    if (g.n() > kCoreLpLimit) fail(ErrorCode::size_limit, "core_nonempty_lp: n limited to 8");
    const int n = g.n();
    const Mask all = full_mask(n);
    // Variables: p_i, q_i (x = p - q) and one surplus per proper coalition.
    const std::size_t rows = all;
    const std::size_t cols = 2 * static_cast<std::size_t>(n) + (rows - 1);
    QMatrix a(rows, cols);
    std::vector<Rational> b(rows);
    for (Mask s = 1; s <= all; ++s) {
        const std::size_t r = s - 1;
        for (int i = 0; i < n; ++i) {
            if ((s >> i) & 1U) {
                a(r, static_cast<std::size_t>(i)) = 1;
                a(r, static_cast<std::size_t>(n + i)) = -1;
            }
        }
        if (s != all) a(r, 2 * static_cast<std::size_t>(n) + r) = -1;
        b[r] = g.worth(s);
    }
    CoreReport out;
    const auto x = find_feasible(a, b);
    if (!x) return out;
    std::vector<Rational> alloc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        alloc[static_cast<std::size_t>(i)] = (*x)[static_cast<std::size_t>(i)] - (*x)[static_cast<std::size_t>(n + i)];
    }
    ensure(is_core_allocation(g, alloc), "LP allocation fails a coalition constraint");
    out.nonempty = true;
    out.allocation = std::move(alloc);
    return out;
}

TUGame random_uniform_game(int n, std::mt19937_64& rng, int range, int max_den) {
    require(range >= 0 && max_den >= 1, "random_uniform_game: bad ranges");
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<Rational> v(std::size_t{1} << n);
    for (std::size_t s = 1; s < v.size(); ++s) v[s] = Rational(BigInt(num(rng)), BigInt(den(rng)));
    return TUGame(n, std::move(v));
}

TUGame random_superadditive_game(int n, std::mt19937_64& rng, int range, int max_den) {
    require(range >= 0 && max_den >= 1, "random_superadditive_game: bad ranges");
    std::uniform_int_distribution<int> num(0, range);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<Rational> v(std::size_t{1} << n);
    // Increasing masks visit every proper part before the coalition itself.
    for (Mask s = 1; s <= full_mask(n); ++s) {
        if (popcount(s) == 1) continue;
        Rational best(BigInt(num(rng)), BigInt(den(rng)));
        for (Mask t = (s - 1) & s; t != 0; t = (t - 1) & s) {
            const Rational split = v[t] + v[s & ~t];
            if (split > best) best = split;
        }
        v[s] = best;
    }
    return TUGame(n, std::move(v));
}

TUGame majority_game(const Rational& grand) {
    std::vector<Rational> v(8);
    v[0b011] = 1;
    v[0b101] = 1;
    v[0b110] = 1;
    v[0b111] = grand;
    return TUGame(3, std::move(v));
}

}  // namespace mbc
