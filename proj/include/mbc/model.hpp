#pragma once

// Coalitions, collections, incidence matrices, and the balancedness predicates.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbc/common.hpp"
#include "mbc/exact.hpp"
#include "mbc/weight_vector.hpp"

namespace mbc {

/// Nonempty subset of [n]; player i (1-based) is bit i-1.
class Coalition {
public:
    Coalition(int n, Mask mask);
    static Coalition from_members(int n, std::span<const int> members);

    int n() const { return n_; }
    Mask mask() const { return mask_; }
    int size() const { return popcount(mask_); }
    bool contains(int player) const { return (mask_ >> (player - 1)) & 1U; }
    /// 1-based, ascending.
    std::vector<int> members() const;
    Coalition complement() const;  // throws when the complement is empty

    friend bool operator==(const Coalition&, const Coalition&) = default;

private:
    int n_;
    Mask mask_;
};

/// Set of distinct coalitions of [n], stored in ascending mask order.
class Collection {
public:
    Collection(int n, std::vector<Mask> sets);

    int n() const { return n_; }
    std::size_t size() const { return sets_.size(); }
    const std::vector<Mask>& sets() const { return sets_; }
    Mask operator[](std::size_t i) const { return sets_[i]; }

    /// Sub-collection made of the members selected by `which` (bit i <-> sets()[i]).
    Collection subcollection(Mask which) const;
    QMatrix matrix() const { return QMatrix::from_zero_one_columns(n_, sets_); }
    std::string str() const;

    friend bool operator==(const Collection&, const Collection&) = default;
    friend auto operator<=>(const Collection& a, const Collection& b) {
        if (auto c = a.sets_.size() <=> b.sets_.size(); c != 0) return c;
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.sets_ <=> b.sets_;
    }

private:
    int n_;
    std::vector<Mask> sets_;
};

/// n x m incidence matrix; column order matters and duplicates are allowed.
class ZeroOneMatrix {
public:
    ZeroOneMatrix(int n, std::vector<Mask> columns);
    explicit ZeroOneMatrix(const Collection& c) : ZeroOneMatrix(c.n(), c.sets()) {}

    int n() const { return n_; }
    std::size_t m() const { return columns_.size(); }
    const std::vector<Mask>& columns() const { return columns_; }
    Mask column(std::size_t j) const { return columns_[j]; }
    /// Row i as an m-bit mask (bit j set when player i+1 belongs to column j).
    Mask row(int i) const;
    std::vector<Mask> rows() const;
    bool columns_distinct() const;
    /// Collection of the columns; requires distinct nonempty columns.
    Collection collection() const { return Collection(n_, columns_); }

    std::size_t rank() const { return rank_zero_one(n_, columns_); }
    /// Weight vector lambda(M): the unique solution of M x = 1, when one exists.
    SolveResult weights() const { return solve_zero_one(n_, columns_); }
    std::vector<Rational> multiply(const WeightVector& w) const;

    friend bool operator==(const ZeroOneMatrix&, const ZeroOneMatrix&) = default;

private:
    int n_;
    std::vector<Mask> columns_;
};

/// Exact check that sum_j w_j 1_{S_j} is the all-ones vector.
bool sums_to_ones(int n, std::span<const Mask> columns, const WeightVector& w);

struct WeakBalance {
    bool holds = false;
    std::optional<WeightVector> weights;  // nonnegative witness when holds
};

WeakBalance is_weakly_balanced(const Collection& c);

struct Balance {
    bool holds = false;
    std::optional<WeightVector> weights;  // strictly positive witness when holds
};

Balance is_balanced(const Collection& c);

enum class BalanceKind { not_weakly_balanced, weakly_balanced, balanced, minimal_balanced };

std::string to_string(BalanceKind kind);
BalanceKind balance_kind_from_string(const std::string& text);

struct BalanceCertificate {
    BalanceKind kind = BalanceKind::not_weakly_balanced;
    std::optional<WeightVector> weights;
    /// Proper minimal balanced sub-collection when kind == balanced.
    std::optional<Collection> witness;
};

/// Rank criterion: minimal balanced iff full column rank and the unique weights are positive.
BalanceCertificate minimality_certificate(const Collection& c);

inline constexpr std::size_t kDefinitionOracleLimit = 12;

/// Straight from the definition: balanced and no proper nonempty sub-collection is balanced.
/// Exponential in |c|; throws size_limit above kDefinitionOracleLimit members.
bool definition_minimality_oracle(const Collection& c);

}  // namespace mbc
