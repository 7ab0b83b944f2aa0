#pragma once

#include <string>
#include <vector>

#include "mbc/exact.hpp"

namespace mbc {

/// Vector of rational weights indexed by coalition position (coordinate i <-> column i).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static WeightVector uniform(std::size_t m, const Rational& value) {
        return WeightVector(std::vector<Rational>(m, value));
    }
    static WeightVector parse(const std::vector<std::string>& coords);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    Mask pos_mask() const;
    Mask neg_mask() const;
    Mask zero_mask() const;
    bool all_positive() const { return !coords_.empty() && zero_mask() == 0 && neg_mask() == 0; }
    bool nowhere_zero() const { return zero_mask() == 0; }
    /// Sum of the coordinates selected by `subset` (bit i <-> coordinate i).
    Rational sum_over(Mask subset) const;

    std::vector<std::string> to_strings() const;
    std::string str() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<Rational> coords_;
};

}  // namespace mbc
