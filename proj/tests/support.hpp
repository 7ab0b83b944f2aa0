#pragma once

// Builders and seeded generators shared by the unit tests.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "mbc/model.hpp"

namespace mbc::testing {

inline Mask set_of(std::initializer_list<int> members) {
    Mask m = 0;
    for (int p : members) m |= Mask{1} << (p - 1);
    return m;
}

inline std::vector<Mask> sets_of(std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<Mask> out;
    for (auto s : sets) out.push_back(set_of(s));
    return out;
}

inline Collection coll(int n, std::initializer_list<std::initializer_list<int>> sets) {
    return Collection(n, sets_of(sets));
}

inline WeightVector weights(std::initializer_list<const char*> coords) {
    std::vector<Rational> out;
    for (const char* c : coords) out.push_back(Rational::parse(c));
    return WeightVector(std::move(out));
}

using Rng = std::mt19937_64;

inline Mask random_mask(Rng& rng, int bits) {
    return static_cast<Mask>(rng()) & full_mask(bits);
}

inline std::vector<Mask> random_columns(Rng& rng, int n, int m) {
    std::vector<Mask> cols(static_cast<std::size_t>(m));
    for (auto& c : cols) c = random_mask(rng, n);
    return cols;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Rational with numerator in [-range, range] and denominator in [1, max_den].
inline Rational random_rational(Rng& rng, int range, int max_den) {
    return Rational(BigInt(uniform_int(rng, -range, range)), BigInt(uniform_int(rng, 1, max_den)));
}

}  // namespace mbc::testing
