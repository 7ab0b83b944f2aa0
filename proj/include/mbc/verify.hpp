#pragma once

// Golden reference data and the verification suites behind `mbc verify`.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mbc/weights.hpp"

namespace mbc {

namespace golden {

inline constexpr int kGoldenVersion = 1;

/// Published count of minimal balanced collections by size; row m - 1, column n - 1.
inline constexpr std::array<std::array<std::uint64_t, 6>, 6> kBySize = {{
    {1, 1, 1, 1, 1, 1},
    {0, 1, 3, 7, 15, 31},
    {0, 0, 2, 12, 50, 180},
    {0, 0, 0, 22, 250, 1910},
    {0, 0, 0, 0, 976, 18780},
    {0, 0, 0, 0, 0, 179312},
}};

/// Published totals for n = 1..7.
inline constexpr std::array<std::uint64_t, 7> kTotals = {1, 2, 6, 42, 1292, 200214, 132422036};

/// Published counts of collections made only of 2-element coalitions, n = 3..7.
inline constexpr std::array<std::uint64_t, 5> kTwoElement = {1, 3, 22, 25, 712};

}  // namespace golden

struct SuiteDiff {
    std::string key;
    std::string expected;
    std::string computed;
};

struct VerifySuite {
    std::string name;
    int scope = 0;  // largest n (or m) covered
    std::uint64_t checks = 0;
    std::vector<SuiteDiff> diffs;
    std::map<std::string, std::string> reported;  // headline computed values

    bool pass() const { return diffs.empty(); }
};

struct VerifyOptions {
    int max_n = 0;  // 0 = suite default
    unsigned jobs = 0;
    std::uint64_t samples = 0;  // random trials; 0 = suite default
    std::uint64_t seed = 20240601;
    LambdaStore* store = nullptr;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Throws invalid_argument for an unknown name.
VerifySuite run_suite(const std::string& name, const VerifyOptions& options = {});

std::string verify_suite_to_json(const VerifySuite& s);

}  // namespace mbc
