#pragma once

// Unificators, membership in the weight-vector sets, their generation, and
// rank-m subset counts of unificator sets.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mbc/exact.hpp"
#include "mbc/weight_vector.hpp"

namespace mbc {

inline constexpr int kMaxWeightLength = 16;

/// All 0-1 rows u with u . lambda = 1, as m-bit masks in ascending order.
struct UnificatorSet {
    WeightVector lambda;
    std::vector<Mask> rows;
    std::size_t rank = 0;
};

/// Throws size_limit when |lambda| > 16.
UnificatorSet unificators(const WeightVector& lambda);

/// Strictly positive and the unificators span Q^m.
bool is_in_lambda(const WeightVector& lambda);

/// Orbit of a weight vector under coordinate permutation.
struct LambdaClass {
    WeightVector canonical;         // coordinates in descending order
    std::uint64_t multiplicity = 0;  // number of distinct coordinate permutations

    friend bool operator==(const LambdaClass&, const LambdaClass&) = default;
};

LambdaClass lambda_class_of(const WeightVector& lambda);

/// Classes sorted descending by canonical vector (lexicographic, larger first).
struct LambdaSet {
    int m = 0;
    std::vector<LambdaClass> classes;

    bool contains(const WeightVector& lambda) const;
    /// Sum of multiplicities: the number of weight vectors, not classes.
    BigInt vector_count() const;
    /// Re-sorts classes into canonical order and drops duplicates.
    void normalise();

    friend bool operator==(const LambdaSet&, const LambdaSet&) = default;
};

struct GenerationStats {
    std::uint64_t insert_candidates = 0;    // operation 1
    std::uint64_t shift_candidates = 0;     // operation 2
    std::uint64_t segment_pairs = 0;        // operation 3: unordered class pairs examined
    std::uint64_t segment_placements = 0;   // operation 3: zero-padded placements examined
    std::uint64_t segment_candidates = 0;   // operation 3
    std::uint64_t distinct_candidates = 0;  // distinct classes among all candidates
    std::uint64_t rejected = 0;             // distinct candidates failing membership
    std::uint64_t admitted = 0;
};

/// Memory plus optional directory cache of generated sets, keyed by m and library version.
class LambdaStore {
public:
    explicit LambdaStore(std::optional<std::filesystem::path> directory = std::nullopt)
        : directory_(std::move(directory)) {}

    std::optional<LambdaSet> find(int m);
    void put(const LambdaSet& set);
    const std::optional<std::filesystem::path>& directory() const { return directory_; }
    std::filesystem::path file_for(int m) const;

private:
    std::optional<std::filesystem::path> directory_;
    std::map<int, LambdaSet> memory_;
    std::mutex mutex_;
};

struct GenerateOptions {
    unsigned jobs = 0;  // 0 = available parallelism
    GenerationStats* stats = nullptr;  // per-m stats of the top-level call only
};

/// Builds the set for m from the sets for all smaller lengths (recursively, through
/// `store` when given) with the insertion, shift, and segment operations; every
/// candidate is admitted only after the membership test.
LambdaSet generate_lambda(int m, LambdaStore* store = nullptr, GenerateOptions options = {});

inline constexpr int kLambdaOracleLimit = 5;

/// Ground truth by exhaustive scan of m x m 0-1 systems A x = 1; m <= 5.
LambdaSet lambda_bruteforce_oracle(int m);

/// Number of k-element subsets of u.rows whose rank is m.
BigInt count_full_rank_subsets(const UnificatorSet& u, int k);
/// The counts for k = 0..kmax in one pass.
std::vector<BigInt> full_rank_subset_counts(const UnificatorSet& u, int kmax);

std::string lambda_set_to_json(const LambdaSet& set);
LambdaSet lambda_set_from_json(const std::string& text);

}  // namespace mbc
