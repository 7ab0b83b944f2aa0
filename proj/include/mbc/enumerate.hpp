#pragma once

// Exhaustive enumeration of minimal balanced collections, independent oracles,
// matrix-space censuses, and the census of collections of 2-element coalitions.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "mbc/counting.hpp"
#include "mbc/model.hpp"
#include "mbc/weights.hpp"

namespace mbc {

struct MinimalBalanced {
    Collection collection;
    WeightVector weights;  // aligned with collection.sets()
};

/// Flat store of (collection, weights) pairs, sorted by (size, masks) once finished.
class EnumerationResult {
public:
    explicit EnumerationResult(int n = 1);

    int n() const { return n_; }
    std::size_t size() const { return dens_.size(); }
    std::span<const Mask> sets(std::size_t i) const;
    MinimalBalanced at(std::size_t i) const;

    /// Index m - 1 holds the number of collections with m members.
    const std::vector<std::uint64_t>& per_m_counts() const { return per_m_; }
    std::uint64_t total() const;
    /// Order-independent 64-bit fold over canonical collections.
    std::uint64_t checksum() const { return checksum_; }
    /// FNV-1a over the emitted order (canonical order for in-memory results).
    std::uint64_t digest() const { return digest_; }
    /// False when a resource limit stopped the run early.
    bool complete() const { return complete_; }
    /// Fraction of search tasks finished, in [0, 1].
    double progress() const { return progress_; }

    /// Appends one collection (sets ascending) with weights num[j] / den.
    void add(std::span<const Mask> sets, std::span<const std::int64_t> num, std::int64_t den);
    /// Moves all entries of `other` (same n) to the end of this result.
    void append(EnumerationResult&& other);
    /// Sorts, verifies distinctness, and recomputes counts and hashes.
    void finish();

    void mark_incomplete(double progress) {
        complete_ = false;
        progress_ = progress;
    }
    /// Counts and hashes one streamed collection without storing it.
    void record(std::span<const Mask> sets);

private:
    int n_;
    std::vector<Mask> masks_;
    std::vector<std::int64_t> nums_;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::int64_t> dens_;
    std::vector<std::uint64_t> per_m_;
    std::uint64_t checksum_ = 0;
    std::uint64_t digest_ = 0xcbf29ce484222325ULL;
    bool complete_ = true;
    double progress_ = 1.0;
};

/// Hash contribution of one canonical collection to the order-independent checksum.
std::uint64_t collection_hash(int n, std::span<const Mask> sets);

enum class EnumerationMode { search, lambda_route };

using CollectionSink = std::function<void(const MinimalBalanced&)>;

struct EnumerateOptions {
    unsigned jobs = 0;
    /// Abort (incomplete result) once this many collections are found; 0 = unlimited.
    std::uint64_t max_collections = 0;
    /// When set, collections are streamed here instead of stored (counts and checksum still kept).
    CollectionSink sink;
    LambdaStore* store = nullptr;
};

inline constexpr int kExhaustiveLimit = 7;

/// search: depth-first over coalitions in ascending mask order with incremental
/// elimination; a branch stops as soon as the ones vector enters the span.
/// lambda_route: for every weight class, every assignment of unificator rows to
/// players with rank m, one representative per collection.
EnumerationResult enumerate_minimal(int n, EnumerationMode mode, const EnumerateOptions& options = {});

inline constexpr int kDefinitionEnumerationLimit = 5;

/// Definition-only oracle: balanced via exact LP and no balanced proper sub-collection.
EnumerationResult bruteforce_oracle_enumerate(int n, unsigned jobs = 0);

inline constexpr int kMatrixScanCells = 20;

using MatrixVisitor = std::function<void(std::span<const Mask> columns, const WeightVector& weights)>;

/// Classifies every n x m 0-1 matrix (n * m <= 20); the visitor sees each matrix with weights.
MatrixSpaceCounts scan_matrix_space(int n, int m, const MatrixVisitor& visitor = {});

struct TwoElementCensus {
    int n = 0;
    /// Keyed by component sizes in descending order (2 = single edge, odd k >= 3 = k-cycle).
    std::map<std::vector<int>, BigInt> by_shape;
    BigInt total;

    friend bool operator==(const TwoElementCensus&, const TwoElementCensus&) = default;
};

/// Counts spanning graphs on [n] whose components are single edges or odd cycles, n <= 16.
TwoElementCensus enumerate_two_element(int n);

inline constexpr int kTwoElementScanLimit = 7;

/// Same census by testing every set of at most n pair-coalitions with the rank
/// certificate and reading off component shapes; n <= 7.
TwoElementCensus two_element_bruteforce(int n);

/// Number of collections in `result` whose members all have exactly two players.
std::uint64_t count_two_element(const EnumerationResult& result);

/// Weight classes of all size-m collections in `result`.
LambdaSet harvest_lambda(const EnumerationResult& result, int m);

}  // namespace mbc
