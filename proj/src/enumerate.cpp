#include "mbc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_set>

#include "int_weights.hpp"
#include "parallel.hpp"

namespace mbc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void fnv_byte(std::uint64_t& h, std::uint8_t b) {
    h ^= b;
    h *= 0x100000001b3ULL;
}

void fnv_collection(std::uint64_t& h, std::span<const Mask> sets) {
    fnv_byte(h, static_cast<std::uint8_t>(sets.size()));
    for (Mask s : sets) {
        for (int k = 0; k < 4; ++k) fnv_byte(h, static_cast<std::uint8_t>(s >> (8 * k)));
    }
}

}  // namespace

std::uint64_t collection_hash(int n, std::span<const Mask> sets) {
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(n));
    for (Mask s : sets) h = splitmix64(h ^ s);
    return h;
}

EnumerationResult::EnumerationResult(int n) : n_(n), per_m_(static_cast<std::size_t>(std::max(n, 1)), 0) {}

std::span<const Mask> EnumerationResult::sets(std::size_t i) const {
    return {masks_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

MinimalBalanced EnumerationResult::at(std::size_t i) const {
    const auto s = sets(i);
    std::vector<Rational> w;
    w.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        w.emplace_back(BigInt(static_cast<long>(nums_[offsets_[i] + j])), BigInt(static_cast<long>(dens_[i])));
    }
    return {Collection(n_, std::vector<Mask>(s.begin(), s.end())), WeightVector(std::move(w))};
}

std::uint64_t EnumerationResult::total() const {
    return std::accumulate(per_m_.begin(), per_m_.end(), std::uint64_t{0});
}

void EnumerationResult::add(std::span<const Mask> sets, std::span<const std::int64_t> num, std::int64_t den) {
    ensure(sets.size() == num.size() && !sets.empty(), "enumeration entry with mismatched weights");
    ensure(sets.size() <= static_cast<std::size_t>(n_), "collection larger than n");
    masks_.insert(masks_.end(), sets.begin(), sets.end());
    nums_.insert(nums_.end(), num.begin(), num.end());
    offsets_.push_back(static_cast<std::uint32_t>(masks_.size()));
    dens_.push_back(den);
}

void EnumerationResult::append(EnumerationResult&& other) {
    ensure(other.n_ == n_, "appending enumeration results of different n");
    for (std::size_t i = 0; i < other.size(); ++i) {
        const auto s = other.sets(i);
        add(s, std::span<const std::int64_t>(other.nums_.data() + other.offsets_[i], s.size()), other.dens_[i]);
    }
    for (std::size_t m = 0; m < per_m_.size(); ++m) per_m_[m] += other.per_m_[m];
    checksum_ += other.checksum_;
}

void EnumerationResult::record(std::span<const Mask> sets) {
    ++per_m_[sets.size() - 1];
    checksum_ += collection_hash(n_, sets);
    fnv_collection(digest_, sets);
}

void EnumerationResult::finish() {
    if (size() == 0) return;
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
        const auto x = sets(a);
        const auto y = sets(b);
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    };
    std::sort(order.begin(), order.end(), less);
    EnumerationResult sorted(n_);
    sorted.masks_.reserve(masks_.size());
    sorted.nums_.reserve(nums_.size());
    sorted.dens_.reserve(dens_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t i = order[k];
        if (k > 0) {
            const auto prev = sets(order[k - 1]);
            const auto cur = sets(i);
            ensure(!std::equal(prev.begin(), prev.end(), cur.begin(), cur.end()), "duplicate collection emitted");
        }
        const auto s = sets(i);
        sorted.add(s, std::span<const std::int64_t>(nums_.data() + offsets_[i], s.size()), dens_[i]);
        sorted.record(s);
    }
    sorted.complete_ = complete_;
    sorted.progress_ = progress_;
    *this = std::move(sorted);
}

namespace {

using detail::IntEchelon;
using detail::IntRow;

struct Emitter {
    int n;
    std::uint64_t limit;
    std::atomic<std::uint64_t>& found;
    std::atomic<bool>& stop;

    bool reserve() {
        const std::uint64_t k = found.fetch_add(1) + 1;
        if (limit > 0 && k > limit) {
            stop = true;
            return false;
        }
        return true;
    }
};

// Integer check of sum_j w_j 1_{S_j} = 1 for w = num / den.
bool integer_balance(int n, std::span<const Mask> sets, std::span<const std::int64_t> num, std::int64_t den) {
    for (int i = 0; i < n; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if ((sets[j] >> i) & 1U) acc += num[j];
        }
        if (acc != den) return false;
    }
    return true;
}


// Runs `count` tasks in chunks; each chunk is merged in task order, so streamed
// output is deterministic for any thread count and memory stays bounded by a chunk.
template <class Body>
void run_chunked(int n, std::size_t count, const EnumerateOptions& options, std::atomic<bool>& stop,
                 EnumerationResult& out, Body&& body) {
    const std::size_t workers = detail::resolve_jobs(options.jobs);
    const std::size_t chunk = options.sink ? workers : std::max<std::size_t>(64, 16 * workers);
    std::size_t done = 0;
    for (std::size_t begin = 0; begin < count && !stop.load(); begin += chunk) {
        const std::size_t len = std::min(chunk, count - begin);
        std::vector<EnumerationResult> parts(len, EnumerationResult(n));
        std::vector<char> finished(len, 0);
        detail::parallel_for(len, options.jobs, [&](std::size_t t, unsigned) {
            if (stop.load(std::memory_order_relaxed)) return;
            body(begin + t, parts[t]);
            if (!stop.load()) finished[t] = 1;
        });
        for (std::size_t t = 0; t < len; ++t) {
            done += static_cast<std::size_t>(finished[t]);
            if (options.sink) {
                for (std::size_t i = 0; i < parts[t].size(); ++i) {
                    options.sink(parts[t].at(i));
                    out.record(parts[t].sets(i));
                }
            } else {
                out.append(std::move(parts[t]));
            }
        }
    }
    if (stop.load()) out.mark_incomplete(count == 0 ? 0.0 : static_cast<double>(done) / static_cast<double>(count));
}

class Search {
public:
    Search(int n, const std::vector<Mask>& coalitions, EnumerationResult& out, Emitter& emit)
        : n_(n), coalitions_(coalitions), out_(out), emit_(emit) {}

    /// Adds candidate `ci` at position `depth` on top of `basis`; `ones` is the
    /// residue of the all-ones vector against `basis` and is never zero here.
    void extend(std::size_t ci, int depth, const IntEchelon& basis, const IntRow& ones) {
        if (emit_.stop.load(std::memory_order_relaxed)) return;
        IntRow v = basis.mask_row(coalitions_[ci]);
        if (basis.reduce(v)) return;
        IntEchelon grown = basis;
        grown.add(v);
        IntRow residue = ones;
        chosen_[static_cast<std::size_t>(depth)] = coalitions_[ci];
        const int size = depth + 1;
        if (grown.reduce(residue)) {
            // Any independent superset would put weight zero on the new members.
            leaf(size);
            return;
        }
        if (size == n_) return;
        for (std::size_t next = ci + 1; next < coalitions_.size(); ++next) extend(next, size, grown, residue);
    }

    /// Fixes the first member for a subtree rooted below it.
    void seed(Mask first) { chosen_[0] = first; }

private:
    void leaf(int size) {
        const std::span<const Mask> sets(chosen_.data(), static_cast<std::size_t>(size));
        const auto s = detail::solve_zero_one_int(n_, sets);
        ensure(s.failure == SolveFailure::none, "search leaf without unique weights");
        for (int j = 0; j < size; ++j) {
            if (s.num[static_cast<std::size_t>(j)] <= 0) return;
        }
        const std::span<const std::int64_t> num(s.num.data(), static_cast<std::size_t>(size));
        ensure(integer_balance(n_, sets, num, s.den), "search weights fail M x = 1");
        if (!emit_.reserve()) return;
        out_.add(sets, num, s.den);
    }

    int n_;
    const std::vector<Mask>& coalitions_;
    EnumerationResult& out_;
    Emitter& emit_;
    std::array<Mask, detail::kMaxDim> chosen_{};
};

EnumerationResult run_search(int n, const EnumerateOptions& options) {
    std::vector<Mask> coalitions;
    for (Mask s = 1; s <= full_mask(n); ++s) coalitions.push_back(s);
    // Task (i, i) is the prefix {c_i} alone; task (i, j) roots the subtree below {c_i, c_j}.
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t i = 0; i < coalitions.size(); ++i) {
        for (std::size_t j = i; j < coalitions.size(); ++j) tasks.emplace_back(i, j);
    }
    std::atomic<std::uint64_t> found{0};
    std::atomic<bool> stop{false};
    Emitter emit{n, options.max_collections, found, stop};
    const IntEchelon empty(n);
    const IntRow ones = empty.mask_row(full_mask(n));
    EnumerationResult out(n);
    run_chunked(n, tasks.size(), options, stop, out, [&](std::size_t t, EnumerationResult& part) {
        const auto [i, j] = tasks[t];
        Search search(n, coalitions, part, emit);
        if (i == j) {
            if (coalitions[i] == full_mask(n)) search.extend(i, 0, empty, ones);
            return;
        }
        IntEchelon head(n);
        head.add_mask(coalitions[i]);
        IntRow residue = ones;
        if (head.reduce(residue)) return;  // {[n]} is a leaf with no children
        search.seed(coalitions[i]);
        search.extend(j, 1, head, residue);
    });
    return out;
}

}  // namespace

namespace {

struct RouteClass {
    detail::IntWeights lambda;  // canonical, descending
    std::vector<Mask> rows;     // unificators as m-bit masks
    Mask same = 0;              // bit j: positions j and j + 1 carry equal weight
};

// Assigns one unificator row to each player, from player n - 1 down to 0, so that
// column masks are built most significant bit first. Inside a block of equal
// weights columns must come out strictly increasing, which picks one ordering
// per collection.
class Route {
public:
    Route(int n, const RouteClass& cls, EnumerationResult& out, Emitter& emit)
        : n_(n), m_(cls.lambda.m), cls_(cls), out_(out), emit_(emit) {}

    void run() {
        IntEchelon basis(m_);
        descend(n_ - 1, basis, cls_.same);
    }

private:
    // `tied` holds the adjacent same-block pairs whose columns still agree on all players above.
    void descend(int player, const IntEchelon& basis, Mask tied) {
        if (emit_.stop.load(std::memory_order_relaxed)) return;
        for (Mask r : cls_.rows) {
            if (tied & r & ~(r >> 1)) continue;  // column j would exceed column j + 1
            const Mask still = tied & ~(~r & (r >> 1));
            IntEchelon grown = basis;
            grown.add_mask(r);
            if (grown.rank() + player < m_) continue;
            rows_[static_cast<std::size_t>(player)] = r;
            if (player > 0) {
                descend(player - 1, grown, still);
            } else if (grown.rank() == m_ && still == 0) {
                leaf();
            }
        }
    }

    void leaf() {
        std::array<std::pair<Mask, std::int64_t>, detail::kMaxDim> cols{};
        for (int j = 0; j < m_; ++j) {
            Mask c = 0;
            for (int i = 0; i < n_; ++i) {
                if ((rows_[static_cast<std::size_t>(i)] >> j) & 1U) c |= Mask{1} << i;
            }
            cols[static_cast<std::size_t>(j)] = {c, cls_.lambda.num[static_cast<std::size_t>(j)]};
        }
        std::sort(cols.begin(), cols.begin() + m_);
        std::array<Mask, detail::kMaxDim> sets{};
        std::array<std::int64_t, detail::kMaxDim> num{};
        for (int j = 0; j < m_; ++j) {
            sets[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)].first;
            num[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)].second;
        }
        const std::span<const Mask> s(sets.data(), static_cast<std::size_t>(m_));
        const std::span<const std::int64_t> w(num.data(), static_cast<std::size_t>(m_));
        ensure(integer_balance(n_, s, w, cls_.lambda.den), "route weights fail M x = 1");
        if (!emit_.reserve()) return;
        out_.add(s, w, cls_.lambda.den);
    }

    int n_;
    int m_;
    const RouteClass& cls_;
    EnumerationResult& out_;
    Emitter& emit_;
    std::array<Mask, detail::kMaxDim> rows_{};
};

EnumerationResult run_lambda_route(int n, const EnumerateOptions& options) {
    LambdaStore local;
    LambdaStore* store = options.store ? options.store : &local;
    std::vector<RouteClass> classes;
    for (int m = 1; m <= n; ++m) {
        const auto set = generate_lambda(m, store, {options.jobs, nullptr});
        for (const auto& c : set.classes) {
            RouteClass rc;
            rc.lambda = detail::to_int_weights(c.canonical);
            rc.lambda.normalise();
            rc.rows = detail::unificator_rows(rc.lambda);
            for (int j = 0; j + 1 < m; ++j) {
                if (rc.lambda.num[static_cast<std::size_t>(j)] == rc.lambda.num[static_cast<std::size_t>(j) + 1]) {
                    rc.same |= Mask{1} << j;
                }
            }
            classes.push_back(std::move(rc));
        }
    }
    std::atomic<std::uint64_t> found{0};
    std::atomic<bool> stop{false};
    Emitter emit{n, options.max_collections, found, stop};
    EnumerationResult out(n);
    run_chunked(n, classes.size(), options, stop, out, [&](std::size_t t, EnumerationResult& part) {
        Route(n, classes[t], part, emit).run();
    });
    return out;
}

}  // namespace

EnumerationResult enumerate_minimal(int n, EnumerationMode mode, const EnumerateOptions& options) {
    require(n >= 1, "enumerate_minimal: n must be positive");
    if (n > kExhaustiveLimit) fail(ErrorCode::size_limit, "enumerate_minimal: exhaustive runs limited to n <= 7");
    if (n == kExhaustiveLimit && !options.sink && options.max_collections == 0) {
        fail(ErrorCode::resource_limit, "enumerate_minimal: n = 7 must stream to a sink or set a collection limit");
    }
    EnumerationResult out = mode == EnumerationMode::search ? run_search(n, options) : run_lambda_route(n, options);
    if (!options.sink) out.finish();
    return out;
}

namespace {

using Chosen = std::uint64_t;  // bit k: coalition with mask k + 1 is a member

std::vector<Mask> members_of(Chosen c) {
    std::vector<Mask> sets;
    for (; c != 0; c &= c - 1) sets.push_back(static_cast<Mask>(std::countr_zero(c) + 1));
    return sets;
}

}  // namespace

EnumerationResult bruteforce_oracle_enumerate(int n, unsigned jobs) {
    require(n >= 1, "bruteforce_oracle_enumerate: n must be positive");
    if (n > kDefinitionEnumerationLimit) fail(ErrorCode::size_limit, "bruteforce_oracle_enumerate: n limited to 5");
    const int universe = (1 << n) - 1;
    const Mask all = full_mask(n);
    EnumerationResult out(n);
    // `clean`: collections of the current size with no balanced sub-collection.
    // A candidate is minimal balanced iff all its maximal proper subsets are clean
    // and it is balanced; otherwise it is clean itself.
    std::vector<Chosen> clean = {0};
    std::unordered_set<Chosen> clean_index = {0};
    for (int size = 1; size <= n && !clean.empty(); ++size) {
        std::vector<Chosen> candidates;
        for (Chosen c : clean) {
            const int top = c == 0 ? 0 : 64 - std::countl_zero(c);
            for (int x = top; x < universe; ++x) {
                const Chosen grown = c | (Chosen{1} << x);
                bool ok = true;
                for (Chosen rest = c; rest != 0 && ok; rest &= rest - 1) {
                    ok = clean_index.contains(grown & ~(rest & -rest));
                }
                if (ok) candidates.push_back(grown);
            }
        }
        std::vector<char> balanced(candidates.size(), 0);
        std::vector<std::optional<WeightVector>> witness(candidates.size());
        detail::parallel_for(candidates.size(), jobs, [&](std::size_t t, unsigned) {
            const auto sets = members_of(candidates[t]);
            Mask cover = 0;
            for (Mask s : sets) cover |= s;
            if (cover != all) return;  // some player would receive weight 0
            auto b = is_balanced(Collection(n, sets));
            if (b.holds) {
                balanced[t] = 1;
                witness[t] = std::move(b.weights);
            }
        });
        std::vector<Chosen> next;
        std::unordered_set<Chosen> next_index;
        for (std::size_t t = 0; t < candidates.size(); ++t) {
            if (!balanced[t]) {
                next.push_back(candidates[t]);
                next_index.insert(candidates[t]);
                continue;
            }
            const auto sets = members_of(candidates[t]);
            const auto w = detail::to_int_weights(*witness[t]);
            out.add(sets, std::span<const std::int64_t>(w.num.data(), sets.size()), w.den);
        }
        clean = std::move(next);
        clean_index = std::move(next_index);
    }
    out.finish();
    return out;
}

MatrixSpaceCounts scan_matrix_space(int n, int m, const MatrixVisitor& visitor) {
    require(n >= 1 && m >= 1, "scan_matrix_space: sizes must be positive");
    if (n * m > kMatrixScanCells) fail(ErrorCode::size_limit, "scan_matrix_space: n * m limited to 20");
    MatrixSpaceCounts out;
    out.n = n;
    out.m = m;
    std::uint64_t with_weights = 0;
    std::uint64_t nowhere_zero = 0;
    std::uint64_t positive = 0;
    std::map<Mask, std::uint64_t> support;
    const std::uint64_t total = std::uint64_t{1} << (n * m);
    const Mask col_mask = full_mask(n);
    std::vector<Mask> cols(static_cast<std::size_t>(m));
    for (std::uint64_t code = 0; code < total; ++code) {
        for (int j = 0; j < m; ++j) cols[static_cast<std::size_t>(j)] = static_cast<Mask>(code >> (n * j)) & col_mask;
        const auto s = detail::solve_zero_one_int(n, cols);
        if (s.failure != SolveFailure::none) continue;
        ++with_weights;
        Mask nz = 0;
        bool pos = true;
        for (int j = 0; j < m; ++j) {
            const auto v = s.num[static_cast<std::size_t>(j)];
            if (v != 0) nz |= Mask{1} << j;
            if (v <= 0) pos = false;
        }
        ++support[nz];
        if (nz == full_mask(m)) ++nowhere_zero;
        if (pos) ++positive;
        if (visitor) {
            detail::IntWeights w;
            w.m = m;
            w.den = s.den;
            std::copy(s.num.begin(), s.num.begin() + m, w.num.begin());
            visitor(cols, detail::to_weight_vector(w));
        }
    }
    out.with_weights = BigInt(static_cast<unsigned long>(with_weights));
    out.nowhere_zero = BigInt(static_cast<unsigned long>(nowhere_zero));
    out.positive = BigInt(static_cast<unsigned long>(positive));
    for (const auto& [k, v] : support) out.by_support[k] = BigInt(static_cast<unsigned long>(v));
    return out;
}

namespace {

// Labelled components on k vertices: a single edge (k = 2) or a Hamiltonian k-cycle.
BigInt component_ways(int k) {
    if (k == 2) return 1;
    return factorial(static_cast<unsigned>(k - 1)) / 2;
}

void shape_partitions(int remaining, int largest, std::vector<int>& parts, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(parts);
        return;
    }
    for (int p = std::min(largest, remaining); p >= 2; --p) {
        if (p != 2 && p % 2 == 0) continue;
        parts.push_back(p);
        shape_partitions(remaining - p, p, parts, out);
        parts.pop_back();
    }
}

void add_total(TwoElementCensus& c) {
    c.total = 0;
    for (const auto& [shape, count] : c.by_shape) c.total += count;
}

}  // namespace

TwoElementCensus enumerate_two_element(int n) {
    require(n >= 2 && n <= kMaxPlayers, "enumerate_two_element: need 2 <= n <= 16");
    TwoElementCensus out;
    out.n = n;
    std::vector<std::vector<int>> shapes;
    std::vector<int> parts;
    shape_partitions(n, n, parts, shapes);
    for (const auto& shape : shapes) {
        // n! / (prod part! * prod multiplicity!) vertex partitions, times the labelled components.
        BigInt value = factorial(static_cast<unsigned>(n));
        std::map<int, unsigned> mult;
        for (int p : shape) {
            value /= factorial(static_cast<unsigned>(p));
            value *= component_ways(p);
            ++mult[p];
        }
        for (const auto& [p, k] : mult) value /= factorial(k);
        out.by_shape[shape] = value;
    }
    add_total(out);
    return out;
}

TwoElementCensus two_element_bruteforce(int n) {
    require(n >= 2, "two_element_bruteforce: n must be at least 2");
    if (n > kTwoElementScanLimit) fail(ErrorCode::size_limit, "two_element_bruteforce: n limited to 7");
    std::vector<Mask> pairs;
    for (Mask s = 1; s <= full_mask(n); ++s) {
        if (popcount(s) == 2) pairs.push_back(s);
    }
    TwoElementCensus out;
    out.n = n;
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<Mask> chosen;
    auto classify = [&]() {
        const auto s = detail::solve_zero_one_int(n, chosen);
        if (s.failure != SolveFailure::none) return;
        for (std::size_t j = 0; j < chosen.size(); ++j) {
            if (s.num[j] <= 0) return;
        }
        // Component shapes by flood fill over the chosen edges.
        std::vector<int> shape;
        Mask seen = 0;
        for (int v = 0; v < n; ++v) {
            if ((seen >> v) & 1U) continue;
            Mask comp = Mask{1} << v;
            for (bool grew = true; grew;) {
                grew = false;
                for (Mask e : chosen) {
                    if ((e & comp) && (e & ~comp)) {
                        comp |= e;
                        grew = true;
                    }
                }
            }
            int edges = 0;
            for (Mask e : chosen) edges += (e & comp) ? 1 : 0;
            const int size = popcount(comp);
            ensure(size >= 2, "balanced pair collection leaves an isolated player");
            ensure(size == 2 ? edges == 1 : (edges == size && size % 2 == 1),
                   "minimal balanced pair collection with a component that is neither an edge nor an odd cycle");
            shape.push_back(size);
            seen |= comp;
        }
        std::sort(shape.begin(), shape.end(), std::greater<>());
        ++counts[shape];
    };
    auto walk = [&](auto&& self, std::size_t from) -> void {
        if (!chosen.empty()) classify();
        if (static_cast<int>(chosen.size()) == n) return;
        for (std::size_t k = from; k < pairs.size(); ++k) {
            chosen.push_back(pairs[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    walk(walk, 0);
    for (const auto& [shape, k] : counts) out.by_shape[shape] = BigInt(static_cast<unsigned long>(k));
    add_total(out);
    return out;
}

std::uint64_t count_two_element(const EnumerationResult& result) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < result.size(); ++i) {
        const auto s = result.sets(i);
        if (std::all_of(s.begin(), s.end(), [](Mask x) { return popcount(x) == 2; })) ++count;
    }
    return count;
}

LambdaSet harvest_lambda(const EnumerationResult& result, int m) {
    require(m >= 1, "harvest_lambda: m must be positive");
    std::unordered_set<detail::IntWeights, detail::IntWeightsHash> seen;
    for (std::size_t i = 0; i < result.size(); ++i) {
        if (result.sets(i).size() != static_cast<std::size_t>(m)) continue;
        auto w = detail::to_int_weights(result.at(i).weights);
        w.canonicalise();
        seen.insert(w);
    }
    LambdaSet out;
    out.m = m;
    for (const auto& w : seen) out.classes.push_back(lambda_class_of(detail::to_weight_vector(w)));
    out.normalise();
    return out;
}

}  // namespace mbc
