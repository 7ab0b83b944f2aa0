#include "mbc/weights.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "int_weights.hpp"
#include "parallel.hpp"
#include "weights_internal.hpp"

namespace mbc {

using detail::IntWeights;
using WeightSet = std::unordered_set<IntWeights, detail::IntWeightsHash>;

UnificatorSet unificators(const WeightVector& lambda) {
    if (lambda.size() > static_cast<std::size_t>(kMaxWeightLength)) {
        fail(ErrorCode::size_limit, "unificators: weight vector longer than 16");
    }
    UnificatorSet u;
    u.lambda = lambda;
    const int m = static_cast<int>(lambda.size());
    try {
        const auto w = detail::to_int_weights(lambda);
        u.rows = detail::unificator_rows(w);
    } catch (const detail::Overflow&) {
        u.rows.clear();
        for (Mask mask = 1; mask <= full_mask(m) && mask != 0; ++mask) {
            if (lambda.sum_over(mask) == Rational(1)) u.rows.push_back(mask);
        }
    }
    u.rank = rank_zero_one(m, u.rows);
    return u;
}

bool is_in_lambda(const WeightVector& lambda) {
    if (!lambda.all_positive()) return false;
    const auto u = unificators(lambda);
    return u.rank == lambda.size();
}

LambdaClass lambda_class_of(const WeightVector& lambda) {
    auto coords = lambda.coords();
    std::sort(coords.begin(), coords.end(), std::greater<>());
    LambdaClass c;
    c.canonical = WeightVector(coords);
    std::uint64_t mult = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        run = (i > 0 && coords[i] == coords[i - 1]) ? run + 1 : 1;
        mult = mult * (i + 1) / run;
    }
    c.multiplicity = mult;
    return c;
}

bool LambdaSet::contains(const WeightVector& lambda) const {
    const auto target = lambda_class_of(lambda).canonical;
    auto it = std::lower_bound(classes.begin(), classes.end(), target,
                               [](const LambdaClass& c, const WeightVector& v) { return c.canonical > v; });
    return it != classes.end() && it->canonical == target;
}

BigInt LambdaSet::vector_count() const {
    BigInt total = 0;
    for (const auto& c : classes) total += BigInt(static_cast<unsigned long>(c.multiplicity));
    return total;
}

void LambdaSet::normalise() {
    std::sort(classes.begin(), classes.end(),
              [](const LambdaClass& a, const LambdaClass& b) { return a.canonical > b.canonical; });
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
}

namespace {

LambdaSet from_int_classes(int m, std::vector<IntWeights> ws) {
    std::sort(ws.begin(), ws.end(), detail::precedes);
    LambdaSet out;
    out.m = m;
    out.classes.reserve(ws.size());
    for (const auto& w : ws) {
        out.classes.push_back({detail::to_weight_vector(w), detail::permutation_multiplicity(w)});
    }
    return out;
}

std::vector<IntWeights> to_int_classes(const LambdaSet& s) {
    std::vector<IntWeights> out;
    out.reserve(s.classes.size());
    for (const auto& c : s.classes) {
        auto w = detail::to_int_weights(c.canonical);
        w.canonicalise();
        out.push_back(w);
    }
    return out;
}

struct Candidates {
    WeightSet set;
    GenerationStats stats;

    void add(IntWeights w) {
        w.canonicalise();
        set.insert(w);
    }
};

// Insertion (1 - sum over I appended) and shift (lambda_sigma lowered by the
// appended amount) applied to one class of length m - 1.
void insertion_and_shift(const IntWeights& base, Candidates& out) {
    const int k = base.m;
    const Mask all = full_mask(k);
    for (Mask subset = 0;; ++subset) {
        std::int64_t sum = 0;
        for (int i = 0; i < k; ++i) {
            if ((subset >> i) & 1U) sum += base.num[i];
        }
        const std::int64_t rest = base.den - sum;
        if (rest > 0) {
            IntWeights w = base;
            w.m = k + 1;
            w.num[k] = rest;
            out.add(w);
            ++out.stats.insert_candidates;
            for (int sigma = 0; sigma < k; ++sigma) {
                if ((subset >> sigma) & 1U) continue;
                if (rest >= base.num[sigma]) continue;
                IntWeights s = w;
                s.num[sigma] -= rest;
                out.add(s);
                ++out.stats.shift_candidates;
            }
        }
        if (subset == all) break;
    }
}

std::vector<IntWeights> distinct_permutations(const IntWeights& w) {
    std::vector<IntWeights> out;
    IntWeights p = w;
    std::sort(p.num.begin(), p.num.begin() + p.m);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.num.begin(), p.num.begin() + p.m));
    return out;
}

// Segment operation for one fixed class p of length k placed on slots 0..k-1,
// against classes q of length l placed with their m - l zeros inside 0..k-1.
// The segment between the padded vectors meets the hyperplane of a 0-1 row I
// inside the open orthant exactly when I - 1 changes sign between the ends.
void segment_task(int m, const IntWeights& p, const std::vector<std::vector<IntWeights>>& q_perms,
                  std::size_t q_begin, bool filter, Candidates& out) {
    const int k = p.m;
    const std::size_t masks = std::size_t{1} << m;
    std::vector<std::int64_t> psum(masks), qsum(masks);
    IntWeights ph;
    ph.m = m;
    ph.den = p.den;
    for (int i = 0; i < k; ++i) ph.num[i] = p.num[i];
    detail::subset_sums(ph, psum);

    for (std::size_t qi = q_begin; qi < q_perms.size(); ++qi) {
        ++out.stats.segment_pairs;
        const int l = q_perms[qi].front().m;
        const int zeros = m - l;
        for (Mask zset = 0; zset < (Mask{1} << k); ++zset) {
            if (popcount(zset) != zeros) continue;
            int slots[detail::kMaxDim];
            int s = 0;
            for (int i = 0; i < m; ++i) {
                if (i >= k || !((zset >> i) & 1U)) slots[s++] = i;
            }
            for (const auto& perm : q_perms[qi]) {
                ++out.stats.segment_placements;
                IntWeights qh;
                qh.m = m;
                qh.den = perm.den;
                for (int j = 0; j < l; ++j) qh.num[slots[j]] = perm.num[j];
                detail::subset_sums(qh, qsum);
                if (filter) {
                    detail::IntEchelon common(m);
                    for (std::size_t mask = 1; mask < masks && common.rank() < m - 1; ++mask) {
                        if (psum[mask] == ph.den && qsum[mask] == qh.den) common.add_mask(static_cast<Mask>(mask));
                    }
                    if (common.rank() < m - 1) continue;
                }
                for (std::size_t mask = 1; mask < masks; ++mask) {
                    const std::int64_t sp = psum[mask] - ph.den;
                    const std::int64_t sq = qsum[mask] - qh.den;
                    if (!((sp < 0 && sq > 0) || (sp > 0 && sq < 0))) continue;
                    // lambda' = [ (B - e) a + (d - A) b ] / (d B - e A)
                    IntWeights w;
                    w.m = m;
                    w.den = detail::sub(detail::mul(ph.den, qsum[mask]), detail::mul(qh.den, psum[mask]));
                    for (int i = 0; i < m; ++i) {
                        w.num[i] = detail::add(detail::mul(sq, ph.num[i]), detail::mul(-sp, qh.num[i]));
                    }
                    w.normalise();
                    ++out.stats.segment_candidates;
                    if (!w.all_positive()) continue;
                    out.add(w);
                }
            }
        }
    }
}

void accumulate(GenerationStats& into, const GenerationStats& from) {
    into.insert_candidates += from.insert_candidates;
    into.shift_candidates += from.shift_candidates;
    into.segment_pairs += from.segment_pairs;
    into.segment_placements += from.segment_placements;
    into.segment_candidates += from.segment_candidates;
}

LambdaSet generate_from(int m, const std::vector<std::vector<IntWeights>>& smaller, unsigned jobs, bool filter,
                        GenerationStats* stats_out) {
    std::vector<std::vector<std::vector<IntWeights>>> perms(static_cast<std::size_t>(m));
    for (int l = 1; l < m; ++l) {
        for (const auto& q : smaller[static_cast<std::size_t>(l)]) perms[static_cast<std::size_t>(l)].push_back(distinct_permutations(q));
    }
    struct Task {
        int kind;  // 0: insertion/shift, 1: segment
        int k;
        int l;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < smaller[static_cast<std::size_t>(m - 1)].size(); ++i) tasks.push_back({0, m - 1, 0, i});
    for (int k = 1; k < m; ++k) {
        for (int l = 1; l <= k; ++l) {
            if (k + l < m) continue;
            for (std::size_t i = 0; i < smaller[static_cast<std::size_t>(k)].size(); ++i) tasks.push_back({1, k, l, i});
        }
    }
    const unsigned workers = detail::worker_count(tasks.size(), jobs);
    std::vector<Candidates> local(workers);
    detail::parallel_for(tasks.size(), jobs, [&](std::size_t t, unsigned w) {
        const Task& task = tasks[t];
        const auto& base = smaller[static_cast<std::size_t>(task.k)][task.index];
        if (task.kind == 0) {
            insertion_and_shift(base, local[w]);
        } else {
            // Equal lengths: unordered pairs only, since swapping the ends gives the same segment.
            const std::size_t q_begin = task.l == task.k ? task.index : 0;
            segment_task(m, base, perms[static_cast<std::size_t>(task.l)], q_begin, filter, local[w]);
        }
    });
    GenerationStats stats;
    WeightSet all = std::move(local[0].set);
    accumulate(stats, local[0].stats);
    for (unsigned w = 1; w < workers; ++w) {
        all.insert(local[w].set.begin(), local[w].set.end());
        accumulate(stats, local[w].stats);
    }
    std::vector<IntWeights> distinct(all.begin(), all.end());
    std::vector<char> keep(distinct.size());
    detail::parallel_for(distinct.size(), jobs, [&](std::size_t i, unsigned) { keep[i] = detail::in_lambda(distinct[i]); });
    std::vector<IntWeights> admitted;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (keep[i]) admitted.push_back(distinct[i]);
    }
    stats.distinct_candidates = distinct.size();
    stats.admitted = admitted.size();
    stats.rejected = distinct.size() - admitted.size();
    if (stats_out) *stats_out = stats;
    return from_int_classes(m, std::move(admitted));
}

}  // namespace

LambdaSet generate_lambda(int m, LambdaStore* store, GenerateOptions options) {
    require(m >= 1, "generate_lambda: m must be positive");
    if (m > kMaxWeightLength) fail(ErrorCode::size_limit, "generate_lambda: m above 16");
    LambdaStore local;
    LambdaStore& cache = store ? *store : local;
    if (auto hit = cache.find(m)) {
        if (options.stats) *options.stats = GenerationStats{};
        return *hit;
    }
    LambdaSet result;
    if (m == 1) {
        IntWeights one;
        one.m = 1;
        one.num[0] = 1;
        result = from_int_classes(1, {one});
        if (options.stats) *options.stats = GenerationStats{0, 0, 0, 0, 0, 1, 0, 1};
    } else {
        std::vector<std::vector<IntWeights>> smaller(static_cast<std::size_t>(m));
        for (int k = 1; k < m; ++k) {
            smaller[static_cast<std::size_t>(k)] = to_int_classes(generate_lambda(k, &cache, {options.jobs, nullptr}));
        }
        result = generate_from(m, smaller, options.jobs, true, options.stats);
    }
    cache.put(result);
    return result;
}

namespace detail {

// Same operations with every segment placement kept (no common-row rank gate).
LambdaSet generate_lambda_unfiltered(int m, unsigned jobs) {
    LambdaStore cache;
    if (m == 1) return generate_lambda(1, &cache);
    std::vector<std::vector<IntWeights>> smaller(static_cast<std::size_t>(m));
    for (int k = 1; k < m; ++k) smaller[static_cast<std::size_t>(k)] = to_int_classes(generate_lambda(k, &cache, {jobs, nullptr}));
    return generate_from(m, smaller, jobs, false, nullptr);
}

}  // namespace detail

LambdaSet lambda_bruteforce_oracle(int m) {
    require(m >= 1, "lambda_bruteforce_oracle: m must be positive");
    if (m > kLambdaOracleLimit) fail(ErrorCode::size_limit, "lambda_bruteforce_oracle limited to m <= 5");
    // Row order never changes the solution of A x = 1, so strictly increasing row
    // sets cover every m x m system; repeated or dependent rows are never full rank.
    WeightSet found;
    std::vector<Mask> rows;
    const Mask top = full_mask(m);
    std::function<void(Mask, const detail::IntEchelon&)> walk = [&](Mask from, const detail::IntEchelon& e) {
        if (static_cast<int>(rows.size()) == m) {
            std::vector<Mask> cols(static_cast<std::size_t>(m), 0);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    if ((rows[static_cast<std::size_t>(i)] >> j) & 1U) cols[static_cast<std::size_t>(j)] |= Mask{1} << i;
                }
            }
            const auto s = detail::solve_zero_one_int(m, cols);
            ensure(s.failure == SolveFailure::none, "oracle: full-rank system without solution");
            IntWeights w;
            w.m = m;
            w.den = s.den;
            for (int j = 0; j < m; ++j) w.num[j] = s.num[j];
            if (w.all_positive() && detail::in_lambda(w)) {
                w.canonicalise();
                found.insert(w);
            }
            return;
        }
        for (Mask r = from; r <= top; ++r) {
            detail::IntEchelon next = e;
            if (!next.add_mask(r)) continue;
            rows.push_back(r);
            walk(r + 1, next);
            rows.pop_back();
        }
    };
    walk(1, detail::IntEchelon(m));
    return from_int_classes(m, std::vector<IntWeights>(found.begin(), found.end()));
}

namespace {

struct SubsetCounter {
    int m;
    int kmax;
    const std::vector<Mask>& rows;
    std::vector<std::vector<std::uint64_t>> binom;
    std::vector<std::uint64_t> counts;

    SubsetCounter(int m_, int kmax_, const std::vector<Mask>& rows_) : m(m_), kmax(kmax_), rows(rows_) {
        const std::size_t u = rows.size();
        binom.assign(u + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(kmax) + 1, 0));
        for (std::size_t a = 0; a <= u; ++a) {
            binom[a][0] = 1;
            for (int b = 1; b <= kmax && static_cast<std::size_t>(b) <= a; ++b) {
                const std::uint64_t x = binom[a - 1][static_cast<std::size_t>(b) - 1];
                const std::uint64_t y = binom[a - 1][static_cast<std::size_t>(b)];
                if (x + y < x) fail(ErrorCode::resource_limit, "subset count exceeds 64 bits");
                binom[a][static_cast<std::size_t>(b)] = x + y;
            }
        }
        counts.assign(static_cast<std::size_t>(kmax) + 1, 0);
    }

    // e spans the chosen rows (size `chosen`); rows with index >= next are still available.
    void walk(std::size_t next, int chosen, const detail::IntEchelon& e) {
        if (e.rank() == m) {
            // Every superset drawn from the remaining rows is also full rank.
            const std::size_t remaining = rows.size() - next;
            for (int j = 0; chosen + j <= kmax; ++j) {
                if (static_cast<std::size_t>(j) > remaining) break;
                counts[static_cast<std::size_t>(chosen + j)] += binom[remaining][static_cast<std::size_t>(j)];
            }
            return;
        }
        if (chosen == kmax) return;
        for (std::size_t i = next; i < rows.size(); ++i) {
            // Remaining picks must still be able to lift the rank to m.
            const int left = kmax - chosen;
            if (e.rank() + std::min<int>(left, static_cast<int>(rows.size() - i)) < m) return;
            detail::IntEchelon grown = e;
            grown.add_mask(rows[i]);
            walk(i + 1, chosen + 1, grown);
        }
    }
};

}  // namespace

std::vector<BigInt> full_rank_subset_counts(const UnificatorSet& u, int kmax) {
    require(kmax >= 0, "full_rank_subset_counts: negative k");
    const int m = static_cast<int>(u.lambda.size());
    if (m > kMaxWeightLength) fail(ErrorCode::size_limit, "subset counts: m above 16");
    SubsetCounter counter(m, kmax, u.rows);
    counter.walk(0, 0, detail::IntEchelon(m));
    std::vector<BigInt> out;
    out.reserve(counter.counts.size());
    for (auto c : counter.counts) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

BigInt count_full_rank_subsets(const UnificatorSet& u, int k) { return full_rank_subset_counts(u, k).back(); }

std::string lambda_set_to_json(const LambdaSet& set) {
    nlohmann::json j;
    j["m"] = set.m;
    j["version"] = kVersion;
    j["classes"] = nlohmann::json::array();
    for (const auto& c : set.classes) {
        j["classes"].push_back({{"vector", c.canonical.to_strings()}, {"multiplicity", c.multiplicity}});
    }
    return j.dump();
}

LambdaSet lambda_set_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        LambdaSet s;
        s.m = j.at("m").get<int>();
        for (const auto& c : j.at("classes")) {
            LambdaClass cls;
            cls.canonical = WeightVector::parse(c.at("vector").get<std::vector<std::string>>());
            cls.multiplicity = c.at("multiplicity").get<std::uint64_t>();
            require(cls.canonical.size() == static_cast<std::size_t>(s.m), "lambda class has wrong length");
            require(lambda_class_of(cls.canonical) == cls, "lambda class is not canonical");
            s.classes.push_back(std::move(cls));
        }
        s.normalise();
        return s;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse, std::string("lambda set JSON: ") + e.what());
    }
}

std::filesystem::path LambdaStore::file_for(int m) const {
    return *directory_ / ("lambda_m" + std::to_string(m) + "_v" + kVersion + ".json");
}

std::optional<LambdaSet> LambdaStore::find(int m) {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(m); it != memory_.end()) return it->second;
    if (!directory_) return std::nullopt;
    std::ifstream in(file_for(m));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const auto parsed = nlohmann::json::parse(buf.str());
        if (parsed.value("version", "") != kVersion || parsed.value("m", 0) != m) return std::nullopt;
        auto set = lambda_set_from_json(buf.str());
        memory_[m] = set;
        return set;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are regenerated
    }
}

void LambdaStore::put(const LambdaSet& set) {
    std::lock_guard lock(mutex_);
    memory_[set.m] = set;
    if (!directory_) return;
    std::error_code ec;
    std::filesystem::create_directories(*directory_, ec);
    const auto target = file_for(set.m);
    const auto temp = target.string() + ".tmp";
    {
        std::ofstream out(temp);
        if (!out) return;
        out << lambda_set_to_json(set) << '\n';
    }
    std::filesystem::rename(temp, target, ec);
}

}  // namespace mbc
