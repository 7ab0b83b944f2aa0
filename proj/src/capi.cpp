#include "mbc/mbc.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>

#include <json.hpp>

#include "mbc/counting.hpp"
#include "mbc/enumerate.hpp"
#include "mbc/games.hpp"
#include "mbc/io.hpp"
#include "mbc/orbits.hpp"
#include "mbc/verify.hpp"

using json = nlohmann::json;

struct mbc_context {
    unsigned jobs = 0;
    std::unique_ptr<mbc::LambdaStore> store;
    std::string error;
};

struct mbc_enumeration {
    mbc::EnumerationResult result;
};

struct mbc_game {
    mbc::TUGame game;
};

namespace {

// Thrown by the streaming sink when the caller's callback asks to stop.
struct CallbackStop {};

mbc_status status_of(mbc::ErrorCode code) {
    switch (code) {
        case mbc::ErrorCode::invalid_argument:
            return MBC_INVALID_ARGUMENT;
        case mbc::ErrorCode::size_limit:
            return MBC_SIZE_LIMIT;
        case mbc::ErrorCode::parse:
            return MBC_PARSE_ERROR;
        case mbc::ErrorCode::resource_limit:
            return MBC_RESOURCE_LIMIT;
        case mbc::ErrorCode::internal:
            return MBC_INTERNAL;
    }
    return MBC_INTERNAL;
}

template <class F>
mbc_status guarded(mbc_context* ctx, F&& body) {
    if (ctx == nullptr) return MBC_INVALID_ARGUMENT;
    ctx->error.clear();
    try {
        body();
        return MBC_OK;
    } catch (const mbc::Error& e) {
        ctx->error = e.what();
        return status_of(e.code());
    } catch (const CallbackStop&) {
        ctx->error = "stopped by callback";
        return MBC_RESOURCE_LIMIT;
    } catch (const std::bad_alloc&) {
        ctx->error = "out of memory";
        return MBC_RESOURCE_LIMIT;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return MBC_INTERNAL;
    } catch (...) {
        ctx->error = "unknown failure";
        return MBC_INTERNAL;
    }
}

void need(const void* p, const char* what) { mbc::require(p != nullptr, std::string(what) + " is null"); }

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** out, const std::string& s) {
    need(out, "output pointer");
    *out = dup(s);
}

std::string hex64(std::uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 15U];
    return s;
}

mbc::EnumerationMode mode_of(mbc_mode mode) {
    switch (mode) {
        case MBC_MODE_SEARCH:
            return mbc::EnumerationMode::search;
        case MBC_MODE_LAMBDA_ROUTE:
            return mbc::EnumerationMode::lambda_route;
    }
    mbc::fail(mbc::ErrorCode::invalid_argument, "unknown enumeration mode");
}

bool all_pairs(std::span<const mbc::Mask> sets) {
    for (mbc::Mask s : sets) {
        if (mbc::popcount(s) != 2) return false;
    }
    return true;
}

json summary_of(const mbc::EnumerationResult& r, std::uint64_t two_element) {
    json per = json::array();
    for (auto c : r.per_m_counts()) per.push_back(c);
    return {{"n", r.n()},
            {"total", r.total()},
            {"per_m", per},
            {"checksum", hex64(r.checksum())},
            {"digest", hex64(r.digest())},
            {"complete", r.complete()},
            {"progress", r.progress()},
            {"two_element", two_element}};
}

json table_json(const mbc::CountTable& t, const char* method) {
    json j = json::parse(mbc::count_table_to_json(t));
    j["method"] = method;
    return j;
}

// Counts (and optionally discards) every collection for n without keeping them.
mbc::EnumerationResult stream_count(mbc_context* ctx, int n, mbc::EnumerationMode mode, std::uint64_t* two_element) {
    mbc::EnumerateOptions o;
    o.jobs = ctx->jobs;
    o.store = ctx->store.get();
    o.sink = [&](const mbc::MinimalBalanced& mb) {
        if (two_element != nullptr && all_pairs(mb.collection.sets())) ++*two_element;
    };
    return mbc::enumerate_minimal(n, mode, o);
}

mbc::EnumerationResult enumerate_for_counts(mbc_context* ctx, int n) {
    if (n < mbc::kExhaustiveLimit) {
        mbc::EnumerateOptions o;
        o.jobs = ctx->jobs;
        o.store = ctx->store.get();
        return mbc::enumerate_minimal(n, mbc::EnumerationMode::lambda_route, o);
    }
    return stream_count(ctx, n, mbc::EnumerationMode::lambda_route, nullptr);
}

mbc::CountTable table_of(const mbc::EnumerationResult& r) {
    mbc::CountTable t;
    t.n = r.n();
    for (auto c : r.per_m_counts()) {
        t.per_m.emplace_back(static_cast<unsigned long>(c));
        t.total += t.per_m.back();
    }
    return t;
}

}  // namespace

extern "C" {

const char* mbc_version(void) { return mbc::kVersion; }

const char* mbc_status_name(mbc_status status) {
    switch (status) {
        case MBC_OK:
            return "ok";
        case MBC_INVALID_ARGUMENT:
            return "invalid-argument";
        case MBC_SIZE_LIMIT:
            return "size-limit";
        case MBC_PARSE_ERROR:
            return "parse-error";
        case MBC_RESOURCE_LIMIT:
            return "resource-limit";
        case MBC_INTERNAL:
            return "internal";
    }
    return "unknown";
}

mbc_status mbc_context_new(unsigned jobs, const char* cache_dir, mbc_context** out) {
    if (out == nullptr) return MBC_INVALID_ARGUMENT;
    *out = nullptr;
    try {
        auto ctx = std::make_unique<mbc_context>();
        ctx->jobs = jobs;
        std::optional<std::filesystem::path> dir;
        if (cache_dir != nullptr && *cache_dir != '\0') dir = std::filesystem::path(cache_dir);
        ctx->store = std::make_unique<mbc::LambdaStore>(std::move(dir));
        *out = ctx.release();
        return MBC_OK;
    } catch (const std::bad_alloc&) {
        return MBC_RESOURCE_LIMIT;
    } catch (...) {
        return MBC_INTERNAL;
    }
}

void mbc_context_free(mbc_context* ctx) { delete ctx; }

const char* mbc_last_error(const mbc_context* ctx) { return ctx == nullptr ? "null context" : ctx->error.c_str(); }

void mbc_string_free(char* s) { std::free(s); }

mbc_status mbc_count(mbc_context* ctx, int n, int m, const char* method, char** json_out) {
    return guarded(ctx, [&] {
        need(method, "method");
        const std::string how = method;
        mbc::require(n >= 1, "n must be positive");
        mbc::require(m >= 0 && m <= n, "m must lie in 0..n");
        if (how == "formula") {
            if (m == 0) {
                emit(json_out, table_json(mbc::count_minimal_balanced_table(n, ctx->store.get(), ctx->jobs), "formula").dump());
            } else {
                const auto c = mbc::count_minimal_balanced(n, m, ctx->store.get(), ctx->jobs);
                emit(json_out, json{{"n", n}, {"m", m}, {"method", how}, {"count", mbc::to_string(c)}}.dump());
            }
        } else if (how == "enumeration") {
            mbc::require(n <= mbc::kExhaustiveLimit, "enumeration is limited to n <= 7");
            const auto t = table_of(enumerate_for_counts(ctx, n));
            if (m == 0) {
                emit(json_out, table_json(t, "enumeration").dump());
            } else {
                emit(json_out, json{{"n", n}, {"m", m}, {"method", how}, {"count", mbc::to_string(t.per_m[m - 1])}}.dump());
            }
        } else if (how == "closed-form") {
            mbc::require(m >= 1, "closed-form needs m in 1..4");
            const auto c = mbc::closed_form_count(n, m);
            emit(json_out, json{{"n", n}, {"m", m}, {"method", how}, {"count", mbc::to_string(c)}}.dump());
        } else {
            mbc::fail(mbc::ErrorCode::invalid_argument, "unknown count method: " + how);
        }
    });
}

mbc_status mbc_bounds(mbc_context* ctx, int n, char** json_out) {
    return guarded(ctx, [&] {
        mbc::require(n >= 1 && n <= mbc::kExhaustiveLimit, "bounds are evaluated for n in 1..7");
        const auto t = mbc::count_minimal_balanced_table(n, ctx->store.get(), ctx->jobs);
        json j = json::parse(mbc::bound_report_to_json(mbc::total_count_bounds(n, t.total)));
        json est = json::array();
        for (int m = 1; m <= n; ++m) {
            est.push_back({{"m", m},
                           {"estimate", mbc::to_string(mbc::fixed_size_lower_estimate(n, m))},
                           {"count", mbc::to_string(t.per_m[m - 1])}});
        }
        j["size_estimates"] = std::move(est);
        emit(json_out, j.dump());
    });
}

mbc_status mbc_lambda(mbc_context* ctx, int m, int with_stats, char** json_out) {
    return guarded(ctx, [&] {
        mbc::GenerateOptions o;
        o.jobs = ctx->jobs;
        const auto set = mbc::generate_lambda(m, ctx->store.get(), o);
        json j = json::parse(mbc::lambda_set_to_json(set));
        if (with_stats != 0) {
            std::size_t lo = 0;
            std::size_t hi = 0;
            for (std::size_t i = 0; i < set.classes.size(); ++i) {
                const std::size_t u = mbc::unificators(set.classes[i].canonical).rows.size();
                lo = i == 0 ? u : std::min(lo, u);
                hi = std::max(hi, u);
            }
            j["summary"] = {{"classes", set.classes.size()},
                            {"vectors", mbc::to_string(set.vector_count())},
                            {"unificators_min", lo},
                            {"unificators_max", hi}};
        }
        emit(json_out, j.dump());
    });
}

mbc_status mbc_certificate(mbc_context* ctx, const char* collection_json, char** json_out) {
    return guarded(ctx, [&] {
        need(collection_json, "collection JSON");
        const auto c = mbc::collection_from_json(collection_json);
        emit(json_out, mbc::certificate_to_json(mbc::minimality_certificate(c)));
    });
}

mbc_status mbc_orbit(mbc_context* ctx, const char* matrix_json, int full, char** json_out) {
    return guarded(ctx, [&] {
        need(matrix_json, "matrix JSON");
        const auto m = mbc::matrix_from_json(matrix_json);
        emit(json_out, mbc::orbit_summary_to_json(mbc::orbit_summary(m, full != 0), full != 0));
    });
}

mbc_status mbc_two_element(mbc_context* ctx, int n, char** json_out) {
    return guarded(ctx, [&] {
        const auto c = mbc::enumerate_two_element(n);
        json shapes = json::array();
        for (const auto& [shape, count] : c.by_shape) shapes.push_back({{"shape", shape}, {"count", mbc::to_string(count)}});
        emit(json_out, json{{"n", n}, {"total", mbc::to_string(c.total)}, {"by_shape", shapes}}.dump());
    });
}

mbc_status mbc_enumerate(mbc_context* ctx, int n, mbc_mode mode, uint64_t max_collections, mbc_enumeration** out) {
    return guarded(ctx, [&] {
        need(out, "output pointer");
        *out = nullptr;
        mbc::EnumerateOptions o;
        o.jobs = ctx->jobs;
        o.store = ctx->store.get();
        o.max_collections = max_collections;
        auto e = std::make_unique<mbc_enumeration>(mbc_enumeration{mbc::enumerate_minimal(n, mode_of(mode), o)});
        *out = e.release();
    });
}

mbc_status mbc_enumerate_stream(mbc_context* ctx, int n, mbc_mode mode, mbc_line_callback callback, void* user,
                                char** summary_json_out) {
    return guarded(ctx, [&] {
        std::uint64_t pairs = 0;
        mbc::EnumerateOptions o;
        o.jobs = ctx->jobs;
        o.store = ctx->store.get();
        o.sink = [&](const mbc::MinimalBalanced& mb) {
            if (all_pairs(mb.collection.sets())) ++pairs;
            if (callback == nullptr) return;
            const std::string line = mbc::minimal_balanced_to_json_line(mb);
            if (callback(user, line.c_str()) != 0) throw CallbackStop{};
        };
        const auto r = mbc::enumerate_minimal(n, mode_of(mode), o);
        emit(summary_json_out, summary_of(r, pairs).dump());
    });
}

mbc_status mbc_enumeration_load(mbc_context* ctx, const char* path, int n, mbc_enumeration** out) {
    return guarded(ctx, [&] {
        need(path, "path");
        need(out, "output pointer");
        *out = nullptr;
        std::ifstream in(path);
        if (!in) mbc::fail(mbc::ErrorCode::invalid_argument, std::string("cannot open ") + path);
        auto e = std::make_unique<mbc_enumeration>(mbc_enumeration{mbc::read_collections(in, n)});
        *out = e.release();
    });
}

void mbc_enumeration_free(mbc_enumeration* e) { delete e; }

size_t mbc_enumeration_size(const mbc_enumeration* e) { return e == nullptr ? 0 : e->result.size(); }

mbc_status mbc_enumeration_summary(mbc_context* ctx, const mbc_enumeration* e, char** json_out) {
    return guarded(ctx, [&] {
        need(e, "enumeration");
        emit(json_out, summary_of(e->result, mbc::count_two_element(e->result)).dump());
    });
}

mbc_status mbc_enumeration_line(mbc_context* ctx, const mbc_enumeration* e, size_t index, char** json_out) {
    return guarded(ctx, [&] {
        need(e, "enumeration");
        mbc::require(index < e->result.size(), "collection index out of range");
        emit(json_out, mbc::minimal_balanced_to_json_line(e->result.at(index)));
    });
}

mbc_status mbc_game_from_json(mbc_context* ctx, const char* game_json, mbc_game** out) {
    return guarded(ctx, [&] {
        need(game_json, "game JSON");
        need(out, "output pointer");
        *out = nullptr;
        auto g = std::make_unique<mbc_game>(mbc_game{mbc::game_from_json(game_json)});
        *out = g.release();
    });
}

void mbc_game_free(mbc_game* g) { delete g; }

mbc_status mbc_core(mbc_context* ctx, const mbc_game* g, const mbc_enumeration* mbcs, char** json_out) {
    return guarded(ctx, [&] {
        need(g, "game");
        const int n = g->game.n();
        mbc::CoreReport r;
        if (mbcs != nullptr) {
            mbc::require(mbcs->result.n() == n, "collections and game differ in n");
            r = mbc::core_nonempty_bondareva(g->game, mbcs->result, ctx->jobs);
        } else {
            mbc::require(n < mbc::kExhaustiveLimit, "core without a collection file is limited to n <= 6");
            mbc::EnumerateOptions o;
            o.jobs = ctx->jobs;
            o.store = ctx->store.get();
            r = mbc::core_nonempty_bondareva(g->game, mbc::enumerate_minimal(n, mbc::EnumerationMode::lambda_route, o),
                                             ctx->jobs);
        }
        if (n <= mbc::kCoreLpLimit && mbcs == nullptr) {
            mbc::ensure(mbc::core_nonempty_lp(g->game).nonempty == r.nonempty, "core LP disagrees with the scan");
        }
        emit(json_out, mbc::core_report_to_json(r));
    });
}

mbc_status mbc_core_lp(mbc_context* ctx, const mbc_game* g, char** json_out) {
    return guarded(ctx, [&] {
        need(g, "game");
        emit(json_out, mbc::core_report_to_json(mbc::core_nonempty_lp(g->game)));
    });
}

mbc_status mbc_verify(mbc_context* ctx, const char* suite, int max_n, uint64_t samples, char** json_out, int* passed) {
    return guarded(ctx, [&] {
        need(suite, "suite");
        mbc::VerifyOptions o;
        o.max_n = max_n;
        o.samples = samples;
        o.jobs = ctx->jobs;
        o.store = ctx->store.get();
        const auto s = mbc::run_suite(suite, o);
        if (passed != nullptr) *passed = s.pass() ? 1 : 0;
        emit(json_out, mbc::verify_suite_to_json(s));
    });
}

const char* mbc_suite_names(void) {
    static const std::string names = [] {
        std::string s;
        for (const auto& n : mbc::suite_names()) s += (s.empty() ? "" : ",") + n;
        return s;
    }();
    return names.c_str();
}

mbc_status mbc_bench(mbc_context* ctx, int n, const char* route, char** json_out) {
    return guarded(ctx, [&] {
        need(route, "route");
        const std::string how = route;
        json j = {{"n", n}, {"route", how}};
        const auto start = std::chrono::steady_clock::now();
        if (how == "formula") {
            mbc::LambdaStore cold;  // times generation too, ignoring the context cache
            j["total"] = mbc::to_string(mbc::count_minimal_balanced_table(n, &cold, ctx->jobs).total);
        } else if (how == "search" || how == "lambda-route") {
            const auto mode = how == "search" ? mbc::EnumerationMode::search : mbc::EnumerationMode::lambda_route;
            mbc::LambdaStore cold;
            mbc::EnumerateOptions o;
            o.jobs = ctx->jobs;
            o.store = &cold;
            if (n >= mbc::kExhaustiveLimit) o.sink = [](const mbc::MinimalBalanced&) {};
            const auto r = mbc::enumerate_minimal(n, mode, o);
            j["total"] = std::to_string(r.total());
            j["checksum"] = hex64(r.checksum());
        } else {
            mbc::fail(mbc::ErrorCode::invalid_argument, "unknown bench route: " + how);
        }
        j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(json_out, j.dump());
    });
}

mbc_status mbc_reformat(mbc_context* ctx, const char* text, int indent, char** json_out) {
    return guarded(ctx, [&] {
        need(text, "JSON");
        emit(json_out, mbc::reformat_json(text, indent));
    });
}

}  // extern "C"
