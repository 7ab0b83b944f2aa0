// Command-line front end over the C API. Structured output is one JSON document
// on stdout; human tables (--pretty) and timings go to stderr.
//
// Exit status: 0 ok, 1 verification mismatch or failed cross-check,
// 2 usage or input error, 3 resource or size limit.

#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbc/mbc.h"

using json = nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Failure {
    int code;
    std::string message;
};

int exit_code_of(mbc_status st) {
    switch (st) {
        case MBC_OK:
            return 0;
        case MBC_INVALID_ARGUMENT:
        case MBC_PARSE_ERROR:
            return kExitUsage;
        case MBC_SIZE_LIMIT:
        case MBC_RESOURCE_LIMIT:
            return kExitResource;
        case MBC_INTERNAL:
            return kExitMismatch;
    }
    return kExitMismatch;
}

class Session {
public:
    Session(unsigned jobs, const std::string& cache) {
        if (mbc_context_new(jobs, cache.empty() ? nullptr : cache.c_str(), &ctx_) != MBC_OK) {
            throw Failure{kExitResource, "cannot create context"};
        }
    }
    ~Session() { mbc_context_free(ctx_); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    mbc_context* get() const { return ctx_; }

    void check(mbc_status st) const {
        if (st != MBC_OK) throw Failure{exit_code_of(st), std::string(mbc_status_name(st)) + ": " + mbc_last_error(ctx_)};
    }

    // Runs f(&out) and parses the returned string.
    template <class F>
    json call(F&& f) const {
        char* out = nullptr;
        check(f(&out));
        std::string s = out;
        mbc_string_free(out);
        return json::parse(s);
    }

private:
    mbc_context* ctx_ = nullptr;
};

struct Globals {
    unsigned jobs = 0;
    std::string cache = "./cache";
    bool pretty = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print(const json& j) { std::cout << j.dump() << '\n'; }

void pretty_json(const Globals& g, const json& j) {
    if (g.pretty) std::cerr << j.dump(2) << '\n';
}

// Rows of "n,m,B", m ascending.
std::vector<std::array<std::string, 3>> count_rows(const json& j) {
    std::vector<std::array<std::string, 3>> rows;
    const std::string n = std::to_string(j["n"].get<int>());
    if (j.contains("per_m")) {
        int m = 1;
        for (const auto& c : j["per_m"]) rows.push_back({n, std::to_string(m++), c.get<std::string>()});
    } else {
        rows.push_back({n, std::to_string(j["m"].get<int>()), j["count"].get<std::string>()});
    }
    return rows;
}

void pretty_counts(const json& j) {
    std::cerr << std::setw(4) << "n" << std::setw(4) << "m" << "  B\n";
    for (const auto& r : count_rows(j)) std::cerr << std::setw(4) << r[0] << std::setw(4) << r[1] << "  " << r[2] << '\n';
    if (j.contains("total")) std::cerr << "total " << j["total"].get<std::string>() << '\n';
}

mbc_mode mode_of(const std::string& s) { return s == "search" ? MBC_MODE_SEARCH : MBC_MODE_LAMBDA_ROUTE; }

int stream_to_file(void* user, const char* line) {
    auto* f = static_cast<std::ofstream*>(user);
    *f << line << '\n';
    return f->good() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal balanced collections: counting, enumeration, and verification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--jobs", g.jobs, "Worker threads (0 = available parallelism)");
    app.add_option("--cache", g.cache, "Directory for generated weight-class sets (empty disables)");
    app.add_flag("--pretty", g.pretty, "Human-readable tables on stderr");
    app.set_version_flag("--version", mbc_version());

    auto* count = app.add_subcommand("count", "Count minimal balanced collections");
    int count_n = 0;
    int count_m = 0;
    std::string method = "formula";
    std::string format = "json";
    bool bounds = false;
    count->add_option("--n", count_n, "Number of players")->required()->check(CLI::Range(1, 16));
    count->add_option("--m", count_m, "Collection size (0 = all sizes)")->check(CLI::Range(0, 16));
    count->add_option("--method", method)->check(CLI::IsMember({"formula", "enumeration", "closed-form"}));
    count->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    count->add_flag("--bounds", bounds, "Report the growth bounds on the total instead");

    auto* enumerate = app.add_subcommand("enumerate", "List every minimal balanced collection");
    int enum_n = 0;
    std::string mode = "lambda-route";
    std::string out_path;
    bool two_element = false;
    std::uint64_t max_collections = 0;
    enumerate->add_option("--n", enum_n, "Number of players")->required()->check(CLI::Range(1, 16));
    enumerate->add_option("--mode", mode)->check(CLI::IsMember({"search", "lambda-route"}));
    enumerate->add_option("--out", out_path, "JSON-lines output, one collection with weights per line");
    enumerate->add_flag("--two-element", two_element, "Add the census of collections of 2-element coalitions");
    enumerate->add_option("--max-collections", max_collections, "Abort after this many (0 = no limit)");

    auto* lambda = app.add_subcommand("lambda", "Weight classes of minimal balanced matrices of size m");
    int lambda_m = 0;
    bool stats = false;
    lambda->add_option("--m", lambda_m)->required()->check(CLI::Range(1, 16));
    lambda->add_flag("--stats", stats, "Add class and unificator summary");

    auto* orbit = app.add_subcommand("orbit", "Inversion orbit of a 0-1 matrix");
    std::string matrix_path = "-";
    bool full = false;
    orbit->add_option("matrix", matrix_path, "Matrix JSON file ({\"n\",\"columns\"}; - for stdin)");
    orbit->add_flag("--full", full, "Include the classification of every orbit element");

    auto* core = app.add_subcommand("core", "Decide core nonemptiness of a TU game");
    std::string game_path;
    std::string mbc_path;
    std::string core_method = "bondareva";
    core->add_option("--game", game_path, "Game JSON file")->required();
    core->add_option("--mbc", mbc_path, "JSON-lines collections for the game's n");
    core->add_option("--method", core_method)->check(CLI::IsMember({"bondareva", "lp"}));

    auto* verify = app.add_subcommand("verify", "Recompute reference values and diff against golden data");
    std::string suite = "all";
    int max_n = 0;
    std::uint64_t samples = 0;
    verify->add_option("--suite", suite, std::string("all or one of ") + mbc_suite_names());
    verify->add_option("--max-n", max_n, "Scope (0 = suite default)");
    verify->add_option("--samples", samples, "Random trials (0 = suite default)");

    auto* bench = app.add_subcommand("bench", "Wall times per (n, route); timings on stderr");
    std::vector<int> bench_n = {3, 4, 5, 6};
    std::vector<std::string> routes = {"formula", "search", "lambda-route"};
    bench->add_option("--n", bench_n)->check(CLI::Range(1, 7));
    bench->add_option("--route", routes)->check(CLI::IsMember({"formula", "search", "lambda-route"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Session s(g.jobs, g.cache);
        auto* ctx = s.get();

        if (count->parsed()) {
            if (bounds) {
                const auto j = s.call([&](char** o) { return mbc_bounds(ctx, count_n, o); });
                print(j);
                pretty_json(g, j);
                return j["lower_holds"].get<bool>() && j["upper_holds"].get<bool>() ? 0 : kExitMismatch;
            }
            const auto j = s.call([&](char** o) { return mbc_count(ctx, count_n, count_m, method.c_str(), o); });
            if (format == "csv") {
                std::cout << "n,m,B\n";
                for (const auto& r : count_rows(j)) std::cout << r[0] << ',' << r[1] << ',' << r[2] << '\n';
            } else {
                print(j);
            }
            if (g.pretty) pretty_counts(j);
            return 0;
        }

        if (enumerate->parsed()) {
            json summary;
            const bool stream = enum_n >= 7 && max_collections == 0;
            if (stream) {
                std::ofstream file;
                if (!out_path.empty()) {
                    file.open(out_path);
                    if (!file) throw Failure{kExitUsage, "cannot write " + out_path};
                }
                summary = s.call([&](char** o) {
                    return out_path.empty() ? mbc_enumerate_stream(ctx, enum_n, mode_of(mode), nullptr, nullptr, o)
                                            : mbc_enumerate_stream(ctx, enum_n, mode_of(mode), stream_to_file, &file, o);
                });
            } else {
                mbc_enumeration* e = nullptr;
                s.check(mbc_enumerate(ctx, enum_n, mode_of(mode), max_collections, &e));
                std::unique_ptr<mbc_enumeration, decltype(&mbc_enumeration_free)> owned(e, mbc_enumeration_free);
                summary = s.call([&](char** o) { return mbc_enumeration_summary(ctx, e, o); });
                if (!out_path.empty()) {
                    std::ofstream file(out_path);
                    if (!file) throw Failure{kExitUsage, "cannot write " + out_path};
                    for (std::size_t i = 0; i < mbc_enumeration_size(e); ++i) {
                        char* line = nullptr;
                        s.check(mbc_enumeration_line(ctx, e, i, &line));
                        file << line << '\n';
                        mbc_string_free(line);
                    }
                }
            }
            summary["mode"] = mode;
            if (!summary["complete"].get<bool>()) {
                print(summary);
                pretty_json(g, summary);
                std::cerr << "enumeration stopped at the collection limit\n";
                return kExitResource;
            }

            // Cross-checks: totals against the counting formula, 2-element census against its closed count.
            int rc = 0;
            const auto formula = s.call([&](char** o) { return mbc_count(ctx, enum_n, 0, "formula", o); });
            json per = json::array();
            for (const auto& c : summary["per_m"]) per.push_back(std::to_string(c.get<std::uint64_t>()));
            summary["formula_agrees"] = per == formula["per_m"];
            if (!summary["formula_agrees"].get<bool>()) rc = kExitMismatch;
            if (two_element) {
                const auto census = s.call([&](char** o) { return mbc_two_element(ctx, enum_n, o); });
                summary["two_element_census"] = census;
                if (census["total"].get<std::string>() != std::to_string(summary["two_element"].get<std::uint64_t>())) {
                    rc = kExitMismatch;
                }
            } else {
                summary.erase("two_element");
            }
            print(summary);
            pretty_json(g, summary);
            return rc;
        }

        if (lambda->parsed()) {
            const auto j = s.call([&](char** o) { return mbc_lambda(ctx, lambda_m, stats ? 1 : 0, o); });
            print(j);
            pretty_json(g, j);
            return 0;
        }

        if (orbit->parsed()) {
            const std::string text = read_input(matrix_path);
            const auto j = s.call([&](char** o) { return mbc_orbit(ctx, text.c_str(), full ? 1 : 0, o); });
            print(j);
            pretty_json(g, j);
            return 0;
        }

        if (core->parsed()) {
            const std::string text = read_input(game_path);
            mbc_game* game = nullptr;
            s.check(mbc_game_from_json(ctx, text.c_str(), &game));
            std::unique_ptr<mbc_game, decltype(&mbc_game_free)> owned_game(game, mbc_game_free);
            json j;
            if (core_method == "lp") {
                j = s.call([&](char** o) { return mbc_core_lp(ctx, game, o); });
            } else if (!mbc_path.empty()) {
                const int n = json::parse(text)["n"].get<int>();
                mbc_enumeration* e = nullptr;
                s.check(mbc_enumeration_load(ctx, mbc_path.c_str(), n, &e));
                std::unique_ptr<mbc_enumeration, decltype(&mbc_enumeration_free)> owned(e, mbc_enumeration_free);
                j = s.call([&](char** o) { return mbc_core(ctx, game, e, o); });
            } else {
                j = s.call([&](char** o) { return mbc_core(ctx, game, nullptr, o); });
            }
            print(j);
            pretty_json(g, j);
            return 0;
        }

        if (verify->parsed()) {
            std::vector<std::string> names;
            if (suite == "all") {
                std::stringstream ss(mbc_suite_names());
                for (std::string name; std::getline(ss, name, ',');) names.push_back(name);
            } else {
                names.push_back(suite);
            }
            json suites = json::array();
            bool all = true;
            for (const auto& name : names) {
                int passed = 0;
                const auto j =
                    s.call([&](char** o) { return mbc_verify(ctx, name.c_str(), max_n, samples, o, &passed); });
                all = all && passed == 1;
                if (g.pretty) {
                    std::cerr << std::left << std::setw(12) << name << std::right << " scope " << j["scope"]
                              << "  checks " << j["checks"] << "  " << (passed ? "pass" : "FAIL") << '\n';
                    for (const auto& d : j["diffs"]) {
                        std::cerr << "    " << d["key"].get<std::string>() << ": expected "
                                  << d["expected"].get<std::string>() << ", computed "
                                  << d["computed"].get<std::string>() << '\n';
                    }
                }
                suites.push_back(j);
            }
            print(names.size() == 1 ? suites[0] : json{{"outcome", all ? "pass" : "fail"}, {"suites", suites}});
            return all ? 0 : kExitMismatch;
        }

        if (bench->parsed()) {
            json results = json::array();
            for (int n : bench_n) {
                for (const auto& route : routes) {
                    auto j = s.call([&](char** o) { return mbc_bench(ctx, n, route.c_str(), o); });
                    std::cerr << json{{"n", n}, {"route", route}, {"seconds", j["seconds"]}}.dump() << '\n';
                    j.erase("seconds");
                    results.push_back(std::move(j));
                }
            }
            print(results);
            return 0;
        }
    } catch (const Failure& f) {
        std::cerr << "mbc: " << f.message << '\n';
        return f.code;
    } catch (const json::exception& e) {
        std::cerr << "mbc: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "mbc: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
