#include "mbc/io.hpp"

#include <istream>

#include <json.hpp>

#include "int_weights.hpp"

namespace mbc {

using json = nlohmann::json;

namespace {

json parse(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string(what) + ": " + e.what());
    }
}

// Runs `body` and maps JSON access errors (missing keys, wrong types) to parse errors.
template <class F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string(what) + ": " + e.what());
    }
}

json members_json(Mask s) {
    json a = json::array();
    for (int i = 0; i < kMaxPlayers; ++i) {
        if ((s >> i) & 1U) a.push_back(i + 1);
    }
    return a;
}

Mask mask_from_json(const json& a, int n) {
    Mask s = 0;
    for (const auto& p : a) {
        const int i = p.get<int>();
        require(i >= 1 && i <= n, "player index out of range");
        require(!((s >> (i - 1)) & 1U), "player listed twice in one set");
        s |= Mask{1} << (i - 1);
    }
    return s;
}

json rationals_json(const std::vector<Rational>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.str());
    return a;
}

std::vector<Rational> rationals_from_json(const json& a) {
    std::vector<Rational> out;
    for (const auto& x : a) out.push_back(Rational::parse(x.get<std::string>()));
    return out;
}

json collection_json(const Collection& c) {
    json sets = json::array();
    for (Mask s : c.sets()) sets.push_back(members_json(s));
    return {{"n", c.n()}, {"sets", sets}};
}

Collection collection_of(const json& j) {
    const int n = j.at("n").get<int>();
    require(n >= 1 && n <= kMaxPlayers, "collection n out of range");
    std::vector<Mask> sets;
    for (const auto& s : j.at("sets")) sets.push_back(mask_from_json(s, n));
    return Collection(n, std::move(sets));
}

json weights_json(const WeightVector& w) { return rationals_json(w.coords()); }

json mb_json(const MinimalBalanced& mb) {
    json j = collection_json(mb.collection);
    j["weights"] = weights_json(mb.weights);
    return j;
}

MinimalBalanced mb_of(const json& j) {
    auto c = collection_of(j);
    WeightVector w(rationals_from_json(j.at("weights")));
    require(w.size() == c.size(), "weights and sets differ in length");
    return {std::move(c), std::move(w)};
}

json big(const BigInt& x) { return to_string(x); }
BigInt big_of(const json& j) {
    const auto s = j.get<std::string>();
    BigInt x;
    if (s.empty() || x.set_str(s, 10) != 0) fail(ErrorCode::parse, "not a decimal integer: " + s);
    return x;
}

const char* orbit_class_name(OrbitClass k) {
    switch (k) {
        case OrbitClass::positive:
            return "positive";
        case OrbitClass::nowhere_zero:
            return "nowhere-zero";
        case OrbitClass::zero_weight:
            return "zero-weight";
        case OrbitClass::collapsed:
            return "collapsed";
    }
    return "collapsed";
}

}  // namespace

std::string collection_to_json(const Collection& c) { return collection_json(c).dump(); }

Collection collection_from_json(const std::string& text) {
    return guarded("collection JSON", [&] { return collection_of(parse(text, "collection JSON")); });
}

std::string matrix_to_json(const ZeroOneMatrix& m) {
    json cols = json::array();
    for (Mask c : m.columns()) cols.push_back(members_json(c));
    return json{{"n", m.n()}, {"columns", cols}}.dump();
}

ZeroOneMatrix matrix_from_json(const std::string& text) {
    return guarded("matrix JSON", [&] {
        const json j = parse(text, "matrix JSON");
        const int n = j.at("n").get<int>();
        require(n >= 1 && n <= kMaxPlayers, "matrix n out of range");
        std::vector<Mask> cols;
        for (const auto& c : j.at("columns")) cols.push_back(mask_from_json(c, n));
        return ZeroOneMatrix(n, std::move(cols));
    });
}

std::string weights_to_json(const WeightVector& w) { return weights_json(w).dump(); }

WeightVector weights_from_json(const std::string& text) {
    return guarded("weights JSON", [&] { return WeightVector(rationals_from_json(parse(text, "weights JSON"))); });
}

std::string certificate_to_json(const BalanceCertificate& c) {
    json j = {{"kind", to_string(c.kind)}};
    j["weights"] = c.weights ? weights_json(*c.weights) : json(nullptr);
    j["witness"] = c.witness ? collection_json(*c.witness) : json(nullptr);
    return j.dump();
}

BalanceCertificate certificate_from_json(const std::string& text) {
    return guarded("certificate JSON", [&] {
        const json j = parse(text, "certificate JSON");
        BalanceCertificate c;
        c.kind = balance_kind_from_string(j.at("kind").get<std::string>());
        if (!j.at("weights").is_null()) c.weights = WeightVector(rationals_from_json(j.at("weights")));
        if (!j.at("witness").is_null()) c.witness = collection_of(j.at("witness"));
        return c;
    });
}

std::string count_table_to_json(const CountTable& t) {
    json per = json::array();
    for (const auto& x : t.per_m) per.push_back(big(x));
    return json{{"n", t.n}, {"per_m", per}, {"total", big(t.total)}}.dump();
}

CountTable count_table_from_json(const std::string& text) {
    return guarded("count table JSON", [&] {
        const json j = parse(text, "count table JSON");
        CountTable t;
        t.n = j.at("n").get<int>();
        for (const auto& x : j.at("per_m")) t.per_m.push_back(big_of(x));
        t.total = big_of(j.at("total"));
        return t;
    });
}

std::string bound_report_to_json(const BoundReport& r) {
    return json{{"n", r.n},
                {"count", big(r.count)},
                {"lower", r.lower.str()},
                {"upper", r.upper.str()},
                {"lower_holds", r.lower_holds},
                {"upper_holds", r.upper_holds}}
        .dump();
}

BoundReport bound_report_from_json(const std::string& text) {
    return guarded("bound report JSON", [&] {
        const json j = parse(text, "bound report JSON");
        BoundReport r;
        r.n = j.at("n").get<int>();
        r.count = big_of(j.at("count"));
        r.lower = Rational::parse(j.at("lower").get<std::string>());
        r.upper = Rational::parse(j.at("upper").get<std::string>());
        r.lower_holds = j.at("lower_holds").get<bool>();
        r.upper_holds = j.at("upper_holds").get<bool>();
        return r;
    });
}

std::string orbit_summary_to_json(const OrbitSummary& s, bool full) {
    json pos = json::array();
    for (auto e : s.positive_members) pos.push_back(members_json(e.columns));
    json j = {{"base", json::parse(matrix_to_json(s.base))},
              {"base_weights", weights_json(s.base_weights)},
              {"size_nonzero", s.size_nonzero},
              {"size_positive", s.size_positive},
              {"unificator_count", s.unificator_count},
              {"collapsed", s.collapsed},
              {"positive_members", pos},
              {"nonzero_law", s.nonzero_law()},
              {"positive_law", s.positive_law()}};
    if (full) {
        json entries = json::array();
        for (const auto& e : s.entries) {
            json x = {{"inverted", members_json(e.element.columns)}, {"kind", orbit_class_name(e.kind)}};
            x["weights"] = e.weights ? weights_json(*e.weights) : json(nullptr);
            entries.push_back(std::move(x));
        }
        j["entries"] = std::move(entries);
    }
    return j.dump();
}

std::string game_to_json(const TUGame& g) { return json{{"n", g.n()}, {"v", rationals_json(g.values())}}.dump(); }

TUGame game_from_json(const std::string& text) {
    return guarded("game JSON", [&] {
        const json j = parse(text, "game JSON");
        return TUGame(j.at("n").get<int>(), rationals_from_json(j.at("v")));
    });
}

std::string core_report_to_json(const CoreReport& r) {
    json j = {{"nonempty", r.nonempty}};
    if (r.violating) {
        json v = mb_json(*r.violating);
        v["index"] = r.violation_index;
        j["violating"] = std::move(v);
    } else {
        j["violating"] = nullptr;
    }
    j["allocation"] = r.allocation ? rationals_json(*r.allocation) : json(nullptr);
    return j.dump();
}

CoreReport core_report_from_json(const std::string& text) {
    return guarded("core report JSON", [&] {
        const json j = parse(text, "core report JSON");
        CoreReport r;
        r.nonempty = j.at("nonempty").get<bool>();
        if (!j.at("violating").is_null()) {
            r.violating = mb_of(j.at("violating"));
            r.violation_index = j.at("violating").value("index", -1LL);
        }
        if (!j.at("allocation").is_null()) r.allocation = rationals_from_json(j.at("allocation"));
        return r;
    });
}

std::string minimal_balanced_to_json_line(const MinimalBalanced& mb) { return mb_json(mb).dump(); }

MinimalBalanced minimal_balanced_from_json_line(const std::string& line) {
    return guarded("collection line", [&] { return mb_of(parse(line, "collection line")); });
}

EnumerationResult read_collections(std::istream& in, int n) {
    EnumerationResult out(n);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto mb = minimal_balanced_from_json_line(line);
        require(mb.collection.n() == n, "collection line for a different n");
        require(mb.weights.all_positive() && sums_to_ones(n, mb.collection.sets(), mb.weights),
                "collection line with weights that are not a positive balancing");
        require(rank_zero_one(n, mb.collection.sets()) == mb.collection.size(),
                "collection line without full column rank");
        const auto w = detail::to_int_weights(mb.weights);
        out.add(mb.collection.sets(), std::span<const std::int64_t>(w.num.data(), mb.weights.size()), w.den);
    }
    out.finish();
    return out;
}

std::string reformat_json(const std::string& text, int indent) {
    if (indent <= 0) return text;
    return parse(text, "JSON").dump(indent);
}

}  // namespace mbc
