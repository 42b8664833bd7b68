#include "pcov/io.hpp"

#include "pcov/errors.hpp"

#include <json.hpp>

namespace pcov::io {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_at(const std::string& text, size_t byte, const std::string& msg) {
    int line = 1;
    int col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw SyntaxError(line, col, msg);
}

Rational get_rational(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_string())
        throw SyntaxError(0, 0, "expected string-encoded number in field '" + key + "'");
    return parse_rational(j[key].get<std::string>());
}

long long get_int(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw SyntaxError(0, 0, "expected integer field '" + key + "'");
    return j[key].get<long long>();
}

std::vector<Rational> get_rational_array(const ordered_json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw SyntaxError(0, 0, "expected array field '" + key + "'");
    std::vector<Rational> out;
    for (const auto& item : j[key]) {
        if (!item.is_string())
            throw SyntaxError(0, 0, "expected string-encoded numbers in '" + key + "'");
        out.push_back(parse_rational(item.get<std::string>()));
    }
    return out;
}

PvcInstance parse_pvc(const ordered_json& j) {
    PvcInstance x;
    x.graph.n = static_cast<int>(get_int(j, "n"));
    x.vertex_weights = get_rational_array(j, "vertex_weights");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SyntaxError(0, 0, "expected array field 'edges'");
    for (const auto& e : j["edges"]) {
        x.graph.edges.push_back({static_cast<int>(get_int(e, "u")),
                                 static_cast<int>(get_int(e, "v")), Rational(0)});
        x.edge_profits.push_back(get_rational(e, "profit"));
        x.edge_groups.push_back(static_cast<int>(get_int(e, "group")));
    }
    x.thresholds = get_rational_array(j, "thresholds");
    validate_pvc(x);
    return x;
}

PecInstance parse_pec(const ordered_json& j) {
    PecInstance x;
    x.graph.n = static_cast<int>(get_int(j, "n"));
    if (!j.contains("vertex_groups") || !j["vertex_groups"].is_array())
        throw SyntaxError(0, 0, "expected array field 'vertex_groups'");
    for (const auto& g : j["vertex_groups"]) x.vertex_groups.push_back(g.get<int>());
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SyntaxError(0, 0, "expected array field 'edges'");
    for (const auto& e : j["edges"])
        x.graph.edges.push_back({static_cast<int>(get_int(e, "u")),
                                 static_cast<int>(get_int(e, "v")), get_rational(e, "cost")});
    if (!j.contains("requirements") || !j["requirements"].is_array())
        throw SyntaxError(0, 0, "expected array field 'requirements'");
    for (const auto& r : j["requirements"]) x.requirements.push_back(r.get<long long>());
    validate_pec(x);
    return x;
}

WppecInstance parse_wppec(const ordered_json& j) {
    WppecInstance x;
    x.graph.n = static_cast<int>(get_int(j, "n"));
    x.vertex_profits = get_rational_array(j, "vertex_profits");
    if (!j.contains("vertex_groups") || !j["vertex_groups"].is_array())
        throw SyntaxError(0, 0, "expected array field 'vertex_groups'");
    for (const auto& g : j["vertex_groups"]) x.vertex_groups.push_back(g.get<int>());
    if (!j.contains("edges") || !j["edges"].is_array())
        throw SyntaxError(0, 0, "expected array field 'edges'");
    for (const auto& e : j["edges"])
        x.graph.edges.push_back({static_cast<int>(get_int(e, "u")),
                                 static_cast<int>(get_int(e, "v")), get_rational(e, "cost")});
    x.thresholds = get_rational_array(j, "thresholds");
    x.budget = get_rational(j, "budget");
    validate_wppec(x);
    return x;
}

KnapsackInstance parse_knapsack(const ordered_json& j) {
    KnapsackInstance x;
    if (!j.contains("items") || !j["items"].is_array())
        throw SyntaxError(0, 0, "expected array field 'items'");
    for (const auto& item : j["items"])
        x.items.push_back({get_rational(item, "profit"), get_rational(item, "cost")});
    x.profit_target = get_rational(j, "profit_target");
    x.budget = get_rational(j, "budget");
    validate_knapsack(x);
    return x;
}

} // namespace

AnyInstance parse_instance(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_at(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    if (!j.is_object()) throw SyntaxError(1, 1, "instance file must be a JSON object");
    if (get_int(j, "format_version") != 1)
        throw SyntaxError(1, 1, "unsupported format_version");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw SyntaxError(1, 1, "missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "pvc") return parse_pvc(j);
    if (kind == "pec") return parse_pec(j);
    if (kind == "wppec") return parse_wppec(j);
    if (kind == "knapsack") return parse_knapsack(j);
    throw SyntaxError(1, 1, "unknown kind '" + kind + "'");
}

std::string serialize_instance(const PvcInstance& x) {
    ordered_json j;
    j["format_version"] = 1;
    j["kind"] = "pvc";
    j["n"] = x.graph.n;
    j["vertex_weights"] = ordered_json::array();
    for (const auto& w : x.vertex_weights) j["vertex_weights"].push_back(format_rational(w));
    j["edges"] = ordered_json::array();
    for (size_t e = 0; e < x.graph.edges.size(); ++e) {
        ordered_json je;
        je["u"] = x.graph.edges[e].u;
        je["v"] = x.graph.edges[e].v;
        je["profit"] = format_rational(x.edge_profits[e]);
        je["group"] = x.edge_groups[e];
        j["edges"].push_back(je);
    }
    j["thresholds"] = ordered_json::array();
    for (const auto& t : x.thresholds) j["thresholds"].push_back(format_rational(t));
    return j.dump();
}

std::string serialize_instance(const PecInstance& x) {
    ordered_json j;
    j["format_version"] = 1;
    j["kind"] = "pec";
    j["n"] = x.graph.n;
    j["vertex_groups"] = x.vertex_groups;
    j["edges"] = ordered_json::array();
    for (const auto& e : x.graph.edges) {
        ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["cost"] = format_rational(e.weight);
        j["edges"].push_back(je);
    }
    j["requirements"] = x.requirements;
    return j.dump();
}

std::string serialize_instance(const WppecInstance& x) {
    ordered_json j;
    j["format_version"] = 1;
    j["kind"] = "wppec";
    j["n"] = x.graph.n;
    j["vertex_profits"] = ordered_json::array();
    for (const auto& p : x.vertex_profits) j["vertex_profits"].push_back(format_rational(p));
    j["vertex_groups"] = x.vertex_groups;
    j["edges"] = ordered_json::array();
    for (const auto& e : x.graph.edges) {
        ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["cost"] = format_rational(e.weight);
        j["edges"].push_back(je);
    }
    j["thresholds"] = ordered_json::array();
    for (const auto& t : x.thresholds) j["thresholds"].push_back(format_rational(t));
    j["budget"] = format_rational(x.budget);
    return j.dump();
}

std::string serialize_instance(const KnapsackInstance& x) {
    ordered_json j;
    j["format_version"] = 1;
    j["kind"] = "knapsack";
    j["items"] = ordered_json::array();
    for (const auto& item : x.items) {
        ordered_json ji;
        ji["profit"] = format_rational(item.profit);
        ji["cost"] = format_rational(item.cost);
        j["items"].push_back(ji);
    }
    j["profit_target"] = format_rational(x.profit_target);
    j["budget"] = format_rational(x.budget);
    return j.dump();
}

std::string serialize_instance(const AnyInstance& x) {
    return std::visit([](const auto& inst) { return serialize_instance(inst); }, x);
}

uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t SplitMix64::below(uint64_t bound) { return next() % bound; }

bool SplitMix64::chance(const Rational& p) {
    if (p >= Rational(1)) {
        next(); // keep the draw count independent of p
        return true;
    }
    const unsigned __int128 draw = next();
    const unsigned __int128 num = static_cast<unsigned __int128>(p.numerator()) << 64;
    return draw * static_cast<unsigned __int128>(p.denominator()) < num;
}

PvcInstance generate_random_pvc(int n, const Rational& density, int omega,
                                long long weight_max, long long profit_max,
                                const Rational& threshold_fraction, uint64_t seed) {
    if (n < 2 || omega < 1 || weight_max < 1 || profit_max < 1)
        throw InvalidParameter("generate_random_pvc: need n >= 2, omega >= 1, maxima >= 1");
    if (density <= Rational(0) || density > Rational(1))
        throw InvalidParameter("generate_random_pvc: density must lie in (0, 1]");
    if (threshold_fraction <= Rational(0) || threshold_fraction > Rational(1))
        throw InvalidParameter("generate_random_pvc: threshold_fraction must lie in (0, 1]");

    SplitMix64 rng(seed);
    PvcInstance x;
    x.graph.n = n;
    for (int v = 0; v < n; ++v)
        x.vertex_weights.push_back(Rational(static_cast<long long>(rng.below(weight_max)) + 1));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.chance(density)) continue;
            x.graph.edges.push_back({u, v, Rational(0)});
            x.edge_profits.push_back(
                Rational(static_cast<long long>(rng.below(profit_max)) + 1));
            x.edge_groups.push_back(static_cast<int>(rng.below(omega)));
        }
    }
    std::vector<Rational> totals(omega, Rational(0));
    for (size_t e = 0; e < x.graph.edges.size(); ++e)
        totals[x.edge_groups[e]] += x.edge_profits[e];
    for (int g = 0; g < omega; ++g)
        x.thresholds.push_back(Rational(rational_ceil(threshold_fraction * totals[g])));
    validate_pvc(x);
    return x;
}

PecInstance generate_random_pec(int n, const Rational& density, int omega, long long cost_max,
                                const Rational& requirement_fraction, uint64_t seed) {
    if (n < 2 || omega < 1 || cost_max < 1)
        throw InvalidParameter("generate_random_pec: need n >= 2, omega >= 1, cost_max >= 1");
    if (density <= Rational(0) || density > Rational(1))
        throw InvalidParameter("generate_random_pec: density must lie in (0, 1]");
    if (requirement_fraction < Rational(0) || requirement_fraction > Rational(1))
        throw InvalidParameter("generate_random_pec: requirement_fraction must lie in [0, 1]");

    SplitMix64 rng(seed);
    PecInstance x;
    x.graph.n = n;
    for (int v = 0; v < n; ++v)
        x.vertex_groups.push_back(static_cast<int>(rng.below(omega)));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.chance(density)) continue;
            x.graph.edges.push_back(
                {u, v, Rational(static_cast<long long>(rng.below(cost_max)) + 1)});
        }
    }
    std::vector<long long> coverable(omega, 0);
    for (int v = 0; v < n; ++v)
        if (!is_isolated(x.graph, v)) ++coverable[x.vertex_groups[v]];
    for (int g = 0; g < omega; ++g)
        x.requirements.push_back(
            rational_floor(requirement_fraction * Rational(coverable[g])));
    validate_pec(x);
    return x;
}

} // namespace pcov::io
