#include "dowling/json_io.hpp"

#include <cctype>

namespace dowling {

namespace {

const Int kJsonSafe = (Int(1) << 53) - 1;  // largest integer a double holds exactly

template <typename Var>
json poly_json(const Poly<Var>& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return {{"var", Var::json_name}, {"coeffs", coeffs}};
}

template <typename Var>
Poly<Var> poly_from(const json& j) {
    if (!j.is_object() || j.at("var") != Var::json_name)
        throw ParseError(std::string("expected a polynomial in ") + Var::json_name);
    std::vector<Int> coeffs;
    for (const json& c : j.at("coeffs")) coeffs.push_back(int_from_json(c));
    return Poly<Var>::from_coeffs(std::move(coeffs));
}

}  // namespace

json int_to_json(const Int& v) {
    if (v <= kJsonSafe && v >= -kJsonSafe) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    throw ParseError("expected an integer or a decimal string");
}

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const json& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return SimpleGraph(n, std::move(edges));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
}

json group_to_json(const FiniteGroup& g) {
    return {{"order", g.order()}, {"table", g.table_rows()}};
}

FiniteGroup group_from_json(const json& j) {
    try {
        const auto table = j.at("table").get<std::vector<std::vector<int>>>();
        const FiniteGroup g = FiniteGroup::from_table(table);
        if (j.contains("order") && j.at("order").get<int>() != g.order())
            throw ParseError("group JSON order disagrees with its table");
        return g;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad group JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad group JSON: ") + e.what());
    }
}

namespace {

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

}  // namespace

SimpleGraph parse_graph_any(const std::string& spec) {
    if (!looks_like_json(spec)) return parse_graph(spec);
    json j = json::parse(spec, nullptr, false);
    if (j.is_discarded()) throw ParseError("graph JSON does not parse");
    return graph_from_json(j);
}

FiniteGroup parse_group_any(const std::string& spec) {
    if (!looks_like_json(spec)) return parse_group(spec);
    json j = json::parse(spec, nullptr, false);
    if (j.is_discarded()) throw ParseError("group JSON does not parse");
    return group_from_json(j);
}

json poly_to_json(const LambdaPoly& p) { return poly_json(p); }
json poly_to_json(const GammaPoly& p) { return poly_json(p); }

LambdaPoly lambda_poly_from_json(const json& j) { return poly_from<LambdaVar>(j); }
GammaPoly gamma_poly_from_json(const json& j) { return poly_from<GammaVar>(j); }

json bivariate_to_json(const BivariatePoly& p) {
    const int n = p.lambda_degree();
    json coeffs = json::array();
    for (int i = 0; i <= n; ++i) coeffs.push_back(poly_to_json(p.lambda_coeff(n - i)));
    return {{"n", n}, {"lambda_coeffs", coeffs}};
}

BivariatePoly bivariate_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const json& coeffs = j.at("lambda_coeffs");
    if (static_cast<int>(coeffs.size()) != n + 1)
        throw ParseError("bivariate JSON needs n+1 lambda coefficients");
    BivariatePoly out;
    for (int i = 0; i <= n; ++i)
        out += BivariatePoly::lambda_monomial(gamma_poly_from_json(coeffs[static_cast<size_t>(i)]), n - i);
    return out;
}

json whitney_record(const SimpleGraph& g, VertexSet x, int i, const GammaPoly& w) {
    json coeffs = json::array();
    for (const Int& c : w.coeffs()) coeffs.push_back(int_to_json(c));
    return {{"graph", graph_to_json(g)}, {"X", x.members()},         {"i", i},
            {"gamma_coeffs", coeffs},    {"degree", w.degree()},     {"zero", w.is_zero()}};
}

json report_to_json(const CrossCheckReport& r) {
    json failures = json::array();
    for (const CrossCheckFailure& f : r.failures)
        failures.push_back({{"graph", f.graph},
                            {"X", f.x},
                            {"group", f.group},
                            {"gamma", f.gamma},
                            {"route_a", f.route_a},
                            {"route_b", f.route_b},
                            {"value_a", f.value_a},
                            {"value_b", f.value_b}});
    return {{"instances", r.instances}, {"passed", r.passed}, {"skipped", r.skipped}, {"failures", failures}};
}

}  // namespace dowling
