// Command-line front end: Whitney polynomials and chromatic polynomials of
// partially filled group expansions, the worked path table, verification
// sweeps across all computation routes, and the two identity checkers.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dowling/chromatic.hpp"
#include "dowling/json_io.hpp"
#include "dowling/matroid.hpp"
#include "dowling/whitney.hpp"

using namespace dowling;

namespace {

constexpr int kMaxEdgeCap = 40;

int default_edge_cap(int fallback) {
    const char* s = std::getenv("DOWLING_EDGE_CAP");
    if (s == nullptr) return fallback;
    try {
        const int v = std::stoi(s);
        if (v >= 1 && v <= kMaxEdgeCap) return v;
    } catch (...) {
    }
    throw ParseError("DOWLING_EDGE_CAP must be an integer in 1.." + std::to_string(kMaxEdgeCap));
}

std::vector<int> parse_int_list(const std::string& spec, const char* what) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (...) {
            throw ParseError(std::string("bad ") + what + " list: '" + spec + "'");
        }
    }
    if (out.empty()) throw ParseError(std::string("empty ") + what + " list");
    return out;
}

VertexSet parse_half_edges(const std::string& spec, int n) {
    if (spec == "all") return VertexSet::all(n);
    if (spec == "none" || spec.empty()) return VertexSet{};
    VertexSet x;
    for (int v : parse_int_list(spec, "half-edge")) {
        if (v < 1 || v > n) throw ParseError("half-edge vertex " + std::to_string(v) + " out of 1.." + std::to_string(n));
        if (x.contains(v)) throw ParseError("half-edge vertex " + std::to_string(v) + " listed twice");
        x.add(v);
    }
    return x;
}

std::string csv_coeffs(const std::vector<Int>& cs) {
    std::string out;
    for (size_t k = 0; k < cs.size(); ++k) {
        if (k > 0) out += ",";
        out += cs[k].str();
    }
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string graph;
    std::string half_edges = "none";
    std::string gamma = "symbolic";
    std::string index = "all";
    std::string format = "text";
    std::string route = "formula";
    std::string group;
    int edge_cap = 26;
    int threads = 1;
};

int run_compute(const ComputeArgs& args) {
    const SimpleGraph g = parse_graph_any(args.graph);
    const int n = g.vertex_count();
    const VertexSet x = parse_half_edges(args.half_edges, n);

    bool symbolic = true;
    long long gamma_value = 0;
    if (args.gamma != "symbolic") {
        try {
            gamma_value = std::stoll(args.gamma);
        } catch (...) {
            throw ParseError("--gamma needs an integer or 'symbolic'");
        }
        if (gamma_value < 1) throw ParseError("--gamma must be >= 1");
        symbolic = false;
    }

    bool all_indices = true;
    int index = 0;
    if (args.index != "all") {
        try {
            index = std::stoi(args.index);
        } catch (...) {
            throw ParseError("--i needs an index or 'all'");
        }
        if (index < 0 || index > n) throw ParseError("--i out of 0.." + std::to_string(n));
        all_indices = false;
    }

    if (args.route == "brute") {
        if (symbolic && args.group.empty())
            throw ParseError("--route brute needs a concrete --gamma or --group");
        FiniteGroup grp = args.group.empty() ? FiniteGroup::cyclic(static_cast<int>(gamma_value))
                                             : parse_group_any(args.group);
        if (!args.group.empty() && !symbolic && grp.order() != gamma_value)
            throw ParseError("--group order disagrees with --gamma");
        SweepOptions opts;
        opts.edge_cap = args.edge_cap;
        opts.threads = args.threads;
        const LambdaPoly chi = chromatic_subset_expansion(expand(g, x, grp), opts);
        if (args.format == "json") {
            json out = {{"graph", graph_to_json(g)},
                        {"X", x.members()},
                        {"gamma", grp.order()},
                        {"chi", poly_to_json(chi)}};
            std::cout << out.dump() << "\n";
        } else if (args.format == "csv") {
            std::cout << csv_coeffs(chi.coeffs()) << "\n";
        } else {
            std::cout << chi.str() << "\n";
        }
        return 0;
    }
    if (args.route != "formula") throw ParseError("--route must be formula or brute");

    if (symbolic) {
        std::vector<int> indices;
        if (all_indices)
            for (int i = 0; i <= n; ++i) indices.push_back(i);
        else
            indices.push_back(index);

        std::vector<GammaPoly> ws;
        for (int i : indices) ws.push_back(whitney_partial(g, x, i));

        if (args.format == "json") {
            if (!all_indices) {
                std::cout << whitney_record(g, x, indices[0], ws[0]).dump() << "\n";
            } else {
                json results = json::array();
                for (size_t k = 0; k < ws.size(); ++k)
                    results.push_back(whitney_record(g, x, indices[k], ws[k]));
                json out = {{"graph", graph_to_json(g)}, {"X", x.members()}, {"results", results}};
                std::cout << out.dump() << "\n";
            }
        } else if (args.format == "csv") {
            for (size_t k = 0; k < ws.size(); ++k)
                std::cout << indices[k] << "," << csv_coeffs(ws[k].coeffs()) << "\n";
        } else {
            if (!all_indices) {
                std::cout << ws[0].str() << "\n";
            } else {
                for (size_t k = 0; k < ws.size(); ++k)
                    std::cout << "w" << indices[k] << " = " << ws[k].str() << "\n";
            }
        }
        return 0;
    }

    // concrete gamma: one specialized Whitney number, or the chromatic polynomial
    if (!all_indices) {
        const Int value = whitney_partial(g, x, index).eval(gamma_value);
        if (args.format == "json") {
            json out = {{"graph", graph_to_json(g)},
                        {"X", x.members()},
                        {"i", index},
                        {"gamma", gamma_value},
                        {"value", int_to_json(value)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << value.str() << "\n";
        }
        return 0;
    }
    const BivariatePoly chibar = chromatic_partial(g, x);
    const LambdaPoly chi = signless(chibar.at_gamma(gamma_value), n);  // back to the signed polynomial
    if (args.format == "json") {
        json out = {{"graph", graph_to_json(g)},
                    {"X", x.members()},
                    {"gamma", gamma_value},
                    {"chi", poly_to_json(chi)}};
        std::cout << out.dump() << "\n";
    } else if (args.format == "csv") {
        std::cout << csv_coeffs(chi.coeffs()) << "\n";
    } else {
        std::cout << chi.str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- table-p2

struct TableRow {
    VertexSet x;
    std::vector<GammaPoly> w;
    std::vector<Int> at_one;
};

std::vector<TableRow> p2_table() {
    const SimpleGraph p2 = parse_graph("P2");
    const std::vector<VertexSet> xs = {VertexSet{},           VertexSet::of({1}),
                                       VertexSet::of({2}),    VertexSet::of({1, 2}),
                                       VertexSet::of({1, 3}), VertexSet::all(3)};
    std::vector<TableRow> rows;
    for (const VertexSet& x : xs) {
        TableRow row;
        row.x = x;
        for (int i = 0; i <= 3; ++i) {
            row.w.push_back(whitney_partial(p2, x, i));
            row.at_one.push_back(row.w.back().eval(1));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_table_p2(const std::string& format) {
    const std::vector<TableRow> rows = p2_table();
    if (format == "json") {
        json jrows = json::array();
        for (const TableRow& row : rows) {
            json w = json::array();
            json ones = json::array();
            for (int i = 0; i <= 3; ++i) {
                w.push_back(poly_to_json(row.w[static_cast<size_t>(i)]));
                ones.push_back(int_to_json(row.at_one[static_cast<size_t>(i)]));
            }
            jrows.push_back({{"X", row.x.members()}, {"w", w}, {"gamma1", ones}});
        }
        std::cout << json{{"graph", "P2"}, {"rows", jrows}}.dump() << "\n";
        return 0;
    }
    if (format == "csv") {
        for (const TableRow& row : rows) {
            std::string cells;
            for (int v : row.x.members()) cells += (cells.empty() ? "" : " ") + std::to_string(v);
            std::cout << cells;
            for (int i = 0; i <= 3; ++i) {
                std::string cs;
                for (const Int& c : row.w[static_cast<size_t>(i)].coeffs())
                    cs += (cs.empty() ? "" : " ") + c.str();
                std::cout << "," << (cs.empty() ? "0" : cs);
            }
            std::string ones;
            for (const Int& v : row.at_one) ones += (ones.empty() ? "" : " ") + v.str();
            std::cout << "," << ones << "\n";
        }
        return 0;
    }

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"X", "w0", "w1", "w2", "w3", "gamma=1"});
    for (const TableRow& row : rows) {
        std::vector<std::string> line = {row.x.str()};
        for (int i = 0; i <= 3; ++i) line.push_back(row.w[static_cast<size_t>(i)].str());
        std::string ones;
        for (size_t i = 0; i < row.at_one.size(); ++i)
            ones += (i > 0 ? ", " : "") + row.at_one[i].str();
        line.push_back(ones);
        cells.push_back(std::move(line));
    }
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& line : cells)
        for (size_t col = 0; col < line.size(); ++col) width[col] = std::max(width[col], line[col].size());
    for (size_t r = 0; r < cells.size(); ++r) {
        std::string out;
        for (size_t col = 0; col < cells[r].size(); ++col) {
            std::string cell = cells[r][col];
            cell.resize(width[col], ' ');
            out += cell;
            if (col + 1 < cells[r].size()) out += "  ";
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        std::cout << out << "\n";
        if (r == 0) {
            std::string rule;
            for (size_t col = 0; col < width.size(); ++col) {
                rule += std::string(width[col], '-');
                if (col + 1 < width.size()) rule += "  ";
            }
            std::cout << rule << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    int max_n = 3;
    std::string gammas = "1,2,3";
    int edge_cap = 22;
    unsigned long long seed = 12345;
    std::string graph;
    std::string groups;
    std::string out;
    int threads = 1;
};

int run_verify(const VerifyArgs& args) {
    if (args.max_n < 1) throw ParseError("--max-n must be >= 1");

    CrossCheckFamily family;
    if (!args.graph.empty()) {
        family.graphs.push_back(parse_graph_any(args.graph));
    } else {
        for (int n = 1; n <= args.max_n; ++n)
            for (const SimpleGraph& g : all_labeled_graphs(n)) family.graphs.push_back(g);
    }
    if (!args.groups.empty()) {
        std::stringstream ss(args.groups);
        std::string item;
        while (std::getline(ss, item, ',')) family.groups.push_back(parse_group_any(item));
        if (family.groups.empty()) throw ParseError("empty --groups list");
    } else {
        for (int gamma : parse_int_list(args.gammas, "gamma")) {
            if (gamma < 1) throw ParseError("--gammas entries must be >= 1");
            family.groups.push_back(FiniteGroup::cyclic(gamma));
        }
    }
    family.edge_cap = args.edge_cap;
    family.threads = args.threads;

    CrossCheckReport report = cross_check(family);

    // randomized rank-axiom spot checks on the fully filled expansions
    std::mt19937_64 rng(args.seed);
    long long axiom_checks = 0;
    for (const SimpleGraph& g : family.graphs) {
        for (const FiniteGroup& grp : family.groups) {
            const long long m = static_cast<long long>(grp.order()) * g.edge_count() + g.vertex_count();
            if (m > family.edge_cap) continue;
            const GainGraph phi = expand(g, g.vertices(), grp);
            std::uniform_int_distribution<EdgeSubset> pick(0, phi.full_edge_set());
            for (int trial = 0; trial < 60; ++trial) {
                const EdgeSubset s = pick(rng), t = pick(rng);
                const int rs = rank(phi, s), rt = rank(phi, t);
                const int ru = rank(phi, s | t), ri = rank(phi, s & t);
                ++axiom_checks;
                const bool mono = rs <= ru && rt <= ru && ri <= rs && ri <= rt;
                if (!mono || rs + rt < ru + ri) {
                    report.failures.push_back({g.str(), g.vertices().str(), grp.name(), grp.order(),
                                               "rank-axiom", "monotone+submodular",
                                               std::to_string(rs) + "," + std::to_string(rt),
                                               std::to_string(ru) + "," + std::to_string(ri)});
                }
            }
        }
    }

    json out = report_to_json(report);
    out["rank_axiom_checks"] = axiom_checks;
    const std::string text = out.dump();
    if (!args.out.empty()) {
        std::ofstream file(args.out);
        if (!file) throw ParseError("cannot write --out file '" + args.out + "'");
        file << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return report.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- identities

int run_identities(int stirling_max_n, int vandermonde_max_c) {
    if (stirling_max_n < 1) throw ParseError("--stirling-max-n must be >= 1");
    if (vandermonde_max_c < 0) throw ParseError("--vandermonde-max-c must be >= 0");
    for (int n = 1; n <= stirling_max_n; ++n)
        for (int i = 0; i <= n; ++i)
            if (!check_stirling_identity(n, i)) {
                std::cout << "stirling identity FAILS at n=" << n << " i=" << i << "\n";
                return 1;
            }
    std::cout << "stirling identity holds for all 1 <= n <= " << stirling_max_n << "\n";
    for (int c = 0; c <= vandermonde_max_c; ++c)
        for (int z = 0; z <= c; ++z)
            for (int m = 0; m <= c; ++m)
                if (!check_vandermonde(c, z, m)) {
                    std::cout << "vandermonde identity FAILS at c=" << c << " zeta=" << z
                              << " m=" << m << "\n";
                    return 1;
                }
    std::cout << "vandermonde identity holds for all 0 <= m <= c <= " << vandermonde_max_c << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Whitney numbers and chromatic polynomials of partially filled group expansions"};
    app.require_subcommand(1);

    ComputeArgs compute;
    VerifyArgs verify;
    std::string table_format = "text";
    int stirling_max_n = 10;
    int vandermonde_max_c = 8;

    try {
        compute.edge_cap = default_edge_cap(26);
        verify.edge_cap = default_edge_cap(22);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* c = app.add_subcommand("compute", "Whitney polynomials of one expansion");
    c->add_option("--graph", compute.graph, "graph spec: K4, P2, C5, E3, 'n=4; 1-2,3-4', or JSON")
        ->required();
    c->add_option("--half-edges", compute.half_edges, "all, none, or a vertex list like 1,3");
    c->add_option("--gamma", compute.gamma, "group order, or 'symbolic' (default)");
    c->add_option("--i", compute.index, "Whitney index, or 'all' (default)");
    c->add_option("--format", compute.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_option("--route", compute.route, "formula (default) or brute");
    c->add_option("--group", compute.group, "explicit group for --route brute, e.g. Z2xZ2");
    c->add_option("--edge-cap", compute.edge_cap, "subset-enumeration cap for --route brute")
        ->check(CLI::Range(1, kMaxEdgeCap));
    c->add_option("--threads", compute.threads, "workers for --route brute")->check(CLI::Range(1, 64));

    CLI::App* t = app.add_subcommand("table-p2", "Whitney numbers of the six expansions of the 2-edge path");
    t->add_option("--format", table_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* v = app.add_subcommand("verify", "cross-check all computation routes over a family");
    v->add_option("--max-n", verify.max_n, "largest base-graph order to enumerate");
    v->add_option("--gammas", verify.gammas, "comma list of group orders (default 1,2,3)");
    v->add_option("--edge-cap", verify.edge_cap, "skip expansions with more edges")
        ->check(CLI::Range(1, kMaxEdgeCap));
    v->add_option("--seed", verify.seed, "seed for randomized rank-axiom spot checks");
    v->add_option("--graph", verify.graph, "verify a single graph instead of an enumeration");
    v->add_option("--groups", verify.groups, "comma list of group specs, e.g. Z4,Z2xZ2");
    v->add_option("--out", verify.out, "write the JSON report here instead of stdout");
    v->add_option("--threads", verify.threads, "workers for brute-force sweeps")->check(CLI::Range(1, 64));

    CLI::App* id = app.add_subcommand("identities", "exhaustively check the two closed-form identities");
    id->add_option("--stirling-max-n", stirling_max_n, "check the Stirling identity for n up to this");
    id->add_option("--vandermonde-max-c", vandermonde_max_c, "check the convolution identity for c up to this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c)) return run_compute(compute);
        if (app.got_subcommand(t)) return run_table_p2(table_format);
        if (app.got_subcommand(v)) return run_verify(verify);
        return run_identities(stirling_max_n, vandermonde_max_c);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
