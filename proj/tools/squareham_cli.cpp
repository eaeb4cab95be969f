#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "squareham/corpus.hpp"
#include "squareham/io.hpp"
#include "squareham/oracle.hpp"

namespace {

using namespace squareham;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::SemanticError, "cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::SemanticError, "cannot write '" + path + "'");
    out << content;
}

struct FactorChoice {
    std::string file;
    bool min_components = false;
    bool first_matching = false;
};

TwoFactor pick_factor(const PlaneMultigraph& map, const FactorChoice& choice) {
    if (!choice.file.empty())
        return validate_two_factor(map, parse_edge_list(read_file(choice.file)));
    if (choice.min_components) return min_component_two_factor(map);
    if (choice.first_matching) return complement_two_factor(map, first_perfect_matching(map));
    return complement_two_factor(map, maximum_matching(map));
}

Metrics theorem_metrics(const PlaneMultigraph& g, const TwoFactor& x, const PlaneMultigraph& j) {
    Metrics m;
    m.vertices = g.vertex_count();
    m.edges_g = g.edge_count();
    m.edges_j = j.edge_count();
    m.components_x = x.n();
    m.chords_added = j.edge_count() - g.edge_count();
    for (int v = 0; v < j.vertex_count(); ++v) m.max_degree_j = std::max(m.max_degree_j, j.degree(v));
    return m;
}

int run_construct(const std::string& in_path, const FactorChoice& choice,
                  const std::string& out_path, const std::string& cycle_path,
                  const std::string& report_path) {
    const PlaneMultigraph map = parse_pmg(read_file(in_path));
    const TwoFactor x = pick_factor(map, choice);
    const ConstructionResult result = construct_unchecked(map, x);

    if (!out_path.empty()) write_file(out_path, emit_pmg(result.j));
    if (!cycle_path.empty()) write_file(cycle_path, emit_cycle(result.hamilton_vertices));
    const std::string report = emit_report(result.metrics, result.report);
    if (!report_path.empty())
        write_file(report_path, report);
    else
        std::cout << report;
    if (!result.report.pass()) {
        for (const auto& note : result.report.notes) std::cerr << "verify: " << note << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const std::string& g_path, const std::string& j_path, const std::string& h_path,
               const FactorChoice& choice) {
    const PlaneMultigraph g = parse_pmg(read_file(g_path));
    const PlaneMultigraph j = parse_pmg(read_file(j_path));
    const std::vector<int> h = parse_cycle(read_file(h_path));
    const TwoFactor x = pick_factor(g, choice);

    const VerificationReport report = verify_theorem(g, x, j, h);
    std::cout << emit_report(theorem_metrics(g, x, j), report);
    if (!report.pass()) {
        for (const auto& note : report.notes) std::cerr << "verify: " << note << "\n";
        return 1;
    }
    return 0;
}

int run_gen(const std::string& name, bool random, int n, std::uint64_t seed, bool multi) {
    PlaneMultigraph map = random ? random_class_G(n, seed, multi) : named(name);
    std::cout << emit_pmg(map);
    return 0;
}

int run_oracle(const std::string& in_path, bool hamilton, bool matchings, bool bonds,
               bool cross) {
    const PlaneMultigraph map = parse_pmg(read_file(in_path));
    if (hamilton) {
        auto cycle = hamilton_search(map, {});
        if (cycle)
            std::cout << emit_cycle(*cycle);
        else
            std::cout << "none\n";
        return 0;
    }
    if (matchings) {
        const auto all = enumerate_perfect_matchings(map);
        std::cout << "perfect_matchings " << all.size() << "\n";
        for (const auto& m : all) {
            std::cout << "matching";
            for (int e : m.edges) std::cout << ' ' << e;
            std::cout << "\n";
        }
        return 0;
    }
    if (bonds) {
        const auto all = bonds_via_dual_cycles(map);
        std::cout << "bonds " << all.size() << "\n";
        for (const auto& b : all) {
            std::cout << "bond";
            for (int e : b) std::cout << ' ' << e;
            std::cout << "\n";
        }
        return 0;
    }
    if (cross) {
        const TwoFactor x = pick_factor(map, {});
        const CrossCheckReport report = cross_check(map, x);
        std::cout << "bonds_match_partitions " << (report.bonds_match_partitions ? "ok" : "FAIL")
                  << "\n";
        std::cout << "bonds_pass_is_bond " << (report.bonds_pass_is_bond ? "ok" : "FAIL") << "\n";
        std::cout << "x_bonds_even " << (report.x_bonds_even ? "ok" : "FAIL") << "\n";
        std::cout << "hamilton_agrees " << (report.hamilton_agrees ? "ok" : "FAIL") << "\n";
        for (const auto& note : report.notes) std::cerr << "cross-check: " << note << "\n";
        return report.pass() ? 0 : 1;
    }
    return 2;
}

int run_export(const std::string& in_path, const std::string& format,
               const std::vector<std::string>& marks) {
    const PlaneMultigraph map = parse_pmg(read_file(in_path));

    Highlight highlight;
    bool want_x = false, want_m = false, want_chords = false, want_h = false;
    for (const auto& mark : marks) {
        if (mark == "x") want_x = true;
        else if (mark == "m") want_m = true;
        else if (mark == "chords") want_chords = true;
        else if (mark == "h") want_h = true;
        else fail(ErrorCode::SemanticError, "unknown highlight '" + mark + "'");
    }

    const PlaneMultigraph* target = &map;
    ConstructionResult result;
    if (want_x || want_m || want_chords || want_h) {
        const TwoFactor x = pick_factor(map, {});
        if (want_chords || want_h) {
            result = construct(map, x);
            target = &result.j;
            if (want_chords)
                for (int e = map.edge_count(); e < result.j.edge_count(); ++e)
                    highlight.chord_edges.insert(e);
            if (want_h)
                highlight.h_edges.insert(result.hamilton_edges.begin(),
                                         result.hamilton_edges.end());
            if (want_m)
                highlight.m_edges.insert(result.ordering.m_edges.begin(),
                                         result.ordering.m_edges.end());
            if (want_x) highlight.x_edges.insert(x.edges.begin(), x.edges.end());
        } else {
            if (want_x) highlight.x_edges.insert(x.edges.begin(), x.edges.end());
            if (want_m) {
                const auto ordering = order_components(map, x);
                highlight.m_edges.insert(ordering.m_edges.begin(), ordering.m_edges.end());
            }
        }
    }

    std::cout << (format == "dot" ? export_dot(*target, highlight)
                                  : export_svg(*target, highlight));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamilton cycles in squares of cubic 2-connected plane multigraphs"};
    app.require_subcommand(1);

    // construct
    auto* construct_cmd =
        app.add_subcommand("construct", "Build J and a Hamilton cycle avoiding the matching");
    std::string in_path, out_path, cycle_path, report_path;
    FactorChoice choice;
    construct_cmd->add_option("input", in_path, "input .pmg")->required();
    auto* tf = construct_cmd->add_option("--two-factor", choice.file, "edge id list file");
    auto* mc = construct_cmd->add_flag("--min-components", choice.min_components,
                                       "2-factor with fewest components");
    auto* fm = construct_cmd->add_flag("--first-matching", choice.first_matching,
                                       "first perfect matching of the search");
    tf->excludes(mc)->excludes(fm);
    mc->excludes(fm);
    construct_cmd->add_option("--out", out_path, "write J as .pmg");
    construct_cmd->add_option("--cycle", cycle_path, "write the Hamilton cycle");
    construct_cmd->add_option("--report", report_path, "write the JSON report");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a constructed J and cycle against G");
    std::string g_path, j_path, h_path;
    FactorChoice verify_choice;
    verify_cmd->add_option("graph", g_path, "input graph .pmg")->required();
    verify_cmd->add_option("supergraph", j_path, "supergraph .pmg")->required();
    verify_cmd->add_option("cycle", h_path, "cycle file")->required();
    verify_cmd->add_option("--two-factor", verify_choice.file, "edge id list file");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Emit a corpus graph or a random instance");
    std::string gen_name;
    bool gen_random = false, gen_multi = false;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    gen_cmd->add_option("name", gen_name, "theta|k4|prism|cube|tutte");
    auto* rnd = gen_cmd->add_flag("--random", gen_random, "grow a random instance");
    gen_cmd->add_option("--n", gen_n, "target vertex count (even)");
    gen_cmd->add_option("--seed", gen_seed, "rng seed");
    gen_cmd->add_flag("--multi", gen_multi, "allow parallel edges (grow from theta)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth on small inputs");
    std::string oracle_path;
    bool o_ham = false, o_match = false, o_bonds = false, o_cross = false;
    oracle_cmd->add_option("input", oracle_path, "input .pmg")->required();
    auto* g1 = oracle_cmd->add_flag("--hamilton", o_ham, "search a Hamilton cycle");
    auto* g2 = oracle_cmd->add_flag("--matchings", o_match, "list perfect matchings");
    auto* g3 = oracle_cmd->add_flag("--bonds", o_bonds, "list bonds via dual cycles");
    auto* g4 = oracle_cmd->add_flag("--cross-check", o_cross, "compare engines on this input");
    g1->excludes(g2)->excludes(g3)->excludes(g4);
    g2->excludes(g3)->excludes(g4);
    g3->excludes(g4);

    // export
    auto* export_cmd = app.add_subcommand("export", "Draw the graph as dot or svg");
    std::string export_path, export_format;
    std::vector<std::string> export_marks;
    export_cmd->add_option("input", export_path, "input .pmg")->required();
    export_cmd->add_option("--format", export_format, "dot|svg")
        ->required()
        ->check(CLI::IsMember({"dot", "svg"}));
    export_cmd->add_option("--highlight", export_marks, "any of: x m chords h");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct_cmd->parsed())
            return run_construct(in_path, choice, out_path, cycle_path, report_path);
        if (verify_cmd->parsed()) return run_verify(g_path, j_path, h_path, verify_choice);
        if (gen_cmd->parsed()) {
            if (!gen_random && gen_name.empty())
                fail(ErrorCode::SemanticError, "need a name or --random");
            if (gen_random && !gen_name.empty())
                fail(ErrorCode::SemanticError, "--random excludes a name");
            (void)rnd;
            return run_gen(gen_name, gen_random, gen_n, gen_seed, gen_multi);
        }
        if (oracle_cmd->parsed()) {
            if (!(o_ham || o_match || o_bonds || o_cross))
                fail(ErrorCode::SemanticError, "pick one oracle mode");
            return run_oracle(oracle_path, o_ham, o_match, o_bonds, o_cross);
        }
        if (export_cmd->parsed()) return run_export(export_path, export_format, export_marks);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::VerificationFailed ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
