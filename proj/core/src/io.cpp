#include "squareham/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace squareham {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size() || value < 0) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        fail(ErrorCode::SyntaxError,
             "line " + std::to_string(line) + ": expected a non-negative integer, got '" + tok + "'");
    }
}

} // namespace

PlaneMultigraph parse_pmg(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens != std::vector<std::string>{"pmg", "1"})
        fail(ErrorCode::SyntaxError, "line 1: missing 'pmg 1' header");

    std::map<int, std::vector<int>> vertices;
    std::map<int, std::array<int, 2>> edges;
    int outer_dart = -1;
    bool outer_seen = false;

    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, tokens] = lines[i];
        if (tokens[0] == "vertex") {
            if (tokens.size() < 3 || tokens[2] != "darts")
                fail(ErrorCode::SyntaxError,
                     "line " + std::to_string(number) + ": expected 'vertex <id> darts <d...>'");
            int vid = parse_int(tokens[1], number);
            if (vertices.count(vid))
                fail(ErrorCode::SemanticError, "vertex " + std::to_string(vid) + " repeated");
            std::vector<int> darts;
            for (size_t k = 3; k < tokens.size(); ++k)
                darts.push_back(parse_int(tokens[k], number));
            vertices[vid] = std::move(darts);
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 4)
                fail(ErrorCode::SyntaxError,
                     "line " + std::to_string(number) + ": expected 'edge <id> <dartA> <dartB>'");
            int eid = parse_int(tokens[1], number);
            if (edges.count(eid))
                fail(ErrorCode::SemanticError, "edge " + std::to_string(eid) + " repeated");
            edges[eid] = {parse_int(tokens[2], number), parse_int(tokens[3], number)};
        } else if (tokens[0] == "outer") {
            if (tokens.size() != 2)
                fail(ErrorCode::SyntaxError,
                     "line " + std::to_string(number) + ": expected 'outer <dart>'");
            if (outer_seen)
                fail(ErrorCode::SyntaxError,
                     "line " + std::to_string(number) + ": outer dart given twice");
            outer_dart = parse_int(tokens[1], number);
            outer_seen = true;
        } else {
            fail(ErrorCode::SyntaxError,
                 "line " + std::to_string(number) + ": unknown keyword '" + tokens[0] + "'");
        }
    }
    if (!outer_seen) fail(ErrorCode::SyntaxError, "missing 'outer' line");

    std::vector<std::vector<int>> rotations(vertices.size());
    for (auto& [vid, darts] : vertices) {
        if (vid >= static_cast<int>(vertices.size()))
            fail(ErrorCode::SemanticError, "vertex ids are not dense");
        rotations[vid] = std::move(darts);
    }
    std::vector<std::array<int, 2>> edge_pairs(edges.size());
    for (auto& [eid, pair] : edges) {
        if (eid >= static_cast<int>(edges.size()))
            fail(ErrorCode::SemanticError, "edge ids are not dense");
        edge_pairs[eid] = pair;
    }
    return PlaneMultigraph::build(std::move(rotations), std::move(edge_pairs), outer_dart);
}

std::string emit_pmg(const PlaneMultigraph& map) {
    std::ostringstream out;
    out << "pmg 1\n";
    for (int v = 0; v < map.vertex_count(); ++v) {
        out << "vertex " << v << " darts";
        for (int d : map.rotation(v)) out << ' ' << d;
        out << '\n';
    }
    for (int e = 0; e < map.edge_count(); ++e)
        out << "edge " << e << ' ' << map.edge_darts(e)[0] << ' ' << map.edge_darts(e)[1] << '\n';
    out << "outer " << map.outer_dart() << '\n';
    return out.str();
}

std::vector<int> parse_cycle(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.size() != 1 || lines[0].tokens.empty() || lines[0].tokens[0] != "cycle")
        fail(ErrorCode::SyntaxError, "expected a single 'cycle <v...>' line");
    std::vector<int> cycle;
    for (size_t k = 1; k < lines[0].tokens.size(); ++k)
        cycle.push_back(parse_int(lines[0].tokens[k], lines[0].number));
    return cycle;
}

std::string emit_cycle(const std::vector<int>& cycle) {
    std::ostringstream out;
    out << "cycle";
    for (int v : cycle) out << ' ' << v;
    out << '\n';
    return out.str();
}

std::vector<int> parse_edge_list(const std::string& text) {
    std::vector<int> edges;
    for (const auto& line : tokenize(text))
        for (const auto& tok : line.tokens) edges.push_back(parse_int(tok, line.number));
    return edges;
}

std::string emit_report(const Metrics& metrics, const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["vertices"] = metrics.vertices;
    j["edges_g"] = metrics.edges_g;
    j["edges_j"] = metrics.edges_j;
    j["components_x"] = metrics.components_x;
    j["chords_added"] = metrics.chords_added;
    j["max_degree_j"] = metrics.max_degree_j;
    j["backtracks"] = metrics.backtracks;
    j["class_g"] = report.class_G;
    j["two_factor_valid"] = report.two_factor_valid;
    j["coloring_condition1"] = report.coloring_condition1;
    j["bonds_valid"] = report.bonds_valid;
    j["condition2_facial"] = report.condition2_facial;
    j["condition3"] = report.condition3;
    j["condition4"] = report.condition4;
    j["euler_j"] = report.euler_J;
    j["within_square"] = report.within_square;
    j["square_strict"] = report.square_strict;
    j["edge_count_formula"] = report.edge_count_formula;
    j["max_degree_le5"] = report.max_degree_le5;
    j["hamilton_valid"] = report.hamilton_valid;
    j["omits_matching"] = report.omits_matching;
    j["simplicity_preserved"] = report.simplicity_preserved;
    j["pass"] = report.pass();
    return j.dump() + "\n";
}

} // namespace squareham
