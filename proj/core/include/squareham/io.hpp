#pragma once

#include <set>
#include <string>
#include <vector>

#include "squareham/construction.hpp"
#include "squareham/planar_map.hpp"
#include "squareham/verify.hpp"

namespace squareham {

// Line-oriented embedding format:
//   pmg 1
//   vertex <vid> darts <d...>   (counterclockwise rotation)
//   edge <eid> <dartA> <dartB>
//   outer <dart>
// '#' starts a comment. Ids must be dense and 0-based.
PlaneMultigraph parse_pmg(const std::string& text);
std::string emit_pmg(const PlaneMultigraph& map);

// "cycle <v1> ... <vk>", closed implicitly.
std::vector<int> parse_cycle(const std::string& text);
std::string emit_cycle(const std::vector<int>& cycle);

// Whitespace separated edge ids; '#' comments.
std::vector<int> parse_edge_list(const std::string& text);

// Stable-order JSON: metrics first, then the verification flags, then
// "pass". Booleans and integers only.
std::string emit_report(const Metrics& metrics, const VerificationReport& report);

struct Highlight {
    std::set<int> x_edges;
    std::set<int> m_edges;
    std::set<int> chord_edges;
    std::set<int> h_edges;
};

std::string export_dot(const PlaneMultigraph& map, const Highlight& highlight);

// Straight-line drawing from a barycentric layout with the outer face
// pinned to a regular polygon; parallel edges bow outward. Falls back to
// a circular layout (noted in an svg comment) when the solve degenerates.
std::string export_svg(const PlaneMultigraph& map, const Highlight& highlight);

} // namespace squareham
