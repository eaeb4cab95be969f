#pragma once

#include <vector>

#include "squareham/planar_map.hpp"

namespace squareham {

struct Matching {
    std::vector<int> edges; // sorted edge ids, pairwise non-adjacent
};

// Spanning 2-regular subgraph, decomposed into its cycle components.
// Components are ordered by smallest vertex; each cycle starts at its
// smallest vertex and runs toward the smaller of the two possible
// neighbors (2-cycles run along the smaller edge id first).
struct TwoFactor {
    std::vector<int> edges;                           // sorted edge ids
    std::vector<std::vector<int>> component_vertices; // cycles, one vertex sequence each
    std::vector<std::vector<int>> component_edges;    // parallel edge sequences

    int n() const { return static_cast<int>(component_vertices.size()); }
    int component_of(int v) const;
};

struct EnumLimits {
    int max_vertices = 60;
    long max_results = -1; // unlimited when negative
};

bool is_perfect(const PlaneMultigraph& map, const Matching& matching);

// Maximum-cardinality matching (blossom search on the underlying simple
// graph; a parallel bundle contributes its smallest edge id). Perfect for
// every bridgeless cubic input.
Matching maximum_matching(const PlaneMultigraph& map);

// The 2-factor E(G) \ matching of a cubic map.
TwoFactor complement_two_factor(const PlaneMultigraph& map, const Matching& matching);

// Accepts any edge subset in which every vertex has exactly two incident
// edges and returns its cycle decomposition.
TwoFactor validate_two_factor(const PlaneMultigraph& map, const std::vector<int>& edges);

// All perfect matchings, sorted lexicographically by their sorted edge id
// lists. Throws LimitExceeded beyond the configured bounds.
std::vector<Matching> enumerate_perfect_matchings(const PlaneMultigraph& map,
                                                  EnumLimits limits = {});

// First perfect matching in the order of enumerate_perfect_matchings.
Matching first_perfect_matching(const PlaneMultigraph& map, EnumLimits limits = {});

// 2-factor with the fewest components over all perfect matchings; ties go
// to the lexicographically smallest matching.
TwoFactor min_component_two_factor(const PlaneMultigraph& map, EnumLimits limits = {});

} // namespace squareham
