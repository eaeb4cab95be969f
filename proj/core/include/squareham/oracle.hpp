#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "squareham/planar_map.hpp"
#include "squareham/two_factor.hpp"

namespace squareham {

struct OracleLimits {
    int max_vertices = 20;
    int max_faces = 16;
};

// Exhaustive Hamilton cycle search with forbidden edges (indices into the
// edge list). Returns a vertex cycle starting at 0, or nothing if none
// exists. Multigraph aware: a 2-vertex cycle needs two distinct parallel
// edges.
std::optional<std::vector<int>> hamilton_search(int n_vertices,
                                                const std::vector<std::array<int, 2>>& edges,
                                                const std::vector<int>& forbidden_edges,
                                                OracleLimits limits = {});

std::optional<std::vector<int>> hamilton_search(const PlaneMultigraph& map,
                                                const std::vector<int>& forbidden_edges,
                                                OracleLimits limits = {});

// Every bond, as the set of primal edges crossed by a simple cycle of the
// dual multigraph. Sorted edge id sets in lexicographic order.
std::vector<std::vector<int>> bonds_via_dual_cycles(const PlaneMultigraph& map,
                                                    OracleLimits limits = {});

struct CrossCheckReport {
    bool bonds_match_partitions = false; // dual-cycle route equals connected-2-partition route
    bool bonds_pass_is_bond = false;
    bool x_bonds_even = false;           // every bond inside E(X) has even size
    bool hamilton_agrees = false;        // oracle finds a cycle on J; construct's H accepted
    std::vector<std::string> notes;

    bool pass() const {
        return bonds_match_partitions && bonds_pass_is_bond && x_bonds_even && hamilton_agrees;
    }
};

// Runs the full construction and checks it against the brute-force engines.
CrossCheckReport cross_check(const PlaneMultigraph& map, const TwoFactor& x,
                             OracleLimits limits = {});

} // namespace squareham
