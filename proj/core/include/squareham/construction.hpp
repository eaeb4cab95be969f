#pragma once

#include <array>
#include <vector>

#include "squareham/planar_map.hpp"
#include "squareham/two_factor.hpp"
#include "squareham/verify.hpp"

namespace squareham {

enum class FaceColor { alpha, beta };

// Proper 2-coloring of the faces: the color flips exactly across 2-factor
// edges, so the two faces flanking a matching edge agree. A face's walk is
// handed out reversed iff it is colored alpha; that realizes the assigned
// orientation (inner faces trace counterclockwise, so alpha inner faces
// become clockwise, and the outer face the other way around).
struct FaceColoring {
    std::vector<FaceColor> color; // by face id
    std::vector<char> reversed;   // by face id; reversed[f] == (color[f] == alpha)

    bool is_alpha(int f) const { return color[f] == FaceColor::alpha; }
};

struct OrderStep {
    std::vector<int> s_vertices; // V(S_i), ascending
    std::vector<int> bond;       // B_i = E[V(S_i), V(C_{i+1})], ascending
    int connector = -1;          // b_i, the smallest edge of B_i
    bool bond_respecting = true; // is_bond(B_i) held when the step was taken
};

// Enumeration C_1..C_n with the per-step cuts. order[i] indexes the
// TwoFactor components; steps[i] documents the transition from S_{i+1} to
// component order[i+1].
struct ComponentOrdering {
    std::vector<int> order;
    std::vector<OrderStep> steps;
    std::vector<int> m_edges; // {b_1, ..., b_{n-1}} in step order
    long backtracks = 0;
    bool bond_respecting = true; // every step passed is_bond
};

// Splice gadget for one m-edge ab: walks a,b,c and b,a,d in the two
// flanking faces, chords ac and bd drawn inside them.
struct Diamond {
    int m_edge = -1;
    int a = -1, b = -1, c = -1, d = -1;
    std::array<int, 3> e0{}; // {ab, bc, ad}, edges of G
    std::array<int, 2> e1{}; // {ac, bd}, chord ids in J
    FaceColor type = FaceColor::alpha;
};

struct Metrics {
    int vertices = 0;
    int edges_g = 0;
    int edges_j = 0;
    int components_x = 0;
    int chords_added = 0;
    int max_degree_j = 0;
    long backtracks = 0;
};

struct ConstructionResult {
    PlaneMultigraph j;
    std::vector<int> hamilton_vertices; // cyclic, starts at the smallest vertex
    std::vector<int> hamilton_edges;    // edge ids of j, parallel to the vertex sequence
    std::vector<Diamond> diamonds;      // in m-edge step order
    FaceColoring coloring;              // of G's faces
    ComponentOrdering ordering;
    Metrics metrics;
    VerificationReport report;
};

// Colors faces by breadth-first search over the dual restricted to
// 2-factor edges. Defaults: root = outer face, root color alpha. Checks
// condition (1) over every edge afterwards.
FaceColoring color_faces(const PlaneMultigraph& map, const TwoFactor& x,
                         const std::vector<Face>& faces, int root_face = -1,
                         FaceColor root_color = FaceColor::alpha);

// The face walk in assigned orientation: traced darts, or their twins in
// reverse order when the face is reversed.
std::vector<int> assigned_walk(const PlaneMultigraph& map, const FaceColoring& coloring,
                               const Face& face);

// True iff removing the edge set leaves exactly two components and every
// set edge has one endpoint in each.
bool is_bond(const PlaneMultigraph& map, const std::vector<int>& edges);

// Deterministic enumeration of components: C_1 holds vertex 0; each step
// takes the first candidate component (by component id) whose cut from
// S_i is a bond, backtracking when a later step runs dry. When no
// bond-respecting order exists (the component adjacency graph has a
// cycle once parallel links collapse), falls back to the same greedy
// order under plain adjacency and flags bond_respecting = false; the
// downstream construction only needs connectivity.
ComponentOrdering order_components(const PlaneMultigraph& map, const TwoFactor& x);

// Inserts both chords for every m-edge, face by face in assigned-walk
// order, re-tracing and re-checking Euler after each insertion. Returns J
// and the diamond records.
std::pair<PlaneMultigraph, std::vector<Diamond>> plan_and_insert_diamonds(
    const PlaneMultigraph& map, const FaceColoring& coloring, const ComponentOrdering& ordering);

// H_1 = C_1; each step drops {bc, ad} and adds the chords {ac, bd},
// splicing C_{i+1} into the cycle. Returns the vertex sequence and edge
// ids of H_n.
std::pair<std::vector<int>, std::vector<int>> assemble_hamilton(const PlaneMultigraph& j,
                                                                const TwoFactor& x,
                                                                const ComponentOrdering& ordering,
                                                                const std::vector<Diamond>& diamonds);

// Full pipeline: color, order, insert, assemble, then verify. Throws
// Error(VerificationFailed) carrying diagnostics if the independent
// verifier rejects the result.
ConstructionResult construct(const PlaneMultigraph& map, const TwoFactor& x);

// Same pipeline, but a failing verification report is returned instead of
// thrown (pipeline-internal contract violations still throw).
ConstructionResult construct_unchecked(const PlaneMultigraph& map, const TwoFactor& x);

// construct() with the coloring root color overridden (the alpha/beta
// swap must produce an equally valid result).
ConstructionResult construct_with_root_color(const PlaneMultigraph& map, const TwoFactor& x,
                                             FaceColor root_color);

} // namespace squareham
