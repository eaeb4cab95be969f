#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "squareham/errors.hpp"

namespace squareham {

// A dart is half an edge: it sits in exactly one vertex rotation and
// points along its edge away from that vertex. Darts are dense ids
// 0..2E-1; the twin is the other dart of the same edge.
struct Dart {
    int tail = -1;
    int edge = -1;
};

// One traced face walk. The walk lists darts in face order: the head of
// each dart is the tail of its successor. Face ids are the discovery
// order of trace_faces and are not stable across map mutation.
struct Face {
    int id = -1;
    std::vector<int> walk;
    bool is_outer = false;

    int size() const { return static_cast<int>(walk.size()); }
};

struct ClassGReport {
    bool is_cubic = false;
    bool is_2connected = false;
    bool loopless = false;
    bool plane = false;
    std::vector<std::string> failures;

    bool member() const { return is_cubic && is_2connected && loopless && plane; }
};

// Loopless plane multigraph given by a rotation system plus a designated
// outer face. Vertex rotations list darts in counterclockwise order, so
// face tracing walks inner faces counterclockwise and the outer face
// clockwise (successor of d = the dart before twin(d) in the rotation at
// head(d)).
class PlaneMultigraph {
public:
    PlaneMultigraph() = default; // empty placeholder; assign before use

    // Validates and builds. rotations[v] is the ccw dart order at vertex v;
    // edges[e] holds the two darts of edge e.
    static PlaneMultigraph build(std::vector<std::vector<int>> rotations,
                                 std::vector<std::array<int, 2>> edges,
                                 int outer_dart);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return static_cast<int>(darts_.size()); }

    int tail(int d) const { return darts_[d].tail; }
    int head(int d) const { return darts_[twin(d)].tail; }
    int edge_of(int d) const { return darts_[d].edge; }
    int twin(int d) const {
        const auto& pair = edges_[darts_[d].edge];
        return pair[0] == d ? pair[1] : pair[0];
    }

    const std::array<int, 2>& edge_darts(int e) const { return edges_[e]; }
    int edge_u(int e) const { return darts_[edges_[e][0]].tail; }
    int edge_v(int e) const { return darts_[edges_[e][1]].tail; }
    // Endpoint of e that is not v (loopless, so unambiguous).
    int edge_other(int e, int v) const;

    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    int outer_dart() const { return outer_dart_; }

    int degree(int v) const;

    // Face-walk successor: the dart before twin(d) in the rotation at head(d).
    int face_succ(int d) const;

    bool is_simple() const;

    // Splits edge e with a fresh degree-2 vertex. Keeps both old dart ids on
    // their original tails and appends the two new darts; returns the new
    // vertex id. The second half of e becomes a fresh edge id.
    int subdivide_edge(int e);

    // Low-level chord surgery. arrive_u and arrive_w are darts of one face
    // walk; the new edge joins head(arrive_u) to head(arrive_w), splitting
    // that face into the walk section after arrive_u and the section after
    // arrive_w. Returns the new edge id. Callers are responsible for corner
    // validation; Euler is re-checked.
    int add_chord(int arrive_u, int arrive_w);

    void set_outer_dart(int d);

    void check_valid() const; // tracing partition, Euler, connectivity

private:
    std::vector<std::vector<int>> rotations_;
    std::vector<Dart> darts_;
    std::vector<std::array<int, 2>> edges_;
    int outer_dart_ = -1;
};

// Decomposes all darts into face walks; the face containing the outer
// dart is flagged. Walks start at their smallest dart id; faces are
// ordered by that dart.
std::vector<Face> trace_faces(const PlaneMultigraph& map);

ClassGReport check_class_G(const PlaneMultigraph& map);

// For each edge, the ids of the two faces incident with it (face of
// dart A, face of dart B). Throws BridgeEdge if both darts lie on one
// face walk.
std::vector<std::array<int, 2>> face_adjacency(const PlaneMultigraph& map);

// Inserts the chord tail(dart_ab)--target_vertex across the corner
// (dart_ab, succ) of the given face, where succ is dart_ab's successor in
// the face walk and target_vertex = head(succ). Splits the face into the
// triangle (tail(dart_ab), head(dart_ab), target_vertex) and a remainder
// face. Returns the new map and the new edge id.
std::pair<PlaneMultigraph, int> insert_chord(const PlaneMultigraph& map, const Face& face,
                                             int dart_ab, int target_vertex);

// True iff u and v are distinct and at distance 1 or 2 in the map.
bool within_square(const PlaneMultigraph& map, int u, int v);

int dist(const PlaneMultigraph& map, int u, int v);

// Connected components of the spanning subgraph on the given edge subset
// (all edges when absent). Components are sorted by smallest vertex;
// vertices inside a component are ascending.
std::vector<std::vector<int>> components(const PlaneMultigraph& map,
                                         const std::vector<int>* edge_subset = nullptr);

} // namespace squareham
