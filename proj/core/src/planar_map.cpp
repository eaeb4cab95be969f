#include "squareham/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace squareham {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DartReused: return "DartReused";
    case ErrorCode::DanglingDart: return "DanglingDart";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::BridgeEdge: return "BridgeEdge";
    case ErrorCode::ChordEndpointsEqual: return "ChordEndpointsEqual";
    case ErrorCode::ChordParallelInSimple: return "ChordParallelInSimple";
    case ErrorCode::CornerNotOnFace: return "CornerNotOnFace";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::MatchingNotPerfect: return "MatchingNotPerfect";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::DualDisconnectedOverX: return "DualDisconnectedOverX";
    case ErrorCode::ParityClash: return "ParityClash";
    case ErrorCode::NoBondOrdering: return "NoBondOrdering";
    case ErrorCode::DiamondOverlap: return "DiamondOverlap";
    case ErrorCode::EdgeNotPresentForRemoval: return "EdgeNotPresentForRemoval";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParity: return "BadParity";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::LayoutDegenerate: return "LayoutDegenerate";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "UnknownError";
}

PlaneMultigraph PlaneMultigraph::build(std::vector<std::vector<int>> rotations,
                                       std::vector<std::array<int, 2>> edges,
                                       int outer_dart) {
    PlaneMultigraph map;
    const int n_edges = static_cast<int>(edges.size());
    const int n_darts = 2 * n_edges;

    map.darts_.assign(n_darts, Dart{});

    std::vector<int> in_rotation(n_darts, 0);
    for (int v = 0; v < static_cast<int>(rotations.size()); ++v) {
        for (int d : rotations[v]) {
            if (d < 0 || d >= n_darts)
                fail(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " out of range");
            if (in_rotation[d]++)
                fail(ErrorCode::DartReused, "dart " + std::to_string(d) + " in two rotations");
            map.darts_[d].tail = v;
        }
    }
    for (int d = 0; d < n_darts; ++d)
        if (!in_rotation[d])
            fail(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " missing from rotations");

    std::vector<int> in_edge(n_darts, 0);
    for (int e = 0; e < n_edges; ++e) {
        for (int d : edges[e]) {
            if (d < 0 || d >= n_darts)
                fail(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " out of range");
            if (in_edge[d]++)
                fail(ErrorCode::DartReused, "dart " + std::to_string(d) + " in two edges");
            map.darts_[d].edge = e;
        }
        if (edges[e][0] == edges[e][1])
            fail(ErrorCode::DartReused, "edge " + std::to_string(e) + " lists one dart twice");
        if (map.darts_[edges[e][0]].tail == map.darts_[edges[e][1]].tail)
            fail(ErrorCode::LoopEdge, "edge " + std::to_string(e) + " is a loop");
    }

    if (outer_dart < 0 || outer_dart >= n_darts)
        fail(ErrorCode::DanglingDart, "outer dart out of range");

    map.rotations_ = std::move(rotations);
    map.edges_ = std::move(edges);
    map.outer_dart_ = outer_dart;
    map.check_valid();
    return map;
}

int PlaneMultigraph::edge_other(int e, int v) const {
    int u = edge_u(e);
    return u == v ? edge_v(e) : u;
}

int PlaneMultigraph::degree(int v) const {
    if (v < 0 || v >= vertex_count())
        fail(ErrorCode::UnknownVertex, std::to_string(v));
    return static_cast<int>(rotations_[v].size());
}

int PlaneMultigraph::face_succ(int d) const {
    const int t = twin(d);
    const auto& rot = rotations_[darts_[t].tail];
    const int k = static_cast<int>(std::find(rot.begin(), rot.end(), t) - rot.begin());
    return rot[(k + static_cast<int>(rot.size()) - 1) % rot.size()];
}

bool PlaneMultigraph::is_simple() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (int e = 0; e < edge_count(); ++e)
        pairs.push_back(std::minmax(edge_u(e), edge_v(e)));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

int PlaneMultigraph::subdivide_edge(int e) {
    const int da = edges_[e][0];
    const int db = edges_[e][1];
    const int x = vertex_count();
    const int nd1 = dart_count();
    const int nd2 = nd1 + 1;
    const int f = edge_count();

    darts_.push_back(Dart{x, e});  // nd1: twin of da on the first half
    darts_.push_back(Dart{x, f});  // nd2: first dart of the second half
    darts_[db].edge = f;
    edges_[e] = {da, nd1};
    edges_.push_back({nd2, db});
    rotations_.push_back({nd2, nd1});
    check_valid();
    return x;
}

int PlaneMultigraph::add_chord(int arrive_u, int arrive_w) {
    const int u = head(arrive_u);
    const int w = head(arrive_w);
    if (u == w)
        fail(ErrorCode::ChordEndpointsEqual, "chord endpoints coincide at vertex " + std::to_string(u));

    const int e = edge_count();
    const int g1 = dart_count();     // tail u
    const int g2 = g1 + 1;           // tail w
    darts_.push_back(Dart{u, e});
    darts_.push_back(Dart{w, e});
    edges_.push_back({g1, g2});

    auto insert_before = [this](int v, int ref, int d) {
        auto& rot = rotations_[v];
        rot.insert(std::find(rot.begin(), rot.end(), ref), d);
    };
    insert_before(u, twin(arrive_u), g1);
    insert_before(w, twin(arrive_w), g2);
    check_valid();
    return e;
}

void PlaneMultigraph::set_outer_dart(int d) {
    if (d < 0 || d >= dart_count())
        fail(ErrorCode::DanglingDart, "outer dart out of range");
    outer_dart_ = d;
}

void PlaneMultigraph::check_valid() const {
    // Face count by orbit decomposition of the successor permutation.
    std::vector<char> seen(dart_count(), 0);
    int n_faces = 0;
    for (int d = 0; d < dart_count(); ++d) {
        if (seen[d]) continue;
        ++n_faces;
        int cur = d;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = face_succ(cur);
        }
        if (cur != d)
            fail(ErrorCode::NotPlanarEmbedding, "face tracing is not a permutation");
    }
    if (vertex_count() - edge_count() + n_faces != 2)
        fail(ErrorCode::NotPlanarEmbedding,
             "Euler check failed: V=" + std::to_string(vertex_count()) +
                 " E=" + std::to_string(edge_count()) + " F=" + std::to_string(n_faces));

    std::vector<char> reached(vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : rotations_[v]) {
            int u = head(d);
            if (!reached[u]) {
                reached[u] = 1;
                ++count;
                q.push(u);
            }
        }
    }
    if (count != vertex_count())
        fail(ErrorCode::Disconnected, "graph has more than one component");
}

std::vector<Face> trace_faces(const PlaneMultigraph& map) {
    std::vector<Face> faces;
    std::vector<char> seen(map.dart_count(), 0);
    for (int d = 0; d < map.dart_count(); ++d) {
        if (seen[d]) continue;
        Face f;
        f.id = static_cast<int>(faces.size());
        int cur = d;
        do {
            seen[cur] = 1;
            f.walk.push_back(cur);
            if (cur == map.outer_dart()) f.is_outer = true;
            cur = map.face_succ(cur);
        } while (cur != d);
        faces.push_back(std::move(f));
    }
    return faces;
}

ClassGReport check_class_G(const PlaneMultigraph& map) {
    ClassGReport report;

    report.is_cubic = true;
    for (int v = 0; v < map.vertex_count(); ++v) {
        if (map.degree(v) != 3) {
            report.is_cubic = false;
            report.failures.push_back("vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(map.degree(v)));
            break;
        }
    }

    report.loopless = true; // loops rejected at build time
    for (int e = 0; e < map.edge_count(); ++e) {
        if (map.edge_u(e) == map.edge_v(e)) {
            report.loopless = false;
            report.failures.push_back("edge " + std::to_string(e) + " is a loop");
        }
    }

    report.plane = true; // Euler and connectivity held at build time

    const int n = map.vertex_count();
    if (n == 2) {
        report.is_2connected = map.edge_count() >= 2;
    } else if (n < 2) {
        report.is_2connected = false;
    } else {
        report.is_2connected = true;
        for (int cut = 0; cut < n && report.is_2connected; ++cut) {
            std::vector<char> reached(n, 0);
            reached[cut] = 1;
            int start = cut == 0 ? 1 : 0;
            std::queue<int> q;
            q.push(start);
            reached[start] = 1;
            int count = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int d : map.rotation(v)) {
                    int u = map.head(d);
                    if (!reached[u]) {
                        reached[u] = 1;
                        ++count;
                        q.push(u);
                    }
                }
            }
            if (count != n - 1) {
                report.is_2connected = false;
                report.failures.push_back("vertex " + std::to_string(cut) + " is a cut vertex");
            }
        }
    }
    if (!report.is_2connected && n >= 2 && report.failures.empty())
        report.failures.push_back("not 2-connected");
    return report;
}

std::vector<std::array<int, 2>> face_adjacency(const PlaneMultigraph& map) {
    const auto faces = trace_faces(map);
    std::vector<int> face_of(map.dart_count(), -1);
    for (const auto& f : faces)
        for (int d : f.walk) face_of[d] = f.id;

    std::vector<std::array<int, 2>> adj(map.edge_count());
    for (int e = 0; e < map.edge_count(); ++e) {
        const auto& darts = map.edge_darts(e);
        adj[e] = {face_of[darts[0]], face_of[darts[1]]};
        if (adj[e][0] == adj[e][1])
            fail(ErrorCode::BridgeEdge, "edge " + std::to_string(e) + " borders one face only");
    }
    return adj;
}

std::pair<PlaneMultigraph, int> insert_chord(const PlaneMultigraph& map, const Face& face,
                                             int dart_ab, int target_vertex) {
    const auto& walk = face.walk;
    const auto it = std::find(walk.begin(), walk.end(), dart_ab);
    if (it == walk.end())
        fail(ErrorCode::CornerNotOnFace, "dart " + std::to_string(dart_ab) + " not on face walk");
    const int i = static_cast<int>(it - walk.begin());
    const int len = static_cast<int>(walk.size());
    const int pred = walk[(i + len - 1) % len];
    const int succ = walk[(i + 1) % len];
    if (map.head(succ) != target_vertex)
        fail(ErrorCode::CornerNotOnFace, "target vertex " + std::to_string(target_vertex) +
                                             " is not the head of the successor dart");
    if (map.tail(dart_ab) == target_vertex)
        fail(ErrorCode::ChordEndpointsEqual,
             "chord endpoints coincide at vertex " + std::to_string(target_vertex));

    PlaneMultigraph out = map;
    const int new_edge = out.add_chord(pred, succ);
    // The cut-off triangle (dart_ab, succ, new twin dart) is bounded; if the
    // old outer dart sits on it, the remainder keeps the outer role.
    const int g1 = out.edge_darts(new_edge)[0];
    if (out.outer_dart() == dart_ab || out.outer_dart() == succ)
        out.set_outer_dart(g1);
    return {std::move(out), new_edge};
}

bool within_square(const PlaneMultigraph& map, int u, int v) {
    if (u < 0 || u >= map.vertex_count()) fail(ErrorCode::UnknownVertex, std::to_string(u));
    if (v < 0 || v >= map.vertex_count()) fail(ErrorCode::UnknownVertex, std::to_string(v));
    if (u == v) return false;
    for (int d : map.rotation(u)) {
        if (map.head(d) == v) return true;
        for (int d2 : map.rotation(map.head(d)))
            if (map.head(d2) == v) return true;
    }
    return false;
}

int dist(const PlaneMultigraph& map, int u, int v) {
    if (u < 0 || u >= map.vertex_count()) fail(ErrorCode::UnknownVertex, std::to_string(u));
    if (v < 0 || v >= map.vertex_count()) fail(ErrorCode::UnknownVertex, std::to_string(v));
    std::vector<int> d(map.vertex_count(), -1);
    std::queue<int> q;
    q.push(u);
    d[u] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == v) return d[x];
        for (int dart : map.rotation(x)) {
            int y = map.head(dart);
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
        }
    }
    return -1;
}

std::vector<std::vector<int>> components(const PlaneMultigraph& map,
                                         const std::vector<int>* edge_subset) {
    std::vector<int> parent(map.vertex_count());
    for (int v = 0; v < map.vertex_count(); ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    if (edge_subset) {
        for (int e : *edge_subset) unite(map.edge_u(e), map.edge_v(e));
    } else {
        for (int e = 0; e < map.edge_count(); ++e) unite(map.edge_u(e), map.edge_v(e));
    }

    std::vector<std::vector<int>> out;
    std::vector<int> index(map.vertex_count(), -1);
    for (int v = 0; v < map.vertex_count(); ++v) {
        int root = find(v);
        if (index[root] < 0) {
            index[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[index[root]].push_back(v);
    }
    return out;
}

} // namespace squareham
