#include "squareham/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "squareham/construction.hpp"
#include "squareham/verify.hpp"

namespace squareham {

std::optional<std::vector<int>> hamilton_search(int n_vertices,
                                                const std::vector<std::array<int, 2>>& edges,
                                                const std::vector<int>& forbidden_edges,
                                                OracleLimits limits) {
    if (n_vertices > limits.max_vertices)
        fail(ErrorCode::SizeLimit, "hamilton search capped at " +
                                       std::to_string(limits.max_vertices) + " vertices");
    if (n_vertices < 2) return std::nullopt;

    std::vector<char> forbidden(edges.size(), 0);
    for (int e : forbidden_edges) forbidden[e] = 1;

    std::vector<std::vector<int>> adj(n_vertices); // allowed neighbors, ascending, deduped
    std::vector<std::vector<int>> multiplicity(n_vertices, std::vector<int>(n_vertices, 0));
    for (size_t e = 0; e < edges.size(); ++e) {
        if (forbidden[e]) continue;
        auto [u, v] = edges[e];
        ++multiplicity[u][v];
        ++multiplicity[v][u];
    }
    for (int u = 0; u < n_vertices; ++u)
        for (int v = 0; v < n_vertices; ++v)
            if (multiplicity[u][v] && u != v) adj[u].push_back(v);

    if (n_vertices == 2)
        return multiplicity[0][1] >= 2 ? std::optional<std::vector<int>>({0, 1}) : std::nullopt;

    for (int v = 0; v < n_vertices; ++v)
        if (static_cast<int>(adj[v].size()) < 2) return std::nullopt;

    std::vector<int> path{0};
    std::vector<char> visited(n_vertices, 0);
    visited[0] = 1;
    std::function<bool()> go = [&]() -> bool {
        if (static_cast<int>(path.size()) == n_vertices)
            return multiplicity[path.back()][0] > 0;
        for (int v : adj[path.back()]) {
            if (visited[v]) continue;
            visited[v] = 1;
            path.push_back(v);
            if (go()) return true;
            path.pop_back();
            visited[v] = 0;
        }
        return false;
    };
    if (go()) return path;
    return std::nullopt;
}

std::optional<std::vector<int>> hamilton_search(const PlaneMultigraph& map,
                                                const std::vector<int>& forbidden_edges,
                                                OracleLimits limits) {
    std::vector<std::array<int, 2>> edges(map.edge_count());
    for (int e = 0; e < map.edge_count(); ++e) edges[e] = {map.edge_u(e), map.edge_v(e)};
    return hamilton_search(map.vertex_count(), edges, forbidden_edges, limits);
}

std::vector<std::vector<int>> bonds_via_dual_cycles(const PlaneMultigraph& map,
                                                    OracleLimits limits) {
    const auto faces = trace_faces(map);
    const int n_faces = static_cast<int>(faces.size());
    if (n_faces > limits.max_faces)
        fail(ErrorCode::SizeLimit,
             "bond enumeration capped at " + std::to_string(limits.max_faces) + " faces");

    const auto adj = face_adjacency(map); // per edge: its two faces

    // Dual incidence: face -> (primal edge, other face).
    std::vector<std::vector<std::pair<int, int>>> dual(n_faces);
    for (int e = 0; e < map.edge_count(); ++e) {
        dual[adj[e][0]].emplace_back(e, adj[e][1]);
        dual[adj[e][1]].emplace_back(e, adj[e][0]);
    }
    for (auto& d : dual) std::sort(d.begin(), d.end());

    std::set<std::vector<int>> bonds;
    std::vector<char> on_path(n_faces, 0);
    std::vector<char> edge_used(map.edge_count(), 0);
    std::vector<int> crossed;

    // Simple dual cycles rooted at their smallest face.
    std::function<void(int, int)> walk = [&](int root, int at) {
        for (const auto& [e, to] : dual[at]) {
            if (edge_used[e] || to < root) continue;
            if (to == root) {
                if (crossed.size() >= 1) {
                    std::vector<int> bond = crossed;
                    bond.push_back(e);
                    std::sort(bond.begin(), bond.end());
                    bonds.insert(std::move(bond));
                }
                continue;
            }
            if (on_path[to]) continue;
            on_path[to] = 1;
            edge_used[e] = 1;
            crossed.push_back(e);
            walk(root, to);
            crossed.pop_back();
            edge_used[e] = 0;
            on_path[to] = 0;
        }
    };
    for (int root = 0; root < n_faces; ++root) {
        on_path[root] = 1;
        walk(root, root);
        on_path[root] = 0;
    }
    return {bonds.begin(), bonds.end()};
}

CrossCheckReport cross_check(const PlaneMultigraph& map, const TwoFactor& x,
                             OracleLimits limits) {
    if (map.vertex_count() > limits.max_vertices)
        fail(ErrorCode::SizeLimit, "cross check capped at " +
                                       std::to_string(limits.max_vertices) + " vertices");
    CrossCheckReport report;

    const auto dual_bonds = bonds_via_dual_cycles(map, limits);

    // Independent route: connected 2-partitions. Vertex 0 stays on one side.
    std::set<std::vector<int>> partition_bonds;
    const int n = map.vertex_count();
    auto side_connected = [&](unsigned mask, bool inside) {
        int start = -1, want = 0;
        for (int v = 0; v < n; ++v) {
            bool in = ((mask >> v) & 1u) != 0;
            if (in == inside) {
                if (start < 0) start = v;
                ++want;
            }
        }
        if (want == 0) return false;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int got = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : map.rotation(v)) {
                int u = map.head(d);
                bool in = ((mask >> u) & 1u) != 0;
                if (in == inside && !seen[u]) {
                    seen[u] = 1;
                    ++got;
                    stack.push_back(u);
                }
            }
        }
        return got == want;
    };
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        // vertex n-1 is always outside the mask side
        if (!side_connected(mask, true) || !side_connected(mask, false)) continue;
        std::vector<int> cut;
        for (int e = 0; e < map.edge_count(); ++e) {
            bool a = ((mask >> map.edge_u(e)) & 1u) != 0;
            bool b = ((mask >> map.edge_v(e)) & 1u) != 0;
            if (a != b) cut.push_back(e);
        }
        partition_bonds.insert(std::move(cut));
    }

    std::vector<std::vector<int>> partition_list(partition_bonds.begin(), partition_bonds.end());
    report.bonds_match_partitions = dual_bonds == partition_list;
    if (!report.bonds_match_partitions)
        report.notes.push_back("dual-cycle bonds differ from connected-partition cuts: " +
                               std::to_string(dual_bonds.size()) + " vs " +
                               std::to_string(partition_list.size()));

    report.bonds_pass_is_bond =
        std::all_of(dual_bonds.begin(), dual_bonds.end(),
                    [&](const std::vector<int>& b) { return is_bond(map, b); });
    if (!report.bonds_pass_is_bond)
        report.notes.push_back("a dual-cycle bond fails is_bond");

    std::vector<char> in_x(map.edge_count(), 0);
    for (int e : x.edges) in_x[e] = 1;
    report.x_bonds_even = true;
    for (const auto& bond : dual_bonds) {
        if (std::all_of(bond.begin(), bond.end(), [&](int e) { return in_x[e] != 0; }) &&
            bond.size() % 2 != 0) {
            report.x_bonds_even = false;
            report.notes.push_back("odd bond inside the 2-factor, size " +
                                   std::to_string(bond.size()));
        }
    }

    const auto result = construct(map, x);
    std::vector<int> forbidden;
    for (int e = 0; e < map.edge_count(); ++e)
        if (!in_x[e]) forbidden.push_back(e);
    OracleLimits j_limits = limits;
    j_limits.max_vertices = std::max(limits.max_vertices, result.j.vertex_count());
    const auto found = hamilton_search(result.j, forbidden, j_limits);
    report.hamilton_agrees =
        found.has_value() && check_hamilton(result.j, result.hamilton_vertices, forbidden);
    if (!report.hamilton_agrees)
        report.notes.push_back("oracle search and construction disagree on J");

    return report;
}

} // namespace squareham
