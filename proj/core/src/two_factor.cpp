#include "squareham/two_factor.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace squareham {

int TwoFactor::component_of(int v) const {
    for (int c = 0; c < n(); ++c)
        for (int u : component_vertices[c])
            if (u == v) return c;
    return -1;
}

bool is_perfect(const PlaneMultigraph& map, const Matching& matching) {
    std::vector<int> cover(map.vertex_count(), 0);
    for (int e : matching.edges) {
        ++cover[map.edge_u(e)];
        ++cover[map.edge_v(e)];
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

// Blossom augmenting search (general graph maximum matching) on a simple
// adjacency structure. Deterministic: roots ascend, neighbors ascend.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())), adj_(std::move(adj)), match_(n_, -1),
          parent_(n_, -1), base_(n_, 0), used_(n_, 0), blossom_(n_, 0) {}

    std::vector<int> run() {
        for (int e = 0; e < n_; ++e)
            for (int u : adj_[e])
                if (match_[e] == -1 && match_[u] == -1 && e < u) {
                    match_[e] = u;
                    match_[u] = e;
                }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int leaf = find_path(v);
            while (leaf != -1) {
                int prev = parent_[leaf];
                int next = match_[prev];
                match_[leaf] = prev;
                match_[prev] = leaf;
                leaf = next;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        while (true) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_;
    std::vector<int> parent_, base_;
    std::vector<char> used_, blossom_;
};

// Sorted incidence (edge id, other endpoint) per vertex.
std::vector<std::vector<std::pair<int, int>>> incidence(const PlaneMultigraph& map) {
    std::vector<std::vector<std::pair<int, int>>> inc(map.vertex_count());
    for (int e = 0; e < map.edge_count(); ++e) {
        inc[map.edge_u(e)].emplace_back(e, map.edge_v(e));
        inc[map.edge_v(e)].emplace_back(e, map.edge_u(e));
    }
    for (auto& v : inc) std::sort(v.begin(), v.end());
    return inc;
}

void enumerate_matchings(const PlaneMultigraph& map, EnumLimits limits,
                         const std::function<bool(const std::vector<int>&)>& emit) {
    const int n = map.vertex_count();
    if (limits.max_vertices >= 0 && n > limits.max_vertices)
        fail(ErrorCode::LimitExceeded, "matching enumeration capped at " +
                                           std::to_string(limits.max_vertices) + " vertices");
    if (n % 2 != 0) return;

    const auto inc = incidence(map);
    std::vector<char> covered(n, 0);
    std::vector<int> chosen;
    chosen.reserve(n / 2);

    std::function<bool(int)> go = [&](int from) -> bool {
        int v = from;
        while (v < n && covered[v]) ++v;
        if (v == n) return emit(chosen);
        for (const auto& [e, u] : inc[v]) {
            if (covered[u]) continue;
            covered[v] = covered[u] = 1;
            chosen.push_back(e);
            bool keep_going = go(v + 1);
            chosen.pop_back();
            covered[v] = covered[u] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    go(0);
}

} // namespace

Matching maximum_matching(const PlaneMultigraph& map) {
    // Collapse parallel bundles: a bundle can hold at most one matching
    // edge, represented by its smallest id.
    const int n = map.vertex_count();
    std::vector<std::vector<int>> simple_adj(n);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    std::vector<std::vector<int>> bundle_rep(n, std::vector<int>(n, -1));
    for (int e = 0; e < map.edge_count(); ++e) {
        int u = map.edge_u(e), v = map.edge_v(e);
        if (bundle_rep[u][v] < 0 || e < bundle_rep[u][v]) {
            bundle_rep[u][v] = e;
            bundle_rep[v][u] = e;
        }
        if (!seen[u][v]) {
            seen[u][v] = seen[v][u] = 1;
            simple_adj[u].push_back(v);
            simple_adj[v].push_back(u);
        }
    }
    for (auto& a : simple_adj) std::sort(a.begin(), a.end());

    const auto match = BlossomMatcher(std::move(simple_adj)).run();

    Matching out;
    for (int v = 0; v < n; ++v)
        if (match[v] > v) out.edges.push_back(bundle_rep[v][match[v]]);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

TwoFactor complement_two_factor(const PlaneMultigraph& map, const Matching& matching) {
    for (int v = 0; v < map.vertex_count(); ++v)
        if (map.degree(v) != 3)
            fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(map.degree(v)));
    if (!is_perfect(map, matching))
        fail(ErrorCode::MatchingNotPerfect, "complement requires a perfect matching");

    std::vector<char> in_matching(map.edge_count(), 0);
    for (int e : matching.edges) in_matching[e] = 1;
    std::vector<int> rest;
    for (int e = 0; e < map.edge_count(); ++e)
        if (!in_matching[e]) rest.push_back(e);
    return validate_two_factor(map, rest);
}

TwoFactor validate_two_factor(const PlaneMultigraph& map, const std::vector<int>& edges) {
    std::vector<std::vector<std::pair<int, int>>> inc(map.vertex_count());
    for (int e : edges) {
        inc[map.edge_u(e)].emplace_back(e, map.edge_v(e));
        inc[map.edge_v(e)].emplace_back(e, map.edge_u(e));
    }
    for (int v = 0; v < map.vertex_count(); ++v) {
        if (inc[v].size() != 2)
            fail(ErrorCode::DegreeViolation, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(inc[v].size()) +
                                                 " in the edge set");
        std::sort(inc[v].begin(), inc[v].end());
    }

    TwoFactor out;
    out.edges = edges;
    std::sort(out.edges.begin(), out.edges.end());

    std::vector<char> visited(map.vertex_count(), 0);
    for (int start = 0; start < map.vertex_count(); ++start) {
        if (visited[start]) continue;
        std::vector<int> cyc_v, cyc_e;
        // First step: toward the smaller neighbor, smaller edge id on ties.
        auto first = std::min(
            std::make_pair(inc[start][0].second, inc[start][0].first),
            std::make_pair(inc[start][1].second, inc[start][1].first));
        int v = start, via = first.second;
        do {
            visited[v] = 1;
            cyc_v.push_back(v);
            cyc_e.push_back(via);
            v = map.edge_other(via, v);
            via = inc[v][0].first == via ? inc[v][1].first : inc[v][0].first;
        } while (v != start);
        out.component_vertices.push_back(std::move(cyc_v));
        out.component_edges.push_back(std::move(cyc_e));
    }
    return out;
}

std::vector<Matching> enumerate_perfect_matchings(const PlaneMultigraph& map, EnumLimits limits) {
    std::vector<Matching> out;
    enumerate_matchings(map, limits, [&](const std::vector<int>& edges) {
        if (limits.max_results >= 0 &&
            static_cast<long>(out.size()) >= limits.max_results)
            fail(ErrorCode::LimitExceeded,
                 "more than " + std::to_string(limits.max_results) + " perfect matchings");
        Matching m;
        m.edges = edges;
        std::sort(m.edges.begin(), m.edges.end());
        out.push_back(std::move(m));
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
    return out;
}

Matching first_perfect_matching(const PlaneMultigraph& map, EnumLimits limits) {
    Matching m;
    bool found = false;
    enumerate_matchings(map, limits, [&](const std::vector<int>& edges) {
        m.edges = edges;
        std::sort(m.edges.begin(), m.edges.end());
        found = true;
        return false; // stop after the first
    });
    if (!found)
        fail(ErrorCode::MatchingNotPerfect, "graph has no perfect matching");
    return m;
}

TwoFactor min_component_two_factor(const PlaneMultigraph& map, EnumLimits limits) {
    // Streams every perfect matching and keeps the (component count,
    // matching ids) minimum; component count via union-find over the
    // complement.
    std::vector<char> in_matching(map.edge_count(), 0);
    std::vector<int> parent(map.vertex_count());

    bool found = false;
    int best_n = 0;
    std::vector<int> best_edges;

    enumerate_matchings(map, limits, [&](const std::vector<int>& edges) {
        std::fill(in_matching.begin(), in_matching.end(), 0);
        for (int e : edges) in_matching[e] = 1;
        for (int v = 0; v < map.vertex_count(); ++v) parent[v] = v;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        int comps = map.vertex_count();
        for (int e = 0; e < map.edge_count(); ++e) {
            if (in_matching[e]) continue;
            int a = find(map.edge_u(e)), b = find(map.edge_v(e));
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        std::vector<int> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (!found || std::make_pair(comps, sorted) < std::make_pair(best_n, best_edges)) {
            found = true;
            best_n = comps;
            best_edges = std::move(sorted);
        }
        return true;
    });
    if (!found)
        fail(ErrorCode::MatchingNotPerfect, "graph has no perfect matching");
    Matching m;
    m.edges = best_edges;
    return complement_two_factor(map, m);
}

} // namespace squareham
