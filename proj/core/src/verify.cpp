#include "squareham/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "squareham/construction.hpp"

namespace squareham {

bool check_hamilton(const PlaneMultigraph& j, const std::vector<int>& cycle,
                    const std::vector<int>& forbidden_edges) {
    const int n = j.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 2) return false;
    std::vector<char> seen(n, 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }

    std::vector<char> forbidden(j.edge_count(), 0);
    for (int e : forbidden_edges) forbidden[e] = 1;

    // Allowed edges by endpoint pair; consecutive cycle pairs must be
    // realizable by pairwise distinct edges (greedy by ascending id works:
    // only parallel edges compete for the same pair).
    std::map<std::pair<int, int>, std::vector<int>> pool;
    for (int e = 0; e < j.edge_count(); ++e)
        if (!forbidden[e]) pool[std::minmax(j.edge_u(e), j.edge_v(e))].push_back(e);

    for (int k = 0; k < n; ++k) {
        auto key = std::minmax(cycle[k], cycle[(k + 1) % n]);
        auto it = pool.find(key);
        if (it == pool.end() || it->second.empty()) return false;
        it->second.erase(it->second.begin());
    }
    return true;
}

namespace {

void note_if(VerificationReport& report, bool ok, bool VerificationReport::*flag,
             const std::string& message) {
    report.*flag = ok;
    if (!ok) report.notes.push_back(message);
}

std::vector<int> matching_edge_ids(const PlaneMultigraph& g, const TwoFactor& x) {
    std::vector<char> in_x(g.edge_count(), 0);
    for (int e : x.edges) in_x[e] = 1;
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_x[e]) out.push_back(e);
    return out;
}

bool coloring_satisfies_condition1(const PlaneMultigraph& g, const TwoFactor& x,
                                   const FaceColoring& coloring, std::string& why) {
    std::vector<Face> faces;
    std::vector<std::array<int, 2>> adj;
    try {
        adj = face_adjacency(g);
        faces = trace_faces(g);
    } catch (const Error& err) {
        why = err.what();
        return false;
    }
    if (coloring.color.size() != faces.size() || coloring.reversed.size() != faces.size()) {
        why = "coloring does not cover the faces";
        return false;
    }
    for (size_t f = 0; f < faces.size(); ++f) {
        if (coloring.reversed[f] != (coloring.color[f] == FaceColor::alpha)) {
            why = "reversal flag diverges from color at face " + std::to_string(f);
            return false;
        }
    }
    std::vector<char> in_x(g.edge_count(), 0);
    for (int e : x.edges) in_x[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        bool same = coloring.color[adj[e][0]] == coloring.color[adj[e][1]];
        if (in_x[e] == same) {
            why = "condition (1) fails at edge " + std::to_string(e);
            return false;
        }
    }
    return true;
}

} // namespace

VerificationReport verify(const PlaneMultigraph& g, const TwoFactor& x,
                          const ConstructionResult& result) {
    VerificationReport report;
    const int n = x.n();

    note_if(report, check_class_G(g).member(), &VerificationReport::class_G,
            "input graph is outside the cubic 2-connected plane class");

    bool factor_ok = true;
    try {
        TwoFactor recomputed = validate_two_factor(g, x.edges);
        factor_ok = recomputed.edges == x.edges &&
                    recomputed.component_vertices == x.component_vertices;
    } catch (const Error&) {
        factor_ok = false;
    }
    note_if(report, factor_ok, &VerificationReport::two_factor_valid,
            "2-factor is invalid or inconsistently decomposed");

    std::string why;
    note_if(report, coloring_satisfies_condition1(g, x, result.coloring, why),
            &VerificationReport::coloring_condition1, "coloring: " + why);

    const std::vector<int> m = result.ordering.m_edges;
    std::vector<char> in_m(g.edge_count(), 0);
    for (int e : m)
        if (e >= 0 && e < g.edge_count()) in_m[e] = 1;
    std::vector<char> in_x(g.edge_count(), 0);
    for (int e : x.edges) in_x[e] = 1;

    // Ordering bookkeeping, recomputed from scratch.
    {
        bool ok = static_cast<int>(result.ordering.order.size()) == n &&
                  static_cast<int>(result.ordering.steps.size()) == n - 1 &&
                  static_cast<int>(m.size()) == n - 1;
        std::string msg = "ordering shape is wrong";
        if (ok) {
            std::vector<char> in_s(g.vertex_count(), 0);
            std::vector<char> used(n, 0);
            used[result.ordering.order[0]] = 1;
            for (int v : x.component_vertices[result.ordering.order[0]]) in_s[v] = 1;
            for (int i = 0; i + 1 < n && ok; ++i) {
                const OrderStep& step = result.ordering.steps[i];
                const int c = result.ordering.order[i + 1];
                if (used[c]) {
                    ok = false;
                    msg = "component repeated in the order";
                    break;
                }
                used[c] = 1;
                std::vector<int> s;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (in_s[v]) s.push_back(v);
                std::vector<char> in_c(g.vertex_count(), 0);
                for (int v : x.component_vertices[c]) in_c[v] = 1;
                std::vector<int> bond;
                for (int e = 0; e < g.edge_count(); ++e) {
                    int a = g.edge_u(e), b = g.edge_v(e);
                    if ((in_s[a] && in_c[b]) || (in_s[b] && in_c[a])) bond.push_back(e);
                }
                if (step.s_vertices != s) {
                    ok = false;
                    msg = "S_" + std::to_string(i + 1) + " does not match the recorded vertex set";
                } else if (step.bond != bond) {
                    ok = false;
                    msg = "B_" + std::to_string(i + 1) + " is not the cut E[S, C]";
                } else if (bond.empty() || step.connector != bond.front()) {
                    ok = false;
                    msg = "b_" + std::to_string(i + 1) + " is not the smallest cut edge";
                } else if (in_x[step.connector]) {
                    ok = false;
                    msg = "b_" + std::to_string(i + 1) + " is a 2-factor edge";
                } else if (step.bond_respecting && !is_bond(g, bond)) {
                    ok = false;
                    msg = "B_" + std::to_string(i + 1) + " claims to be a bond but is not";
                } else {
                    int m_count = 0;
                    for (int e : bond) m_count += in_m[e];
                    if (m_count != 1) {
                        ok = false;
                        msg = "B_" + std::to_string(i + 1) + " holds " + std::to_string(m_count) +
                              " m-edges";
                    }
                }
                if (ok && result.ordering.bond_respecting && !step.bond_respecting) {
                    ok = false;
                    msg = "ordering claims bond-respecting but a step is not";
                }
                for (int v : x.component_vertices[c]) in_s[v] = 1;
            }
        }
        note_if(report, ok, &VerificationReport::bonds_valid, msg);
    }

    // Conditions (2) and (3) on the facial structure of G.
    {
        bool ok2 = true, ok3 = true;
        std::string msg2, msg3;
        std::set<std::pair<int, int>> g_pairs;
        for (int e = 0; e < g.edge_count(); ++e)
            g_pairs.insert(std::minmax(g.edge_u(e), g.edge_v(e)));
        const bool simple = g.is_simple();
        for (const auto& f : trace_faces(g)) {
            int m_count = 0;
            const int len = f.size();
            for (int k = 0; k < len; ++k) {
                if (!in_m[g.edge_of(f.walk[k])]) continue;
                ++m_count;
                if (len <= 3) {
                    ok2 = false;
                    msg2 = "m-edge on a facial cycle of length " + std::to_string(len);
                }
                int ci = g.tail(f.walk[k]);
                int ci2 = g.head(f.walk[(k + 1) % len]);
                if (ci == ci2) {
                    ok2 = false;
                    msg2 = "chord endpoints coincide on face " + std::to_string(f.id);
                } else if (simple && g_pairs.count(std::minmax(ci, ci2))) {
                    ok2 = false;
                    msg2 = "chord endpoints adjacent in simple G on face " + std::to_string(f.id);
                }
            }
            if (len == 4 && m_count > 1) {
                ok3 = false;
                msg3 = "face " + std::to_string(f.id) + " is a 4-face with " +
                       std::to_string(m_count) + " m-edges";
            }
        }
        note_if(report, ok2, &VerificationReport::condition2_facial, "condition (2): " + msg2);
        note_if(report, ok3, &VerificationReport::condition3, "condition (3): " + msg3);
    }

    // Condition (4) plus diamond structure.
    {
        bool ok = static_cast<int>(result.diamonds.size()) == n - 1;
        std::string msg = "diamond count differs from n-1";
        std::set<int> all_edges;
        for (size_t i = 0; i < result.diamonds.size() && ok; ++i) {
            const Diamond& dia = result.diamonds[i];
            std::set<int> verts{dia.a, dia.b, dia.c, dia.d};
            if (static_cast<int>(verts.size()) != 4) {
                ok = false;
                msg = "diamond " + std::to_string(i) + " does not span 4 vertices";
                break;
            }
            if (i < m.size() && dia.m_edge != m[i]) {
                ok = false;
                msg = "diamond " + std::to_string(i) + " is not keyed by b_" + std::to_string(i + 1);
                break;
            }
            auto expect = [&](int e, int u, int v, bool in_g) {
                if (e < 0 || e >= result.j.edge_count()) return false;
                if (in_g != (e < g.edge_count())) return false;
                return std::minmax(result.j.edge_u(e), result.j.edge_v(e)) == std::minmax(u, v);
            };
            if (!expect(dia.e0[0], dia.a, dia.b, true) || !expect(dia.e0[1], dia.b, dia.c, true) ||
                !expect(dia.e0[2], dia.a, dia.d, true) || !expect(dia.e1[0], dia.a, dia.c, false) ||
                !expect(dia.e1[1], dia.b, dia.d, false)) {
                ok = false;
                msg = "diamond " + std::to_string(i) + " edges do not match its vertices";
                break;
            }
            for (int e : dia.e0)
                if (!all_edges.insert(e).second) {
                    ok = false;
                    msg = "diamonds share edge " + std::to_string(e);
                }
            for (int e : dia.e1)
                if (!all_edges.insert(e).second) {
                    ok = false;
                    msg = "diamonds share edge " + std::to_string(e);
                }
        }
        note_if(report, ok, &VerificationReport::condition4, "condition (4): " + msg);
    }

    // Euler and vertex set of J.
    {
        bool ok = result.j.vertex_count() == g.vertex_count();
        std::string msg = "J has a different vertex set";
        if (ok) {
            try {
                result.j.check_valid();
            } catch (const Error& err) {
                ok = false;
                msg = err.what();
            }
        }
        note_if(report, ok, &VerificationReport::euler_J, "J: " + msg);
    }

    // G subset of J subset of G^2, by edge id correspondence and distances.
    {
        bool ok = result.j.edge_count() >= g.edge_count();
        std::string msg = "J has fewer edges than G";
        for (int e = 0; ok && e < g.edge_count(); ++e) {
            if (std::minmax(g.edge_u(e), g.edge_v(e)) !=
                std::minmax(result.j.edge_u(e), result.j.edge_v(e))) {
                ok = false;
                msg = "edge " + std::to_string(e) + " of J does not match G";
            }
        }
        for (int e = g.edge_count(); ok && e < result.j.edge_count(); ++e) {
            if (!within_square(g, result.j.edge_u(e), result.j.edge_v(e))) {
                ok = false;
                msg = "chord " + std::to_string(e) + " joins vertices farther than 2 apart";
            }
        }
        note_if(report, ok, &VerificationReport::within_square, "square: " + msg);
    }

    // Strictness of J inside G^2 (informational).
    {
        bool strict = false;
        std::set<std::pair<int, int>> j_pairs;
        for (int e = 0; e < result.j.edge_count(); ++e)
            j_pairs.insert(std::minmax(result.j.edge_u(e), result.j.edge_v(e)));
        for (int u = 0; u < g.vertex_count() && !strict; ++u)
            for (int v = u + 1; v < g.vertex_count() && !strict; ++v)
                if (within_square(g, u, v) && !j_pairs.count({u, v})) strict = true;
        report.square_strict = strict;
        if (!strict) report.notes.push_back("informational: J equals G^2 on vertex pairs");
    }

    note_if(report, result.j.edge_count() == g.edge_count() + 2 * (n - 1),
            &VerificationReport::edge_count_formula,
            "edge count |E(J)| = |E(G)| + 2n - 2 fails");

    {
        int max_deg = 0;
        for (int v = 0; v < result.j.vertex_count(); ++v)
            max_deg = std::max(max_deg, result.j.degree(v));
        note_if(report, max_deg <= 5, &VerificationReport::max_degree_le5,
                "max degree of J is " + std::to_string(max_deg));
    }

    const auto forbidden = matching_edge_ids(g, x);
    note_if(report, check_hamilton(result.j, result.hamilton_vertices, forbidden),
            &VerificationReport::hamilton_valid,
            "H is not a Hamilton cycle of J avoiding the matching");

    {
        bool ok = result.hamilton_edges.size() == result.hamilton_vertices.size();
        std::string msg = "H edge list length differs from its vertex list";
        std::set<int> used;
        const int len = static_cast<int>(result.hamilton_vertices.size());
        for (int k = 0; ok && k < len; ++k) {
            int e = result.hamilton_edges[k];
            if (e < 0 || e >= result.j.edge_count()) {
                ok = false;
                msg = "H uses an unknown edge id";
                break;
            }
            if (!used.insert(e).second) {
                ok = false;
                msg = "H repeats edge " + std::to_string(e);
                break;
            }
            if (e < g.edge_count() && !in_x[e]) {
                ok = false;
                msg = "H uses matching edge " + std::to_string(e);
                break;
            }
            auto want = std::minmax(result.hamilton_vertices[k],
                                    result.hamilton_vertices[(k + 1) % len]);
            if (std::minmax(result.j.edge_u(e), result.j.edge_v(e)) != want) {
                ok = false;
                msg = "H edge " + std::to_string(e) + " does not join its endpoints";
                break;
            }
        }
        note_if(report, ok, &VerificationReport::omits_matching, "H edges: " + msg);
    }

    note_if(report, !g.is_simple() || result.j.is_simple(),
            &VerificationReport::simplicity_preserved, "G is simple but J is not");

    return report;
}

VerificationReport verify_theorem(const PlaneMultigraph& g, const TwoFactor& x,
                                  const PlaneMultigraph& j, const std::vector<int>& h) {
    VerificationReport report;
    const int n = x.n();

    note_if(report, check_class_G(g).member(), &VerificationReport::class_G,
            "input graph is outside the cubic 2-connected plane class");

    bool factor_ok = true;
    try {
        validate_two_factor(g, x.edges);
    } catch (const Error&) {
        factor_ok = false;
    }
    note_if(report, factor_ok, &VerificationReport::two_factor_valid, "2-factor is invalid");

    {
        bool ok = true;
        std::string msg;
        try {
            auto coloring = color_faces(g, x, trace_faces(g));
            (void)coloring;
        } catch (const Error& err) {
            ok = false;
            msg = err.what();
        }
        note_if(report, ok, &VerificationReport::coloring_condition1, "coloring: " + msg);
    }

    report.bonds_valid = true;
    report.condition2_facial = true;
    report.condition3 = true;
    report.condition4 = true;
    report.notes.push_back("bond and condition (2)-(4) checks skipped: no construction metadata");

    {
        bool ok = j.vertex_count() == g.vertex_count();
        std::string msg = "J has a different vertex set";
        if (ok) {
            try {
                j.check_valid();
            } catch (const Error& err) {
                ok = false;
                msg = err.what();
            }
        }
        note_if(report, ok, &VerificationReport::euler_J, "J: " + msg);
    }

    {
        bool ok = j.edge_count() >= g.edge_count();
        std::string msg = "J has fewer edges than G";
        for (int e = 0; ok && e < g.edge_count(); ++e)
            if (std::minmax(g.edge_u(e), g.edge_v(e)) != std::minmax(j.edge_u(e), j.edge_v(e))) {
                ok = false;
                msg = "edge " + std::to_string(e) + " of J does not match G";
            }
        for (int e = g.edge_count(); ok && e < j.edge_count(); ++e)
            if (!within_square(g, j.edge_u(e), j.edge_v(e))) {
                ok = false;
                msg = "chord " + std::to_string(e) + " joins vertices farther than 2 apart";
            }
        note_if(report, ok, &VerificationReport::within_square, "square: " + msg);
    }

    {
        bool strict = false;
        std::set<std::pair<int, int>> j_pairs;
        for (int e = 0; e < j.edge_count(); ++e)
            j_pairs.insert(std::minmax(j.edge_u(e), j.edge_v(e)));
        for (int u = 0; u < g.vertex_count() && !strict; ++u)
            for (int v = u + 1; v < g.vertex_count() && !strict; ++v)
                if (within_square(g, u, v) && !j_pairs.count({u, v})) strict = true;
        report.square_strict = strict;
    }

    note_if(report, j.edge_count() == g.edge_count() + 2 * (n - 1),
            &VerificationReport::edge_count_formula,
            "edge count |E(J)| = |E(G)| + 2n - 2 fails");

    {
        int max_deg = 0;
        for (int v = 0; v < j.vertex_count(); ++v) max_deg = std::max(max_deg, j.degree(v));
        note_if(report, max_deg <= 5, &VerificationReport::max_degree_le5,
                "max degree of J is " + std::to_string(max_deg));
    }

    const auto forbidden = matching_edge_ids(g, x);
    bool ham = check_hamilton(j, h, forbidden);
    note_if(report, ham, &VerificationReport::hamilton_valid,
            "H is not a Hamilton cycle of J avoiding the matching");
    note_if(report, ham, &VerificationReport::omits_matching,
            "H is not realizable without matching edges");

    note_if(report, !g.is_simple() || j.is_simple(), &VerificationReport::simplicity_preserved,
            "G is simple but J is not");
    return report;
}

} // namespace squareham
