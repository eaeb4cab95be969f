#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "squareham/io.hpp"

namespace squareham {

namespace {

std::string edge_style(int e, const Highlight& hl) {
    std::vector<std::string> attrs;
    if (hl.chord_edges.count(e)) attrs.push_back("color=red");
    if (hl.x_edges.count(e)) attrs.push_back("style=bold");
    if (hl.m_edges.count(e)) attrs.push_back("style=dashed");
    if (hl.h_edges.count(e)) {
        attrs.push_back("penwidth=3");
        if (!hl.chord_edges.count(e)) attrs.push_back("color=forestgreen");
    }
    if (attrs.empty()) return "";
    std::string out = " [";
    for (size_t i = 0; i < attrs.size(); ++i) out += (i ? "," : "") + attrs[i];
    return out + "]";
}

struct Point {
    double x = 0, y = 0;
};

// Barycentric layout: outer face on a regular polygon, interior vertices
// iterated to the average of their neighbors.
bool tutte_layout(const PlaneMultigraph& map, std::vector<Point>& pos) {
    const auto faces = trace_faces(map);
    const Face* outer = nullptr;
    for (const auto& f : faces)
        if (f.is_outer) outer = &f;

    std::vector<int> ring;
    for (int d : outer->walk) {
        int v = map.tail(d);
        if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
    }
    if (ring.size() < 3) return false;

    const int n = map.vertex_count();
    pos.assign(n, Point{});
    std::vector<char> fixed(n, 0);
    const double radius = 250.0, cx = 300.0, cy = 300.0;
    for (size_t k = 0; k < ring.size(); ++k) {
        double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(ring.size());
        pos[ring[k]] = {cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
        fixed[ring[k]] = 1;
    }

    for (int sweep = 0; sweep < 2000; ++sweep) {
        double moved = 0;
        for (int v = 0; v < n; ++v) {
            if (fixed[v]) continue;
            double sx = 0, sy = 0;
            for (int d : map.rotation(v)) {
                sx += pos[map.head(d)].x;
                sy += pos[map.head(d)].y;
            }
            Point next{sx / map.degree(v), sy / map.degree(v)};
            moved += std::abs(next.x - pos[v].x) + std::abs(next.y - pos[v].y);
            pos[v] = next;
        }
        if (moved < 1e-9) break;
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double dx = pos[u].x - pos[v].x, dy = pos[u].y - pos[v].y;
            if (dx * dx + dy * dy < 1e-6) return false;
        }
    return true;
}

void circular_layout(const PlaneMultigraph& map, std::vector<Point>& pos) {
    const int n = map.vertex_count();
    pos.assign(n, Point{});
    for (int v = 0; v < n; ++v) {
        double angle = 2.0 * M_PI * v / n;
        pos[v] = {300.0 + 250.0 * std::cos(angle), 300.0 + 250.0 * std::sin(angle)};
    }
}

} // namespace

std::string export_dot(const PlaneMultigraph& map, const Highlight& highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (int e = 0; e < map.edge_count(); ++e) {
        int u = map.edge_u(e), v = map.edge_v(e);
        if (u > v) std::swap(u, v);
        out << "  " << u << " -- " << v << edge_style(e, highlight) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_svg(const PlaneMultigraph& map, const Highlight& highlight) {
    std::vector<Point> pos;
    bool degenerate = !tutte_layout(map, pos);
    if (degenerate) circular_layout(map, pos);

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    if (degenerate)
        out << "<!-- LayoutDegenerate: barycentric layout collapsed, circular fallback -->\n";

    // Parallel edges of one pair fan out with distinct control points.
    std::map<std::pair<int, int>, int> seen_pairs;
    std::map<std::pair<int, int>, int> pair_count;
    for (int e = 0; e < map.edge_count(); ++e)
        ++pair_count[std::minmax(map.edge_u(e), map.edge_v(e))];

    for (int e = 0; e < map.edge_count(); ++e) {
        const auto key = std::minmax(map.edge_u(e), map.edge_v(e));
        const int index = seen_pairs[key]++;
        const int bundle = pair_count[key];
        const Point a = pos[key.first], b = pos[key.second];

        std::string stroke = "black";
        double width = 1.5;
        std::string dash;
        if (highlight.x_edges.count(e)) width = 3.0;
        if (highlight.m_edges.count(e)) {
            stroke = "gray";
            dash = " stroke-dasharray=\"6,4\"";
        }
        if (highlight.chord_edges.count(e)) stroke = "red";
        if (highlight.h_edges.count(e)) {
            stroke = highlight.chord_edges.count(e) ? "red" : "forestgreen";
            width = 4.0;
        }

        if (bundle == 1) {
            out << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\""
                << b.y << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"" << dash
                << " />\n";
        } else {
            const double mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
            double nx = -(b.y - a.y), ny = b.x - a.x;
            const double len = std::hypot(nx, ny);
            if (len > 1e-9) {
                nx /= len;
                ny /= len;
            }
            const double offset = (index - (bundle - 1) / 2.0) * 60.0;
            out << "<path d=\"M " << a.x << ' ' << a.y << " Q " << mx + nx * offset << ' '
                << my + ny * offset << ' ' << b.x << ' ' << b.y << "\" fill=\"none\" stroke=\""
                << stroke << "\" stroke-width=\"" << width << "\"" << dash << " />\n";
        }
    }
    for (int v = 0; v < map.vertex_count(); ++v) {
        out << "<circle cx=\"" << pos[v].x << "\" cy=\"" << pos[v].y
            << "\" r=\"7\" fill=\"white\" stroke=\"black\" />\n";
        out << "<text x=\"" << pos[v].x << "\" y=\"" << pos[v].y + 3.5
            << "\" font-size=\"9\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace squareham
