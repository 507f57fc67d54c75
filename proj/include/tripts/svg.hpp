#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "tripts/graphs.hpp"
#include "tripts/matching.hpp"

namespace tripts {

struct SvgOptions {
    double width = 800;
    double margin = 40;
    bool labels = true;
    bool show_triangles = false;       // shade the empty triangle of each edge
    std::vector<Edge> triangle_edges;  // subset to shade; empty means all
};

namespace detail {

struct Mapper {
    double minx, miny, maxx, maxy, scale, margin, height;
    // SVG y grows downwards; flip so down-triangles render point-down
    double X(double x) const { return margin + (x - minx) * scale; }
    double Y(double y) const { return margin + (maxy - y) * scale; }
};

inline Mapper make_mapper(const PointSet& ps, const SvgOptions& o) {
    Mapper m{0, 0, 1, 1, 1, o.margin, 0};
    if (!ps.empty()) {
        m.minx = m.maxx = ps[0].x.to_double();
        m.miny = m.maxy = ps[0].y.to_double();
        for (const Point& p : ps) {
            m.minx = std::min(m.minx, p.x.to_double());
            m.maxx = std::max(m.maxx, p.x.to_double());
            m.miny = std::min(m.miny, p.y.to_double());
            m.maxy = std::max(m.maxy, p.y.to_double());
        }
    }
    double w = std::max(m.maxx - m.minx, 1e-9);
    double h = std::max(m.maxy - m.miny, 1e-9);
    m.scale = (o.width - 2 * o.margin) / std::max(w, h);
    m.height = h * m.scale + 2 * o.margin;
    return m;
}

/// Corner k of a fixed triangle (opposite support side k), in doubles.
inline std::pair<double, double> triangle_corner(const FixedTriangle& t, int k) {
    auto n = FixedTriangle::normals(t.orientation);
    int a = (k + 1) % 3, b = (k + 2) % 3;
    double a1 = n[a].first.to_double(), b1 = n[a].second.to_double(),
           c1 = t.support[a].to_double();
    double a2 = n[b].first.to_double(), b2 = n[b].second.to_double(),
           c2 = t.support[b].to_double();
    double det = a1 * b2 - a2 * b1;
    return {(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

} // namespace detail

/// Render points, edges and a matching (thick strokes) to SVG, optionally
/// shading the empty triangle witnessing each edge.
inline void render_svg(std::ostream& os, const TriGraph& g, const Matching& matching,
                       const SvgOptions& opt = {}) {
    detail::Mapper m = detail::make_mapper(g.points, opt);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
       << m.height << "\" viewBox=\"0 0 " << opt.width << " " << m.height << "\">\n";
    os << "<!-- y-axis flipped to screen coordinates: down-triangles render point-down -->\n";
    if (opt.show_triangles) {
        Orientation o = g.flavor == Flavor::up ? Orientation::up : Orientation::down;
        const std::vector<Edge> wanted(opt.triangle_edges.begin(), opt.triangle_edges.end());
        for (auto& [u, v] : g.edges) {
            if (!wanted.empty() &&
                std::find(wanted.begin(), wanted.end(), Edge{u, v}) == wanted.end()) {
                continue;
            }
            FixedTriangle t = smallest_triangle(g.points[u], g.points[v], o);
            os << "<polygon points=\"";
            for (int k = 0; k < 3; ++k) {
                auto [x, y] = detail::triangle_corner(t, k);
                os << m.X(x) << "," << m.Y(y) << (k < 2 ? " " : "");
            }
            os << "\" fill=\"#88aadd\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
        }
    }
    for (auto& [u, v] : g.edges) {
        bool matched = matching.edges.count({u, v}) > 0;
        os << "<line x1=\"" << m.X(g.points[u].x.to_double()) << "\" y1=\""
           << m.Y(g.points[u].y.to_double()) << "\" x2=\"" << m.X(g.points[v].x.to_double())
           << "\" y2=\"" << m.Y(g.points[v].y.to_double()) << "\" stroke=\""
           << (matched ? "#c02020" : "#404040") << "\" stroke-width=\""
           << (matched ? 4.0 : 1.2) << "\"/>\n";
    }
    for (const Point& p : g.points) {
        double x = m.X(p.x.to_double()), y = m.Y(p.y.to_double());
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"4\" fill=\"#202020\"/>\n";
        if (opt.labels) {
            os << "<text x=\"" << x + 6 << "\" y=\"" << y - 6
               << "\" font-size=\"11\" font-family=\"sans-serif\">" << p.id << "</text>\n";
        }
    }
    os << "</svg>\n";
}

} // namespace tripts
