#include "diamond/draw.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace diamond {

PlanarPoint project_to_plane(const std::vector<int>& v) {
    if (v.size() != 3)
        throw std::invalid_argument("project_to_plane expects a 3-coordinate vector");
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    static const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    return {(v[0] - v[1]) * inv_sqrt2, (v[0] + v[1] - 2.0 * v[2]) * inv_sqrt6};
}

namespace {

void append_num(std::string& out, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", value);
    out += buf;
}

}  // namespace

std::string emit_svg(const Graph& g, const DiamondEmbedding& e, const DrawingConfig& cfg) {
    if (cfg.scale <= 0 || cfg.margin < 0 || cfg.vertex_radius < 0)
        throw std::invalid_argument("emit_svg: bad drawing config");
    if (e.dimension != 2)
        throw UnsupportedDimension("emit_svg renders dimension-2 embeddings only");
    auto check = verify_embedding(g, e);
    if (!check.ok)
        throw std::invalid_argument("emit_svg: embedding failed verification: " +
                                    check.violation);

    std::vector<PlanarPoint> pts(g.n);
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (int v = 0; v < g.n; ++v) {
        pts[v] = project_to_plane(e.coords[v]);
        if (v == 0) {
            minx = maxx = pts[v].x;
            miny = maxy = pts[v].y;
        } else {
            minx = std::min(minx, pts[v].x);
            maxx = std::max(maxx, pts[v].x);
            miny = std::min(miny, pts[v].y);
            maxy = std::max(maxy, pts[v].y);
        }
    }
    // SVG y grows downwards; flip so the drawing keeps the plane orientation.
    auto px = [&](const PlanarPoint& p) { return cfg.margin + (p.x - minx) * cfg.scale; };
    auto py = [&](const PlanarPoint& p) { return cfg.margin + (maxy - p.y) * cfg.scale; };

    long long width = g.n == 0 ? static_cast<long long>(2 * cfg.margin)
                               : std::llround(std::ceil((maxx - minx) * cfg.scale + 2 * cfg.margin));
    long long height = g.n == 0 ? static_cast<long long>(2 * cfg.margin)
                                : std::llround(std::ceil((maxy - miny) * cfg.scale + 2 * cfg.margin));

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    for (auto [u, v] : g.edges) {
        svg += "  <line x1=\"";
        append_num(svg, px(pts[u]));
        svg += "\" y1=\"";
        append_num(svg, py(pts[u]));
        svg += "\" x2=\"";
        append_num(svg, px(pts[v]));
        svg += "\" y2=\"";
        append_num(svg, py(pts[v]));
        svg += "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int v = 0; v < g.n; ++v) {
        svg += "  <circle cx=\"";
        append_num(svg, px(pts[v]));
        svg += "\" cy=\"";
        append_num(svg, py(pts[v]));
        svg += "\" r=\"";
        append_num(svg, cfg.vertex_radius);
        svg += "\" fill=\"black\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace diamond
