#pragma once

#include "jacpair/newton.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace jacpair {

/// Minimal lattice-polygon plot: grid dots, shaded polygon, outer edges colored
/// blue (no interior lattice points) or red (some), non-outer boundary black,
/// an optional highlighted face in green, circles on interior lattice points.
inline std::string polygon_svg(const LatticePolygon& poly, const Poly2& support_of,
                               const std::optional<Face>& highlight = std::nullopt) {
    const int unit = 40, margin = 30;
    int maxi = 1, maxj = 1;
    for (const auto& v : poly.vertices()) {
        maxi = std::max(maxi, v.i);
        maxj = std::max(maxj, v.j);
    }
    maxi += 1;
    maxj += 1;
    const int w = 2 * margin + unit * maxi, h = 2 * margin + unit * maxj;
    auto X = [&](double i) { return margin + i * unit; };
    auto Y = [&](double j) { return h - margin - j * unit; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    for (int i = 0; i <= maxi; ++i)
        for (int j = 0; j <= maxj; ++j)
            os << "  <circle cx=\"" << X(i) << "\" cy=\"" << Y(j)
               << "\" r=\"1.5\" fill=\"#bbbbbb\"/>\n";
    if (poly.size() >= 3) {
        os << "  <polygon points=\"";
        for (const auto& v : poly.vertices()) os << X(v.i) << "," << Y(v.j) << " ";
        os << "\" fill=\"#000000\" fill-opacity=\"0.08\" stroke=\"none\"/>\n";
    }
    auto edge_line = [&](const Monomial& a, const Monomial& b, const std::string& color) {
        os << "  <line x1=\"" << X(a.i) << "\" y1=\"" << Y(a.j) << "\" x2=\"" << X(b.i)
           << "\" y2=\"" << Y(b.j) << "\" stroke=\"" << color << "\" stroke-width=\"2.5\"/>\n";
    };
    const auto& v = poly.vertices();
    if (poly.size() >= 2) {
        std::vector<Face> outer = outer_edges(poly);
        auto is_outer = [&](const Monomial& a, const Monomial& b) -> const Face* {
            for (const auto& e : outer)
                if (e.points[0] == std::min(a, b) && e.points[1] == std::max(a, b)) return &e;
            return nullptr;
        };
        std::size_t n = poly.is_segment() ? 1 : v.size();
        for (std::size_t k = 0; k < n; ++k) {
            const Monomial& a = v[k];
            const Monomial& b = v[(k + 1) % v.size()];
            if (const Face* e = is_outer(a, b)) {
                bool free = edge_interior_lattice_points(*e).empty();
                edge_line(a, b, free ? "#1f4fd8" : "#d81f1f");
                for (const auto& p : edge_interior_lattice_points(*e))
                    os << "  <circle cx=\"" << X(p.i) << "\" cy=\"" << Y(p.j)
                       << "\" r=\"6\" fill=\"none\" stroke=\"#444444\"/>\n";
            } else {
                edge_line(a, b, "#000000");
            }
        }
    }
    if (highlight && highlight->is_edge())
        edge_line(highlight->points[0], highlight->points[1], "#1fa832");
    for (const auto& [m, c] : support_of.terms())
        os << "  <circle cx=\"" << X(m.i) << "\" cy=\"" << Y(m.j)
           << "\" r=\"3.5\" fill=\"#222222\"/>\n";
    if (highlight && highlight->is_vertex())
        os << "  <circle cx=\"" << X(highlight->points[0].i) << "\" cy=\""
           << Y(highlight->points[0].j) << "\" r=\"7\" fill=\"none\" stroke=\"#1fa832\""
           << " stroke-width=\"2.5\"/>\n";
    os << "</svg>\n";
    return os.str();
}

inline void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SVG file: " + path);
    out << svg;
}

}  // namespace jacpair
