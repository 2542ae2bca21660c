#include "spherigon/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace spherigon {

namespace {

struct Frame {
    Vec3 e1, e2, e3;  // e3 = view axis

    // Orthographic projection; y flipped for SVG's downward axis.
    std::pair<double, double> to_plane(const Vec3& p) const {
        return {dot(p, e1), -dot(p, e2)};
    }
};

Frame view_frame(const SphericalPolygon& P) {
    Vec3 sum{0, 0, 0};
    for (const Vec3& v : P.vertices())
        sum = sum + v;
    Frame f;
    f.e3 = sum.normalized();
    f.e1 = any_orthonormal(f.e3);
    f.e2 = cross(f.e3, f.e1);
    return f;
}

std::string fmt(double x) {
    // Fixed formatting keeps the byte output deterministic.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x + 0.0);  // +0.0 normalizes -0
    return buf;
}

void polyline(std::ostringstream& out, const Frame& f, const Vec3& a, const Vec3& b,
              const char* cls) {
    GeodesicArc arc{a, b};
    double len = arc_length(arc);
    const int segments = 48;
    out << "<polyline class=\"" << cls << "\" points=\"";
    for (int k = 0; k <= segments; ++k) {
        auto [x, y] = f.to_plane(arc_point(arc, len * k / segments));
        out << fmt(x) << "," << fmt(y);
        if (k < segments)
            out << " ";
    }
    out << "\"/>\n";
}

void marker(std::ostringstream& out, const Frame& f, const Vec3& p, const char* cls, double r) {
    auto [x, y] = f.to_plane(p);
    out << "<circle class=\"" << cls << "\" cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\""
        << fmt(r) << "\"/>\n";
}

}  // namespace

std::string render_svg(const SphericalPolygon& P, const std::optional<ReducedDecomposition>& D) {
    Frame f = view_frame(P);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"-1.15 -1.15 2.3 2.3\" width=\"640\" height=\"640\">\n"
        << "<style>\n"
        << ".sphere{fill:none;stroke:#ccc;stroke-width:0.006}\n"
        << ".edge{fill:none;stroke:#1a1a1a;stroke-width:0.008}\n"
        << ".chord{fill:none;stroke:#c03020;stroke-width:0.004}\n"
        << ".vertex{fill:#1a1a1a}\n"
        << ".foot{fill:#c03020}\n"
        << ".crossing{fill:#2050c0}\n"
        << "</style>\n"
        << "<circle class=\"sphere\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";

    int n = P.size();
    for (int i = 0; i < n; ++i)
        polyline(out, f, P.vertex(i), P.vertex(i + 1), "edge");
    if (D) {
        for (const DecompositionRow& r : D->rows)
            polyline(out, f, r.v, r.t, "chord");
        for (const DecompositionRow& r : D->rows)
            marker(out, f, r.t, "foot", 0.014);
        for (const DecompositionRow& r : D->rows)
            marker(out, f, r.o, "crossing", 0.014);
    }
    for (int i = 0; i < n; ++i)
        marker(out, f, P.vertex(i), "vertex", 0.018);

    out << "</svg>\n";
    return out.str();
}

}  // namespace spherigon
