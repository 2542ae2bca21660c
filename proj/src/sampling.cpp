#include "spherigon/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "spherigon/errors.hpp"

namespace spherigon {

namespace {

struct Planar {
    double u, v;
    int idx;
};

double cross2(const Planar& o, const Planar& a, const Planar& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

// Andrew monotone chain; returns hull indices in counterclockwise order.
std::vector<int> convex_hull(std::vector<Planar> pts) {
    std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
        return a.u < b.u || (a.u == b.u && a.v < b.v);
    });
    int m = static_cast<int>(pts.size());
    std::vector<Planar> h(2 * m);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    for (int i = m - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    std::vector<int> idx;
    for (int i = 0; i + 1 < k; ++i)
        idx.push_back(h[i].idx);
    return idx;
}

}  // namespace

SphericalPolygon random_convex_polygon(Rng& rng, int points, double cap_radius) {
    if (points < 3)
        throw DomainError("need at least 3 points");
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vec3 center = rng.unit_vector();
        Vec3 e1 = any_orthonormal(center);
        Vec3 e2 = cross(center, e1);
        std::vector<Vec3> draws;
        std::vector<Planar> plane;
        for (int i = 0; i < points; ++i) {
            Vec3 p = rng.in_cap(center, cap_radius);
            draws.push_back(p);
            // Gnomonic projection: great circles map to straight lines, so a
            // planar hull is a spherical hull.
            double w = dot(p, center);
            plane.push_back(Planar{dot(p, e1) / w, dot(p, e2) / w, i});
        }
        std::vector<int> hull = convex_hull(plane);
        if (hull.size() < 3)
            continue;
        std::vector<Vec3> verts;
        for (int i : hull)
            verts.push_back(draws[i]);
        try {
            SphericalPolygon P(std::move(verts));
            if (is_spherically_convex(P))
                return P;
        } catch (const Error&) {
            // duplicate draws can degenerate the hull; redraw
        }
    }
    throw Error("internal: random polygon generation kept degenerating");
}

Lune random_lune(Rng& rng) {
    Vec3 g = rng.unit_vector();
    double angle = rng.uniform(0.5 * kPi + 0.05, kPi - 0.05);
    Vec3 axis = any_orthonormal(g);
    axis = rotate_about(axis, g, rng.uniform(0.0, 2.0 * kPi));
    return Lune{g, rotate_about(g, axis, angle)};
}

RightTriangle random_right_triangle(Rng& rng) {
    RightTriangle t;
    t.C = rng.unit_vector();
    Vec3 e1 = any_orthonormal(t.C);
    e1 = rotate_about(e1, t.C, rng.uniform(0.0, 2.0 * kPi));
    Vec3 e2 = cross(t.C, e1);
    t.b = rng.uniform(0.05, 1.35);
    t.a = rng.uniform(0.05, 1.35);
    t.A = t.C * std::cos(t.b) + e1 * std::sin(t.b);
    t.B = t.C * std::cos(t.a) + e2 * std::sin(t.a);
    t.c = sph_dist(t.A, t.B);
    t.angle_a = angle_at(t.A, t.B, t.C);
    t.angle_b = angle_at(t.B, t.A, t.C);
    return t;
}

Vec3 random_point_inside(Rng& rng, const SphericalPolygon& P) {
    Vec3 sum{0, 0, 0};
    for (const Vec3& v : P.vertices())
        sum = sum + v;
    Vec3 center = sum.normalized();
    double radius = 0.0;
    for (const Vec3& v : P.vertices())
        radius = std::max(radius, sph_dist(center, v));
    radius += 1e-6;
    std::vector<Vec3> normals = inward_edge_normals(P);
    for (int k = 0; k < 1000000; ++k) {
        Vec3 p = rng.in_cap(center, radius);
        if (contains_point_convex(normals, p))
            return p;
    }
    throw Error("internal: rejection sampling failed to hit the polygon");
}

}  // namespace spherigon
