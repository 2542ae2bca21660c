#include "spherigon/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "spherigon/errors.hpp"

namespace spherigon {

double sph_dist(const Vec3& a, const Vec3& b) {
    return std::atan2(cross(a, b).norm(), dot(a, b));
}

GreatCircle great_circle_through(const Vec3& a, const Vec3& b) {
    Vec3 c = cross(a, b);
    if (c.norm() < 1e-12)
        throw DegenerateArc("no unique great circle: points equal or antipodal");
    return GreatCircle{c.normalized()};
}

Vec3 project_to_circle(const Vec3& p, const GreatCircle& l) {
    double d = dot(p, l.normal);
    if (std::abs(d) > 1.0 - 1e-12)
        throw PoleProjection("projection of a circle pole is undefined");
    return (p - l.normal * d).normalized();
}

double arc_length(const GeodesicArc& arc) {
    return sph_dist(arc.a, arc.b);
}

Vec3 arc_point(const GeodesicArc& arc, double s) {
    Vec3 axis = cross(arc.a, arc.b);
    if (axis.norm() < 1e-12)
        throw DegenerateArc("degenerate arc has no interior points");
    return rotate_about(arc.a, axis.normalized(), s);
}

bool arc_contains(const GeodesicArc& arc, const Vec3& p, double tol) {
    Vec3 n = cross(arc.a, arc.b);
    double nn = n.norm();
    if (nn < 1e-12)
        throw DegenerateArc("degenerate arc");
    if (std::abs(dot(p, n / nn)) > tol)
        return false;
    // On the circle, d(a,p) + d(p,b) equals the arc length exactly when p is
    // on the shorter segment, and exceeds it otherwise.
    return sph_dist(arc.a, p) + sph_dist(p, arc.b) <= arc_length(arc) + tol;
}

std::optional<Vec3> arcs_intersection(const GeodesicArc& u, const GeodesicArc& v, double tol) {
    GreatCircle cu = great_circle_through(u.a, u.b);
    GreatCircle cv = great_circle_through(v.a, v.b);
    Vec3 dir = cross(cu.normal, cv.normal);
    if (dir.norm() < 1e-12)
        throw CoplanarArcs("arcs lie on the same great circle");
    Vec3 cand = dir.normalized();
    for (const Vec3& c : {cand, -cand}) {
        if (arc_contains(u, c, tol) && arc_contains(v, c, tol))
            return c;
    }
    return std::nullopt;
}

double angle_at(const Vec3& vertex, const Vec3& p, const Vec3& q) {
    Vec3 tp = (p - vertex * dot(p, vertex)).normalized();
    Vec3 tq = (q - vertex * dot(q, vertex)).normalized();
    return std::atan2(cross(tp, tq).norm(), dot(tp, tq));
}

double lune_thickness(const Lune& l) {
    if (cross(l.g, l.h).norm() < 1e-12)
        throw DegenerateLune("lune centers equal or antipodal");
    // Midpoint of the boundary arc of hemisphere G inside H: the point of the
    // circle polar to g nearest to h; symmetrically for the other arc.
    Vec3 mg = project_to_circle(l.h, GreatCircle{l.g});
    Vec3 mh = project_to_circle(l.g, GreatCircle{l.h});
    double t = sph_dist(mg, mh);
    double identity = kPi - sph_dist(l.g, l.h);
    if (std::abs(t - identity) > 1e-12)
        throw Error("internal: lune midpoint construction disagrees with pi - center distance");
    return t;
}

double girard_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
    return angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b) - kPi;
}

double triangle_area_from_sides(double a, double b, double c) {
    double s = 0.5 * (a + b + c);
    double t = std::tan(0.5 * s) * std::tan(0.5 * (s - a)) * std::tan(0.5 * (s - b)) *
               std::tan(0.5 * (s - c));
    // Tiny negatives from roundoff on needle triangles.
    return 4.0 * std::atan(std::sqrt(std::max(t, 0.0)));
}

}  // namespace spherigon
