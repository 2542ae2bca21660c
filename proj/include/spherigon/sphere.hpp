#pragma once

#include <optional>

#include "spherigon/tolerances.hpp"
#include "spherigon/vec3.hpp"

namespace spherigon {

// Great circle {p : dot(p, normal) = 0}. normal and -normal give the same
// circle with opposite hemisphere orientations.
struct GreatCircle {
    Vec3 normal;  // unit pole
};

// Shorter great-circle segment between two non-antipodal unit points.
struct GeodesicArc {
    Vec3 a;
    Vec3 b;
};

// {p : dot(p, center) >= 0}.
struct Hemisphere {
    Vec3 center;  // unit
};

// Intersection of the hemispheres centered at g and h (distinct, non-antipodal).
struct Lune {
    Vec3 g;
    Vec3 h;
};

// Spherical distance in [0, pi]. atan2 of cross norm and dot: full precision
// near 0 and pi, where acos(dot) loses digits.
double sph_dist(const Vec3& a, const Vec3& b);

// Unique great circle through two points. Throws DegenerateArc when
// |a x b| < 1e-12 (equal or antipodal points).
GreatCircle great_circle_through(const Vec3& a, const Vec3& b);

// Closest point of the circle to p. Throws PoleProjection when p is within
// 1e-12 of either pole of the circle.
Vec3 project_to_circle(const Vec3& p, const GreatCircle& l);

// Arc length of the (shorter) arc.
double arc_length(const GeodesicArc& arc);

// Point at arc-length parameter s in [0, length] from arc.a toward arc.b.
Vec3 arc_point(const GeodesicArc& arc, double s);

// True when p lies on the great circle of the arc (within tol) and inside
// the angular span of the arc (within tol of arc length at the ends).
bool arc_contains(const GeodesicArc& arc, const Vec3& p, double tol = 1e-9);

// Intersection point of two arcs on distinct great circles, if any.
// Throws CoplanarArcs when the circles coincide within tolerance.
std::optional<Vec3> arcs_intersection(const GeodesicArc& u, const GeodesicArc& v,
                                      double tol = 1e-9);

// Angle at `vertex` between the arcs toward p and toward q, in [0, pi].
double angle_at(const Vec3& vertex, const Vec3& p, const Vec3& q);

// Thickness of the lune: distance between the midpoints of its two boundary
// arcs. Asserts the identity thickness = pi - sph_dist(g, h) within 1e-12.
// Throws DegenerateLune on equal/antipodal centers.
double lune_thickness(const Lune& l);

// Spherical triangle area from its three vertices via Girard's excess.
double girard_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);

// Spherical triangle area from side lengths only (half-angle excess formula);
// independent of the interior-angle path.
double triangle_area_from_sides(double a, double b, double c);

}  // namespace spherigon
