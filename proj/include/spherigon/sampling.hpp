#pragma once

#include "spherigon/polygon.hpp"
#include "spherigon/rng.hpp"

namespace spherigon {

// Random convex spherical polygon: `points` draws inside a cap of radius
// `cap_radius` around a random center, gnomonic projection to the tangent
// plane, planar convex hull, hull vertices kept in counterclockwise order.
// Retries until the hull has at least 3 vertices and passes the convexity
// predicate (a handful of draws at most).
SphericalPolygon random_convex_polygon(Rng& rng, int points = 12, double cap_radius = 0.7);

// Random lune whose thickness is bounded away from 0 and pi/2.
Lune random_lune(Rng& rng);

// Spherical right triangle with the right angle at C. Side a = |BC|,
// b = |CA|, c = |AB| (hypotenuse); angle_a at vertex A, angle_b at vertex B.
struct RightTriangle {
    Vec3 A, B, C;
    double a, b, c;
    double angle_a, angle_b;
};

// Legs drawn uniformly from (0.05, 1.35).
RightTriangle random_right_triangle(Rng& rng);

// Uniform point inside a convex polygon (rejection from the smallest cap
// around the vertex centroid that contains all vertices).
Vec3 random_point_inside(Rng& rng, const SphericalPolygon& P);

}  // namespace spherigon
