#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spherigon/sphere.hpp"

namespace spherigon {

// Spherical polygon as an ordered vertex list, counterclockwise as seen from
// outside the sphere. The constructor renormalizes vertices and rejects
// n < 3 and equal/antipodal *adjacent* vertices; convexity is a separate
// predicate (is_spherically_convex) so that non-convex inputs can still be
// represented, diagnosed, and reported.
class SphericalPolygon {
  public:
    explicit SphericalPolygon(std::vector<Vec3> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    // Cyclic access: any integer index is reduced mod n.
    const Vec3& vertex(int i) const;

  private:
    std::vector<Vec3> vertices_;
};

// Inward edge normals n_i = normalize(v_i x v_{i+1}).
std::vector<Vec3> inward_edge_normals(const SphericalPolygon& P);

// True iff (a) every vertex is on the non-negative side of every inward edge
// normal (>= -1e-12), (b) no vertex pair is antipodal, and (c) the normalized
// vertex centroid u is an open-hemisphere witness: dot(v_j, u) > 0 for all j.
// Accepts only the stored (counterclockwise) orientation.
bool is_spherically_convex(const SphericalPolygon& P);

// Interior angles at each vertex, each in (0, pi). Throws NonConvex if the
// polygon is not spherically convex.
std::vector<double> interior_angles(const SphericalPolygon& P);

// Girard excess: sum of interior angles minus (n-2)pi. Throws NonConvex.
double girard_area(const SphericalPolygon& P);

// Independent area oracle: fan-triangulate from vertex 0 and sum triangle
// areas computed from side lengths alone. Throws NonConvex.
double area_oracle_triangulated(const SphericalPolygon& P);

struct MonteCarloArea {
    double area = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
};

// Second independent oracle: uniform sphere sampling (normalized Gaussian
// triples from Rng(seed)), area = 4pi * hit fraction, reported standard
// error = 4pi * sqrt(p(1-p)/samples). Deterministic for a fixed seed.
// Throws InvalidSampleCount when samples <= 0, NonConvex on non-convex P.
MonteCarloArea area_oracle_montecarlo(const SphericalPolygon& P, std::int64_t samples,
                                      std::uint64_t seed);

// Convex containment: p on the non-negative side of every inward edge normal
// (tolerance -1e-12). The polygon is treated as a closed set.
bool contains_point_convex(const SphericalPolygon& P, const Vec3& p);
// Same test against precomputed normals (Monte Carlo hot path).
bool contains_point_convex(const std::vector<Vec3>& inward_normals, const Vec3& p);

struct ThicknessEstimate {
    double value = 0.0;        // radians
    double error_bound = 0.0;  // conservative bracket from the refinement
};

// Thickness (minimal width of a containing lune) of a convex polygon.
// The centers of supporting hemispheres form the closed dual boundary curve:
// edge-normal points joined by arcs of the circles polar to each vertex.
// Thickness = pi - diameter of that curve; the diameter is located on a
// `resolution`-point sampling of the curve and sharpened by golden-section
// refinement in both curve parameters. Throws NonConvex; requires
// resolution >= 64.
ThicknessEstimate thickness(const SphericalPolygon& P, int resolution = 256);

// Dual boundary samples (exposed for tests and the thickness oracle):
// per_arc points on each polar arc, concatenated in curve order.
std::vector<Vec3> dual_boundary_points(const SphericalPolygon& P, int per_arc);

}  // namespace spherigon
