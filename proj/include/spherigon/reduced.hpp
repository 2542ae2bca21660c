#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spherigon/polygon.hpp"
#include "spherigon/scalars.hpp"

namespace spherigon {

// Indices (0-based) of the endpoints of the side opposite vertex i of an
// odd n-gon: ((i+(n-1)/2) mod n, (i+(n+1)/2) mod n). Reports and file
// exports print 1-based indices. Throws EvenGon for even n.
std::pair<int, int> opposite_side_indices(int i, int n);

// Per-vertex derived data of the chord decomposition:
//   t — projection of v onto the great circle of the opposite side;
//   o — crossing of chord (v_i, t_i) with the chord of the opposite vertex
//       v_{i+(n+1)/2};
//   alpha — angle at v_i between v_{i+1} and t_i;
//   beta  — angle at v_i between t_i and v_{i+(n+1)/2};
//   phi   — angle at o between v_i and t_{i+(n+1)/2};
//   b = |o t_i|, c = |o v_{i+(n+1)/2}|, y = tan(b).
struct DecompositionRow {
    Vec3 v;
    Vec3 t;
    Vec3 o;
    double alpha = 0.0;
    double beta = 0.0;
    double phi = 0.0;
    double b = 0.0;
    double c = 0.0;
    double y = 0.0;
};

struct ReducedDecomposition {
    double omega = 0.0;
    std::vector<DecompositionRow> rows;

    int size() const { return static_cast<int>(rows.size()); }
    double sum_phi() const;
};

// Builds the decomposition of a convex odd-gon whose chord geometry exists:
// every projection foot must land inside the relative interior of its
// opposite side and every chord pair must cross (throws NotReducedGeometry
// otherwise; throws EvenGon / NonConvex / DomainError on precondition
// violations). The stated row invariants hold when P is actually reduced
// with thickness omega.
ReducedDecomposition decompose(const SphericalPolygon& P, double omega);

// Diagnostics of the reducedness test.
struct ReducednessReport {
    bool reduced = false;
    bool odd = false;
    bool convex = false;
    double mean_distance = 0.0;            // mean of the vertex-to-side distances
    double max_residual = 0.0;             // max |d_i - mean|
    double min_interior_margin = 0.0;      // min arc distance of t_i to side endpoints
    std::vector<double> distances;         // d_i = |v_i t_i|
    std::vector<double> residuals;         // d_i - mean
    std::vector<double> interior_margins;  // per-vertex; negative = foot outside side
    std::string reason;                    // empty when reduced
};

// Reducedness criterion for polygons: odd vertex count, spherical convexity,
// every vertex projecting into the relative interior of its opposite side
// (margin tol), all distances equal within tol, and the common distance
// below pi/2. Never throws: failures come back in the report.
ReducednessReport is_reduced(const SphericalPolygon& P, double tol = 1e-8);

// Area from the decomposition: 2*sum f(y_i) - (n-2)*pi.
double area_via_phi(const ReducedDecomposition& D);

// Regular reduced odd-gon of thickness omega: vertices on a common circle
// around the north pole at colatitude arctan((lambda-y)/(1+lambda*y)),
// y = g(pi/n), longitudes 2*pi*k/n. Throws EvenGon / DomainError.
SphericalPolygon regular_odd_gon(int n, double omega);

struct PerturbedResult {
    SphericalPolygon polygon;
    int iterations = 0;       // accepted Gauss-Newton steps, last attempt
    double max_residual = 0;  // final max |d_i - omega|
    int retries = 0;          // delta halvings performed
    double delta_used = 0;    // perturbation magnitude of the last attempt
};

// Non-regular reduced polygon: perturb the regular one by seeded noise of
// magnitude <= delta in the vertex spherical coordinates, then project back
// onto the constraint manifold {|v_i t_i| = omega for all i} by damped
// Gauss-Newton (minimal-norm steps). If the solution violates the
// relative-interior clause, retries with delta/2 (same seed) up to 3 times.
// delta = 0 returns the regular polygon unchanged.
// Throws SolverDiverged after 100 iterations without convergence,
// RelativeInteriorViolated when the retry budget is spent.
PerturbedResult perturbed_reduced_polygon(int n, double omega, std::uint64_t seed, double delta);

// Butterfly B_i: the union of the two congruent triangles
// (v_i, o_i, t_{i+(n+1)/2}) and (v_{i+(n+1)/2}, o_i, t_i).
struct Butterfly {
    int index = 0;
    std::array<Vec3, 3> tri1;
    std::array<Vec3, 3> tri2;
    double area = 0.0;          // sum of the two triangle areas (side-length formula)
    double area_formula = 0.0;  // 2*(phi_i + alpha_i - pi/2)
};

// The n butterflies of a reduced decomposition; they cover the polygon.
std::vector<Butterfly> butterfly_decomposition(const ReducedDecomposition& D);

struct CircumCircle {
    Vec3 center;
    double radius = 0.0;  // mean vertex distance
    double spread = 0.0;  // max - min vertex distance
};

// Least-squares circumcenter: the point minimizing the variance of the
// vertex distances (Gauss-Newton from the vertex centroid). For a polygon
// inscribed in a circle the spread vanishes.
CircumCircle circumscribed_center(const SphericalPolygon& P);

}  // namespace spherigon
