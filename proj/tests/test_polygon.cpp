#include <cmath>
#include <vector>

#include "doctest.h"

#include "spherigon/polygon.hpp"
#include "spherigon/reduced.hpp"
#include "spherigon/rng.hpp"
#include "spherigon/sampling.hpp"
#include "spherigon/tolerances.hpp"

using namespace spherigon;

namespace {

const Vec3 kX{1, 0, 0};
const Vec3 kY{0, 1, 0};
const Vec3 kZ{0, 0, 1};

SphericalPolygon octant() { return SphericalPolygon({kX, kY, kZ}); }

Vec3 on_sphere(double colat, double lon) {
    return {std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon), std::cos(colat)};
}

// Convex ring around the north pole.
SphericalPolygon ring_polygon(int n, double colat) {
    std::vector<Vec3> v;
    for (int k = 0; k < n; ++k)
        v.push_back(on_sphere(colat, 2 * kPi * k / n));
    return SphericalPolygon(v);
}

}  // namespace

TEST_SUITE("polygon") {

TEST_CASE("constructor rejects tiny and degenerate inputs") {
    CHECK_THROWS_AS(SphericalPolygon({kX, kY}), DomainError);
    CHECK_THROWS_AS(SphericalPolygon({kX, kX, kY}), DegenerateArc);
    CHECK_THROWS_AS(SphericalPolygon({kX, -kX, kY}), DegenerateArc);
    // Non-unit inputs are normalized.
    SphericalPolygon P({Vec3{2, 0, 0}, Vec3{0, 3, 0}, Vec3{0, 0, 0.5}});
    CHECK(std::abs(P.vertex(0).norm() - 1.0) < 1e-15);
}

TEST_CASE("cyclic vertex access") {
    SphericalPolygon P = octant();
    CHECK(sph_dist(P.vertex(3), P.vertex(0)) == 0.0);
    CHECK(sph_dist(P.vertex(-1), P.vertex(2)) == 0.0);
    CHECK(sph_dist(P.vertex(7), P.vertex(1)) == 0.0);
}

TEST_CASE("octant triangle: angles, excess, triangulation") {
    SphericalPolygon P = octant();
    CHECK(is_spherically_convex(P));
    std::vector<double> ang = interior_angles(P);
    for (double a : ang)
        CHECK(std::abs(a - kPi / 2) < 1e-12);
    CHECK(std::abs(girard_area(P) - kPi / 2) < 1e-13);
    CHECK(std::abs(area_oracle_triangulated(P) - kPi / 2) < 1e-13);
}

TEST_CASE("orientation matters: clockwise winding is rejected") {
    SphericalPolygon reversed({kZ, kY, kX});
    CHECK_FALSE(is_spherically_convex(reversed));
    CHECK_THROWS_AS(girard_area(reversed), NonConvex);
    CHECK_THROWS_AS(area_oracle_triangulated(reversed), NonConvex);
}

TEST_CASE("dart quadrilateral is non-convex and diagnosed") {
    // Ring with one vertex pulled past the pole, inside the hull of the other
    // three: reflex corner there.
    SphericalPolygon dart({on_sphere(0.1, kPi), on_sphere(0.7, kPi / 2), on_sphere(0.7, kPi),
                           on_sphere(0.7, 3 * kPi / 2)});
    CHECK_FALSE(is_spherically_convex(dart));
    CHECK_THROWS_AS(girard_area(dart), NonConvex);
    CHECK_THROWS_AS(area_oracle_montecarlo(dart, 100, 1), NonConvex);
}

TEST_CASE("convex ring polygons agree across area oracles") {
    for (int n : {4, 5, 9}) {
        SphericalPolygon P = ring_polygon(n, 0.8);
        CHECK(is_spherically_convex(P));
        CHECK(std::abs(girard_area(P) - area_oracle_triangulated(P)) < 1e-11);
    }
}

TEST_CASE("random convex polygons: hulls are convex, oracles agree") {
    Rng rng(2024);
    for (int k = 0; k < 25; ++k) {
        SphericalPolygon P = random_convex_polygon(rng);
        CHECK(is_spherically_convex(P));
        CHECK(std::abs(girard_area(P) - area_oracle_triangulated(P)) < 1e-10);
        CHECK(girard_area(P) > 0.0);
    }
}

TEST_CASE("monte carlo oracle: deterministic, unbiased, guarded") {
    SphericalPolygon P = octant();
    MonteCarloArea one = area_oracle_montecarlo(P, 200000, 7);
    MonteCarloArea two = area_oracle_montecarlo(P, 200000, 7);
    CHECK(one.area == two.area);  // bit-identical for equal seeds
    CHECK(one.std_error == two.std_error);
    CHECK(one.samples == 200000);
    MonteCarloArea other = area_oracle_montecarlo(P, 200000, 8);
    CHECK(one.area != other.area);
    CHECK(std::abs(one.area - kPi / 2) < 4 * one.std_error);
    CHECK(one.std_error > 0.0);
    CHECK_THROWS_AS(area_oracle_montecarlo(P, 0, 1), InvalidSampleCount);
    CHECK_THROWS_AS(area_oracle_montecarlo(P, -5, 1), InvalidSampleCount);
}

TEST_CASE("containment test honors edges and interior") {
    SphericalPolygon P = octant();
    CHECK(contains_point_convex(P, Vec3{1, 1, 1}.normalized()));
    CHECK(contains_point_convex(P, kX));                           // vertex
    CHECK(contains_point_convex(P, Vec3{1, 1, 0}.normalized()));  // edge midpoint
    CHECK_FALSE(contains_point_convex(P, -kZ));
    CHECK_FALSE(contains_point_convex(P, Vec3{-1, 1, 1}.normalized()));
    std::vector<Vec3> normals = inward_edge_normals(P);
    CHECK(contains_point_convex(normals, Vec3{1, 1, 1}.normalized()));
    CHECK_FALSE(contains_point_convex(normals, -kZ));
}

TEST_CASE("random interior points are contained") {
    Rng rng(77);
    SphericalPolygon P = ring_polygon(7, 0.9);
    for (int k = 0; k < 500; ++k)
        CHECK(contains_point_convex(P, random_point_inside(rng, P)));
}

TEST_CASE("dual boundary sampling covers every polar arc") {
    SphericalPolygon P = ring_polygon(5, 0.8);
    std::vector<Vec3> pts = dual_boundary_points(P, 16);
    CHECK(pts.size() == 5 * 16);
    for (const Vec3& p : pts)
        CHECK(std::abs(p.norm() - 1.0) < 1e-12);
}

TEST_CASE("thickness of the octant triangle is a right angle") {
    ThicknessEstimate t = thickness(octant());
    CHECK(std::abs(t.value - kPi / 2) < 1e-9);
    CHECK(t.error_bound > 0.0);
}

TEST_CASE("thickness recovers the construction parameter of regular gons") {
    for (double omega : {0.3, 0.8, 1.3}) {
        SphericalPolygon P = regular_odd_gon(5, omega);
        ThicknessEstimate t = thickness(P, 256);
        CHECK(std::abs(t.value - omega) < 1e-4);
    }
}

TEST_CASE("thinner triangles have smaller thickness") {
    // Half-angles below the equilateral point (~0.61 for colatitude 1), so
    // narrowing the base narrows the minimal containing lune.
    double prev = kPi;
    for (double w : {0.55, 0.35, 0.2}) {
        SphericalPolygon tri({kZ, on_sphere(1.0, -w), on_sphere(1.0, w)});
        CHECK(is_spherically_convex(tri));
        double t = thickness(tri).value;
        CHECK(t < prev);
        CHECK(t > 0.0);
        prev = t;
    }
}

TEST_CASE("thickness demands a usable resolution") {
    CHECK_THROWS_AS(thickness(octant(), 32), DomainError);
    CHECK_THROWS_AS(thickness(octant(), 0), DomainError);
}

}  // TEST_SUITE
