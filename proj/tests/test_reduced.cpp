#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "spherigon/reduced.hpp"
#include "spherigon/scalars.hpp"
#include "spherigon/sphere.hpp"
#include "spherigon/tolerances.hpp"

using namespace spherigon;

namespace {

Vec3 on_sphere(double colat, double lon) {
    return {std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon), std::cos(colat)};
}

double side_spread(const SphericalPolygon& P) {
    double lo = kPi, hi = 0.0;
    for (int i = 0; i < P.size(); ++i) {
        double s = sph_dist(P.vertex(i), P.vertex(i + 1));
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return hi - lo;
}

std::array<double, 3> sorted_sides(const std::array<Vec3, 3>& t) {
    std::array<double, 3> s{sph_dist(t[0], t[1]), sph_dist(t[1], t[2]), sph_dist(t[2], t[0])};
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_SUITE("reduced") {

TEST_CASE("opposite side indices, including the wraparound") {
    CHECK(opposite_side_indices(0, 5) == std::pair<int, int>(2, 3));
    CHECK(opposite_side_indices(1, 5) == std::pair<int, int>(3, 4));
    CHECK(opposite_side_indices(2, 5) == std::pair<int, int>(4, 0));
    CHECK(opposite_side_indices(4, 5) == std::pair<int, int>(1, 2));
    CHECK(opposite_side_indices(0, 3) == std::pair<int, int>(1, 2));
    CHECK(opposite_side_indices(0, 7) == std::pair<int, int>(3, 4));
    CHECK_THROWS_AS(opposite_side_indices(0, 4), EvenGon);
    CHECK_THROWS_AS(opposite_side_indices(1, 6), EvenGon);
}

TEST_CASE("regular odd-gons pass the reducedness criterion") {
    for (int n : {3, 5, 7, 9}) {
        for (double omega : {0.3, 0.8, 1.3}) {
            SphericalPolygon P = regular_odd_gon(n, omega);
            REQUIRE(P.size() == n);
            ReducednessReport rep = is_reduced(P);
            CHECK(rep.reduced);
            CHECK(rep.odd);
            CHECK(rep.convex);
            CHECK(std::abs(rep.mean_distance - omega) < 1e-12);
            CHECK(rep.max_residual < 1e-12);
            CHECK(rep.min_interior_margin > 0.0);
            CHECK(rep.reason.empty());
        }
    }
}

TEST_CASE("regular odd-gon guards") {
    CHECK_THROWS_AS(regular_odd_gon(4, 0.8), EvenGon);
    CHECK_THROWS_AS(regular_odd_gon(6, 0.8), EvenGon);
    CHECK_THROWS_AS(regular_odd_gon(1, 0.8), DomainError);
    CHECK_THROWS_AS(regular_odd_gon(5, 0.0), DomainError);
    CHECK_THROWS_AS(regular_odd_gon(5, kPi / 2), DomainError);
}

TEST_CASE("even-gons fail the criterion with the odd diagnostic") {
    std::vector<Vec3> sq;
    for (int k = 0; k < 4; ++k)
        sq.push_back(on_sphere(0.6, kPi / 2 * k));
    ReducednessReport rep = is_reduced(SphericalPolygon(sq));
    CHECK_FALSE(rep.reduced);
    CHECK_FALSE(rep.odd);
    CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("decomposition of the regular pentagon: every row identity") {
    const int n = 5;
    const double omega = 0.8;
    SphericalPolygon P = regular_odd_gon(n, omega);
    ReducedDecomposition D = decompose(P, omega);
    REQUIRE(D.size() == n);
    CHECK(D.omega == omega);
    ThicknessProfile prof(omega);
    for (const DecompositionRow& r : D.rows) {
        CHECK(std::abs(r.b + r.c - omega) < 1e-12);
        CHECK(std::abs(r.y - std::tan(r.b)) < 1e-14);
        CHECK(std::abs(r.phi - kPi / n) < 1e-12);  // regular: common crossing angle
        CHECK(std::abs(r.y - scalar_g(r.phi, prof)) < 1e-12);
        CHECK(std::abs(r.alpha - scalar_f(r.y, prof)) < 1e-12);
        CHECK(r.beta <= r.alpha + 1e-12);
        CHECK(r.beta > 0.0);
        CHECK(r.phi > 0.0);
        CHECK(r.phi < kPi / 2);
        // t lies on the opposite side's great circle at distance omega from v.
        CHECK(std::abs(sph_dist(r.v, r.t) - omega) < 1e-12);
    }
    CHECK(std::abs(D.sum_phi() - kPi) < 1e-12);
}

TEST_CASE("decomposition area formula equals the excess") {
    for (int n : {3, 5, 7}) {
        for (double omega : {0.5, 1.0}) {
            SphericalPolygon P = regular_odd_gon(n, omega);
            ReducedDecomposition D = decompose(P, omega);
            CHECK(std::abs(area_via_phi(D) - girard_area(P)) < 1e-11);
        }
    }
}

TEST_CASE("decomposition guards") {
    std::vector<Vec3> sq;
    for (int k = 0; k < 4; ++k)
        sq.push_back(on_sphere(0.6, kPi / 2 * k));
    CHECK_THROWS_AS(decompose(SphericalPolygon(sq), 0.6), EvenGon);
    SphericalPolygon P = regular_odd_gon(5, 0.8);
    CHECK_THROWS_AS(decompose(P, 0.0), DomainError);
    CHECK_THROWS_AS(decompose(P, kPi / 2), DomainError);
}

TEST_CASE("strongly irregular convex pentagons lack the chord geometry") {
    std::vector<Vec3> v;
    for (double lon : {0.0, 0.3, 1.2, 2.5, 4.0})
        v.push_back(on_sphere(0.7, lon));
    SphericalPolygon P(v);
    REQUIRE(is_spherically_convex(P));
    CHECK_FALSE(is_reduced(P).reduced);
    CHECK_THROWS_AS(decompose(P, 0.7), NotReducedGeometry);
}

TEST_CASE("pushing one vertex perturbs exactly the three incident distances") {
    const int n = 5;
    const double omega = 0.8;
    SphericalPolygon P = regular_odd_gon(n, omega);
    // Slide vertex 0 toward the pole; sides (4,0) and (0,1) move with it.
    std::vector<Vec3> v = P.vertices();
    Vec3 axis = cross(v[0], Vec3{0, 0, 1}).normalized();
    v[0] = rotate_about(v[0], axis, 1e-3);
    ReducednessReport rep = is_reduced(SphericalPolygon(v));
    CHECK_FALSE(rep.reduced);
    REQUIRE(rep.distances.size() == n);
    // Distance i depends on vertex i and on the opposite side's endpoints:
    // moving v0 touches d_0 (own projection), d_2 (side 4-0), d_3 (side 0-1).
    for (int i : {0, 2, 3})
        CHECK(std::abs(rep.distances[static_cast<size_t>(i)] - omega) > 1e-5);
    for (int i : {1, 4})
        CHECK(std::abs(rep.distances[static_cast<size_t>(i)] - omega) < 1e-12);
}

TEST_CASE("butterflies: congruent wings, two area routes, exact cover sum") {
    const double omega = 0.8;
    for (int n : {5, 7}) {
        SphericalPolygon P = regular_odd_gon(n, omega);
        ReducedDecomposition D = decompose(P, omega);
        std::vector<Butterfly> B = butterfly_decomposition(D);
        REQUIRE(static_cast<int>(B.size()) == n);
        double total = 0.0;
        for (const Butterfly& b : B) {
            std::array<double, 3> s1 = sorted_sides(b.tri1);
            std::array<double, 3> s2 = sorted_sides(b.tri2);
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(s1[static_cast<size_t>(k)] - s2[static_cast<size_t>(k)]) < 1e-11);
            CHECK(std::abs(b.area - b.area_formula) < 1e-11);
            CHECK(b.area > 0.0);
            total += b.area;
        }
        // Regular case: the butterflies tile the polygon exactly.
        CHECK(std::abs(total - girard_area(P)) < 1e-10);
    }
}

TEST_CASE("perturbed polygons: reduced, non-regular, deterministic") {
    PerturbedResult res = perturbed_reduced_polygon(5, 0.8, 42, 0.03);
    const SphericalPolygon& P = res.polygon;
    REQUIRE(P.size() == 5);
    CHECK(res.max_residual < 1e-10);
    ReducednessReport rep = is_reduced(P, 1e-8);
    CHECK(rep.reduced);
    CHECK(side_spread(P) > 1e-7);
    CHECK(girard_area(P) < regular_area(5, 0.8));

    // Canonical gauge: centroid at the north pole, first vertex at longitude 0.
    Vec3 centroid{0, 0, 0};
    for (int i = 0; i < 5; ++i)
        centroid = centroid + P.vertex(i);
    centroid = centroid.normalized();
    CHECK(std::abs(centroid.z - 1.0) < 1e-12);
    CHECK(std::abs(P.vertex(0).y) < 1e-12);
    CHECK(P.vertex(0).x > 0.0);

    PerturbedResult again = perturbed_reduced_polygon(5, 0.8, 42, 0.03);
    for (int i = 0; i < 5; ++i)
        CHECK(sph_dist(P.vertex(i), again.polygon.vertex(i)) == 0.0);

    PerturbedResult other = perturbed_reduced_polygon(5, 0.8, 43, 0.03);
    CHECK(sph_dist(P.vertex(1), other.polygon.vertex(1)) > 1e-9);
}

TEST_CASE("zero perturbation returns the regular polygon") {
    PerturbedResult res = perturbed_reduced_polygon(7, 0.6, 9, 0.0);
    SphericalPolygon R = regular_odd_gon(7, 0.6);
    for (int i = 0; i < 7; ++i)
        CHECK(sph_dist(res.polygon.vertex(i), R.vertex(i)) < 1e-15);
    CHECK(res.iterations == 0);
}

TEST_CASE("perturbation guards") {
    CHECK_THROWS_AS(perturbed_reduced_polygon(4, 0.8, 1, 0.03), EvenGon);
    CHECK_THROWS_AS(perturbed_reduced_polygon(5, 0.8, 1, 0.06), DomainError);
    CHECK_THROWS_AS(perturbed_reduced_polygon(5, 0.8, 1, -0.01), DomainError);
    CHECK_THROWS_AS(perturbed_reduced_polygon(5, 1.6, 1, 0.03), DomainError);
}

TEST_CASE("perturbed areas stay below the regular bound across seeds") {
    for (int n : {5, 7, 9}) {
        double bound = regular_area(n, 0.9);
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            PerturbedResult res = perturbed_reduced_polygon(n, 0.9, seed, 0.03);
            CHECK(is_reduced(res.polygon).reduced);
            CHECK(girard_area(res.polygon) < bound);
        }
    }
}

TEST_CASE("circumscribed circle of regular and octant polygons") {
    SphericalPolygon P = regular_odd_gon(7, 0.9);
    CircumCircle c = circumscribed_center(P);
    CHECK(c.spread < 1e-9);
    CHECK(std::abs(c.center.z - 1.0) < 1e-9);
    CHECK(std::abs(c.radius - sph_dist(c.center, P.vertex(0))) < 1e-12);

    SphericalPolygon oct({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
    CircumCircle oc = circumscribed_center(oct);
    CHECK(sph_dist(oc.center, Vec3{1, 1, 1}.normalized()) < 1e-6);
    CHECK(oc.spread < 1e-9);

    // Perturbed polygons are generically not inscribed in any circle.
    PerturbedResult res = perturbed_reduced_polygon(5, 0.8, 42, 0.03);
    CircumCircle pc = circumscribed_center(res.polygon);
    CHECK(pc.spread > 1e-7);
}

TEST_CASE("sum of crossing angles for perturbed polygons clears pi") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        PerturbedResult res = perturbed_reduced_polygon(7, 0.8, seed, 0.03);
        ReducednessReport rep = is_reduced(res.polygon);
        REQUIRE(rep.reduced);
        ReducedDecomposition D = decompose(res.polygon, rep.mean_distance);
        CHECK(D.sum_phi() >= kPi - 1e-9);
        CHECK(std::abs(area_via_phi(D) - girard_area(res.polygon)) < 1e-9);
    }
}

}  // TEST_SUITE
