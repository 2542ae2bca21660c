#include "spherigon/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spherigon/errors.hpp"
#include "spherigon/rng.hpp"

namespace spherigon {

std::pair<int, int> opposite_side_indices(int i, int n) {
    if (n % 2 == 0)
        throw EvenGon("opposite side is defined only for odd-gons");
    if (n < 3)
        throw DomainError("n must be at least 3");
    int j = ((i % n) + n) % n;
    return {(j + (n - 1) / 2) % n, (j + (n + 1) / 2) % n};
}

double ReducedDecomposition::sum_phi() const {
    double s = 0.0;
    for (const DecompositionRow& r : rows)
        s += r.phi;
    return s;
}

namespace {

// Signed position of p along the side from a toward b (p assumed on the
// side's great circle with pole `pole`).
double side_param(const Vec3& a, const Vec3& p, const Vec3& pole) {
    return std::atan2(dot(cross(a, p), pole), dot(a, p));
}

struct SideProjection {
    Vec3 t;
    double dist;
    double margin;  // distance of t to the nearer side endpoint; negative = outside
};

SideProjection project_to_opposite_side(const SphericalPolygon& P, int i) {
    auto [j1, j2] = opposite_side_indices(i, P.size());
    GreatCircle circle = great_circle_through(P.vertex(j1), P.vertex(j2));
    SideProjection out;
    out.t = project_to_circle(P.vertex(i), circle);
    out.dist = sph_dist(P.vertex(i), out.t);
    double len = sph_dist(P.vertex(j1), P.vertex(j2));
    double s = side_param(P.vertex(j1), out.t, circle.normal);
    out.margin = std::min(s, len - s);
    return out;
}

}  // namespace

ReducednessReport is_reduced(const SphericalPolygon& P, double tol) {
    ReducednessReport rep;
    int n = P.size();
    rep.odd = (n % 2 == 1);
    if (!rep.odd) {
        rep.reason = "even vertex count: every reduced spherical polygon is an odd-gon";
        return rep;
    }
    rep.convex = is_spherically_convex(P);
    if (!rep.convex) {
        rep.reason = "not spherically convex";
        return rep;
    }
    try {
        double sum = 0.0;
        rep.min_interior_margin = kPi;
        for (int i = 0; i < n; ++i) {
            SideProjection sp = project_to_opposite_side(P, i);
            rep.distances.push_back(sp.dist);
            rep.interior_margins.push_back(sp.margin);
            rep.min_interior_margin = std::min(rep.min_interior_margin, sp.margin);
            sum += sp.dist;
        }
        rep.mean_distance = sum / n;
        rep.max_residual = 0.0;
        for (double d : rep.distances) {
            rep.residuals.push_back(d - rep.mean_distance);
            rep.max_residual = std::max(rep.max_residual, std::abs(d - rep.mean_distance));
        }
    } catch (const Error& e) {
        rep.reason = std::string("projection degenerate: ") + e.what();
        return rep;
    }

    if (rep.min_interior_margin <= tol) {
        rep.reason = "a vertex projects outside the relative interior of its opposite side";
        return rep;
    }
    if (rep.max_residual >= tol) {
        rep.reason = "vertex-to-opposite-side distances are not all equal";
        return rep;
    }
    if (rep.mean_distance >= 0.5 * kPi) {
        rep.reason = "common distance is not below pi/2";
        return rep;
    }
    rep.reduced = true;
    return rep;
}

ReducedDecomposition decompose(const SphericalPolygon& P, double omega) {
    int n = P.size();
    if (n % 2 == 0)
        throw EvenGon("decomposition is defined only for odd-gons");
    if (!(omega > 0.0 && omega < 0.5 * kPi))
        throw DomainError("thickness must lie in (0, pi/2)");
    if (!is_spherically_convex(P))
        throw NonConvex("decomposition requires a spherically convex polygon");

    ReducedDecomposition D;
    D.omega = omega;
    D.rows.resize(n);

    std::vector<Vec3> feet(n);
    for (int i = 0; i < n; ++i) {
        SideProjection sp = project_to_opposite_side(P, i);
        if (sp.margin <= 1e-9)
            throw NotReducedGeometry(
                "a vertex projects outside the relative interior of its opposite side");
        feet[i] = sp.t;
    }
    for (int i = 0; i < n; ++i) {
        int opp = (i + (n + 1) / 2) % n;
        DecompositionRow& row = D.rows[i];
        row.v = P.vertex(i);
        row.t = feet[i];
        GeodesicArc chord_i{P.vertex(i), feet[i]};
        GeodesicArc chord_opp{P.vertex(opp), feet[opp]};
        std::optional<Vec3> o = arcs_intersection(chord_i, chord_opp);
        if (!o)
            throw NotReducedGeometry("chords of opposite vertices do not cross");
        row.o = *o;
        row.alpha = angle_at(P.vertex(i), P.vertex(i + 1), feet[i]);
        row.beta = angle_at(P.vertex(i), feet[i], P.vertex(opp));
        row.phi = angle_at(row.o, P.vertex(i), feet[opp]);
        row.b = sph_dist(row.o, feet[i]);
        row.c = sph_dist(row.o, P.vertex(opp));
        row.y = std::tan(row.b);
    }
    return D;
}

double area_via_phi(const ReducedDecomposition& D) {
    ThicknessProfile prof(D.omega);
    double sum = 0.0;
    for (const DecompositionRow& r : D.rows)
        sum += scalar_f(r.y, prof);
    return 2.0 * sum - (D.size() - 2) * kPi;
}

SphericalPolygon regular_odd_gon(int n, double omega) {
    if (n % 2 == 0)
        throw EvenGon("regular reduced polygons have an odd number of vertices");
    if (n < 3)
        throw DomainError("n must be at least 3");
    ThicknessProfile prof(omega);

    long double lambda = std::tan((long double)prof.omega);
    long double y = detail::g_ld(3.14159265358979323846264338327950288L / n, lambda);
    double colat = static_cast<double>(std::atan((lambda - y) / (1.0L + lambda * y)));
    std::vector<Vec3> verts;
    verts.reserve(n);
    for (int k = 0; k < n; ++k) {
        double lon = 2.0 * kPi * k / n;
        verts.push_back(Vec3{std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon),
                             std::cos(colat)});
    }
    return SphericalPolygon(std::move(verts));
}

namespace {

// Solve A x = b for symmetric positive definite A (in place), dimension m.
std::vector<double> cholesky_solve(std::vector<double> A, std::vector<double> b, int m) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = A[i * m + j];
            for (int k = 0; k < j; ++k)
                s -= A[i * m + k] * A[j * m + k];
            if (i == j) {
                if (s <= 0.0)
                    throw SolverDiverged("normal matrix lost positive definiteness");
                A[i * m + i] = std::sqrt(s);
            } else {
                A[i * m + j] = s / A[j * m + j];
            }
        }
    }
    for (int i = 0; i < m; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k)
            s -= A[i * m + k] * b[k];
        b[i] = s / A[i * m + i];
    }
    for (int i = m - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < m; ++k)
            s -= A[k * m + i] * b[k];
        b[i] = s / A[i * m + i];
    }
    return b;
}

std::vector<Vec3> vertices_from_params(const std::vector<double>& q) {
    int n = static_cast<int>(q.size()) / 2;
    std::vector<Vec3> verts(n);
    for (int i = 0; i < n; ++i) {
        double th = q[2 * i], lon = q[2 * i + 1];
        verts[i] = Vec3{std::sin(th) * std::cos(lon), std::sin(th) * std::sin(lon), std::cos(th)};
    }
    return verts;
}

// Residuals |v_i t_i| - omega of the equal-distance system.
std::vector<double> distance_residuals(const std::vector<double>& q, double omega) {
    SphericalPolygon P(vertices_from_params(q));
    int n = P.size();
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) {
        auto [j1, j2] = opposite_side_indices(i, n);
        GreatCircle circle = great_circle_through(P.vertex(j1), P.vertex(j2));
        r[i] = sph_dist(P.vertex(i), project_to_circle(P.vertex(i), circle)) - omega;
    }
    return r;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double sum_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return s;
}

SphericalPolygon canonicalize(const std::vector<Vec3>& verts) {
    Vec3 sum{0, 0, 0};
    for (const Vec3& v : verts)
        sum = sum + v;
    Vec3 u = sum.normalized();
    Vec3 z{0, 0, 1};
    std::vector<Vec3> out = verts;
    Vec3 axis = cross(u, z);
    if (axis.norm() > 1e-15) {
        Vec3 a = axis.normalized();
        double ang = sph_dist(u, z);
        for (Vec3& v : out)
            v = rotate_about(v, a, ang);
    }
    double lon0 = std::atan2(out[0].y, out[0].x);
    for (Vec3& v : out)
        v = rotate_about(v, z, -lon0);
    return SphericalPolygon(std::move(out));
}

}  // namespace

PerturbedResult perturbed_reduced_polygon(int n, double omega, std::uint64_t seed, double delta) {
    if (delta < 0.0 || delta > 0.05)
        throw DomainError("perturbation delta must lie in [0, 0.05]");
    SphericalPolygon regular = regular_odd_gon(n, omega);
    if (delta == 0.0)
        return PerturbedResult{regular, 0, 0.0, 0, 0.0};

    std::string last_reason;
    double d = delta;
    for (int retry = 0; retry <= 3; ++retry, d *= 0.5) {
        // Same seed on every retry: only the noise magnitude shrinks.
        Rng rng(seed);
        std::vector<double> q;
        q.reserve(2 * n);
        for (const Vec3& v : regular.vertices()) {
            q.push_back(std::acos(std::clamp(v.z, -1.0, 1.0)) + rng.uniform(-d, d));
            q.push_back(std::atan2(v.y, v.x) + rng.uniform(-d, d));
        }

        std::vector<double> r = distance_residuals(q, omega);
        double mu = 1e-3;
        const double h = 1e-6;
        // Drive the residuals to the floating-point floor, well below the
        // 1e-10 contract: the decomposition identities downstream amplify any
        // distance from the constraint manifold by the kernel conditioning
        // (up to ~1e3 near omega = atan 4), and they are checked at 1e-9.
        const double target = 1e-13;
        const double contract = 1e-10;
        int iters = 0;
        bool converged = max_abs(r) < target;
        while (!converged && iters < 100) {
            ++iters;
            // Central-difference Jacobian, n x 2n.
            int m = 2 * n;
            std::vector<double> J(static_cast<std::size_t>(n) * m);
            for (int k = 0; k < m; ++k) {
                std::vector<double> qp = q, qm = q;
                qp[k] += h;
                qm[k] -= h;
                std::vector<double> rp = distance_residuals(qp, omega);
                std::vector<double> rm = distance_residuals(qm, omega);
                for (int i = 0; i < n; ++i)
                    J[i * m + k] = (rp[i] - rm[i]) / (2.0 * h);
            }
            // Minimal-norm Levenberg-Marquardt step: -J^T (J J^T + mu I)^{-1} r.
            std::vector<double> JJt(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = 0.0;
                    for (int k = 0; k < m; ++k)
                        s += J[i * m + k] * J[j * m + k];
                    JJt[i * n + j] = s;
                }
            bool accepted = false;
            for (int damp = 0; damp < 25 && !accepted; ++damp) {
                std::vector<double> A = JJt;
                for (int i = 0; i < n; ++i)
                    A[i * n + i] += mu;
                std::vector<double> z;
                try {
                    z = cholesky_solve(std::move(A), r, n);
                } catch (const SolverDiverged&) {
                    mu *= 10.0;
                    continue;
                }
                std::vector<double> trial = q;
                for (int k = 0; k < m; ++k) {
                    double s = 0.0;
                    for (int i = 0; i < n; ++i)
                        s += J[i * m + k] * z[i];
                    trial[k] -= s;
                }
                try {
                    std::vector<double> rt = distance_residuals(trial, omega);
                    if (sum_sq(rt) < sum_sq(r)) {
                        q = std::move(trial);
                        r = std::move(rt);
                        mu = std::max(mu * 0.3, 1e-12);
                        accepted = true;
                    } else {
                        mu *= 10.0;
                    }
                } catch (const Error&) {
                    mu *= 10.0;  // step left the feasible region entirely
                }
            }
            if (!accepted) {
                // Stalled at maximum damping: good enough only if inside the
                // residual contract.
                if (max_abs(r) < contract) {
                    converged = true;
                    break;
                }
                throw SolverDiverged("Gauss-Newton step rejected at maximum damping");
            }
            converged = max_abs(r) < target;
        }
        if (!converged) {
            if (max_abs(r) < contract)
                converged = true;
            else
                throw SolverDiverged("no convergence within 100 iterations");
        }

        SphericalPolygon solved = canonicalize(vertices_from_params(q));
        ReducednessReport rep = is_reduced(solved, 1e-8);
        if (rep.reduced) {
            std::vector<double> sides;
            for (int i = 0; i < n; ++i)
                sides.push_back(sph_dist(solved.vertex(i), solved.vertex(i + 1)));
            double spread =
                *std::max_element(sides.begin(), sides.end()) -
                *std::min_element(sides.begin(), sides.end());
            if (spread <= 1e-7)
                throw SolverDiverged("perturbation collapsed back to the regular polygon");
            return PerturbedResult{solved, iters, max_abs(r), retry, d};
        }
        last_reason = rep.reason;
    }
    throw RelativeInteriorViolated("no reduced polygon within the retry budget: " + last_reason);
}

std::vector<Butterfly> butterfly_decomposition(const ReducedDecomposition& D) {
    int n = D.size();
    std::vector<Butterfly> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        int opp = (i + (n + 1) / 2) % n;
        const DecompositionRow& row = D.rows[i];
        Butterfly b;
        b.index = i;
        b.tri1 = {row.v, row.o, D.rows[opp].t};
        b.tri2 = {D.rows[opp].v, row.o, row.t};
        auto side_area = [](const std::array<Vec3, 3>& t) {
            return triangle_area_from_sides(sph_dist(t[1], t[2]), sph_dist(t[2], t[0]),
                                            sph_dist(t[0], t[1]));
        };
        b.area = side_area(b.tri1) + side_area(b.tri2);
        b.area_formula = 2.0 * (row.phi + row.alpha - 0.5 * kPi);
        out.push_back(b);
    }
    return out;
}

CircumCircle circumscribed_center(const SphericalPolygon& P) {
    int n = P.size();
    Vec3 base{0, 0, 0};
    for (const Vec3& v : P.vertices())
        base = base + v;
    base = base.normalized();

    // Distance-variance residuals over a tangent-plane parametrization of the
    // center; re-anchor the plane after every accepted step.
    auto residuals_at = [&](const Vec3& c) {
        std::vector<double> r(n);
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            r[i] = sph_dist(c, P.vertex(i));
            mean += r[i];
        }
        mean /= n;
        for (double& x : r)
            x -= mean;
        return r;
    };

    double mu = 1e-6;
    const double h = 1e-7;
    for (int iter = 0; iter < 100; ++iter) {
        Vec3 e1 = any_orthonormal(base);
        Vec3 e2 = cross(base, e1);
        auto center_at = [&](double s, double t) { return (base + e1 * s + e2 * t).normalized(); };
        std::vector<double> r = residuals_at(base);
        std::vector<double> J1(n), J2(n);
        {
            std::vector<double> rp = residuals_at(center_at(h, 0.0));
            std::vector<double> rm = residuals_at(center_at(-h, 0.0));
            for (int i = 0; i < n; ++i)
                J1[i] = (rp[i] - rm[i]) / (2.0 * h);
            rp = residuals_at(center_at(0.0, h));
            rm = residuals_at(center_at(0.0, -h));
            for (int i = 0; i < n; ++i)
                J2[i] = (rp[i] - rm[i]) / (2.0 * h);
        }
        double a11 = mu, a12 = 0.0, a22 = mu, g1 = 0.0, g2 = 0.0;
        for (int i = 0; i < n; ++i) {
            a11 += J1[i] * J1[i];
            a12 += J1[i] * J2[i];
            a22 += J2[i] * J2[i];
            g1 += J1[i] * r[i];
            g2 += J2[i] * r[i];
        }
        double det = a11 * a22 - a12 * a12;
        if (std::abs(det) < 1e-30)
            break;
        double ds = -(a22 * g1 - a12 * g2) / det;
        double dt = -(-a12 * g1 + a11 * g2) / det;
        Vec3 next = center_at(ds, dt);
        if (sum_sq(residuals_at(next)) <= sum_sq(r)) {
            base = next;
            mu = std::max(mu * 0.5, 1e-12);
        } else {
            mu *= 10.0;
        }
        if (std::abs(ds) + std::abs(dt) < 1e-13)
            break;
    }

    CircumCircle out;
    out.center = base;
    double lo = kPi, hi = 0.0, mean = 0.0;
    for (const Vec3& v : P.vertices()) {
        double d = sph_dist(base, v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        mean += d;
    }
    out.radius = mean / n;
    out.spread = hi - lo;
    return out;
}

}  // namespace spherigon
