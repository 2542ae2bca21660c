#include "spherigon/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "spherigon/errors.hpp"
#include "spherigon/json_io.hpp"
#include "spherigon/sampling.hpp"

namespace spherigon {

SweepGrid SweepGrid::defaults() {
    SweepGrid g;
    g.lambda_values = {0.25, 1.0, 4.0};
    g.n_values = {3, 5, 7, 9, 101};
    for (double l : g.lambda_values)
        g.omega_values.push_back(std::atan(l));
    g.seeds = {1, 2, 3};
    g.mc_samples = 200000;
    return g;
}

void SweepGrid::validate() const {
    if (lambda_values.empty() || n_values.empty() || omega_values.empty() || seeds.empty())
        throw DomainError("sweep grid has an empty dimension");
    for (double l : lambda_values)
        if (!(l > 0.0))
            throw DomainError("lambda values must be positive");
    for (int n : n_values) {
        if (n % 2 == 0)
            throw EvenGon("sweep n values must be odd");
        if (n < 3)
            throw DomainError("sweep n values must be >= 3");
    }
    for (double w : omega_values)
        if (!(w > 0.0 && w < 0.5 * kPi))
            throw DomainError("sweep omega values must lie in (0, pi/2)");
    if (mc_samples <= 0)
        throw InvalidSampleCount("mc_samples must be positive");
}

namespace {

// ---------------------------------------------------------------------------
// Shared context: reduced-polygon instances are built once (sequentially, so
// the run is deterministic) and read by many checks.

struct Instance {
    std::string name;
    SphericalPolygon polygon;
    double omega;
    bool regular;
    ReducedDecomposition decomp;
    std::vector<Butterfly> butterflies;
};

struct Ctx {
    const SweepGrid& grid;
    const VerifyOptions& opt;
    std::vector<Instance> instances;  // empty unless the theorems suite runs

    double excess_area(const SphericalPolygon& P) const {
        return girard_area(P) + opt.girard_bias;
    }
};

std::vector<Instance> build_instances(const SweepGrid& grid) {
    std::vector<Instance> out;
    for (int n : grid.n_values)
        for (double w : grid.omega_values) {
            SphericalPolygon P = regular_odd_gon(n, w);
            ReducedDecomposition D = decompose(P, w);
            std::vector<Butterfly> B = butterfly_decomposition(D);
            out.push_back(Instance{"regular n=" + std::to_string(n) + " omega=" + std::to_string(w),
                                   std::move(P), w, true, std::move(D), std::move(B)});
        }
    for (int n : grid.n_values) {
        if (n < 5 || n > 9)
            continue;  // solver instances stay small; regulars cover the rest
        for (double w : grid.omega_values)
            for (std::uint64_t seed : grid.seeds) {
                PerturbedResult pr = perturbed_reduced_polygon(n, w, seed, 0.03);
                ReducedDecomposition D = decompose(pr.polygon, w);
                std::vector<Butterfly> B = butterfly_decomposition(D);
                out.push_back(Instance{"perturbed n=" + std::to_string(n) + " omega=" +
                                           std::to_string(w) + " seed=" + std::to_string(seed),
                                       std::move(pr.polygon), w, false, std::move(D),
                                       std::move(B)});
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Margin bookkeeping: keep the worst case seen and where it happened.

struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    std::string where;

    void feed(double m, const std::string& at) {
        if (m < margin) {
            margin = m;
            where = at;
        }
    }
};

struct CheckOutcome {
    double margin = 0.0;
    double tolerance = 0.0;
    std::string details;
};

CheckOutcome finish(const Worst& w, double tol) {
    CheckOutcome out;
    out.tolerance = tol;
    if (!std::isfinite(w.margin)) {
        // no applicable cases in this grid: vacuously true, report the tolerance as margin
        out.margin = tol;
        out.details = "no applicable cases in this grid";
        return out;
    }
    out.margin = w.margin;
    out.details = "worst case: " + (w.where.empty() ? std::string("n/a") : w.where);
    return out;
}

std::string fmt_case(const std::string& label, double value) {
    std::ostringstream os;
    os << label << " (" << value << ")";
    return os.str();
}

// Point-in-spherical-triangle with angular slack eps.
bool triangle_contains(const std::array<Vec3, 3>& t, const Vec3& p, double eps) {
    for (int i = 0; i < 3; ++i) {
        Vec3 nrm = cross(t[i], t[(i + 1) % 3]);
        double nn = nrm.norm();
        if (nn < 1e-14)
            continue;  // degenerate edge: the other two half-spaces decide
        nrm = nrm / nn;
        double sign = dot(nrm, t[(i + 2) % 3]) >= 0.0 ? 1.0 : -1.0;
        if (sign * dot(nrm, p) < -eps)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// scalars suite

CheckOutcome chk_right_triangle_identities(const Ctx& c) {
    Worst w;
    const double tol = 1e-10;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 500; ++k) {
            RightTriangle t = random_right_triangle(rng);
            double r1 = std::abs(std::cos(t.angle_b) - std::cos(t.b) * std::sin(t.angle_a));
            double r2 = std::abs(std::cos(t.angle_a) - std::tan(t.b) / std::tan(t.c));
            double r3 = std::abs(std::sin(t.b) - std::sin(t.c) * std::sin(t.angle_b));
            double r = std::max({r1, r2, r3});
            w.feed(tol - r, fmt_case("seed " + std::to_string(seed) + " triangle " +
                                         std::to_string(k) + " residual",
                                     r));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_scalar_endpoints(const Ctx& c) {
    // Endpoint identities evaluated by the extended-precision kernels at the
    // representable endpoint. The defining polynomials vanish exactly at
    // x_max, so the residual angles scale like sqrt(rounding) ~ 1e-8; the
    // 1e-7 budget is the floating-point-reachable version of "equals".
    Worst w;
    const double tol = 1e-7;
    for (double lam : c.grid.lambda_values) {
        long double L = lam;
        long double xm = detail::x_max_ld(L);
        double e1 = std::abs((double)(detail::f_ld(xm, L) - 0.5L * 3.14159265358979323846L));
        double e2 = std::abs((double)detail::f2_ld(xm, L));
        double e3 = std::abs((double)detail::f1_ld(xm, L));
        double e4 = (double)std::fabs(detail::g_ld(0.5L * 3.14159265358979323846L - 1e-9L, L));
        double e5 = std::abs((double)(detail::g_ld(1e-9L, L) - xm));
        double e = std::max({e1, e2, e3, e4, e5});
        w.feed(tol - e, fmt_case("lambda " + std::to_string(lam) + " residual", e));
    }
    return finish(w, tol);
}

CheckOutcome chk_scalar_g_relation(const Ctx& c) {
    // Defining relation cos(phi) = g(1+lambda g)/(lambda-g), plus the exact
    // complement f1 + f = pi/2 and g's range (0, x_max).
    Worst w;
    const double tol = 1e-12;
    for (double lam : c.grid.lambda_values) {
        ThicknessProfile prof(std::atan(lam));
        for (int k = 1; k <= 512; ++k) {
            double phi = 0.5 * kPi * k / 513.0;
            double g = scalar_g(phi, prof);
            double resid = std::abs(std::cos(phi) - g * (1.0 + prof.lambda * g) / (prof.lambda - g));
            if (g <= 0.0 || g >= prof.x_max)
                resid = 1.0;  // outside the stated range
            double comp = std::abs(scalar_f1(g, prof) + scalar_f(g, prof) - 0.5 * kPi);
            double e = std::max(resid, comp);
            w.feed(tol - e, fmt_case("lambda " + std::to_string(lam) + " phi " +
                                         std::to_string(phi) + " residual",
                                     e));
        }
    }
    return finish(w, tol);
}

// The 7-lambda x 512-point grid of the published sweeps.
const double kSweepLambdas[] = {0.1, 0.25, 0.5, 1.0, 2.0, 5.0, 10.0};

CheckOutcome chk_ratio_decreasing(const Ctx&) {
    // f1/f2 strictly decreasing: successive differences negative and the
    // central finite-difference derivative negative at interior grid points.
    Worst w;
    const double tol = 1e-15;
    for (double lam : kSweepLambdas) {
        ThicknessProfile prof(std::atan(lam));
        const int m = 512;
        std::vector<double> ratio(m);
        for (int k = 0; k < m; ++k) {
            double x = prof.x_max * (k + 1) / (m + 1.0);
            ratio[k] = scalar_f1(x, prof) / scalar_f2(x, prof);
        }
        for (int k = 0; k + 1 < m; ++k) {
            double drop = ratio[k] - ratio[k + 1];
            w.feed(drop - tol,
                   fmt_case("lambda " + std::to_string(lam) + " grid step " + std::to_string(k) +
                                " drop",
                            drop));
        }
        double hstep = prof.x_max / (m + 1.0) * 1e-3;
        for (int k = 0; k < m; k += 16) {
            double x = prof.x_max * (k + 1) / (m + 1.0);
            double d = (scalar_f1(x + hstep, prof) / scalar_f2(x + hstep, prof) -
                        scalar_f1(x - hstep, prof) / scalar_f2(x - hstep, prof)) /
                       (2.0 * hstep);
            w.feed(-d - tol, fmt_case("lambda " + std::to_string(lam) + " x " + std::to_string(x) +
                                          " fd-derivative",
                                      d));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_big_f_prime_negative(const Ctx&) {
    Worst w;
    const double tol = 1e-15;
    for (double lam : kSweepLambdas) {
        ThicknessProfile prof(std::atan(lam));
        for (int k = 1; k <= 512; ++k) {
            double phi = 0.5 * kPi * k / 513.0;
            double d = F_prime_closed(phi, prof);
            w.feed(-d - tol,
                   fmt_case("lambda " + std::to_string(lam) + " phi " + std::to_string(phi) +
                                " F'",
                            d));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_big_f_prime_matches_fd(const Ctx&) {
    Worst w;
    const double tol = 1e-4;  // relative
    const double h = 1e-5;
    for (double lam : kSweepLambdas) {
        ThicknessProfile prof(std::atan(lam));
        for (int k = 1; k <= 512; ++k) {
            double phi = 0.5 * kPi * (k + 0.5) / 514.0;
            if (phi - h <= 0.0 || phi + h >= 0.5 * kPi)
                continue;
            double closed = F_prime_closed(phi, prof);
            double fd = (scalar_F(phi + h, prof) - scalar_F(phi - h, prof)) / (2.0 * h);
            double rel = std::abs(fd - closed) / std::abs(closed);
            w.feed(tol - rel, fmt_case("lambda " + std::to_string(lam) + " phi " +
                                           std::to_string(phi) + " rel-err",
                                       rel));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_big_f_concave(const Ctx&) {
    // Central second difference of F negative across the grid. The closed
    // second-derivative display is not used as ground truth; the step is
    // chosen so that the true |F''| dominates the difference noise.
    Worst w;
    const double tol = 1e-15;
    const double h = 1e-4;
    for (double lam : kSweepLambdas) {
        ThicknessProfile prof(std::atan(lam));
        for (int k = 1; k <= 512; ++k) {
            double phi = 0.5 * kPi * k / 513.0;
            if (phi - h <= 0.0 || phi + h >= 0.5 * kPi)
                continue;
            double second = (scalar_F(phi + h, prof) - 2.0 * scalar_F(phi, prof) +
                             scalar_F(phi - h, prof)) /
                            (h * h);
            w.feed(-second - tol, fmt_case("lambda " + std::to_string(lam) + " phi " +
                                               std::to_string(phi) + " F'' fd",
                                           second));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_regular_area_forms(const Ctx& c) {
    // regular_area internally asserts the two closed forms agree to 1e-12;
    // recompute the gap here to report the worst margin, including n=1001.
    Worst w;
    const double tol = 1e-12;
    std::vector<int> ns = c.grid.n_values;
    ns.push_back(301);
    ns.push_back(1001);
    for (int n : ns)
        for (double omega : c.grid.omega_values) {
            long double lambda = std::tan((long double)omega);
            long double pi_l = 3.14159265358979323846264338327950288L;
            long double y = detail::g_ld(pi_l / n, lambda);
            long double form1 =
                2.0L * pi_l - 2.0L * pi_l * detail::f1_ld(y, lambda) / detail::f2_ld(y, lambda);
            long double form2 = 2.0L * n * detail::f_ld(y, lambda) - (n - 2) * pi_l;
            double gap = std::abs((double)(form1 - form2));
            (void)regular_area(n, omega);  // the shipping assert must hold too
            w.feed(tol - gap, fmt_case("n=" + std::to_string(n) + " omega=" +
                                           std::to_string(omega) + " form gap",
                                       gap));
        }
    return finish(w, tol);
}

// ---------------------------------------------------------------------------
// polygons suite

CheckOutcome chk_area_oracles_triangulated(const Ctx& c) {
    Worst w;
    const double tol = 1e-9;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 66; ++k) {
            SphericalPolygon P = random_convex_polygon(rng, 4 + (int)(rng.uniform() * 12),
                                                       rng.uniform(0.15, 0.9));
            double gap = std::abs(c.excess_area(P) - area_oracle_triangulated(P));
            w.feed(tol - gap, fmt_case("seed " + std::to_string(seed) + " polygon " +
                                           std::to_string(k) + " gap",
                                       gap));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_area_oracle_montecarlo(const Ctx& c) {
    // Distance between the Monte Carlo estimate and the excess area in
    // standard-error units; 3 sigma is the gate.
    Worst w;
    const double tol = 3.0;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 2; ++k) {
            SphericalPolygon P = random_convex_polygon(rng, 10, 0.7);
            MonteCarloArea mc = area_oracle_montecarlo(P, c.grid.mc_samples, seed * 1000 + k);
            double z = std::abs(mc.area - c.excess_area(P)) / mc.std_error;
            w.feed(tol - z, fmt_case("seed " + std::to_string(seed) + " polygon " +
                                         std::to_string(k) + " z-score",
                                     z));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_lune_thickness(const Ctx& c) {
    Worst w;
    const double tol = 1e-12;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 334; ++k) {
            Lune l = random_lune(rng);
            // lune_thickness throws if the midpoint construction deviates
            // from pi - center distance; measure the gap directly as margin.
            double t = lune_thickness(l);
            double gap = std::abs(t - (kPi - sph_dist(l.g, l.h)));
            w.feed(tol - gap, fmt_case("seed " + std::to_string(seed) + " lune " +
                                           std::to_string(k) + " gap",
                                       gap));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_projection_minimality(const Ctx& c) {
    Worst w;
    const double tol = 1e-12;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 100; ++k) {
            GreatCircle circle{rng.unit_vector()};
            Vec3 p = rng.unit_vector();
            if (std::abs(dot(p, circle.normal)) > 1.0 - 1e-6)
                continue;
            Vec3 t = project_to_circle(p, circle);
            double dt = sph_dist(p, t);
            Vec3 e1 = any_orthonormal(circle.normal);
            Vec3 e2 = cross(circle.normal, e1);
            for (int j = 0; j < 100; ++j) {
                double a = 2.0 * kPi * j / 100.0;
                Vec3 cpt = e1 * std::cos(a) + e2 * std::sin(a);
                double slack = sph_dist(p, cpt) + tol - dt;
                w.feed(slack, fmt_case("seed " + std::to_string(seed) + " case " +
                                           std::to_string(k) + " slack",
                                       slack));
            }
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_triangle_inequality(const Ctx& c) {
    Worst w;
    const double tol = 1e-12;
    for (std::uint64_t seed : c.grid.seeds) {
        Rng rng(seed);
        for (int k = 0; k < 700; ++k) {
            Vec3 a = rng.unit_vector(), b = rng.unit_vector(), d = rng.unit_vector();
            double slack = sph_dist(a, b) + sph_dist(b, d) + tol - sph_dist(a, d);
            w.feed(slack, fmt_case("seed " + std::to_string(seed) + " triple " +
                                       std::to_string(k) + " slack",
                                   slack));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_reduced_roundtrip(const Ctx& c) {
    // Regular odd-gons are reduced and their sampled thickness returns omega.
    Worst w;
    const double tol = 1e-4;
    for (int n : c.grid.n_values)
        for (double omega : c.grid.omega_values) {
            SphericalPolygon P = regular_odd_gon(n, omega);
            ReducednessReport rep = is_reduced(P, 1e-8);
            if (!rep.reduced) {
                w.feed(-1.0, "regular n=" + std::to_string(n) + " omega=" +
                                 std::to_string(omega) + " not reduced: " + rep.reason);
                continue;
            }
            double gap = std::abs(thickness(P, 256).value - omega);
            w.feed(tol - gap, fmt_case("n=" + std::to_string(n) + " omega=" +
                                           std::to_string(omega) + " thickness gap",
                                       gap));
        }
    return finish(w, tol);
}

CheckOutcome chk_even_gon_not_reduced(const Ctx&) {
    // Even-gons are rejected outright (spherical square and hexagon).
    Worst w;
    const double tol = 1.0;
    for (int n : {4, 6}) {
        std::vector<Vec3> verts;
        for (int k = 0; k < n; ++k) {
            double lon = 2.0 * kPi * k / n;
            verts.push_back(Vec3{std::sin(0.6) * std::cos(lon), std::sin(0.6) * std::sin(lon),
                                 std::cos(0.6)});
        }
        ReducednessReport rep = is_reduced(SphericalPolygon(std::move(verts)));
        bool ok = !rep.reduced && !rep.odd;
        w.feed(ok ? 1.0 : -1.0, std::string("n=") + std::to_string(n) +
                                    (ok ? " correctly rejected" : " wrongly accepted"));
    }
    return finish(w, tol);
}

CheckOutcome chk_circumscribed_regular(const Ctx& c) {
    Worst w;
    const double tol = 1e-9;
    for (int n : c.grid.n_values)
        for (double omega : c.grid.omega_values) {
            CircumCircle cc = circumscribed_center(regular_odd_gon(n, omega));
            w.feed(tol - cc.spread, fmt_case("n=" + std::to_string(n) + " omega=" +
                                                 std::to_string(omega) + " spread",
                                             cc.spread));
        }
    return finish(w, tol);
}

// ---------------------------------------------------------------------------
// theorems suite (works on the shared instances)

CheckOutcome chk_decomposition_kernel(const Ctx& c) {
    // b_i + c_i = omega, y_i = g(phi_i), alpha_i = f(y_i).
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances) {
        ThicknessProfile prof(inst.omega);
        for (const DecompositionRow& r : inst.decomp.rows) {
            double e = std::abs(r.b + r.c - inst.omega);
            e = std::max(e, std::abs(r.y - scalar_g(r.phi, prof)));
            e = std::max(e, std::abs(r.alpha - scalar_f(r.y, prof)));
            w.feed(tol - e, fmt_case(inst.name + " residual", e));
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_phi_bounds(const Ctx& c) {
    Worst w;
    const double tol = 1e-15;
    for (const Instance& inst : c.instances)
        for (const DecompositionRow& r : inst.decomp.rows) {
            double m = std::min(r.phi, 0.5 * kPi - r.phi);
            w.feed(m - tol, fmt_case(inst.name + " phi margin", m));
        }
    return finish(w, tol);
}

CheckOutcome chk_beta_le_alpha(const Ctx& c) {
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances)
        for (const DecompositionRow& r : inst.decomp.rows)
            w.feed(r.alpha - r.beta + tol, fmt_case(inst.name + " alpha-beta", r.alpha - r.beta));
    return finish(w, tol);
}

CheckOutcome chk_butterfly_congruence(const Ctx& c) {
    // Corresponding side lengths of the two wings agree pairwise.
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances)
        for (const Butterfly& b : inst.butterflies) {
            double e = 0.0;
            for (int s = 0; s < 3; ++s) {
                double l1 = sph_dist(b.tri1[s], b.tri1[(s + 1) % 3]);
                double l2 = sph_dist(b.tri2[s], b.tri2[(s + 1) % 3]);
                e = std::max(e, std::abs(l1 - l2));
            }
            w.feed(tol - e, fmt_case(inst.name + " butterfly " + std::to_string(b.index) +
                                         " side gap",
                                     e));
        }
    return finish(w, tol);
}

CheckOutcome chk_butterfly_area_formula(const Ctx& c) {
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances)
        for (const Butterfly& b : inst.butterflies) {
            double e = std::abs(b.area - b.area_formula);
            w.feed(tol - e, fmt_case(inst.name + " butterfly " + std::to_string(b.index) +
                                         " area gap",
                                     e));
        }
    return finish(w, tol);
}

CheckOutcome chk_angle_sum_regular(const Ctx& c) {
    // Regular case: phi_i = pi/n for every i, so the sum is exactly pi.
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances) {
        if (!inst.regular)
            continue;
        int n = inst.decomp.size();
        double e = std::abs(inst.decomp.sum_phi() - kPi);
        for (const DecompositionRow& r : inst.decomp.rows)
            e = std::max(e, std::abs(r.phi - kPi / n));
        w.feed(tol - e, fmt_case(inst.name + " residual", e));
    }
    return finish(w, tol);
}

CheckOutcome chk_angle_sum_lower_bound(const Ctx& c) {
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances) {
        double slack = inst.decomp.sum_phi() - kPi + tol;
        w.feed(slack, fmt_case(inst.name + " sum-phi - pi", inst.decomp.sum_phi() - kPi));
    }
    return finish(w, tol);
}

CheckOutcome chk_butterfly_cover(const Ctx& c) {
    // Monte Carlo: uniform interior points must land in some butterfly.
    Worst w;
    const double eps = 1e-9;
    const double tol = 1.0;
    int points = static_cast<int>(std::max<std::int64_t>(1000, c.grid.mc_samples / 10));
    int done = 0;
    for (const Instance& inst : c.instances) {
        // Two covers per run (one regular, one perturbed) keep the suite fast.
        if (done >= 2)
            break;
        bool want_regular = (done == 0);
        if (inst.regular != want_regular)
            continue;
        Rng rng(c.grid.seeds.front() + 77);
        int uncovered = 0;
        for (int k = 0; k < points; ++k) {
            Vec3 p = random_point_inside(rng, inst.polygon);
            bool in = false;
            for (const Butterfly& b : inst.butterflies)
                if (triangle_contains(b.tri1, p, eps) || triangle_contains(b.tri2, p, eps)) {
                    in = true;
                    break;
                }
            if (!in)
                ++uncovered;
        }
        w.feed(uncovered == 0 ? 1.0 : -(double)uncovered,
               inst.name + ": " + std::to_string(uncovered) + " of " + std::to_string(points) +
                   " points uncovered");
        ++done;
    }
    return finish(w, tol);
}

CheckOutcome chk_butterfly_sum_dominates(const Ctx& c) {
    // Sum of butterfly areas >= polygon area (equality for regular).
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances) {
        double sum = 0.0;
        for (const Butterfly& b : inst.butterflies)
            sum += b.area;
        double excess = sum - c.excess_area(inst.polygon);
        w.feed(excess + tol, fmt_case(inst.name + " butterfly-sum - area", excess));
        if (inst.regular)
            w.feed(tol - std::abs(excess), fmt_case(inst.name + " equality gap", std::abs(excess)));
    }
    return finish(w, tol);
}

CheckOutcome chk_area_formula_agreement(const Ctx& c) {
    // 2*sum f(y_i) - (n-2)pi reproduces the excess area on every instance.
    Worst w;
    const double tol = 1e-9;
    for (const Instance& inst : c.instances) {
        double gap = std::abs(area_via_phi(inst.decomp) - c.excess_area(inst.polygon));
        w.feed(tol - gap, fmt_case(inst.name + " gap", gap));
    }
    return finish(w, tol);
}

CheckOutcome chk_jensen_concavity(const Ctx& c) {
    Worst w;
    const double tol = 1e-12;
    for (const Instance& inst : c.instances) {
        ThicknessProfile prof(inst.omega);
        double mean_phi = inst.decomp.sum_phi() / inst.decomp.size();
        double mean_F = 0.0;
        for (const DecompositionRow& r : inst.decomp.rows)
            mean_F += scalar_F(r.phi, prof);
        mean_F /= inst.decomp.size();
        double slack = scalar_F(mean_phi, prof) + tol - mean_F;
        w.feed(slack, fmt_case(inst.name + " Jensen slack", slack));
    }
    return finish(w, tol);
}

CheckOutcome chk_regular_area_monotone(const Ctx& c) {
    Worst w;
    const double tol = 1e-12;
    for (double omega : c.grid.omega_values) {
        double prev = regular_area(3, omega);
        for (int n = 5; n <= 101; n += 2) {
            double cur = regular_area(n, omega);
            double inc = cur - prev;
            w.feed(inc - tol, fmt_case("omega " + std::to_string(omega) + " n " +
                                           std::to_string(n) + " increment",
                                       inc));
            prev = cur;
        }
    }
    return finish(w, tol);
}

CheckOutcome chk_limit_area_convergence(const Ctx& c) {
    // |regular_area(n) - limit| decreases along n and is < 1e-3 by n = 1001;
    // at omega = pi/3 the limit formula reproduces (2 - sqrt(3))*pi exactly.
    Worst w;
    const double tol = 1e-3;
    const int ns[] = {3, 7, 15, 31, 63, 101, 301, 1001};
    for (double omega : c.grid.omega_values) {
        double limit = limit_area(omega);
        double prev_gap = -1.0;
        double gap = 0.0;
        for (int n : ns) {
            gap = std::abs(regular_area(n, omega) - limit);
            if (prev_gap >= 0.0)
                w.feed(prev_gap - gap, fmt_case("omega " + std::to_string(omega) + " n " +
                                                    std::to_string(n) + " gap drop",
                                                prev_gap - gap));
            prev_gap = gap;
        }
        w.feed(tol - gap,
               fmt_case("omega " + std::to_string(omega) + " gap at n=1001", gap));
    }
    double exact = std::abs(limit_area(kPi / 3.0) - (2.0 - std::sqrt(3.0)) * kPi);
    w.feed(1e-15 - exact, fmt_case("omega pi/3 closed-form residual", exact));
    return finish(w, tol);
}

CheckOutcome chk_nonregular_below_regular(const Ctx& c) {
    Worst w;
    const double tol = 1e-15;
    for (const Instance& inst : c.instances) {
        if (inst.regular)
            continue;
        double deficit = regular_area(inst.decomp.size(), inst.omega) - c.excess_area(inst.polygon);
        w.feed(deficit - tol, fmt_case(inst.name + " area deficit", deficit));
    }
    return finish(w, tol);
}

CheckOutcome chk_universal_area_bound(const Ctx& c) {
    Worst w;
    const double tol = 1e-15;
    for (const Instance& inst : c.instances) {
        double slack = limit_area(inst.omega) - c.excess_area(inst.polygon);
        w.feed(slack - tol, fmt_case(inst.name + " bound slack", slack));
    }
    return finish(w, tol);
}

// ---------------------------------------------------------------------------
// registry & driver

struct CheckDef {
    const char* claim;
    const char* reference;
    const char* statement;
    const char* suite;
    CheckOutcome (*fn)(const Ctx&);
};

const CheckDef kChecks[] = {
    // scalars
    {"big-f-concave-fd", "Lemma 3.7",
     "Central second differences of F are negative across the (lambda, phi) grid", "scalars",
     chk_big_f_concave},
    {"big-f-prime-closed-vs-fd", "Lemma 3.7",
     "Closed-form F' matches central finite differences within relative 1e-4", "scalars",
     chk_big_f_prime_matches_fd},
    {"big-f-prime-negative", "Lemma 3.7", "Closed-form F' is negative on (0, pi/2)", "scalars",
     chk_big_f_prime_negative},
    {"ratio-f1-f2-decreasing", "Lemma 3.6",
     "f1/f2 is strictly decreasing on (0, x_max): negative successive differences and negative "
     "finite-difference derivative",
     "scalars", chk_ratio_decreasing},
    {"regular-area-forms-agree", "Theorem 4.2",
     "The two closed forms of the regular area agree within 1e-12 up to n=1001", "scalars",
     chk_regular_area_forms},
    {"right-triangle-identities", "Eqs. (1)-(3)",
     "Right spherical triangles satisfy cos B = cos b sin A, cos A = tan b cot c, sin b = sin c "
     "sin B",
     "scalars", chk_right_triangle_identities},
    {"scalar-endpoint-identities", "Lemma 3.6",
     "Endpoint identities: f(x_max)=pi/2, f1(x_max)=f2(x_max)=0, g(pi/2-)=0, g(0+)=x_max",
     "scalars", chk_scalar_endpoints},
    {"scalar-g-defining-relation", "Lemma 4.1",
     "g satisfies cos phi = g(1+lambda g)/(lambda-g); f1 + f = pi/2; g maps into (0, x_max)",
     "scalars", chk_scalar_g_relation},
    // polygons
    {"area-oracle-montecarlo", "Lemma 2.1",
     "Monte Carlo area agrees with the excess area within 3 standard errors", "polygons",
     chk_area_oracle_montecarlo},
    {"area-oracles-triangulated", "Lemma 2.1",
     "Excess area equals the side-length triangulation oracle within 1e-9 on random convex "
     "polygons",
     "polygons", chk_area_oracles_triangulated},
    {"circumscribed-circle-regular", "Lemma 3.3",
     "Regular odd-gons have a circumscribed circle (vertex-distance spread < 1e-9)", "polygons",
     chk_circumscribed_regular},
    {"distance-triangle-inequality", "Section 2",
     "Spherical distance satisfies the triangle inequality", "polygons", chk_triangle_inequality},
    {"even-gon-not-reduced", "Lemma 2.2", "Even-gons are never reduced", "polygons",
     chk_even_gon_not_reduced},
    {"lune-thickness-identity", "Section 2",
     "Lune thickness by midpoint construction equals pi minus the center distance", "polygons",
     chk_lune_thickness},
    {"projection-minimality", "Section 2",
     "The projection foot minimizes the distance to the great circle", "polygons",
     chk_projection_minimality},
    {"reduced-roundtrip-regular", "Lemma 2.3",
     "regular_odd_gon passes the reducedness test and its sampled thickness returns omega",
     "polygons", chk_reduced_roundtrip},
    // theorems
    {"angle-sum-lower-bound", "Lemma 3.5", "sum phi_i >= pi on every reduced instance",
     "theorems", chk_angle_sum_lower_bound},
    {"angle-sum-regular", "Lemma 3.5", "Regular case: phi_i = pi/n and sum phi_i = pi",
     "theorems", chk_angle_sum_regular},
    {"area-formula-agreement", "Lemma 4.1",
     "2 sum f(y_i) - (n-2)pi equals the excess area on every instance", "theorems",
     chk_area_formula_agreement},
    {"beta-le-alpha", "Lemma 3.1", "beta_i <= alpha_i at every vertex", "theorems",
     chk_beta_le_alpha},
    {"butterfly-area-formula", "Lemma 3.5",
     "Butterfly area equals 2(phi_i + alpha_i - pi/2)", "theorems", chk_butterfly_area_formula},
    {"butterfly-congruence", "Lemma 3.2",
     "The two wings of each butterfly are congruent (equal corresponding sides)", "theorems",
     chk_butterfly_congruence},
    {"butterfly-cover-montecarlo", "Lemma 3.5",
     "Uniform interior points are covered by the union of butterflies", "theorems",
     chk_butterfly_cover},
    {"butterfly-sum-dominates", "Lemma 3.5",
     "Sum of butterfly areas >= polygon area, with equality in the regular case", "theorems",
     chk_butterfly_sum_dominates},
    {"decomposition-kernel-identities", "Lemma 4.1",
     "b_i + c_i = omega, y_i = g(phi_i), alpha_i = f(y_i) on every decomposition", "theorems",
     chk_decomposition_kernel},
    {"jensen-concavity-witness", "Theorem 4.4",
     "mean F(phi_i) <= F(mean phi_i): concavity witness on real phi-vectors", "theorems",
     chk_jensen_concavity},
    {"limit-area-convergence", "Corollary 4.3",
     "regular_area(n) converges to 2(1-cos(omega/2))pi from below, gap < 1e-3 at n=1001",
     "theorems", chk_limit_area_convergence},
    {"nonregular-below-regular", "Theorem 4.4",
     "Every non-regular reduced instance has strictly smaller area than the regular one",
     "theorems", chk_nonregular_below_regular},
    {"phi-bounds", "Fact 3.4", "0 < phi_i < pi/2 at every crossing", "theorems", chk_phi_bounds},
    {"regular-area-monotone", "Theorem 4.2",
     "regular_area(n, omega) strictly increases in odd n up to 101", "theorems",
     chk_regular_area_monotone},
    {"universal-area-bound", "Corollary 4.5",
     "Every reduced instance has area below the limit area 2(1-cos(omega/2))pi", "theorems",
     chk_universal_area_bound},
};

int pool_size(const VerifyOptions& opt, int tasks) {
    int n = opt.threads;
    if (n <= 0) {
        if (const char* env = std::getenv("SPHERIGON_THREADS"))
            n = std::atoi(env);
    }
    if (n <= 0)
        n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0)
        n = 1;
    return std::min(n, tasks);
}

}  // namespace

VerificationReport run_verification(const std::string& suite, const SweepGrid& grid,
                                    const VerifyOptions& opt) {
    if (suite != "scalars" && suite != "polygons" && suite != "theorems" && suite != "all")
        throw DomainError("unknown suite: " + suite);
    grid.validate();

    Ctx ctx{grid, opt, {}};
    std::vector<const CheckDef*> selected;
    for (const CheckDef& def : kChecks)
        if (suite == "all" || suite == def.suite)
            selected.push_back(&def);
    bool needs_instances =
        std::any_of(selected.begin(), selected.end(),
                    [](const CheckDef* d) { return std::string(d->suite) == "theorems"; });
    if (needs_instances)
        ctx.instances = build_instances(grid);

    std::vector<CheckRecord> records(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= selected.size())
                return;
            const CheckDef& def = *selected[i];
            CheckRecord rec;
            rec.claim = def.claim;
            rec.reference = def.reference;
            rec.statement = def.statement;
            auto t0 = std::chrono::steady_clock::now();
            try {
                CheckOutcome out = def.fn(ctx);
                rec.margin = out.margin;
                rec.tolerance = out.tolerance;
                rec.details = out.details;
                rec.passed = out.margin >= 0.0 && std::isfinite(out.margin);
            } catch (const std::exception& e) {
                rec.passed = false;
                rec.margin = -1.0;
                rec.tolerance = 1.0;
                rec.details = std::string("exception: ") + e.what();
            }
            rec.runtime_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            records[i] = std::move(rec);
        }
    };

    int workers = pool_size(opt, static_cast<int>(selected.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    VerificationReport report;
    report.suite = suite;
    report.grid = grid;
    report.checks = std::move(records);
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckRecord& a, const CheckRecord& b) { return a.claim < b.claim; });
    report.overall_pass =
        std::all_of(report.checks.begin(), report.checks.end(),
                    [](const CheckRecord& r) { return r.passed; });
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["format"] = "spherigon-report/1";
    doc["suite"] = report.suite;
    doc["grid"] = {{"lambda_values", report.grid.lambda_values},
                   {"n_values", report.grid.n_values},
                   {"omega_values", report.grid.omega_values},
                   {"seeds", report.grid.seeds},
                   {"mc_samples", report.grid.mc_samples}};
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckRecord& r : report.checks) {
        checks.push_back({{"claim", r.claim},
                          {"reference", r.reference},
                          {"statement", r.statement},
                          {"passed", r.passed},
                          {"margin", r.margin},
                          {"tolerance", r.tolerance},
                          {"runtime_s", r.runtime_s},
                          {"details", r.details}});
    }
    doc["checks"] = std::move(checks);
    doc["overall_pass"] = report.overall_pass;
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "claim,reference,passed,margin,tolerance,runtime_s\n";
    for (const CheckRecord& r : report.checks) {
        out << r.claim << ",\"" << r.reference << "\"," << (r.passed ? "true" : "false") << ","
            << r.margin << "," << r.tolerance << "," << r.runtime_s << "\n";
    }
    return out.str();
}

}  // namespace spherigon
