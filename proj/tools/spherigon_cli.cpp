// spherigon command line tool: generate, measure, check, verify, plot.
//
// Exit codes: 0 success, 1 verification/reducedness failure, 2 usage or
// domain or parse error, 3 solver failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spherigon/errors.hpp"
#include "spherigon/json_io.hpp"
#include "spherigon/polygon.hpp"
#include "spherigon/reduced.hpp"
#include "spherigon/svg.hpp"
#include "spherigon/tolerances.hpp"
#include "spherigon/verify.hpp"

namespace {

using nlohmann::json;
using namespace spherigon;

// The tool accepts a narrower thickness range than the library's open
// (0, pi/2): values within 0.001 of either end produce polygons too
// degenerate to measure reliably, so they are rejected up front. In
// particular 1.57 (< pi/2 mathematically) is a usage error here.
constexpr double kCliOmegaMin = 0.001;
constexpr double kCliOmegaMax = 1.55;

void require_cli_omega(double omega) {
    if (!(omega > kCliOmegaMin && omega < kCliOmegaMax)) {
        std::ostringstream os;
        os << "thickness " << omega << " out of the supported range (" << kCliOmegaMin << ", "
           << kCliOmegaMax << ") radians";
        throw DomainError(os.str());
    }
}

void require_odd_n(int n) {
    if (n < 3 || n % 2 == 0)
        throw DomainError("n must be odd and at least 3");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Empty path means standard output.
void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open output file: " + path);
    out << content;
    if (!out)
        throw ParseError("write failed: " + path);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

int run_gen_regular(int n, double omega, const std::string& out_path) {
    require_odd_n(n);
    require_cli_omega(omega);
    SphericalPolygon P = regular_odd_gon(n, omega);
    write_output(out_path, polygon_to_json(P, omega));
    return 0;
}

int run_gen_perturbed(int n, double omega, std::uint64_t seed, double delta,
                      const std::string& out_path) {
    require_odd_n(n);
    require_cli_omega(omega);
    PerturbedResult res = perturbed_reduced_polygon(n, omega, seed, delta);
    if (res.retries > 0)
        std::cerr << "note: interiority retry, delta reduced to " << res.delta_used << " after "
                  << res.retries << " halving(s)\n";
    write_output(out_path, polygon_to_json(res.polygon, omega));
    return 0;
}

json reducedness_to_json(const ReducednessReport& rep) {
    json j;
    j["reduced"] = rep.reduced;
    j["odd"] = rep.odd;
    j["convex"] = rep.convex;
    j["mean_distance"] = rep.mean_distance;
    j["max_residual"] = rep.max_residual;
    j["min_interior_margin"] = rep.min_interior_margin;
    j["reason"] = rep.reason.empty() ? json() : json(rep.reason);
    return j;
}

struct MeasureData {
    int n = 0;
    bool convex = false;
    std::optional<double> girard;
    std::optional<double> triangulated;
    std::optional<MonteCarloArea> mc;
    std::optional<ThicknessEstimate> thick;
    ReducednessReport rep;
    std::optional<ReducedDecomposition> decomp;
};

int run_measure(const std::string& in_path, std::int64_t mc_samples, std::uint64_t seed,
                int resolution, bool pretty) {
    PolygonDocument doc = load_polygon_json(read_file(in_path));
    print_warnings(doc.warnings);
    const SphericalPolygon& P = doc.polygon;

    MeasureData m;
    m.n = P.size();
    m.convex = is_spherically_convex(P);
    if (m.convex) {
        m.girard = girard_area(P);
        m.triangulated = area_oracle_triangulated(P);
        m.mc = area_oracle_montecarlo(P, mc_samples, seed);
        m.thick = thickness(P, resolution);
    }
    m.rep = is_reduced(P);
    if (m.rep.reduced)
        m.decomp = decompose(P, m.rep.mean_distance);

    if (pretty) {
        std::ostringstream os;
        os.precision(12);
        os << "polygon: " << m.n << " vertices, " << (m.convex ? "convex" : "NOT convex") << "\n";
        if (m.convex) {
            os << "girard area:       " << *m.girard << "\n";
            os << "triangulated area: " << *m.triangulated << "\n";
            os << "monte carlo area:  " << m.mc->area << " +- " << m.mc->std_error << " ("
               << m.mc->samples << " samples, seed " << seed << ")\n";
            os << "thickness:         " << m.thick->value << " +- " << m.thick->error_bound
               << " (resolution " << resolution << ")\n";
        }
        os << "reduced:           " << (m.rep.reduced ? "yes" : "no");
        if (!m.rep.reduced)
            os << " (" << m.rep.reason << ")";
        os << "\n";
        if (m.decomp) {
            os << "sum phi:           " << m.decomp->sum_phi() << "\n";
            os << "  i        alpha           beta            phi             b               c "
                  "              y\n";
            char line[256];
            for (int i = 0; i < m.decomp->size(); ++i) {
                const DecompositionRow& r = m.decomp->rows[static_cast<size_t>(i)];
                std::snprintf(line, sizeof(line),
                              "%3d  %.12f  %.12f  %.12f  %.12f  %.12f  %.12f\n", i + 1, r.alpha,
                              r.beta, r.phi, r.b, r.c, r.y);
                os << line;
            }
        }
        std::cout << os.str();
        return 0;
    }

    json out;
    out["n"] = m.n;
    out["convex"] = m.convex;
    out["girard_area"] = m.girard ? json(*m.girard) : json();
    out["triangulated_area"] = m.triangulated ? json(*m.triangulated) : json();
    if (m.mc) {
        out["montecarlo"] = {{"area", m.mc->area},
                             {"std_error", m.mc->std_error},
                             {"samples", m.mc->samples},
                             {"seed", seed}};
    } else {
        out["montecarlo"] = json();
    }
    if (m.thick) {
        out["thickness"] = {{"value", m.thick->value},
                            {"error_bound", m.thick->error_bound},
                            {"resolution", resolution}};
    } else {
        out["thickness"] = json();
    }
    out["reduced"] = reducedness_to_json(m.rep);
    if (m.decomp) {
        json rows = json::array();
        for (int i = 0; i < m.decomp->size(); ++i) {
            const DecompositionRow& r = m.decomp->rows[static_cast<size_t>(i)];
            rows.push_back({{"i", i + 1},
                            {"alpha", r.alpha},
                            {"beta", r.beta},
                            {"phi", r.phi},
                            {"b", r.b},
                            {"c", r.c},
                            {"y", r.y}});
        }
        out["decomposition"] = {
            {"omega", m.decomp->omega}, {"sum_phi", m.decomp->sum_phi()}, {"rows", rows}};
    } else {
        out["decomposition"] = json();
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_check_reduced(const std::string& in_path, double tol) {
    PolygonDocument doc = load_polygon_json(read_file(in_path));
    print_warnings(doc.warnings);
    ReducednessReport rep = is_reduced(doc.polygon, tol);
    json out = reducedness_to_json(rep);
    out["tol"] = tol;
    std::cout << out.dump(2) << "\n";
    return rep.reduced ? 0 : 1;
}

int run_plot(const std::string& in_path, const std::string& out_path) {
    PolygonDocument doc = load_polygon_json(read_file(in_path));
    print_warnings(doc.warnings);
    const SphericalPolygon& P = doc.polygon;
    std::optional<ReducedDecomposition> D;
    ReducednessReport rep = is_reduced(P);
    if (rep.odd && rep.convex) {
        // Chord geometry may exist even slightly off the reduced manifold;
        // fall back to a bare polygon figure when it does not.
        try {
            D = decompose(P, rep.mean_distance);
        } catch (const Error&) {
            D.reset();
        }
    }
    write_output(out_path, render_svg(P, D));
    return 0;
}

int run_verify(const std::string& suite, SweepGrid grid, const std::vector<double>& lambdas,
               const std::vector<int>& ns, const std::vector<double>& omegas,
               const std::vector<std::uint64_t>& seeds, std::int64_t mc_samples,
               const std::string& json_path, const std::string& csv_path, double girard_bias) {
    if (!lambdas.empty()) {
        grid.lambda_values = lambdas;
        if (omegas.empty()) {
            grid.omega_values.clear();
            for (double l : lambdas)
                grid.omega_values.push_back(std::atan(l));
        }
    }
    if (!omegas.empty()) {
        grid.omega_values = omegas;
        if (lambdas.empty()) {
            grid.lambda_values.clear();
            for (double w : omegas)
                grid.lambda_values.push_back(std::tan(w));
        }
    }
    if (!ns.empty())
        grid.n_values = ns;
    if (!seeds.empty())
        grid.seeds = seeds;
    if (mc_samples > 0)
        grid.mc_samples = mc_samples;

    for (double w : grid.omega_values)
        require_cli_omega(w);
    grid.validate();

    VerifyOptions opt;
    opt.girard_bias = girard_bias;
    VerificationReport report = run_verification(suite, grid, opt);

    std::ostringstream os;
    os << "suite: " << report.suite << "\n";
    char line[512];
    for (const CheckRecord& c : report.checks) {
        std::snprintf(line, sizeof(line), "%-34s %-14s %s  margin %.3e  tol %.1e  %.2fs\n",
                      c.claim.c_str(), c.reference.c_str(), c.passed ? "PASS" : "FAIL", c.margin,
                      c.tolerance, c.runtime_s);
        os << line;
        if (!c.passed)
            os << "    " << c.details << "\n";
    }
    int passed = 0;
    for (const CheckRecord& c : report.checks)
        passed += c.passed ? 1 : 0;
    os << "overall: " << (report.overall_pass ? "PASS" : "FAIL") << " (" << passed << "/"
       << report.checks.size() << " checks)\n";
    std::cout << os.str();

    if (!json_path.empty())
        write_output(json_path, report_to_json(report));
    if (!csv_path.empty())
        write_output(csv_path, report_to_csv(report));
    return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherigon: reduced spherical polygons - generation, measurement, verification"};
    app.require_subcommand(1);

    // gen-regular
    auto* gen_regular = app.add_subcommand("gen-regular", "Generate a regular reduced odd-gon");
    int gr_n = 5;
    double gr_omega = 0.8;
    std::string gr_out;
    gen_regular->add_option("--n", gr_n, "Vertex count (odd, >= 3)")->required();
    gen_regular->add_option("--thickness", gr_omega, "Thickness omega in radians")->required();
    gen_regular->add_option("-o,--output", gr_out, "Output file (default: standard output)");

    // gen-perturbed
    auto* gen_pert =
        app.add_subcommand("gen-perturbed", "Generate a non-regular reduced odd-gon by "
                                            "perturbation and constraint projection");
    int gp_n = 5;
    double gp_omega = 0.8;
    std::uint64_t gp_seed = 1;
    double gp_delta = 0.03;
    std::string gp_out;
    gen_pert->add_option("--n", gp_n, "Vertex count (odd, >= 3)")->required();
    gen_pert->add_option("--thickness", gp_omega, "Thickness omega in radians")->required();
    gen_pert->add_option("--seed", gp_seed, "Noise seed");
    gen_pert->add_option("--delta", gp_delta, "Perturbation magnitude in radians (<= 0.05)");
    gen_pert->add_option("-o,--output", gp_out, "Output file (default: standard output)");

    // measure
    auto* measure = app.add_subcommand("measure", "Measure a polygon file: areas by three "
                                                  "methods, thickness, reducedness, decomposition");
    std::string me_in;
    std::int64_t me_mc = 100000;
    std::uint64_t me_seed = 1;
    int me_res = 256;
    bool me_pretty = false;
    measure->add_option("input", me_in, "Polygon JSON file")->required();
    measure->add_option("--mc-samples", me_mc, "Monte Carlo sample count");
    measure->add_option("--seed", me_seed, "Monte Carlo seed");
    measure->add_option("--resolution", me_res, "Thickness sampling resolution (>= 64)");
    measure->add_flag("--pretty", me_pretty, "Human-readable table instead of JSON");

    // check-reduced
    auto* check = app.add_subcommand("check-reduced", "Test the reducedness criterion; exit 1 "
                                                      "when it fails");
    std::string ch_in;
    double ch_tol = 1e-8;
    check->add_option("input", ch_in, "Polygon JSON file")->required();
    check->add_option("--tol", ch_tol, "Equal-distance / interiority tolerance");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suites against the claims "
                                                "they implement");
    std::string ve_suite = "all";
    std::vector<double> ve_lambdas;
    std::vector<int> ve_ns;
    std::vector<double> ve_omegas;
    std::vector<std::uint64_t> ve_seeds;
    std::int64_t ve_mc = 0;
    std::string ve_json, ve_csv;
    verify->add_option("--suite", ve_suite, "scalars | polygons | theorems | all")
        ->check(CLI::IsMember({"scalars", "polygons", "theorems", "all"}));
    verify->add_option("--lambdas", ve_lambdas, "Comma-separated lambda grid")->delimiter(',');
    verify->add_option("--ns", ve_ns, "Comma-separated odd vertex counts")->delimiter(',');
    verify->add_option("--omegas", ve_omegas, "Comma-separated thickness grid (radians)")
        ->delimiter(',');
    verify->add_option("--seeds", ve_seeds, "Comma-separated seeds")->delimiter(',');
    verify->add_option("--mc-samples", ve_mc, "Monte Carlo sample count");
    verify->add_option("--json", ve_json, "Write the full report to this JSON file");
    verify->add_option("--csv", ve_csv, "Write the one-row-per-check summary CSV here");
#ifdef SPHERIGON_ENABLE_SABOTAGE
    std::string ve_sabotage;
    verify
        ->add_option("--sabotage", ve_sabotage,
                     "Negative-control fault injection (test builds only)")
        ->check(CLI::IsMember({"girard"}));
#endif

    // plot
    auto* plot = app.add_subcommand("plot", "Render an orthographic SVG figure");
    std::string pl_in, pl_out;
    plot->add_option("input", pl_in, "Polygon JSON file")->required();
    plot->add_option("-o,--output", pl_out, "Output SVG file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen_regular)
            return run_gen_regular(gr_n, gr_omega, gr_out);
        if (*gen_pert)
            return run_gen_perturbed(gp_n, gp_omega, gp_seed, gp_delta, gp_out);
        if (*measure)
            return run_measure(me_in, me_mc, me_seed, me_res, me_pretty);
        if (*check)
            return run_check_reduced(ch_in, ch_tol);
        if (*verify) {
            double bias = 0.0;
#ifdef SPHERIGON_ENABLE_SABOTAGE
            if (ve_sabotage == "girard")
                bias = 1e-3;
#endif
            return run_verify(ve_suite, SweepGrid::defaults(), ve_lambdas, ve_ns, ve_omegas,
                              ve_seeds, ve_mc, ve_json, ve_csv, bias);
        }
        if (*plot)
            return run_plot(pl_in, pl_out);
    } catch (const SolverDiverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RelativeInteriorViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
