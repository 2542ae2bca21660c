#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spherigon/reduced.hpp"

namespace spherigon {

// Parameter grid shared by the verification sweeps.
struct SweepGrid {
    std::vector<double> lambda_values;
    std::vector<int> n_values;
    std::vector<double> omega_values;
    std::vector<std::uint64_t> seeds;
    std::int64_t mc_samples = 200000;

    // lambda {0.25, 1, 4}; n {3, 5, 7, 9, 101}; omega = arctan(lambda);
    // seeds {1, 2, 3}; 200k Monte Carlo samples.
    static SweepGrid defaults();

    // Throws DomainError on empty lists, even n, n < 3, omega outside
    // (0, pi/2), nonpositive lambda, or nonpositive sample count.
    void validate() const;
};

// One verified claim. margin >= 0 exactly when the check passed; it measures
// the distance between the worst observed case and the tolerance edge (for
// sign checks, the distance from zero; for boolean checks, +-1).
struct CheckRecord {
    std::string claim;      // stable kebab-case id, the report sort key
    std::string reference;  // label of the source statement, carried verbatim
    std::string statement;
    bool passed = false;
    double margin = 0.0;
    double tolerance = 0.0;
    double runtime_s = 0.0;
    std::string details;
};

struct VerificationReport {
    std::string suite;
    SweepGrid grid;
    std::vector<CheckRecord> checks;  // sorted by claim id
    bool overall_pass = false;
};

struct VerifyOptions {
    // Negative-control hook: added to every polygon-excess area the checks
    // compute. Test builds expose it on the command line; a correct build
    // with zero bias must pass, a biased one must be caught.
    double girard_bias = 0.0;
    // Worker threads; 0 = SPHERIGON_THREADS environment variable, falling
    // back to the hardware count.
    int threads = 0;
};

// Runs one of the suites "scalars", "polygons", "theorems", or "all".
// Throws DomainError on an unknown suite name or invalid grid.
VerificationReport run_verification(const std::string& suite, const SweepGrid& grid,
                                    const VerifyOptions& opt = {});

std::string report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

}  // namespace spherigon
