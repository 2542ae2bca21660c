#pragma once

#include <numbers>

namespace spherigon {

inline constexpr double kPi = std::numbers::pi;

// Central numeric tolerances. These are part of the library contract (the
// acceptance suite pins them); override per call only where an operation
// takes an explicit tol parameter.
struct Tolerances {
    // Geometric agreement: containment/incidence predicates, cross-oracle
    // area agreement, angle sums.
    double geo = 1e-9;
    // Unit-norm and algebraic-identity agreement.
    double unit = 1e-12;
    // Equal-distance spread accepted by the reducedness checker.
    double reduced = 1e-8;
};

// Margin by which the open domain endpoints of the scalar functions are
// excluded; callers needing the limits use the closed-form limit values.
inline constexpr double kDomainMargin = 1e-12;

}  // namespace spherigon
