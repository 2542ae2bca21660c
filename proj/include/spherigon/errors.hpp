#pragma once

#include <stdexcept>
#include <string>

namespace spherigon {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad value for a mathematical domain (thickness outside (0, pi/2),
// scalar-function argument outside its interval, even n where odd required...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Operation requires an odd-gon.
struct EvenGon : DomainError {
    explicit EvenGon(const std::string& msg) : DomainError(msg) {}
};

// Two points coincide or are antipodal, so no unique great circle/arc exists.
struct DegenerateArc : Error {
    explicit DegenerateArc(const std::string& msg) : Error(msg) {}
};

// Projection of a pole onto its own circle: every circle point is equidistant.
struct PoleProjection : Error {
    explicit PoleProjection(const std::string& msg) : Error(msg) {}
};

// Arc intersection requested for arcs on the same great circle.
struct CoplanarArcs : Error {
    explicit CoplanarArcs(const std::string& msg) : Error(msg) {}
};

// Lune with equal or antipodal hemisphere centers.
struct DegenerateLune : Error {
    explicit DegenerateLune(const std::string& msg) : Error(msg) {}
};

// Polygon operation that requires spherical convexity got a non-convex input.
struct NonConvex : Error {
    explicit NonConvex(const std::string& msg) : Error(msg) {}
};

// Monte Carlo operation with a nonpositive sample count.
struct InvalidSampleCount : Error {
    explicit InvalidSampleCount(const std::string& msg) : Error(msg) {}
};

// Vertex projection misses the relative interior of its opposite side, or a
// chord crossing is absent: the polygon lacks the geometry of a reduced one.
struct NotReducedGeometry : Error {
    explicit NotReducedGeometry(const std::string& msg) : Error(msg) {}
};

// Gauss-Newton refinement did not reach the residual target.
struct SolverDiverged : Error {
    explicit SolverDiverged(const std::string& msg) : Error(msg) {}
};

// Solver converged, but a projection foot left the relative interior of its
// opposite side (reported after the retry budget is exhausted).
struct RelativeInteriorViolated : Error {
    explicit RelativeInteriorViolated(const std::string& msg) : Error(msg) {}
};

// Malformed input document (JSON parse or schema violation).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace spherigon
