#pragma once

#include "spherigon/tolerances.hpp"

namespace spherigon {

// Fixes a thickness value and the derived quantities the scalar functions
// depend on. lambda = tan(omega); x_max is the right endpoint of the common
// domain (0, x_max) of f, f1, f2 and the supremum of g.
struct ThicknessProfile {
    double omega = 0.0;
    double lambda = 0.0;
    double x_max = 0.0;

    // Throws DomainError unless omega is in the open interval (0, pi/2).
    explicit ThicknessProfile(double omega_);
};

// g(phi): tangent of the distance from a chord crossing to the projection
// foot, as a function of the crossing angle phi in (0, pi/2). Value lies in
// (0, x_max) and satisfies cos(phi) = g(1+lambda*g)/(lambda-g).
double scalar_g(double phi, const ThicknessProfile& prof);

// f(x) = arcsin(x*sqrt(1+lambda^2)/(lambda-x)): the half interior angle at a
// vertex as a function of x = tan(distance from crossing to projection foot).
// Domain (0, x_max), endpoints excluded with margin 1e-12.
double scalar_f(double x, const ThicknessProfile& prof);

// f1(x) = pi/2 - f(x), evaluated in a cancellation-free form.
double scalar_f1(double x, const ThicknessProfile& prof);

// f2(x) = arccos(x*(1+lambda*x)/(lambda-x)).
double scalar_f2(double x, const ThicknessProfile& prof);

// F(phi) = f(g(phi)) on (0, pi/2).
double scalar_F(double phi, const ThicknessProfile& prof);

// Closed-form derivative of F:
//   F'(x) = -lambda*sqrt(2+2*lambda^2)*sin(x)
//           / (r(x)*sqrt(1-cos x)*sqrt(1+2*lambda^2+cos x-r(x))),
//   r(x)  = sqrt((1+cos x)^2 + 4*lambda^2*cos x).
// Negative on all of (0, pi/2).
double F_prime_closed(double phi, const ThicknessProfile& prof);

// Area of the regular reduced n-gon of thickness omega (n odd >= 3).
// Computed by the two closed forms
//   S = 2*pi - 2*pi*f1(y)/f2(y)      and      S = 2*n*f(y) - (n-2)*pi,
// y = g(pi/n); the forms must agree within 1e-12 (asserted) and the first is
// returned. Internal evaluation runs in extended precision: the first form
// loses ~2 digits per decade of n to cancellation in double.
double regular_area(int n, double omega);

// Limit of regular_area(n, omega) as n grows: 2*(1 - cos(omega/2))*pi.
double limit_area(double omega);

// Extended-precision kernels behind the public functions. No domain guards;
// exposed so tests can probe the exact endpoint identities and so callers
// composing many evaluations can stay in long double throughout.
namespace detail {
long double x_max_ld(long double lambda);
long double g_ld(long double phi, long double lambda);
long double f_ld(long double x, long double lambda);
long double f1_ld(long double x, long double lambda);
long double f2_ld(long double x, long double lambda);
}  // namespace detail

}  // namespace spherigon
