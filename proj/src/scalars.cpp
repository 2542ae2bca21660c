#include "spherigon/scalars.hpp"

#include <cmath>

#include "spherigon/errors.hpp"

namespace spherigon {

namespace detail {

static const long double kPiL = 3.14159265358979323846264338327950288L;

long double x_max_ld(long double lambda) {
    // (-1 + sqrt(1+lambda^2))/lambda without subtractive cancellation.
    return lambda / (1.0L + std::sqrt(1.0L + lambda * lambda));
}

long double g_ld(long double phi, long double lambda) {
    // g = (-(1+c) + sqrt((1+c)^2 + 4*lambda^2*c)) / (2*lambda), c = cos(phi),
    // rationalized so the radical is added, never subtracted.
    long double c = std::cos(phi);
    long double r = std::sqrt((1.0L + c) * (1.0L + c) + 4.0L * lambda * lambda * c);
    return 2.0L * lambda * c / (r + 1.0L + c);
}

long double f1_ld(long double x, long double lambda) {
    // f1 = pi/2 - arcsin(u) = arccos(u), u = x*sqrt(1+lambda^2)/(lambda-x).
    // Near x_max u -> 1; 1-u is formed from its cancellation-free numerator
    // lambda - x*(1+sqrt(1+lambda^2)) (exactly zero at the root x_max).
    long double s = std::sqrt(1.0L + lambda * lambda);
    long double one_minus_u = (lambda - x * (1.0L + s)) / (lambda - x);
    if (one_minus_u < 0.0L)
        one_minus_u = 0.0L;
    return 2.0L * std::asin(std::sqrt(0.5L * one_minus_u));
}

long double f_ld(long double x, long double lambda) {
    return 0.5L * kPiL - f1_ld(x, lambda);
}

long double f2_ld(long double x, long double lambda) {
    // f2 = arccos(u), u = x*(1+lambda*x)/(lambda-x). Same treatment: the
    // numerator of 1-u is lambda*(1-x^2) - 2x, zero exactly at x_max.
    long double one_minus_u = (lambda * (1.0L - x * x) - 2.0L * x) / (lambda - x);
    long double u = x * (1.0L + lambda * x) / (lambda - x);
    if (u < 0.5L)
        return std::acos(u);
    if (one_minus_u < 0.0L)
        one_minus_u = 0.0L;
    return 2.0L * std::asin(std::sqrt(0.5L * one_minus_u));
}

}  // namespace detail

ThicknessProfile::ThicknessProfile(double omega_) : omega(omega_) {
    if (!(omega > 0.0 && omega < 0.5 * kPi))
        throw DomainError("thickness must lie in (0, pi/2)");
    lambda = std::tan(omega);
    x_max = static_cast<double>(detail::x_max_ld(lambda));
}

static void check_phi_domain(double phi) {
    if (!(phi > 0.0 && phi < 0.5 * kPi))
        throw DomainError("phi must lie in (0, pi/2)");
}

double scalar_g(double phi, const ThicknessProfile& prof) {
    check_phi_domain(phi);
    return static_cast<double>(detail::g_ld(phi, prof.lambda));
}

static void check_x_domain(double x, const ThicknessProfile& prof) {
    if (!(x >= kDomainMargin && x <= prof.x_max - kDomainMargin))
        throw DomainError("x must lie in (0, x_max), endpoints excluded");
}

double scalar_f(double x, const ThicknessProfile& prof) {
    check_x_domain(x, prof);
    return static_cast<double>(detail::f_ld(x, prof.lambda));
}

double scalar_f1(double x, const ThicknessProfile& prof) {
    check_x_domain(x, prof);
    return static_cast<double>(detail::f1_ld(x, prof.lambda));
}

double scalar_f2(double x, const ThicknessProfile& prof) {
    check_x_domain(x, prof);
    return static_cast<double>(detail::f2_ld(x, prof.lambda));
}

double scalar_F(double phi, const ThicknessProfile& prof) {
    check_phi_domain(phi);
    return static_cast<double>(detail::f_ld(detail::g_ld(phi, prof.lambda), prof.lambda));
}

double F_prime_closed(double phi, const ThicknessProfile& prof) {
    check_phi_domain(phi);
    long double lambda = prof.lambda;
    long double c = std::cos((long double)phi);
    long double r = std::sqrt((1.0L + c) * (1.0L + c) + 4.0L * lambda * lambda * c);
    // 1 - cos x as 2 sin^2(x/2); 1 + 2*lambda^2 + cos x - r rationalized to
    // 4*lambda^2*(1+lambda^2)/(1 + 2*lambda^2 + cos x + r): both factors of
    // the denominator stay cancellation-free across the whole domain.
    long double sin_half = std::sin(0.5L * (long double)phi);
    long double tail = 4.0L * lambda * lambda * (1.0L + lambda * lambda) /
                       (1.0L + 2.0L * lambda * lambda + c + r);
    long double num = -lambda * std::sqrt(2.0L + 2.0L * lambda * lambda) *
                      std::sin((long double)phi);
    long double den = r * (std::sqrt(2.0L) * sin_half) * std::sqrt(tail);
    return static_cast<double>(num / den);
}

double regular_area(int n, double omega) {
    if (n % 2 == 0)
        throw EvenGon("regular reduced polygons have an odd number of vertices");
    if (n < 3)
        throw DomainError("n must be at least 3");
    ThicknessProfile prof(omega);  // validates omega

    long double lambda = std::tan((long double)prof.omega);
    long double y = detail::g_ld(detail::kPiL / n, lambda);
    long double form1 =
        2.0L * detail::kPiL - 2.0L * detail::kPiL * detail::f1_ld(y, lambda) / detail::f2_ld(y, lambda);
    long double form2 = 2.0L * n * detail::f_ld(y, lambda) - (n - 2) * detail::kPiL;
    if (std::fabs((double)(form1 - form2)) > 1e-12)
        throw Error("internal: the two closed forms of the regular area disagree");
    return static_cast<double>(form1);
}

double limit_area(double omega) {
    ThicknessProfile prof(omega);  // validates omega
    return 2.0 * (1.0 - std::cos(0.5 * prof.omega)) * kPi;
}

}  // namespace spherigon
