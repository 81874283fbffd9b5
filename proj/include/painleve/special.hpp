#ifndef PAINLEVE_SPECIAL_HPP
#define PAINLEVE_SPECIAL_HPP

#include <complex>

#include "painleve/rational.hpp"
#include "painleve/series.hpp"

namespace painleve {

/// Gamma via the Lanczos approximation (g = 7, 9 terms) with reflection
/// for Re z < 1/2. Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex gamma_fn(Complex z);
double gamma_fn(double x);

/// 1/Gamma(z), entire: exactly zero at nonpositive integers.
Complex rgamma_fn(Complex z);
double rgamma_fn(double x);

/// log Gamma(x) for real x > 0.
double lgamma_fn(double x);

/// psi(z) = Gamma'(z)/Gamma(z): upward recurrence to Re z >= 10, then
/// the asymptotic series; reflection for Re z < 1/2.
Complex digamma_fn(Complex z);
double digamma_fn(double x);

/// 1F1(gamma; alpha; z) by direct summation with a term-ratio stopping rule.
/// Throws for alpha a nonpositive integer, or |z| > 50 (no asymptotic branch).
Complex hyp1f1(Complex gamma, Complex alpha, Complex z);

/// e^{-z} 1F1(gamma; alpha; z), through the Kummer transformation where that is
/// the better conditioned sum.
Complex hyp1f1_scaled(Complex gamma, Complex alpha, Complex z);

/// Taylor coefficients of 1F1(gamma; alpha; s) through s^P.
ComplexSeries hyp1f1_series(Complex gamma, Complex alpha, int P, Var var = Var::s);

/// Pochhammer (z)_n.
Complex pochhammer(Complex z, int n);

/// True when |x - round(x)| <= tol.
bool near_integer(double x, double tol);

}  // namespace painleve

#endif  // PAINLEVE_SPECIAL_HPP
