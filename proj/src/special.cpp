#include "painleve/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace painleve {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex lanczos_gamma(Complex z) {
  // Valid for Re z >= 1/2.
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[static_cast<std::size_t>(i)] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

bool near_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

Complex gamma_fn(Complex z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() == std::round(z.real()) && z.real() < 171.0) {
    double r = 1.0;
    for (int i = 2; i < static_cast<int>(z.real()); ++i) r *= i;
    return r;
  }
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  return lanczos_gamma(z);
}

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::round(x)) throw std::domain_error("gamma_fn: pole at nonpositive integer");
  return std::tgamma(x);
}

Complex rgamma_fn(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() < 0.5) return std::sin(kPi * z) * lanczos_gamma(1.0 - z) / kPi;
  return 1.0 / gamma_fn(z);
}

double rgamma_fn(double x) {
  if (x <= 0.0 && x == std::round(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double lgamma_fn(double x) {
  if (x <= 0.0) throw std::domain_error("lgamma_fn: requires x > 0");
  return std::lgamma(x);
}

Complex digamma_fn(Complex z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("digamma_fn: pole at nonpositive integer");
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    return digamma_fn(1.0 - z) - kPi * std::cos(kPi * z) / std::sin(kPi * z);
  }
  Complex acc = 0.0;
  while (z.real() < 10.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  // Bernoulli terms B_{2n}/(2n z^{2n}), n = 1..7.
  const Complex tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12.0))))));
  return acc + std::log(z) - 0.5 * inv - tail;
}

double digamma_fn(double x) { return digamma_fn(Complex(x, 0.0)).real(); }

Complex pochhammer(Complex z, int n) {
  Complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z + static_cast<double>(i);
  return r;
}

Complex hyp1f1(Complex gamma, Complex alpha, Complex z) {
  if (is_nonpositive_integer(alpha) || (alpha.imag() == 0.0 && near_integer(alpha.real(), 1e-14) && alpha.real() < 0.5))
    throw std::domain_error("hyp1f1: alpha is a nonpositive integer");
  if (std::abs(z) > 50.0) throw std::domain_error("hyp1f1: |z| > 50 outside the series domain");
  if (gamma == alpha) return std::exp(z);

  Complex term = 1.0, sum = 1.0;
  const double scale = std::max(std::abs(gamma), std::abs(alpha));
  int quiet = 0;
  for (int m = 0; m < 20000; ++m) {
    term *= (gamma + static_cast<double>(m)) / ((alpha + static_cast<double>(m)) * static_cast<double>(m + 1)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (m > scale && std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw std::runtime_error("hyp1f1: series did not converge");
}

Complex hyp1f1_scaled(Complex gamma, Complex alpha, Complex z) {
  // Kummer: e^{-z} 1F1(gamma; alpha; z) = 1F1(alpha - gamma; alpha; -z). The
  // transformed series terminates when alpha - gamma is a nonpositive integer
  // and loses at most e^{|z|} ulps otherwise, so use it for small |z|.
  const Complex c = alpha - gamma;
  if (is_nonpositive_integer(c) || std::abs(z) <= 2.0) return hyp1f1(c, alpha, -z);
  return std::exp(-z) * hyp1f1(gamma, alpha, z);
}

ComplexSeries hyp1f1_series(Complex gamma, Complex alpha, int P, Var var) {
  ComplexSeries r(P, var);
  Complex term = 1.0;
  for (int m = 0; m <= P; ++m) {
    r[m] = term;
    const Complex den = (alpha + static_cast<double>(m)) * static_cast<double>(m + 1);
    if (den == 0.0) {
      if (m < P) throw std::domain_error("hyp1f1_series: alpha is a nonpositive integer");
      break;
    }
    term *= (gamma + static_cast<double>(m)) / den;
  }
  return r;
}

}  // namespace painleve
