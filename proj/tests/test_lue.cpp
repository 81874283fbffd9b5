#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "painleve/lue.hpp"
#include "painleve/special.hpp"

using namespace painleve;

namespace {

// Quadrature oracle for the regularized moment
//   ∫_s^∞ (λ-s)^mu λ^{n+a} e^{-λ} dλ + (1-xi) e^{i pi mu} ∫_0^s (s-λ)^mu λ^{n+a} e^{-λ} dλ.
Complex moment_quadrature(const LUEContext& c, int n, double s) {
  const double p = n + c.a(), mu = c.mu();
  boost::math::quadrature::exp_sinh<double> outer;
  const double upper = outer.integrate([&](double t) {
    const double e = std::exp(-s - t);
    return e == 0.0 ? 0.0 : std::pow(t, mu) * std::pow(s + t, p) * e;
  });
  boost::math::quadrature::tanh_sinh<double> inner;
  const double lower = inner.integrate([&](double l) { return std::pow(s - l, mu) * std::pow(l, p) * std::exp(-l); }, 0.0, s);
  return upper + (1.0 - c.xi()) * std::polar(1.0, std::numbers::pi * mu) * lower;
}

double rel(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }

}  // namespace

TEST_SUITE("finite-n") {

TEST_CASE("context validation and derived parameters") {
  CHECK_THROWS_AS(LUEContext(0, 0.1, 0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(LUEContext(2, -1.2, 0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(LUEContext(2, -0.6, -0.6, 0.5), std::invalid_argument);
  const LUEContext c(3, 0.4, 0.7, 0.5);
  CHECK(c.nu()[1] == doctest::Approx(-0.7));
  CHECK(c.nu()[2] == doctest::Approx(3.4));
  CHECK(c.theta_inf() == doctest::Approx(-7.1));
}

TEST_CASE("case classification") {
  CHECK(classify(0.4, 0.7) == CaseTag::generic);
  CHECK(classify(2.0, 1.0) == CaseTag::indeterminate);
  CHECK(classify(0.0, 0.0) == CaseTag::indeterminate);
  CHECK(classify(0.3, -0.3) == CaseTag::pole);
  CHECK(classify(0.3, 0.7) == CaseTag::pole);
  CHECK(parse_case_tag("pole") == CaseTag::pole);
  CHECK_THROWS(parse_case_tag("other"));
}

TEST_CASE("moments against quadrature") {
  struct P { int N; double a, mu, xi; };
  for (const P p : {P{3, 0.4, 0.7, 0.5}, P{3, -0.5, 0.25, 0.3}, P{3, 2.0, 1.0, 0.3}, P{3, 1.0, 2.0, 0.8},
                    P{3, 0.3, -0.3, 0.4}, P{3, 0.3, 0.7, 0.4}, P{3, -0.4, 1.4, 0.1}}) {
    const LUEContext c(p.N, p.a, p.mu, p.xi);
    for (double s : {0.05, 0.7, 3.0})
      for (int n = 0; n < 5; ++n) {
        INFO("a=" << p.a << " mu=" << p.mu << " n=" << n << " s=" << s);
        CHECK(rel(moment_wn(c, n, s), moment_quadrature(c, n, s)) < 1e-9);
      }
  }
}

TEST_CASE("moment limits at small s") {
  const LUEContext c(3, 0.4, 0.7, 0.5);
  for (int n = 0; n < 4; ++n) CHECK(rel(moment_wn(c, n, 1e-12), gamma_fn(0.7 + n + 0.4 + 1.0)) < 1e-9);
  // indeterminate: (n+j)! - (n+j-k)(n+j-1)! s + ...
  const LUEContext ind(2, 2.0, 1.0, 0.3);
  const double s = 1e-5;
  for (int n = 0; n < 3; ++n) {
    const double j = 3, k = 2 + n;
    const double lead = std::tgamma(n + j + 1) - (n + j - k) * std::tgamma(n + j) * s;
    CHECK(std::abs(moment_wn(ind, n, s) - lead) < 1e-8);
  }
  // pole: (n+j)! + (a-j)(n+j-1)! s + ...
  const LUEContext pole(2, 0.3, 0.7, 0.4);
  for (int n = 0; n < 3; ++n) {
    const double lead = std::tgamma(n + 2.0) + (0.3 - 1.0) * std::tgamma(n + 1.0) * s;
    CHECK(std::abs(moment_wn(pole, n, s) - lead) < 1e-8);
  }
}

TEST_CASE("indeterminate case needs mu >= 0") {
  const LUEContext c(2, 1.0, -1.0 + 1.0, 0.5);  // a = 1, mu = 0 is allowed
  CHECK_NOTHROW(moment_wn(c, 0, 0.5));
}

TEST_CASE("determinant examples") {
  CHECK(std::abs(e2n_determinant(LUEContext(3, 0.4, 0.7, 0.5), 0.0) - 1.0) < 1e-14);
  CHECK(std::abs(e2n_determinant(LUEContext(1, 0.0, 0.0, 1.0), 0.3) - 0.7408182206817179) < 1e-12);
  CHECK(std::abs(e2n_determinant(LUEContext(1, 0.0, 0.0, 0.5), 0.2) - 0.9093653765389909) < 1e-12);
  for (int N : {1, 3, 6})
    for (double s : {0.1, 1.0, 5.0})
      CHECK(std::abs(e2n_determinant(LUEContext(N, 0.6, 0.0, 0.0), s) - 1.0) < 1e-12);
  CHECK_THROWS(e2n_determinant(LUEContext(13, 0.4, 0.7, 0.5), 0.1));
}

TEST_CASE("realness for integer mu") {
  for (double a : {0.35, 2.0})
    for (double s : {0.01, 0.5, 2.0}) {
      const Complex e = e2n_determinant(LUEContext(3, a, 1.0, 0.4), s);
      CHECK(std::abs(e.imag()) <= 1e-10 * std::abs(e));
    }
}

TEST_CASE("expansion structure") {
  const LUEContext c(3, 0.4, 0.7, 0.5);
  const AsymptoticExpansion e = e2n_expansion(c);
  CHECK(std::abs(e.coefficient(0.0) - 1.0) < 1e-15);
  CHECK(std::abs(e.coefficient(1.0) + 0.7 * 3 / 1.1) < 1e-14);
  const AsymptoticExpansion w = wn_expansion(c);
  CHECK(std::abs(w.coefficient(0.0) + 3 * 0.7) < 1e-14);
  CHECK(std::abs(w.coefficient(1.0) + 0.7 * 3 / 1.1) < 1e-14);
  CHECK_THROWS_AS(e2n_expansion(c, CaseTag::pole), std::invalid_argument);
}

TEST_CASE("pole case mu+a = 0 carries s log s") {
  const LUEContext c(2, 0.3, -0.3, 0.5);
  const AsymptoticExpansion e = e2n_expansion(c, CaseTag::pole);
  CHECK(std::abs(e.coefficient(1.0, 1) + 0.3 * 2) < 1e-14);
  // E - 1 - c2 s log s = c1 s + O(s^2 log^2 s): the slope estimate converges to c1.
  const Complex c1 = e.coefficient(1.0), c2 = e.coefficient(1.0, 1);
  auto slope = [&](double s) { return (e2n_determinant(c, s) - 1.0 - c2 * s * std::log(s)) / s; };
  const double d1 = std::abs(slope(1e-4) - c1), d2 = std::abs(slope(1e-5) - c1);
  CHECK(d1 < 2e-3 * std::abs(c1));
  CHECK(d2 < d1 / 5.0);
}

TEST_CASE("pole case mu+a = 1 against the determinant") {
  const LUEContext c(2, 0.3, 0.7, 0.4);
  const AsymptoticExpansion e = e2n_expansion(c, CaseTag::pole);
  auto err = [&](double s) { return std::abs(e2n_determinant(c, s) - e.evaluate(s)) / (s * s); };
  CHECK(err(1e-2) < 0.1);
  CHECK(err(1e-3) < err(1e-2) / 5.0);
  // the s^2 coefficient for several N, against a three-point extrapolation of the determinant
  for (int N = 1; N <= 4; ++N) {
    const LUEContext cn(N, 0.3, 0.7, 0.4);
    const AsymptoticExpansion en = e2n_expansion(cn, CaseTag::pole);
    auto c2 = [&](double s) {
      return (e2n_determinant(cn, s) - 1.0 - en.coefficient(1.0) * s - en.coefficient(2.0, 1) * s * s * std::log(s)) /
             (s * s);
    };
    INFO("N=" << N);
    CHECK(std::abs(c2(1e-4) - en.coefficient(2.0)) < 2e-3 * std::abs(en.coefficient(2.0)) + 1e-3);
  }
}

TEST_CASE("indeterminate expansion") {
  const LUEContext c(3, 2.0, 1.0, 0.3);
  const AsymptoticExpansion e = e2n_expansion(c);
  CHECK(std::abs(e.coefficient(1.0) + 1.0 * 3 / 3.0) < 1e-14);
  auto err = [&](double s) { return std::abs(e2n_determinant(c, s) - e.evaluate(s)) / (s * s); };
  CHECK(err(1e-3) < 10.0);
  const LUEContext z(3, 0.0, 0.0, 0.6);
  const AsymptoticExpansion ez = e2n_expansion(z);
  CHECK(std::abs(ez.coefficient(1.0) + 3 * 0.6) < 1e-14);
  CHECK(std::abs(e2n_determinant(z, 1e-4) - ez.evaluate(1e-4)) < 1e-6);
}

TEST_CASE("generic expansion order") {
  const LUEContext c(3, 0.4, 0.7, 0.5);
  const AsymptoticExpansion e = e2n_expansion(c);
  const double s[] = {1e-2, 5e-3, 2.5e-3};
  double err[3];
  for (int i = 0; i < 3; ++i) err[i] = std::abs(e2n_determinant(c, s[i]) - e.evaluate(s[i]));
  const double order = std::log(err[1] / err[2]) / std::log(2.0);
  CHECK(order >= 1.8);
}

TEST_CASE("two-scale expansion reproduces the determinant") {
  const LUEContext c(2, 0.5, 0.25, 0.3);
  const AsymptoticExpansion e = e2n_two_scale_expansion(c, 8, 4);
  for (double s : {1e-2, 5e-2}) CHECK(std::abs(e.evaluate(s) - e2n_determinant(c, s)) < 1e-12);
  // Leading terms match the printed expansion.
  const AsymptoticExpansion p = e2n_expansion(c);
  CHECK(std::abs(e.coefficient(1.0) - p.coefficient(1.0)) < 1e-12);
  CHECK(std::abs(e.coefficient(1.75) - p.coefficient(1.75)) < 1e-12);
}

TEST_CASE("determinant blocks") {
  CHECK(gamma_determinant_identity({1.0, 2.0}) == doctest::Approx(1.0));
  const HdetReport r = hdet_expansion_check(LUEContext(3, 0.4, 0.7, 0.5));
  CHECK(r.max_rel_discrepancy < 1e-10);
  CHECK(std::abs(r.linear_coefficient + 0.7 * 3 / 1.1) < 1e-10);
  CHECK(std::abs(r.power_coefficient - r.power_reference) < 1e-10 * std::abs(r.power_reference));
}

}
