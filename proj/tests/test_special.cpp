#include <doctest.h>

#include <cmath>
#include <numbers>

#include "painleve/special.hpp"

using namespace painleve;

TEST_SUITE("special") {

TEST_CASE("gamma") {
  CHECK(std::abs(gamma_fn(Complex(5.0)) - 24.0) < 1e-12);
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0));
  CHECK(std::abs(gamma_fn(Complex(0.5)) - std::sqrt(std::numbers::pi)) < 1e-13);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const Complex z(0.3, 0.7);
  CHECK(std::abs(gamma_fn(z) * gamma_fn(1.0 - z) - std::numbers::pi / std::sin(std::numbers::pi * z)) < 1e-12);
  CHECK(std::abs(gamma_fn(Complex(-1.5)) - 4.0 * std::sqrt(std::numbers::pi) / 3.0) < 1e-12);
  CHECK_THROWS(gamma_fn(Complex(-2.0)));
}

TEST_CASE("reciprocal gamma is entire") {
  CHECK(rgamma_fn(Complex(0.0)) == Complex(0.0));
  CHECK(rgamma_fn(-3.0) == 0.0);
  CHECK(std::abs(rgamma_fn(Complex(4.0)) - 1.0 / 6.0) < 1e-15);
}

TEST_CASE("digamma") {
  constexpr double euler = 0.57721566490153286061;
  CHECK(std::abs(digamma_fn(Complex(1.0)) + euler) < 1e-13);
  CHECK(digamma_fn(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-13));
  CHECK(digamma_fn(0.5) == doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(digamma_fn(-0.5) == doctest::Approx(2.0 - euler - 2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(digamma_fn(0.7) == doctest::Approx(-1.2200235536979349817).epsilon(1e-12));
}

TEST_CASE("confluent hypergeometric") {
  CHECK(std::abs(hyp1f1(0.3, 1.7, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(hyp1f1(1.0, 2.0, 0.5) - 1.2974425414002564) < 1e-12);
  CHECK(std::abs(hyp1f1(2.0, 2.0, -3.0) - std::exp(-3.0)) < 1e-13);
  CHECK(std::abs(hyp1f1(-2.0, 1.0, 2.0) - (1.0 - 4.0 + 2.0)) < 1e-13);  // Laguerre L_2(2) = -1
  CHECK_THROWS(hyp1f1(1.0, -2.0, 0.5));
  CHECK_THROWS(hyp1f1(1.0, 2.0, 60.0));
  const ComplexSeries f = hyp1f1_series(1.0, 2.0, 6);
  CHECK(std::abs(f[3] - 1.0 / 24.0) < 1e-15);
}

TEST_CASE("pochhammer and integer detection") {
  CHECK(std::abs(pochhammer(3.0, 4) - 360.0) < 1e-12);
  CHECK(pochhammer(Complex(-2.0), 3) == Complex(0.0));
  CHECK(near_integer(2.0 + 1e-11, 1e-9));
  CHECK_FALSE(near_integer(2.1, 1e-9));
}

}
