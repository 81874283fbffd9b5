#include <doctest.h>

#include <cmath>
#include <numbers>

#include "painleve/bessel.hpp"
#include "painleve/jimbo.hpp"
#include "painleve/lue.hpp"
#include "painleve/special.hpp"

using namespace painleve;

namespace {
double rel(Complex x, Complex y) { return std::abs(x - y) / std::abs(y); }
}  // namespace

TEST_SUITE("jimbo") {

TEST_CASE("u matching") {
  const UMatch m1 = u_from_xi(0.25, 0.25, 1.0);
  CHECK(std::abs(m1.rhs - (-std::sqrt(0.5))) < 1e-15);
  const UMatch m2 = u_from_xi(0.0, 0.5, 0.0);
  CHECK(std::abs(m2.u - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(u_from_xi(0.0, 0.5, 1.0).u) < 1e-15);
  const UMatch direct = u_from_xi(0.5, 1.0, 0.3);
  CHECK(direct.direct);
  CHECK(std::abs(direct.u - direct.rhs) == 0.0);
  CHECK_THROWS_AS(u_from_xi(1.0, 2.0, 0.5), std::domain_error);
  CHECK(std::abs(ut_from_xi(0.4, 0.3, 0.2).u - u_from_xi(0.4, 0.3, 0.2).u) == 0.0);
}

TEST_CASE("Gamma product limits") {
  // Gamma(-N + eps/2)^{-1} -> 0 linearly; Gamma(1-N)/Gamma(eps) -> (-1)^N / Gamma(N)... at N=2
  const GammaFactor vanish[] = {{-2.0, 0.5, -1}};
  CHECK(gamma_product_limit(vanish).order == 1);
  const GammaFactor ratio[] = {{-1.0, 1.0, 1}, {0.0, 1.0, -1}};
  const LaurentValue r = gamma_product_limit(ratio);
  CHECK(r.order == 0);
  CHECK(std::abs(r.limit() + 1.0) < 1e-15);
  CHECK_THROWS(LaurentValue{1.0, -1}.limit());
}

TEST_CASE("PV expansion under the LUE map") {
  const LUEContext c(2, 0.4, 0.3, 0.25);
  const JimboPVParams p = lue_pv_params(c);
  CHECK(p.theta_inf == doctest::Approx(-4.7));
  const JimboPVTerms t = tau_v_terms(p);
  CHECK(t.minus == Complex(0.0));
  CHECK(std::abs(t.linear - (2 * 2 + 0.7) * 0.4 / (2 * 0.7)) < 1e-13);
  CHECK(t.prefactor_exponent == doctest::Approx(-(4 + 2 * 0.7)));
  const AsymptoticExpansion from_tau = lue_from_tau_v(c), direct = e2n_expansion(c);
  CHECK(std::abs(from_tau.coefficient(1.0) - direct.coefficient(1.0)) < 1e-13);
  CHECK(rel(from_tau.coefficient(1.7), direct.coefficient(1.7)) < 1e-10);
  CHECK(std::abs(from_tau.coefficient(0.0) - 1.0) < 1e-15);
}

TEST_CASE("PV matching across parameters") {
  struct P { int N; double a, mu, xi; };
  for (const P q : {P{1, 0.5, 0.25, 0.3}, P{3, -0.3, 0.6, 0.8}, P{4, 1.5, -0.2, 0.0}, P{2, 0.2, 1.3, 1.0}}) {
    const LUEContext c(q.N, q.a, q.mu, q.xi);
    const double v = q.a + q.mu;
    const AsymptoticExpansion from_tau = lue_from_tau_v(c), direct = e2n_expansion(c);
    CHECK(rel(from_tau.coefficient(1.0 + v), direct.coefficient(1.0 + v)) < 1e-10);
    CHECK(std::abs(from_tau.coefficient(1.0) - direct.coefficient(1.0)) < 1e-12);
  }
}

TEST_CASE("tau_V window") {
  const JimboPVParams p = lue_pv_params(LUEContext(2, 0.4, 0.3, 0.25));
  CHECK_NOTHROW(tau_v_expansion(p, 0.3));
  CHECK_THROWS_AS(tau_v_expansion(p, 0.6), std::domain_error);
  CHECK_THROWS_AS(tau_v_expansion(p, 0.0), std::domain_error);
}

TEST_CASE("III' expansion reproduces the hard-edge expansion") {
  for (const auto& [a, mu, xi] : {std::tuple{0.4, 0.3, 0.25}, std::tuple{1.5, 0.25, 1.0}, std::tuple{-0.3, 0.6, 0.5}}) {
    const double v = a + mu;
    const JimboIIITerms t = tau_iii_terms(hardedge_iii_params(a, mu, xi));
    CHECK(t.minus == Complex(0.0));
    CHECK(std::abs(t.linear - ((a + mu) * (a - mu) - v * v) / (2 * v * v)) < 1e-14);
    const AsymptoticExpansion from_tau = hardedge_from_tau_iii(a, mu, xi), direct = hardedge_expansion(a, mu, xi);
    CHECK(std::abs(from_tau.coefficient(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(from_tau.coefficient(1.0) + mu / (4 * v)) < 1e-14);
    CHECK(rel(from_tau.coefficient(1.0 + v), direct.coefficient(1.0 + v)) < 1e-10);
  }
  CHECK_THROWS_AS(tau_iii_expansion(hardedge_iii_params(0.4, 0.3, 0.25), 0.3), std::domain_error);
}

TEST_CASE("hard-edge sigma expansion") {
  const AsymptoticExpansion s = hardedge_sigma_expansion(0.4, 0.3, 0.25);
  CHECK(std::abs(s.coefficient(0.0) + 0.3 * 0.7 / 2) < 1e-15);
  CHECK(std::abs(s.coefficient(1.0) - 0.3 / (4 * 0.7)) < 1e-15);
  const AsymptoticExpansion k = hardedge_sigma_expansion(2.0, 2.0, 1.0);
  CHECK(std::abs(k.coefficient(0.0) + 4.0) < 1e-15);
  CHECK(std::abs(k.coefficient(1.0) - 0.125) < 1e-15);
}

TEST_CASE("hard-edge pole case mu+a=0 carries log(s/4)") {
  const AsymptoticExpansion e = hardedge_expansion(0.3, -0.3, 0.5);
  CHECK(std::abs(e.coefficient(1.0, 1) + 0.3 / 4) < 1e-15);
  CHECK(e.validity_order() == 1.0);
  CHECK_THROWS_AS(hardedge_expansion(0.3, -0.3, 0.5, CaseTag::generic), std::invalid_argument);
}

TEST_CASE("hard-edge limit of the finite-N coefficients") {
  const double a = 0.4, mu = 0.3, v = a + mu;
  const AsymptoticExpansion he = hardedge_expansion(a, mu, 0.5);
  for (int N : {50, 200, 800}) {
    const AsymptoticExpansion fn = e2n_expansion(LUEContext(N, a, mu, 0.5));
    CHECK(std::abs(fn.coefficient(1.0) / (4.0 * N) - he.coefficient(1.0)) < 1e-15);
    const Complex ratio = fn.coefficient(1.0 + v) * std::pow(4.0 * N, -(1.0 + v)) / he.coefficient(1.0 + v);
    CHECK(std::abs(ratio - std::exp(std::lgamma(N + v + 1.0) - std::lgamma(N) - (v + 1.0) * std::log(N))) < 1e-10);
  }
  // pole case mu+a=0: the finite-N bracket at s/(4N) tends to the hard-edge one
  const AsymptoticExpansion hp = hardedge_expansion(0.3, -0.3, 0.5);
  const AsymptoticExpansion fp = e2n_expansion(LUEContext(800, 0.3, -0.3, 0.5));
  const double s = 1e-3;
  CHECK(std::abs(fp.evaluate(s / 3200.0) - hp.evaluate(s)) < 1e-6);
}

TEST_CASE("the true hard-edge sigma carries the Jimbo term at s^{2k+1}") {
  for (int k = 1; k <= 3; ++k) {
    const RationalSeries sigma = sigma_from_ehard(ehard_bessel(k, k, 2 * k + 2), k, k);
    CHECK(sigma[0] == -k * k);
    CHECK(sigma[1] == make_rational(1, 8));
    // generic coefficient -Gamma(mu+1)Gamma(a+1)/(Gamma(v+2)Gamma(v+1)^2) X 4^{-(v+1)}, X -> (-1)^{k+1}/2
    const double v = 2.0 * k;
    const double X = (k % 2 == 1) ? 0.5 : -0.5;
    const double expect = -std::pow(std::tgamma(k + 1.0), 2) / (std::tgamma(v + 2) * std::pow(std::tgamma(v + 1), 2)) *
                          X * std::pow(0.25, v + 1);
    CHECK(to_double(sigma[2 * k + 1]) == doctest::Approx(expect).epsilon(1e-12));
    // and the generic sigma expansion approaches it from non-integer parameters
    const double d = 1e-7;
    const AsymptoticExpansion near = hardedge_sigma_expansion(k + d, k + d, 1.0);
    CHECK(std::abs(near.coefficient(v + 1.0 + 2 * d) - expect) < 1e-5 * std::abs(expect));
  }
}

}
