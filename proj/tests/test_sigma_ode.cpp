#include <doctest.h>

#include <Eigen/Dense>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <tuple>
#include <vector>

#include "painleve/bessel.hpp"
#include "painleve/hardedge.hpp"
#include "painleve/jimbo.hpp"
#include "painleve/lue.hpp"
#include "painleve/sigma_ode.hpp"

using namespace painleve;

TEST_SUITE("ode") {
  TEST_CASE("pv residual of a constant is -c^2 plus the nu product at sigma' = 0") {
    const LUEContext ctx(2, 0.5, 0.25, 0.3);
    // nu_0 = 0 kills the product when sigma' = 0.
    for (double c : {0.0, 0.7, -1.3}) CHECK(std::abs(pv_residual(ctx, 0.9, c, 0.0, 0.0) + c * c) < 1e-14);
  }

  TEST_CASE("exact residual vanishes for the recurrence series") {
    for (int k : {1, 2, 3, 5}) {
      const RationalSeries r = exact_series_residual_piii(k, 8);
      CHECK(r.order() >= 16);
      for (int n = 0; n <= 16; ++n) CHECK(r[n] == 0);
    }
  }

  TEST_CASE("perturbing c2 leaves a nonzero s^4 residual") {
    EtaSeries eta = eta_coefficients(2, 8);
    eta.c[2] += make_rational(1, 1000000);
    const RationalSeries r = exact_series_residual_piii(eta);
    for (int n = 0; n < 4; ++n) CHECK(r[n] == 0);
    CHECK(r[4] != 0);
  }

  TEST_CASE("series residual of the Bessel sigma is zero") {
    for (auto [a, mu] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 0}}) {
      const RationalSeries sig = sigma_from_ehard(ehard_bessel(a, mu, 12), a, mu);
      const RationalSeries r = piii_series_residual(sig, Rational(a + mu), Rational(a - mu));
      for (int n = 0; n <= r.order(); ++n) CHECK(r[n] == 0);
    }
  }

  TEST_CASE("third derivative matches the seed series") {
    const HardEdgeContext ctx(2, 1, 1);
    const AsymptoticExpansion seed = piii_seed(ctx);
    const AsymptoticExpansion d1 = seed.derivative(), d2 = d1.derivative(), d3 = d2.derivative();
    const double s = 0.3;
    const Complex g = piii_third_derivative(ctx, s, seed.evaluate(s), d1.evaluate(s), d2.evaluate(s));
    CHECK(std::abs(g - d3.evaluate(s)) < 1e-9 * (1 + std::abs(g)));
  }

  TEST_CASE("pv trajectory matches the determinant log derivative") {
    const LUEContext ctx(2, 0.5, 0.25, 0.3);
    const AsymptoticExpansion seed = pv_seed(ctx);
    const Trajectory tr = integrate_sigma(ctx, 0.02, 1.0, seed);
    REQUIRE(tr.status == TrajectoryStatus::ok);
    CHECK(tr.max_residual_ratio <= 1.0);
    const double h = 1e-4;
    const Complex dlog = (std::log(e2n_determinant(ctx, 1 + h)) - std::log(e2n_determinant(ctx, 1 - h))) / (2 * h);
    const SigmaState st = trajectory_state(tr, 1.0);
    CHECK(std::abs(st.sigma - (dlog - double(ctx.N()) * ctx.mu())) < 1e-6);
    const Complex e = e2n_from_sigma(ctx, 1.0, tr);
    CHECK(std::abs(e - e2n_determinant(ctx, 1.0)) < 1e-8);
  }

  TEST_CASE("iii' trajectory matches the Bessel series") {
    const HardEdgeContext ctx(2, 1, 1);
    const Trajectory tr = integrate_sigma(ctx, 0.1, 2.0, piii_seed(ctx));
    REQUIRE(tr.status == TrajectoryStatus::ok);
    const RationalSeries eh = ehard_bessel(2, 1, 60);
    double x = 0.5, p = 1, ref = 0;
    for (int n = 0; n <= eh.order(); ++n, p *= x) ref += to_double(eh[n]) * p;
    const Complex e = ehard_from_sigma(ctx, 2.0, tr);
    CHECK(std::abs(e - ref) < 1e-8 * std::abs(ref));
    CHECK(std::abs(e.imag()) < 1e-14);
  }

  TEST_CASE("recurrence and Bessel seeds share the even part for k = 1") {
    const HardEdgeContext ctx(1, 1, 1);
    const AsymptoticExpansion rec = piii_seed(ctx, SeedKind::recurrence);
    const AsymptoticExpansion bes = piii_seed(ctx, SeedKind::bessel);
    // Even through s^2; the Bessel series carries an s^3 term the recurrence lacks.
    CHECK(std::abs(rec.coefficient(2) - bes.coefficient(2)) < 1e-15);
    CHECK(rec.coefficient(3) == Complex(0.0));
    CHECK(std::abs(bes.coefficient(3) + 1.0 / 3072) < 1e-18);
  }

  TEST_CASE("seed kinds round trip and reject bad parameters") {
    for (SeedKind k : {SeedKind::automatic, SeedKind::printed, SeedKind::two_scale, SeedKind::bessel, SeedKind::recurrence})
      CHECK(parse_seed_kind(to_string(k)) == k);
    CHECK_THROWS(parse_seed_kind("nope"));
    CHECK_THROWS(HardEdgeContext(-1.5, 0.2, 1));
    CHECK_THROWS(piii_seed(HardEdgeContext(0.5, 0.5, 1), SeedKind::bessel));
    CHECK_THROWS(integrate_sigma(HardEdgeContext(2, 1, 1), 0.0, 1.0, piii_seed(HardEdgeContext(2, 1, 1))));
  }

  TEST_CASE("mu = 0 hard edge stays real and E is 1 at the origin") {
    const HardEdgeContext ctx(1.5, 0.0, 0.4);
    const Trajectory tr = integrate_sigma(ctx, 0.05, 1.0, piii_seed(ctx));
    REQUIRE(tr.status == TrajectoryStatus::ok);
    CHECK(ehard_from_sigma(ctx, 0.0, tr) == Complex(1.0));
    for (const auto& p : tr.points) CHECK(std::abs(p.state.sigma.imag()) < 1e-10);
  }

  TEST_CASE("k = 1 trajectory from the recurrence seed follows the series") {
    const HardEdgeContext ctx(1, 1, 1);
    const AsymptoticExpansion seed = piii_seed(ctx, SeedKind::recurrence);
    const Trajectory tr = integrate_sigma(ctx, 0.01, 0.1, seed);
    REQUIRE(tr.status == TrajectoryStatus::ok);
    for (double s : {0.02, 0.05, 0.1}) CHECK(std::abs(trajectory_state(tr, s).sigma - seed.evaluate(s)) < 1e-10);
  }

  TEST_CASE("a = mu = 1 matches 1 - x/2 + x^2/12 at small x") {
    const HardEdgeContext ctx(1, 1, 1);
    const Trajectory tr = integrate_sigma(ctx, 0.01, 0.2, piii_seed(ctx));
    REQUIRE(tr.status == TrajectoryStatus::ok);
    for (double x : {0.01, 0.02, 0.05}) {
      const Complex e = ehard_from_sigma(ctx, 4 * x, tr);
      CHECK(std::abs(e - (1 - x / 2 + x * x / 12)) < 0.01 * x * x * x);
    }
  }

  TEST_CASE("halving s0 moves the endpoint by less than the seed remainder") {
    const HardEdgeContext ctx(0.6, 0.3, 0.5);
    const AsymptoticExpansion seed = piii_seed(ctx);
    std::vector<Complex> ends;
    for (double s0 : {0.04, 0.02, 0.01}) {
      const Trajectory tr = integrate_sigma(ctx, s0, 1.0, seed);
      REQUIRE(tr.status == TrajectoryStatus::ok);
      ends.push_back(ehard_from_sigma(ctx, 1.0, tr));
    }
    const double d1 = std::abs(ends[1] - ends[0]), d2 = std::abs(ends[2] - ends[1]);
    MESSAGE("endpoint shifts " << d1 << " " << d2 << " seed order " << seed.validity_order());
    // s0^11 is far below the integrator floor, so only the floor shows.
    CHECK(d1 < 1e-9);
    CHECK(d2 < 1e-9);
  }

  TEST_CASE("two-scale hard-edge seed solves the sigma-form") {
    for (auto [a, mu, xi] : {std::tuple{0.6, 0.3, 0.5}, {0.4, -0.8, 0.2}, {-0.5, 0.2, 0.7}, {1.7, 0.35, 1.0}}) {
      const HardEdgeContext ctx(a, mu, xi);
      const AsymptoticExpansion seed = piii_seed(ctx, SeedKind::two_scale);
      const AsymptoticExpansion printed = hardedge_sigma_expansion(a, mu, xi);
      for (const auto& term : printed.terms())
        CHECK(std::abs(seed.coefficient(term.exponent) - term.coeff) < 1e-13 * (1 + std::abs(term.coeff)));
      const AsymptoticExpansion d1 = seed.derivative(), d2 = d1.derivative();
      const double s = 0.01;
      CHECK(std::abs(piii_residual(ctx, s, seed.evaluate(s), d1.evaluate(s), d2.evaluate(s))) < 1e-13);
    }
    CHECK_THROWS(hardedge_two_scale_sigma(2, 1, 1, 10, 4));
  }

  TEST_CASE("generic iii' at xi = 1 matches the Bessel determinant of non-integer order") {
    // e^{-x} x^{-a mu/2} det[I_{mu+j-k}(2 sqrt x)] / det[1/Gamma(mu+1+j-k)], s = 4x
    auto bessel_oracle = [](int a, double mu, double s) {
      const double x = s / 4;
      Eigen::MatrixXd m(a, a), m0(a, a);
      for (int j = 0; j < a; ++j)
        for (int k = 0; k < a; ++k) {
          const double n = mu + j - k;
          m(j, k) = boost::math::cyl_bessel_i(n, 2 * std::sqrt(x));
          m0(j, k) = 1 / std::tgamma(n + 1);
        }
      return std::exp(-x) * std::pow(x, -a * mu / 2) * m.determinant() / m0.determinant();
    };
    for (auto [a, mu] : {std::pair{2, 0.5}, {1, 0.3}, {3, -0.4}}) {
      const HardEdgeContext ctx(a, mu, 1.0);
      const Trajectory tr = integrate_sigma(ctx, 0.01, 2.0, piii_seed(ctx));
      REQUIRE(tr.status == TrajectoryStatus::ok);
      for (double s : {0.5, 2.0}) {
        const double ref = bessel_oracle(a, mu, s);
        CHECK(std::abs(ehard_from_sigma(ctx, s, tr) - ref) < 1e-8 * ref);
      }
    }
  }

  TEST_CASE("generic iii' is the large-N limit of the finite-N average") {
    const double a = 0.6, mu = 0.3, xi = 0.5;
    const HardEdgeContext ctx(a, mu, xi);
    const Trajectory tr = integrate_sigma(ctx, 0.01, 1.0, piii_seed(ctx));
    REQUIRE(tr.status == TrajectoryStatus::ok);
    const Complex eh = ehard_from_sigma(ctx, 1.0, tr);
    // cubic extrapolation in 1/N; beyond N ~ 8 the Hankel conditioning costs more than it gains
    Complex acc = 0.0;
    for (int N : {5, 6, 7, 8}) {
      double w = 1;
      for (int M : {5, 6, 7, 8})
        if (M != N) w *= double(N) / (N - M);
      acc += w * e2n_determinant(LUEContext(N, a, mu, xi), 1.0 / (4 * N));
    }
    MESSAGE("finite-N extrapolation gap " << std::abs(acc - eh));
    CHECK(std::abs(acc - eh) < 1e-6);
  }
}
