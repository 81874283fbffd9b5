#include "painleve/jimbo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "painleve/special.hpp"

namespace painleve {

namespace {

constexpr double kPi = std::numbers::pi;

bool on_pole(double z, double tol) { return z < tol && near_integer(z, tol); }

Complex exp_i_pi(double x) { return std::polar(1.0, kPi * x); }

void require_window(double v, double window, const char* what) {
  if (!(v > 0.0) || v > window) throw std::domain_error(std::string(what) + ": argument outside the validity window");
}

}  // namespace

Complex LaurentValue::limit() const {
  if (order > 0) return 0.0;
  if (order < 0) throw std::domain_error("Jimbo coefficient diverges at these parameters");
  return coeff;
}

LaurentValue gamma_product_limit(std::span<const GammaFactor> factors, double tol) {
  LaurentValue r{1.0, 0};
  for (const auto& f : factors) {
    LaurentValue one;
    if (on_pole(f.base, tol)) {
      if (f.slope == 0.0) throw std::domain_error("gamma_product_limit: fixed pole");
      const int m = static_cast<int>(std::lround(-f.base));
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      one = {sign / (std::tgamma(m + 1.0) * f.slope), -1};
    } else {
      one = {gamma_fn(f.base), 0};
    }
    for (int i = 0; i < std::abs(f.power); ++i)
      r = r * (f.power > 0 ? one : LaurentValue{1.0 / one.coeff, -one.order});
  }
  return r;
}

UMatch u_from_xi(double a, double mu, double xi) {
  const double s_mu = std::sin(kPi * mu), s_sum = std::sin(kPi * (a + mu));
  const bool mu_int = near_integer(mu, kIntegerTolerance), sum_int = near_integer(a + mu, kIntegerTolerance);
  if (mu_int && sum_int) throw std::domain_error("u_from_xi: sin(pi mu) and sin(pi(a+mu)) both vanish");
  UMatch m;
  m.rhs = xi_coefficient(a, mu, xi);
  if (mu_int) {
    m.u = m.rhs;
    m.direct = true;
  } else {
    m.u = m.rhs * s_sum / s_mu;
  }
  return m;
}

UMatch ut_from_xi(double a, double mu, double xi) { return u_from_xi(a, mu, xi); }

JimboPVTerms tau_v_terms(const JimboPVParams& p) {
  const double t0 = p.theta0, ts = p.theta_s, ti = p.theta_inf, sg = p.sigma;
  if (sg == 0.0) throw std::domain_error("tau_v_terms: sigma = 0 is a distinct solution");
  JimboPVTerms out;
  out.sigma = sg;
  out.prefactor_exponent = (sg * sg - ti * ti) / 4.0;
  out.linear = -ti * (ts * ts - t0 * t0 + sg * sg) / (4.0 * sg * sg);

  // The limit is taken along sigma -> sigma + eps with the thetas fixed.
  const GammaFactor plus[] = {
      {-sg, -1.0, 2},
      {2.0 + sg, 1.0, -2},
      {1.0 + (ts + t0 + sg) / 2.0, 0.5, 1},
      {1.0 + (ts - t0 + sg) / 2.0, 0.5, 1},
      {1.0 + (ti + sg) / 2.0, 0.5, 1},
      {(ts + t0 - sg) / 2.0, -0.5, -1},
      {(ts - t0 - sg) / 2.0, -0.5, -1},
      {(ti - sg) / 2.0, -0.5, -1},
  };
  const GammaFactor minus[] = {
      {sg, 1.0, 2},
      {2.0 - sg, -1.0, -2},
      {1.0 + (ts + t0 - sg) / 2.0, -0.5, 1},
      {1.0 + (ts - t0 - sg) / 2.0, -0.5, 1},
      {1.0 + (ti - sg) / 2.0, -0.5, 1},
      {(ts + t0 + sg) / 2.0, 0.5, -1},
      {(ts - t0 + sg) / 2.0, 0.5, -1},
      {(ti + sg) / 2.0, 0.5, -1},
  };
  out.plus = (p.u * gamma_product_limit(plus)).limit();
  const LaurentValue gm = gamma_product_limit(minus);
  // A vanishing Gamma factor kills the branch for every u.
  out.minus = gm.order > 0 ? Complex(0.0) : (LaurentValue{1.0 / p.u.coeff, -p.u.order} * gm).limit();
  return out;
}

Complex tau_v_expansion(const JimboPVParams& p, double s) {
  require_window(s, kPVWindow, "tau_v_expansion");
  const JimboPVTerms t = tau_v_terms(p);
  return p.C * std::pow(s, t.prefactor_exponent) *
         (1.0 + t.linear * s + t.plus * std::pow(s, 1.0 + t.sigma) + t.minus * std::pow(s, 1.0 - t.sigma));
}

JimboPVParams lue_pv_params(const LUEContext& ctx) {
  JimboPVParams p;
  p.theta0 = ctx.theta0();
  p.theta_s = ctx.theta_s();
  p.theta_inf = ctx.theta_inf();
  p.sigma = ctx.a() + ctx.mu();
  const UMatch m = u_from_xi(ctx.a(), ctx.mu(), ctx.xi());
  if (m.direct) throw std::domain_error("lue_pv_params: integer mu leaves u undetermined");
  p.u = {m.u, 0};
  p.C = 1.0;
  return p;
}

AsymptoticExpansion lue_from_tau_v(const LUEContext& ctx) {
  const JimboPVParams p = lue_pv_params(ctx);
  const JimboPVTerms t = tau_v_terms(p);
  const double N = ctx.N(), a = ctx.a(), v = ctx.a() + ctx.mu();
  const double shift = N * N + N * v + t.prefactor_exponent;
  if (std::abs(shift) > 1e-9) throw std::logic_error("lue_from_tau_v: prefactor exponents do not cancel");
  // The minus branch vanishes, so the remainder is the one of the direct expansion.
  AsymptoticExpansion e(std::min({2.0, v + 2.0, 2.0 * (v + 1.0)}));
  e.add(p.C, 0.0);
  e.add(p.C * (t.linear - (N + a / 2.0)), 1.0);
  e.add(p.C * t.plus, 1.0 + t.sigma);
  if (t.minus != 0.0) e.add(p.C * t.minus, 1.0 - t.sigma);
  return e;
}

JimboIIITerms tau_iii_terms(const JimboIIIParams& p) {
  const double v1 = p.v1, v2 = p.v2, sg = p.sigma;
  if (sg == 0.0) throw std::domain_error("tau_iii_terms: sigma = 0 is a distinct solution");
  JimboIIITerms out;
  out.sigma = sg;
  out.prefactor_exponent = (sg * sg - v2 * v2) / 4.0;
  out.linear = (v1 * v2 - sg * sg) / (2.0 * sg * sg);
  const GammaFactor plus[] = {
      {-sg, -1.0, 2}, {2.0 + sg, 1.0, -2}, {1.0 + (v2 + sg) / 2.0, 0.5, 1},
      {1.0 + (v1 + sg) / 2.0, 0.5, 1}, {(v2 - sg) / 2.0, -0.5, -1}, {(v1 - sg) / 2.0, -0.5, -1},
  };
  const GammaFactor minus[] = {
      {sg, 1.0, 2}, {2.0 - sg, -1.0, -2}, {1.0 + (v2 - sg) / 2.0, -0.5, 1},
      {1.0 + (v1 - sg) / 2.0, -0.5, 1}, {(v2 + sg) / 2.0, 0.5, -1}, {(v1 + sg) / 2.0, 0.5, -1},
  };
  out.plus = -(p.u * gamma_product_limit(plus)).limit();
  const LaurentValue gm = gamma_product_limit(minus);
  const LaurentValue inv_u{1.0 / p.u.coeff, -p.u.order};
  out.minus = (inv_u.order + gm.order > 0) ? Complex(0.0) : -(inv_u * gm).limit();
  return out;
}

Complex tau_iii_expansion(const JimboIIIParams& p, double t) {
  require_window(t, kPIIIWindow, "tau_iii_expansion");
  const JimboIIITerms r = tau_iii_terms(p);
  return p.C * std::pow(t, r.prefactor_exponent) *
         (1.0 + r.linear * t + r.plus * std::pow(t, 1.0 + r.sigma) + r.minus * std::pow(t, 1.0 - r.sigma));
}

JimboIIIParams hardedge_iii_params(double a, double mu, double xi) {
  JimboIIIParams p;
  p.v1 = a + mu;
  p.v2 = a - mu;
  p.sigma = p.v1;
  const UMatch m = ut_from_xi(a, mu, xi);
  if (m.direct) throw std::domain_error("hardedge_iii_params: integer mu leaves u~ undetermined");
  // sigma = v1 + eps: u = 2 u~ sin(pi v1) / (pi (v1 - sigma)) = -2 u~ sin(pi v1)/(pi eps)
  p.u = {-2.0 * m.u * std::sin(kPi * p.v1) / kPi, -1};
  p.C = 1.0;
  return p;
}

AsymptoticExpansion hardedge_from_tau_iii(double a, double mu, double xi) {
  const JimboIIIParams p = hardedge_iii_params(a, mu, xi);
  const JimboIIITerms t = tau_iii_terms(p);
  const double v1 = p.v1;
  if (std::abs(t.prefactor_exponent + (p.v2 * p.v2 - v1 * v1) / 4.0) > 1e-12)
    throw std::logic_error("hardedge_from_tau_iii: prefactor exponents do not cancel");
  AsymptoticExpansion e(std::min({2.0, v1 + 2.0, 2.0 * (v1 + 1.0)}));
  e.add(p.C, 0.0);
  e.add(p.C * t.linear / 4.0, 1.0);
  e.add(p.C * t.plus * std::pow(0.25, 1.0 + v1), 1.0 + v1);
  if (t.minus != 0.0) e.add(p.C * t.minus * std::pow(0.25, 1.0 - v1), 1.0 - v1);
  return e;
}

AsymptoticExpansion hardedge_expansion(double a, double mu, double xi, CaseTag tag) {
  if (!(a > -1.0 && mu > -1.0 && a + mu > -1.0)) throw std::invalid_argument("hardedge_expansion: parameters out of domain");
  if (tag != classify(a, mu))
    throw std::invalid_argument("hardedge_expansion: case tag " + to_string(tag) + " does not match parameters");
  const double v = a + mu;
  const double log4 = std::log(4.0);
  switch (tag) {
    case CaseTag::generic: {
      AsymptoticExpansion e(std::min({2.0, v + 2.0, 2.0 * (v + 1.0)}));
      e.add(1.0, 0.0);
      e.add(-mu / (4.0 * v), 1.0);
      const double g = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(a + 1.0) - 2.0 * lgamma_fn(v + 2.0) - lgamma_fn(v + 1.0));
      e.add(g * xi_coefficient(a, mu, xi) * std::pow(0.25, v + 1.0), v + 1.0);
      return e;
    }
    case CaseTag::indeterminate: {
      const int j = static_cast<int>(std::lround(v));
      AsymptoticExpansion e(2.0);
      e.add(1.0, 0.0);
      e.add(j == 0 ? Complex(-xi / 4.0) : Complex(-mu / (4.0 * j)), 1.0);
      return e;
    }
    case CaseTag::pole: {
      const int j = static_cast<int>(std::lround(v));
      const Complex reflect = kPi / std::sin(kPi * a) * exp_i_pi(-a) * (1.0 - xi);
      if (j == 0) {
        AsymptoticExpansion e(1.0);
        e.add(1.0, 0.0);
        const Complex bracket = -1.0 + a * reflect +
                                a * (2.0 * digamma_fn(2.0) + digamma_fn(1.0) - digamma_fn(1.0 - a) + log4);
        e.add(bracket / 4.0, 1.0);
        e.add(-a / 4.0, 1.0, 1);
        return e;
      }
      if (j == 1) {
        AsymptoticExpansion e(2.0);
        e.add(1.0, 0.0);
        e.add((a - 1.0) / 4.0, 1.0);
        // N -> infinity of the finite-N s^2 coefficient at s/(4N).
        const double pre = a * (a - 1.0) / 4.0 / 16.0;
        const Complex bracket = reflect + 2.0 * digamma_fn(1.0) + digamma_fn(3.0) - digamma_fn(2.0 - a) + log4;
        const double analytic = ((1.0 - a) * (1.0 - a) / 2.0 - a / 4.0) / 16.0;
        e.add(analytic + pre * bracket, 2.0);
        e.add(-pre, 2.0, 1);
        return e;
      }
      throw std::domain_error("hardedge_expansion: pole case only available for mu+a in {0, 1}");
    }
  }
  throw std::logic_error("unreachable");
}

AsymptoticExpansion hardedge_sigma_expansion(double a, double mu, double xi, CaseTag tag) {
  AsymptoticExpansion sigma = hardedge_expansion(a, mu, xi, tag).euler_derivative().scaled(-1.0);
  sigma.add(-mu * (mu + a) / 2.0, 0.0);
  return sigma;
}

}  // namespace painleve
