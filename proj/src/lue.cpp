#include "painleve/lue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "painleve/special.hpp"
#include "painleve/two_scale_series.hpp"

namespace painleve {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMomentSMax = 50.0;

int nearest(double x) { return static_cast<int>(std::lround(x)); }

double factorial_d(int n) { return std::tgamma(n + 1.0); }

Complex exp_i_pi(double x) { return std::polar(1.0, kPi * x); }

Complex w_generic(const LUEContext& ctx, int n, double s) {
  const double a = ctx.a(), mu = ctx.mu();
  const double an0 = gamma_fn(mu + n + a + 1.0);
  if (s == 0.0) return an0;
  const Complex an = an0 * hyp1f1_scaled(-a - n, -mu - a - n, s);
  const double pref = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(n + a + 1.0) - lgamma_fn(mu + n + a + 2.0));
  const Complex bn = pref * xi_coefficient(a, mu, ctx.xi()) * hyp1f1_scaled(mu + 1.0, mu + a + n + 2.0, s);
  return an + std::pow(s, n + mu + a + 1.0) * bn;
}

Complex w_indeterminate(const LUEContext& ctx, int n, double s) {
  const int j = nearest(ctx.mu() + ctx.a());
  const int k = nearest(ctx.a()) + n;
  if (n + j < k) throw std::domain_error("indeterminate moment requires mu >= 0");
  Complex poly = 0.0;
  for (int l = 0; l <= k; ++l)
    poly += factorial_d(n + j - l) / (factorial_d(k - l) * factorial_d(l)) * std::pow(s, l);
  const double sign = ((n + j + k) % 2 == 0) ? 1.0 : -1.0;
  const Complex tail = sign * (1.0 - ctx.xi()) * factorial_d(n + j - k) / factorial_d(n + j + 1) *
                       std::pow(s, n + j + 1) * hyp1f1(n + j + 1.0 - k, n + j + 2.0, s);
  return factorial_d(k) * std::exp(-s) * (poly + tail);
}

Complex w_pole(const LUEContext& ctx, int n, double s) {
  const double a = ctx.a(), mu = ctx.mu();
  const int j = nearest(mu + a);
  if (s == 0.0) return factorial_d(n + j);

  Complex poly = 0.0;
  for (int l = 0; l <= n + j; ++l)
    poly += pochhammer(-a - n, l) * factorial_d(n + j - l) / factorial_d(l) * std::pow(-s, l);

  const double G = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(a + n + 1.0)) / factorial_d(n + j + 1);
  const double sp = std::pow(s, n + j + 1);
  const Complex regular = G * (1.0 - ctx.xi()) * exp_i_pi(mu) * sp * hyp1f1(mu + 1.0, n + j + 2.0, s);

  // sum_l [psi(l+1) + psi(n+j+l+2) - psi(mu+l+1) - log s] (mu+1)_l/(n+j+2)_l s^l/l!
  double psi1 = digamma_fn(1.0), psi2 = digamma_fn(n + j + 2.0), psi3 = digamma_fn(mu + 1.0);
  const double logs = std::log(s);
  double term = 1.0, sum = 0.0;
  int quiet = 0;
  for (int l = 0;; ++l) {
    const double contrib = (psi1 + psi2 - psi3 - logs) * term;
    sum += contrib;
    if (l > 10 && std::abs(contrib) <= 1e-17 * std::abs(sum)) {
      if (++quiet >= 3) break;
    } else {
      quiet = 0;
    }
    if (l > 20000) throw std::runtime_error("pole-case moment series did not converge");
    psi1 += 1.0 / (l + 1.0);
    psi2 += 1.0 / (n + j + l + 2.0);
    psi3 += 1.0 / (mu + l + 1.0);
    term *= (mu + 1.0 + l) / ((n + j + 2.0 + l) * (l + 1.0)) * s;
  }
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  const Complex log_part = sign * std::sin(kPi * a) / kPi * G * sp * sum;
  return std::exp(-s) * (poly + regular + log_part);
}

using MatrixC = Eigen::MatrixXcd;

MatrixC hankel(const LUEContext& ctx, double s, CaseTag tag) {
  const int N = ctx.N();
  std::vector<Complex> w(static_cast<std::size_t>(2 * N - 1));
  for (int n = 0; n < 2 * N - 1; ++n) w[static_cast<std::size_t>(n)] = moment_wn(ctx, n, s, tag);
  MatrixC m(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m(j, k) = w[static_cast<std::size_t>(j + k)];
  return m;
}

MatrixC hankel_at_zero(const LUEContext& ctx) {
  const int N = ctx.N();
  MatrixC m(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m(j, k) = gamma_fn(ctx.mu() + ctx.a() + 1.0 + j + k);
  return m;
}

double gamma_ratio_N(double v, int N) {
  // Gamma(v+N+1)/Gamma(N)
  return std::exp(lgamma_fn(v + N + 1.0) - lgamma_fn(static_cast<double>(N)));
}

}  // namespace

LUEContext::LUEContext(int N, double a, double mu, double xi) : N_(N), a_(a), mu_(mu), xi_(xi) {
  if (N < 1) throw std::invalid_argument("LUEContext: N must be >= 1");
  if (!(a > -1.0)) throw std::invalid_argument("LUEContext: requires a > -1");
  if (!(mu > -1.0)) throw std::invalid_argument("LUEContext: requires mu > -1");
  if (!(a + mu > -1.0)) throw std::invalid_argument("LUEContext: requires a + mu > -1");
  if (!std::isfinite(xi)) throw std::invalid_argument("LUEContext: xi must be finite");
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::generic: return "generic";
    case CaseTag::indeterminate: return "indeterminate";
    case CaseTag::pole: return "pole";
  }
  return "?";
}

CaseTag parse_case_tag(const std::string& name) {
  if (name == "generic") return CaseTag::generic;
  if (name == "indeterminate") return CaseTag::indeterminate;
  if (name == "pole") return CaseTag::pole;
  throw std::invalid_argument("unknown case tag: " + name);
}

CaseTag classify(double a, double mu, double tol) {
  const double j = mu + a;
  if (!(near_integer(j, tol) && j > -tol)) return CaseTag::generic;
  return (near_integer(a, tol) && a > -tol) ? CaseTag::indeterminate : CaseTag::pole;
}

Complex xi_coefficient(double a, double mu, double xi) {
  return (1.0 - xi) * exp_i_pi(mu) - std::sin(kPi * a) / std::sin(kPi * (mu + a));
}

Complex moment_wn(const LUEContext& ctx, int n, double s, CaseTag tag) {
  if (n < 0) throw std::invalid_argument("moment_wn: n must be >= 0");
  if (s < 0.0) throw std::domain_error("moment_wn: s must be >= 0");
  if (s > kMomentSMax) throw std::domain_error("moment_wn: s beyond the series domain");
  switch (tag) {
    case CaseTag::generic: return w_generic(ctx, n, s);
    case CaseTag::indeterminate:
      if (s == 0.0) return gamma_fn(ctx.mu() + ctx.a() + n + 1.0);
      return w_indeterminate(ctx, n, s);
    case CaseTag::pole: return w_pole(ctx, n, s);
  }
  throw std::logic_error("unreachable");
}

DeterminantResult e2n_determinant_checked(const LUEContext& ctx, double s, CaseTag tag) {
  if (ctx.N() > kMaxDeterminantSize) throw std::domain_error("e2n_determinant: N > 12 is not supported");
  if (s < 0.0) throw std::domain_error("e2n_determinant: s must be >= 0");
  DeterminantResult r;
  if (s == 0.0) {
    r.value = 1.0;
    return r;
  }
  const Eigen::PartialPivLU<MatrixC> lu(hankel(ctx, s, tag));
  const Eigen::PartialPivLU<MatrixC> lu0(hankel_at_zero(ctx));
  r.value = lu.determinant() / lu0.determinant();
  const auto diag = lu.matrixLU().diagonal().cwiseAbs();
  r.condition_estimate = diag.maxCoeff() / diag.minCoeff();
  r.ill_conditioned = !(r.condition_estimate < 1e12) || !std::isfinite(std::abs(r.value));
  return r;
}

Complex e2n_determinant(const LUEContext& ctx, double s, CaseTag tag) {
  return e2n_determinant_checked(ctx, s, tag).value;
}

AsymptoticExpansion e2n_expansion(const LUEContext& ctx, CaseTag tag) {
  const int N = ctx.N();
  const double a = ctx.a(), mu = ctx.mu(), v = mu + a;
  const CaseTag actual = classify(ctx);
  if (tag != actual) throw std::invalid_argument("e2n_expansion: case tag " + to_string(tag) + " but parameters are " + to_string(actual));

  switch (tag) {
    case CaseTag::generic: {
      AsymptoticExpansion e(std::min({2.0, v + 2.0, 2.0 * (v + 1.0)}));
      e.add(1.0, 0.0);
      e.add(-mu * N / v, 1.0);
      const double g = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(a + 1.0) - 2.0 * lgamma_fn(v + 2.0) -
                                lgamma_fn(v + 1.0)) *
                       gamma_ratio_N(v, N);
      e.add(g * xi_coefficient(a, mu, ctx.xi()), v + 1.0);
      return e;
    }
    case CaseTag::indeterminate: {
      const int j = nearest(v);
      AsymptoticExpansion e(2.0);
      e.add(1.0, 0.0);
      if (j == 0) {
        // a = mu = 0: the sine ratio is dropped, the (1-xi) part stays at s^1.
        e.add(static_cast<double>(-N), 1.0);
        e.add((1.0 - ctx.xi()) * static_cast<double>(N), 1.0);
      } else {
        e.add(-mu * N / j, 1.0);
      }
      return e;
    }
    case CaseTag::pole: {
      const int j = nearest(v);
      const Complex reflect = kPi / std::sin(kPi * a) * exp_i_pi(-a) * (1.0 - ctx.xi());
      if (j == 0) {
        AsymptoticExpansion e(1.0);
        e.add(1.0, 0.0);
        const Complex bracket = -1.0 + a * reflect +
                                a * (2.0 * digamma_fn(2.0) + digamma_fn(1.0) - digamma_fn(1.0 - a) -
                                     digamma_fn(N + 1.0));
        e.add(bracket * static_cast<double>(N), 1.0);
        e.add(-a * N, 1.0, 1);
        return e;
      }
      if (j == 1) {
        AsymptoticExpansion e(2.0);
        e.add(1.0, 0.0);
        e.add((a - 1.0) * N, 1.0);
        // The s^2 coefficient includes the analytic part of the determinant
        // (N^2 (1-a)^2/2 - a N(N+1)/4 from the polynomial parts of the
        // moments); the bracket is the w_0 singular part times (M0^{-1})_00.
        const double pre = a * (a - 1.0) / 4.0 * (N + 1.0) * N;
        const Complex bracket = reflect + 2.0 * digamma_fn(1.0) + digamma_fn(3.0) - digamma_fn(2.0 - a) -
                                digamma_fn(N + 1.0);
        const double analytic = N * N * (1.0 - a) * (1.0 - a) / 2.0 - a * N * (N + 1.0) / 4.0;
        e.add(analytic + pre * bracket, 2.0);
        e.add(-pre, 2.0, 1);
        return e;
      }
      throw std::domain_error("e2n_expansion: pole case only available for mu+a in {0, 1}");
    }
  }
  throw std::logic_error("unreachable");
}

AsymptoticExpansion wn_expansion(const LUEContext& ctx, CaseTag tag) {
  AsymptoticExpansion w = e2n_expansion(ctx, tag).euler_derivative();
  w.add(-ctx.N() * ctx.mu(), 0.0);
  return w;
}

namespace {

TwoScaleSeries<Complex> e2n_two_scale(const LUEContext& ctx, int I, int J) {
  if (classify(ctx) != CaseTag::generic) throw std::domain_error("two-scale expansion needs the generic case");
  const int N = ctx.N();
  const double a = ctx.a(), mu = ctx.mu();
  const Complex X = xi_coefficient(a, mu, ctx.xi());

  ComplexSeries emin(I, Var::s);
  for (int m = 0; m <= I; ++m) emin[m] = ((m % 2) ? -1.0 : 1.0) / factorial_d(m);

  std::vector<TwoScaleSeries<Complex>> w;
  for (int n = 0; n < 2 * N - 1; ++n) {
    const ComplexSeries an = gamma_fn(mu + n + a + 1.0) * (emin * hyp1f1_series(-a - n, -mu - a - n, I));
    const double pref = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(n + a + 1.0) - lgamma_fn(mu + n + a + 2.0));
    const ComplexSeries bn = (pref * X) * (emin * hyp1f1_series(mu + 1.0, mu + a + n + 2.0, I));
    w.push_back(TwoScaleSeries<Complex>::from_series(an, 0, 0, I, J) +
                TwoScaleSeries<Complex>::from_series(bn, n, 1, I, J));
  }
  std::vector<std::vector<TwoScaleSeries<Complex>>> m(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m[static_cast<std::size_t>(j)].push_back(w[static_cast<std::size_t>(j + k)]);
  TwoScaleSeries<Complex> det = determinant(std::move(m));
  const Complex d0 = det(0, 0);
  return (1.0 / d0) * det;
}

}  // namespace

AsymptoticExpansion e2n_two_scale_expansion(const LUEContext& ctx, int max_i, int max_j) {
  const double lambda = ctx.mu() + ctx.a() + 1.0;
  return e2n_two_scale(ctx, max_i, max_j).to_expansion(lambda, std::min(max_i + 1.0, (max_j + 1.0) * lambda));
}

AsymptoticExpansion wn_two_scale_expansion(const LUEContext& ctx, int max_i, int max_j) {
  const double lambda = ctx.mu() + ctx.a() + 1.0;
  const TwoScaleSeries<Complex> E = e2n_two_scale(ctx, max_i, max_j);
  const TwoScaleSeries<Complex> logder = E.euler_derivative(lambda) * E.inverse();
  AsymptoticExpansion w = logder.to_expansion(lambda, std::min(max_i + 1.0, (max_j + 1.0) * lambda));
  w.add(-ctx.N() * ctx.mu(), 0.0);
  return w;
}

double gamma_determinant_identity(const std::vector<double>& z) {
  double r = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    r *= gamma_fn(z[j]);
    for (std::size_t k = j + 1; k < z.size(); ++k) r *= z[k] - z[j];
  }
  return r;
}

HdetReport hdet_expansion_check(const LUEContext& ctx) {
  if (classify(ctx) != CaseTag::generic) throw std::domain_error("hdet_expansion_check needs the generic case");
  const int N = ctx.N();
  const double a = ctx.a(), mu = ctx.mu(), v = mu + a;
  auto lu_det = [](const MatrixC& m) { return m.rows() == 0 ? Complex(1.0) : Complex(Eigen::PartialPivLU<MatrixC>(m).determinant()); };

  HdetReport r;
  MatrixC B1(N, N), B2(N, N), B3(N - 1, N - 1);
  std::vector<double> z1, z2, z3;
  for (int k = 0; k < N; ++k) {
    z1.push_back(v + 1.0 + k);
    z2.push_back(k == 0 ? v : v + 1.0 + k);
    if (k < N - 1) z3.push_back(v + 3.0 + k);
  }
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      B1(j, k) = gamma_fn(z1[static_cast<std::size_t>(k)] + j);
      B2(j, k) = gamma_fn(z2[static_cast<std::size_t>(k)] + j);
      if (j < N - 1 && k < N - 1) B3(j, k) = gamma_fn(z3[static_cast<std::size_t>(k)] + j);
    }
  r.constant_block_lu = lu_det(B1);
  r.linear_block_lu = lu_det(B2);
  r.power_block_lu = lu_det(B3);
  r.constant_block_identity = gamma_determinant_identity(z1);
  r.linear_block_identity = gamma_determinant_identity(z2);
  r.power_block_identity = z3.empty() ? 1.0 : gamma_determinant_identity(z3);

  const Complex b00 = std::exp(lgamma_fn(mu + 1.0) + lgamma_fn(a + 1.0) - lgamma_fn(v + 2.0)) *
                      xi_coefficient(a, mu, ctx.xi());
  r.linear_coefficient = -mu * r.linear_block_identity / r.constant_block_identity;
  r.power_coefficient = b00 * r.power_block_identity / r.constant_block_identity;

  const AsymptoticExpansion e = e2n_expansion(ctx, CaseTag::generic);
  r.linear_reference = e.coefficient(1.0);
  r.power_reference = e.coefficient(v + 1.0);

  auto rel = [](Complex x, Complex y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };
  r.max_rel_discrepancy = std::max({rel(r.constant_block_lu, r.constant_block_identity),
                                    rel(r.linear_block_lu, r.linear_block_identity),
                                    rel(r.power_block_lu, r.power_block_identity),
                                    rel(r.linear_coefficient, r.linear_reference),
                                    rel(r.power_coefficient, r.power_reference)});
  return r;
}

}  // namespace painleve
