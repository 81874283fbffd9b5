#include "painleve/sigma_ode.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "painleve/bessel.hpp"
#include "painleve/jimbo.hpp"
#include "painleve/special.hpp"

namespace painleve {

namespace {

using State = Eigen::Matrix<Complex, 4, 1>;  // sigma, sigma', sigma'', quadrature

constexpr int kExactSeedOrder = 40;
constexpr int kTwoScaleOrder = 10;
constexpr int kTwoScaleMaxJ = 40;

struct Equation {
  SigmaEquation kind;
  Complex sigma0;
  std::function<Complex(double, Complex, Complex, Complex)> residual;
  std::function<Complex(double, Complex, Complex, Complex)> third;
};

Trajectory run(const Equation& eq, double s0, double s1, const AsymptoticExpansion& seed,
               const IntegrationOptions& opt) {
  if (!(s0 > 0.0)) throw std::domain_error("integrate_sigma: s0 must be > 0");
  if (!(s1 > s0)) throw std::domain_error("integrate_sigma: s1 must exceed s0");

  Trajectory traj;
  traj.equation = eq.kind;
  traj.s0 = s0;
  traj.s1 = s1;
  traj.sigma_at_zero = eq.sigma0;
  traj.seed = seed;

  const AsymptoticExpansion d1 = seed.derivative(), d2 = d1.derivative();
  State y;
  y << seed.evaluate(s0), d1.evaluate(s0), d2.evaluate(s0), 0.0;
  AsymptoticExpansion tail = seed;
  tail.add(-eq.sigma0, 0.0);
  traj.stub_integral = tail.integral_over_s(s0);

  auto record = [&](double s, const State& st) {
    TrajectoryPoint p;
    p.state = {s, st[0], st[1], st[2]};
    p.d3 = eq.third(s, st[0], st[1], st[2]);
    p.quadrature = st[3];
    p.residual = std::abs(eq.residual(s, st[0], st[1], st[2]));
    p.bound = opt.monitor * (1.0 + std::norm(st[0]));
    traj.max_residual_ratio = std::max(traj.max_residual_ratio, p.residual / p.bound);
    traj.points.push_back(p);
    return p.residual <= p.bound;
  };

  if (!record(s0, y)) {
    traj.status = TrajectoryStatus::residual_breach;
    std::ostringstream os;
    os << "seed violates the sigma-form at s0=" << s0 << ": |F|=" << traj.points.back().residual
       << " > " << traj.points.back().bound << " (seed remainder order " << seed.validity_order() << ")";
    traj.diagnostic = os.str();
    return traj;
  }

  auto rhs = [&](double s, const State& st) {
    State d;
    d << st[1], st[2], eq.third(s, st[0], st[1], st[2]), (st[0] - eq.sigma0) / s;
    return d;
  };
  auto observe = [&](double s, const State& st) {
    if (record(s, st)) return true;
    std::ostringstream os;
    os << "residual monitor breach at s=" << s << ": |F|=" << traj.points.back().residual << " > "
       << traj.points.back().bound;
    traj.diagnostic = os.str();
    return false;
  };

  DopriOptions dopt;
  dopt.rtol = opt.rtol;
  dopt.atol = opt.atol;
  dopt.max_steps = opt.max_steps;
  dopt.initial_step = 1e-2 * s0;
  const DopriResult res = dopri5(rhs, s0, s1, y, dopt, observe);
  traj.accepted_steps = res.accepted;
  traj.rejected_steps = res.rejected;
  switch (res.status) {
    case DopriStatus::ok: traj.status = TrajectoryStatus::ok; break;
    case DopriStatus::stopped: traj.status = TrajectoryStatus::residual_breach; break;
    case DopriStatus::step_underflow:
      traj.status = TrajectoryStatus::singularity;
      traj.diagnostic = "step size underflow near s=" + std::to_string(res.t) + " (suspected pole)";
      break;
    case DopriStatus::max_steps:
      traj.status = TrajectoryStatus::max_steps;
      traj.diagnostic = "step budget exhausted at s=" + std::to_string(res.t);
      break;
  }
  return traj;
}

Complex hermite(double t0, double t1, Complex y0, Complex dy0, Complex y1, Complex dy1, double t) {
  const double h = t1 - t0, u = (t - t0) / h;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
  return h00 * y0 + h10 * h * dy0 + h01 * y1 + h11 * h * dy1;
}

// ∫_0^{s1} (sigma - sigma(0)) ds/s from the seed stub and the trajectory.
Complex log_integral(const Trajectory& traj, double s1) {
  if (s1 == 0.0) return 0.0;
  if (s1 < 0.0) throw std::domain_error("s1 must be >= 0");
  if (s1 <= traj.s0) {
    AsymptoticExpansion tail = traj.seed;
    tail.add(-traj.sigma_at_zero, 0.0);
    return tail.integral_over_s(s1);
  }
  const auto& pts = traj.points;
  if (pts.empty() || s1 > pts.back().state.s * (1.0 + 1e-14))
    throw std::domain_error("trajectory does not reach s1 (" + to_string(traj.status) + ")");
  auto it = std::lower_bound(pts.begin(), pts.end(), s1,
                             [](const TrajectoryPoint& p, double s) { return p.state.s < s; });
  if (it == pts.end()) it = pts.end() - 1;
  if (it->state.s == s1 || it == pts.begin()) return traj.stub_integral + it->quadrature;
  const TrajectoryPoint &b = *it, &a = *(it - 1);
  auto dq = [&](const TrajectoryPoint& p) { return (p.state.sigma - traj.sigma_at_zero) / p.state.s; };
  return traj.stub_integral + hermite(a.state.s, b.state.s, a.quadrature, dq(a), b.quadrature, dq(b), s1);
}

bool is_int(double x) { return near_integer(x, kIntegerTolerance); }

}  // namespace

HardEdgeContext::HardEdgeContext(double a, double mu, double xi) : a_(a), mu_(mu), xi_(xi) {
  if (!(a > -1.0) || !(mu > -1.0) || !(a + mu > -1.0))
    throw std::invalid_argument("HardEdgeContext: need a > -1, mu > -1, a + mu > -1");
  if (!std::isfinite(xi)) throw std::invalid_argument("HardEdgeContext: xi must be finite");
}

Complex pv_residual(const LUEContext& ctx, double s, Complex sigma, Complex d1, Complex d2) {
  const auto nu = ctx.nu();
  const Complex sd2 = s * d2;
  const Complex B = sigma - s * d1 + 2.0 * d1 * d1 + ctx.nu_sum() * d1;
  Complex prod = 4.0;
  for (double n : nu) prod *= n + d1;
  return sd2 * sd2 - B * B + prod;
}

Complex piii_residual(const HardEdgeContext& ctx, double s, Complex sigma, Complex d1, Complex d2) {
  const double v1 = ctx.v1(), v2 = ctx.v2();
  const Complex sd2 = s * d2;
  return sd2 * sd2 - v1 * v2 * d1 * d1 + d1 * (4.0 * d1 - 1.0) * (sigma - s * d1) - (v1 - v2) * (v1 - v2) / 64.0;
}

Complex pv_third_derivative(const LUEContext& ctx, double s, Complex sigma, Complex d1, Complex d2) {
  const auto nu = ctx.nu();
  const double S = ctx.nu_sum();
  const Complex B = sigma - s * d1 + 2.0 * d1 * d1 + S * d1;
  // d/dσ' of Π(nu_j + σ')
  Complex dprod = 0.0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    Complex p = 1.0;
    for (std::size_t i = 0; i < nu.size(); ++i)
      if (i != j) p *= nu[i] + d1;
    dprod += p;
  }
  return (2.0 * B * (4.0 * d1 + S - s) - 4.0 * dprod - 2.0 * s * d2) / (2.0 * s * s);
}

Complex piii_third_derivative(const HardEdgeContext& ctx, double s, Complex sigma, Complex d1, Complex d2) {
  const double v1 = ctx.v1(), v2 = ctx.v2();
  return (2.0 * v1 * v2 * d1 - (8.0 * d1 - 1.0) * (sigma - s * d1) + s * d1 * (4.0 * d1 - 1.0) - 2.0 * s * d2) /
         (2.0 * s * s);
}

RationalSeries exact_series_residual_piii(const EtaSeries& eta) {
  const RationalSeries e = eta.as_series();
  const RationalSeries d1 = derivative(e), d2 = derivative(d1);
  const RationalSeries sd2 = shift_up(d2, 1), sd1 = shift_up(d1, 1);
  const int P = d1.order();
  const RationalSeries quarter = RationalSeries::constant(make_rational(1, 64), P, Var::s);
  RationalSeries r = sd2 * sd2 + Rational(4) * ((d1 * d1 - quarter) * (e - sd1));
  r[0] -= make_rational(eta.k * eta.k, 16);
  return r;
}

RationalSeries exact_series_residual_piii(int k, int P) { return exact_series_residual_piii(eta_coefficients(k, P)); }

std::string to_string(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::ok: return "ok";
    case TrajectoryStatus::residual_breach: return "residual_breach";
    case TrajectoryStatus::singularity: return "singularity";
    case TrajectoryStatus::max_steps: return "max_steps";
  }
  return "unknown";
}

Trajectory integrate_sigma(const LUEContext& ctx, double s0, double s1, const AsymptoticExpansion& seed,
                           const IntegrationOptions& opt) {
  Equation eq{SigmaEquation::pv, Complex(-ctx.N() * ctx.mu()),
              [&ctx](double s, Complex g, Complex a, Complex b) { return pv_residual(ctx, s, g, a, b); },
              [&ctx](double s, Complex g, Complex a, Complex b) { return pv_third_derivative(ctx, s, g, a, b); }};
  return run(eq, s0, s1, seed, opt);
}

Trajectory integrate_sigma(const HardEdgeContext& ctx, double s0, double s1, const AsymptoticExpansion& seed,
                           const IntegrationOptions& opt) {
  Equation eq{SigmaEquation::piii, Complex(ctx.sigma_at_zero()),
              [&ctx](double s, Complex g, Complex a, Complex b) { return piii_residual(ctx, s, g, a, b); },
              [&ctx](double s, Complex g, Complex a, Complex b) { return piii_third_derivative(ctx, s, g, a, b); }};
  return run(eq, s0, s1, seed, opt);
}

Complex ehard_from_sigma(const HardEdgeContext&, double s1, const Trajectory& traj) {
  if (traj.equation != SigmaEquation::piii) throw std::invalid_argument("ehard_from_sigma needs a III' trajectory");
  // u^h = -(sigma + mu(mu+a)/2)
  return std::exp(-log_integral(traj, s1));
}

Complex e2n_from_sigma(const LUEContext&, double s1, const Trajectory& traj) {
  if (traj.equation != SigmaEquation::pv) throw std::invalid_argument("e2n_from_sigma needs a PV trajectory");
  return std::exp(log_integral(traj, s1));
}

SigmaState trajectory_state(const Trajectory& traj, double s) {
  if (s < traj.s0) {
    const AsymptoticExpansion d1 = traj.seed.derivative(), d2 = d1.derivative();
    return {s, traj.seed.evaluate(s), d1.evaluate(s), d2.evaluate(s)};
  }
  const auto& pts = traj.points;
  if (pts.empty() || s > pts.back().state.s * (1.0 + 1e-14))
    throw std::domain_error("trajectory does not reach s");
  auto it = std::lower_bound(pts.begin(), pts.end(), s,
                             [](const TrajectoryPoint& p, double v) { return p.state.s < v; });
  if (it == pts.end()) it = pts.end() - 1;
  if (it->state.s == s || it == pts.begin()) return it->state;
  const TrajectoryPoint &b = *it, &a = *(it - 1);
  const double t0 = a.state.s, t1 = b.state.s;
  return {s, hermite(t0, t1, a.state.sigma, a.state.d1, b.state.sigma, b.state.d1, s),
          hermite(t0, t1, a.state.d1, a.state.d2, b.state.d1, b.state.d2, s),
          hermite(t0, t1, a.state.d2, a.d3, b.state.d2, b.d3, s)};
}

std::string to_string(SeedKind kind) {
  switch (kind) {
    case SeedKind::automatic: return "auto";
    case SeedKind::printed: return "printed";
    case SeedKind::two_scale: return "two-scale";
    case SeedKind::bessel: return "bessel";
    case SeedKind::recurrence: return "recurrence";
  }
  return "unknown";
}

SeedKind parse_seed_kind(const std::string& name) {
  for (SeedKind k : {SeedKind::automatic, SeedKind::printed, SeedKind::two_scale, SeedKind::bessel, SeedKind::recurrence})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown seed kind '" + name + "'");
}

AsymptoticExpansion to_expansion(const RationalSeries& f) {
  AsymptoticExpansion e(f.order() + 1.0);
  for (int n = 0; n <= f.order(); ++n)
    if (sgn(f[n]) != 0) e.add(to_double(f[n]), static_cast<double>(n));
  return e;
}

AsymptoticExpansion pv_seed(const LUEContext& ctx, SeedKind kind) {
  const bool generic = classify(ctx) == CaseTag::generic;
  if (kind == SeedKind::automatic) kind = generic ? SeedKind::two_scale : SeedKind::printed;
  switch (kind) {
    case SeedKind::printed: return wn_expansion(ctx);
    case SeedKind::two_scale: {
      if (!generic) throw std::domain_error("pv_seed: the two-scale seed needs the generic case");
      const double lambda = ctx.mu() + ctx.a() + 1.0;
      const int J = std::clamp(static_cast<int>(std::ceil((kTwoScaleOrder + 1) / lambda)) - 1, 1, kTwoScaleMaxJ);
      return wn_two_scale_expansion(ctx, kTwoScaleOrder, J);
    }
    default: throw std::invalid_argument("pv_seed: seed kind " + to_string(kind) + " is not available for PV");
  }
}

AsymptoticExpansion hardedge_two_scale_sigma(double a, double mu, double xi, int I, int J) {
  if (I < 1 || J < 1) throw std::invalid_argument("hardedge_two_scale_sigma: need I, J >= 1");
  if (classify(a, mu) != CaseTag::generic) throw std::domain_error("hardedge_two_scale_sigma: needs generic a + mu");
  const double v = a + mu, lambda = v + 1.0;
  const AsymptoticExpansion printed = hardedge_sigma_expansion(a, mu, xi);
  // Euler operator form: 2θ(θ-1)^2 σ - 2 v1 v2 θσ + 8 σ θσ - 12 (θσ)^2 - sσ + 2 s θσ = 0.
  auto expo = [&](int i, int j) { return i + j * lambda; };
  auto indicial = [&](double e) { return e * (2.0 * (e - 1.0) * (e - 1.0) - 2.0 * v * v); };
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(I + 1, J + 1);
  d(0, 0) = -mu * (mu + a) / 2.0;
  d(0, 1) = printed.coefficient(lambda);
  for (int j = 0; j <= J; ++j) {
    for (int i = 0; i <= I; ++i) {
      if (j == 0 && i == 0) continue;
      if (j == 1 && i == 0) continue;
      Complex rhs = 0.0;
      if (i > 0) rhs -= (2.0 * expo(i - 1, j) - 1.0) * d(i - 1, j);
      for (int q = 0; q <= j; ++q)
        for (int p = 0; p <= i; ++p) {
          if ((p == 0 && q == 0) || (p == i && q == j)) continue;
          const Complex dd = d(p, q) * d(i - p, j - q);
          rhs -= dd * (8.0 * expo(i - p, j - q) - 12.0 * expo(p, q) * expo(i - p, j - q));
        }
      // the p = 0 and p = (i, j) pairs with d_00 are linear and live in the indicial factor
      const double L = indicial(expo(i, j));
      if (std::abs(L) < 1e-8) throw std::domain_error("hardedge_two_scale_sigma: resonant exponent");
      d(i, j) = rhs / L;
    }
  }
  const double order = std::min(I + 1.0, (J + 1) * lambda);
  AsymptoticExpansion e(order);
  for (int j = 0; j <= J; ++j)
    for (int i = 0; i <= I; ++i)
      if (d(i, j) != 0.0 && expo(i, j) < order) e.add(d(i, j), expo(i, j));
  return e;
}

AsymptoticExpansion piii_seed(const HardEdgeContext& ctx, SeedKind kind) {
  const bool integer_bessel = is_int(ctx.a()) && is_int(ctx.mu()) && ctx.a() >= 1.0 - 1e-9 && ctx.mu() >= -1e-9 &&
                              ctx.xi() == 1.0;
  if (kind == SeedKind::automatic)
    kind = integer_bessel ? SeedKind::bessel
           : classify(ctx.a(), ctx.mu()) == CaseTag::generic ? SeedKind::two_scale
                                                            : SeedKind::printed;
  switch (kind) {
    case SeedKind::printed: return hardedge_sigma_expansion(ctx.a(), ctx.mu(), ctx.xi());
    case SeedKind::two_scale: {
      const double lambda = ctx.a() + ctx.mu() + 1.0;
      const int J = std::clamp(static_cast<int>(std::ceil((kTwoScaleOrder + 1) / lambda)) - 1, 1, kTwoScaleMaxJ);
      return hardedge_two_scale_sigma(ctx.a(), ctx.mu(), ctx.xi(), kTwoScaleOrder, J);
    }
    case SeedKind::bessel: {
      if (!integer_bessel) throw std::domain_error("piii_seed: the Bessel seed needs integer a >= 1, mu >= 0, xi = 1");
      const int a = static_cast<int>(std::lround(ctx.a())), mu = static_cast<int>(std::lround(ctx.mu()));
      return to_expansion(sigma_from_ehard(ehard_bessel(a, mu, kExactSeedOrder), a, mu));
    }
    case SeedKind::recurrence: {
      const bool diagonal = integer_bessel && std::abs(ctx.a() - ctx.mu()) < 1e-9;
      if (!diagonal) throw std::domain_error("piii_seed: the recurrence seed needs a = mu = k and xi = 1");
      const int k = static_cast<int>(std::lround(ctx.a()));
      return to_expansion(sigma_series(k, kExactSeedOrder / 2));
    }
    default: throw std::invalid_argument("piii_seed: seed kind " + to_string(kind) + " is not available for III'");
  }
}

}  // namespace painleve
