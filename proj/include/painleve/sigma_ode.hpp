#ifndef PAINLEVE_SIGMA_ODE_HPP
#define PAINLEVE_SIGMA_ODE_HPP

#include <string>
#include <vector>

#include "painleve/dopri.hpp"
#include "painleve/expansion.hpp"
#include "painleve/hardedge.hpp"
#include "painleve/lue.hpp"
#include "painleve/series.hpp"

namespace painleve {

/// Hard-edge parameters (a, mu, xi) and the sigma-PIII' parameters v1 = a+mu, v2 = a-mu.
class HardEdgeContext {
 public:
  HardEdgeContext(double a, double mu, double xi);

  double a() const { return a_; }
  double mu() const { return mu_; }
  double xi() const { return xi_; }
  double v1() const { return a_ + mu_; }
  double v2() const { return a_ - mu_; }
  /// sigma_III'(0) = -mu(mu+a)/2.
  double sigma_at_zero() const { return -mu_ * (mu_ + a_) / 2.0; }

 private:
  double a_, mu_, xi_;
};

/// (s σ'')^2 - [σ - s σ' + 2 σ'^2 + (Σ nu_j) σ']^2 + 4 Π (nu_j + σ').
Complex pv_residual(const LUEContext& ctx, double s, Complex sigma, Complex d1, Complex d2);
/// (s σ'')^2 - v1 v2 σ'^2 + σ'(4 σ' - 1)(σ - s σ') - (v1 - v2)^2/64.
Complex piii_residual(const HardEdgeContext& ctx, double s, Complex sigma, Complex d1, Complex d2);

/// sigma''' from G = 0, where d/ds of the sigma-form factors as sigma'' * G.
/// G is linear in sigma''', so sigma'' is never divided by.
Complex pv_third_derivative(const LUEContext& ctx, double s, Complex sigma, Complex d1, Complex d2);
Complex piii_third_derivative(const HardEdgeContext& ctx, double s, Complex sigma, Complex d1, Complex d2);

/// The sigma-PIII' form applied to a truncated series in s. The result is
/// exact through one order below the input's (one order is lost to sigma'').
template <class S>
TruncatedSeries<S> piii_series_residual(const TruncatedSeries<S>& sigma, const S& v1, const S& v2) {
  const TruncatedSeries<S> d1 = derivative(sigma), d2 = derivative(d1);
  const int P = d1.order();
  const TruncatedSeries<S> sd2 = shift_up(d2, 1), sd1 = shift_up(d1, 1).truncated(P);
  const TruncatedSeries<S>& a = d1;
  const TruncatedSeries<S> g = sigma.truncated(P);
  const TruncatedSeries<S> one = TruncatedSeries<S>::constant(S(1), P, sigma.var());
  TruncatedSeries<S> r = sd2 * sd2 - S(v1 * v2) * (a * a) + a * (S(4) * a - one) * (g - sd1);
  r[0] -= S((v1 - v2) * (v1 - v2) / S(64));
  return r;
}

/// (s eta'')^2 + 4((eta')^2 - 1/64)(eta - s eta') - k^2/16 with the recurrence
/// series substituted exactly; zero through s^{2P} for a true solution.
RationalSeries exact_series_residual_piii(int k, int P);
RationalSeries exact_series_residual_piii(const EtaSeries& eta);

enum class SigmaEquation { pv, piii };

struct SigmaState {
  double s = 0.0;
  Complex sigma, d1, d2;
};

struct TrajectoryPoint {
  SigmaState state;
  Complex d3;
  Complex quadrature;  // ∫_{s0}^{s} (sigma - sigma(0)) ds'/s'
  double residual = 0.0;
  double bound = 0.0;  // monitor * (1 + |sigma|^2)
};

enum class TrajectoryStatus { ok, residual_breach, singularity, max_steps };
std::string to_string(TrajectoryStatus status);

struct IntegrationOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double monitor = 1e-8;
  long max_steps = 2'000'000;
};

struct Trajectory {
  SigmaEquation equation = SigmaEquation::pv;
  double s0 = 0.0, s1 = 0.0;
  Complex sigma_at_zero;
  Complex stub_integral;  // ∫_0^{s0} (seed - sigma(0)) ds/s
  AsymptoticExpansion seed;
  std::vector<TrajectoryPoint> points;
  TrajectoryStatus status = TrajectoryStatus::ok;
  std::string diagnostic;
  double max_residual_ratio = 0.0;  // max |F| / bound
  long accepted_steps = 0, rejected_steps = 0;
};

/// Integrates the differentiated sigma-form from s0 to s1 with initial data
/// from the seed expansion. PV integrates W_N (nu's from the LUE context),
/// III' integrates sigma_III'.
Trajectory integrate_sigma(const LUEContext& ctx, double s0, double s1, const AsymptoticExpansion& seed,
                           const IntegrationOptions& opt = {});
Trajectory integrate_sigma(const HardEdgeContext& ctx, double s0, double s1, const AsymptoticExpansion& seed,
                           const IntegrationOptions& opt = {});

/// E^hard(s1) = exp(-∫_0^{s1} (sigma + mu(mu+a)/2) ds/s), seed stub plus trajectory quadrature.
Complex ehard_from_sigma(const HardEdgeContext& ctx, double s1, const Trajectory& traj);
/// E_{2,N}(s1) = exp(∫_0^{s1} (W_N + N mu) ds/s).
Complex e2n_from_sigma(const LUEContext& ctx, double s1, const Trajectory& traj);

/// The trajectory state at s (Hermite interpolation between accepted steps).
SigmaState trajectory_state(const Trajectory& traj, double s);

enum class SeedKind { automatic, printed, two_scale, bessel, recurrence };
std::string to_string(SeedKind kind);
SeedKind parse_seed_kind(const std::string& name);

/// automatic: the two-scale expansion in the generic case, else the printed one.
AsymptoticExpansion pv_seed(const LUEContext& ctx, SeedKind kind = SeedKind::automatic);
/// sigma_III'(s) = sum_{i<=I, j<=J} d_ij s^{i + j lambda}, lambda = a+mu+1, solved
/// from the differentiated sigma-form. d_00 and d_01 come from the printed
/// expansion; everything else is forced. Generic (a, mu) only.
AsymptoticExpansion hardedge_two_scale_sigma(double a, double mu, double xi, int I, int J);

/// automatic: the exact Bessel series for integer a >= 1, integer mu >= 0 and
/// xi = 1, the two-scale series for generic (a, mu), else the printed
/// expansion. recurrence needs a = mu = k, xi = 1.
AsymptoticExpansion piii_seed(const HardEdgeContext& ctx, SeedKind kind = SeedKind::automatic);

/// An exact series in s as an expansion with integer exponents.
AsymptoticExpansion to_expansion(const RationalSeries& f);

}  // namespace painleve

#endif  // PAINLEVE_SIGMA_ODE_HPP
