#ifndef PAINLEVE_JIMBO_HPP
#define PAINLEVE_JIMBO_HPP

#include <span>
#include <vector>

#include "painleve/expansion.hpp"
#include "painleve/lue.hpp"

namespace painleve {

inline constexpr double kPVWindow = 0.5;
inline constexpr double kPIIIWindow = 0.25;

/// Leading behaviour coeff * eps^order of a quantity as eps -> 0.
struct LaurentValue {
  Complex coeff = 1.0;
  int order = 0;

  /// The eps -> 0 limit; throws when the quantity diverges.
  Complex limit() const;

  friend LaurentValue operator*(const LaurentValue& x, const LaurentValue& y) {
    return {x.coeff * y.coeff, x.order + y.order};
  }
};

/// Gamma(base + slope * eps)^power.
struct GammaFactor {
  double base;
  double slope;
  int power;
};

/// Leading term of prod Gamma(base_i + slope_i eps)^{power_i}; a factor whose
/// base sits on a pole contributes its residue (-1)^m/(m! slope eps).
LaurentValue gamma_product_limit(std::span<const GammaFactor> factors, double tol = kIntegerTolerance);

/// Jimbo's small-s data for tau_V: theta parameters, exponent sigma, u, C.
struct JimboPVParams {
  double theta0 = 0.0, theta_s = 0.0, theta_inf = 0.0;
  double sigma = 0.5;
  LaurentValue u{1.0, 0};
  Complex C = 1.0;
};

/// tau_V(s) ~ C s^prefactor_exponent {1 + linear s + plus s^{1+sigma} + minus s^{1-sigma}}.
struct JimboPVTerms {
  double prefactor_exponent = 0.0;
  Complex linear, plus, minus;
  double sigma = 0.0;
};

/// tau_III'(t) ~ C t^prefactor_exponent {1 + linear t + plus t^{1+sigma} + minus t^{1-sigma}}.
struct JimboIIITerms {
  double prefactor_exponent = 0.0;
  Complex linear, plus, minus;
  double sigma = 0.0;
};

struct JimboIIIParams {
  double v1 = 0.0, v2 = 0.0;
  double sigma = 0.5;
  LaurentValue u{1.0, 0};
  Complex C = 1.0;
};

/// u sin(pi mu)/sin(pi(a+mu)) = (1-xi) e^{i pi mu} - sin(pi a)/sin(pi(a+mu)).
/// When sin(pi mu) vanishes only the right-hand side is meaningful: `u` then
/// holds it and `direct` is set.
struct UMatch {
  Complex rhs;
  Complex u;
  bool direct = false;
};
UMatch u_from_xi(double a, double mu, double xi);
/// The hard-edge u~ obeys the same relation.
UMatch ut_from_xi(double a, double mu, double xi);

JimboPVTerms tau_v_terms(const JimboPVParams& p);
Complex tau_v_expansion(const JimboPVParams& p, double s);

/// The LUE choice: theta's from (mu, a, -2N-a-mu), sigma = a+mu, u matched to xi.
JimboPVParams lue_pv_params(const LUEContext& ctx);

/// s^{N^2+N(a+mu)} e^{-(N+a/2)s} tau_V(s) through the retained terms.
AsymptoticExpansion lue_from_tau_v(const LUEContext& ctx);

JimboIIITerms tau_iii_terms(const JimboIIIParams& p);
Complex tau_iii_expansion(const JimboIIIParams& p, double t);

/// sigma -> v1 = a+mu with u (v1 - sigma)/2 -> u~ sin(pi v1)/pi.
JimboIIIParams hardedge_iii_params(double a, double mu, double xi);

/// t^{(v2^2-v1^2)/4} tau_III'(t) rewritten in s = 4t.
AsymptoticExpansion hardedge_from_tau_iii(double a, double mu, double xi);

/// Small-s expansion of the hard-edge average E^hard_2(s; a, mu; xi).
AsymptoticExpansion hardedge_expansion(double a, double mu, double xi, CaseTag tag);
inline AsymptoticExpansion hardedge_expansion(double a, double mu, double xi) {
  return hardedge_expansion(a, mu, xi, classify(a, mu));
}

/// sigma_III'(s) = -mu(mu+a)/2 - s d/ds E^hard from the retained terms.
AsymptoticExpansion hardedge_sigma_expansion(double a, double mu, double xi, CaseTag tag);
inline AsymptoticExpansion hardedge_sigma_expansion(double a, double mu, double xi) {
  return hardedge_sigma_expansion(a, mu, xi, classify(a, mu));
}

}  // namespace painleve

#endif  // PAINLEVE_JIMBO_HPP
