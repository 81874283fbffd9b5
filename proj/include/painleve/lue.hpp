#ifndef PAINLEVE_LUE_HPP
#define PAINLEVE_LUE_HPP

#include <array>
#include <optional>
#include <string>

#include "painleve/expansion.hpp"
#include "painleve/rational.hpp"

namespace painleve {

inline constexpr double kIntegerTolerance = 1e-9;
inline constexpr int kMaxDeterminantSize = 12;

/// Parameters (N, a, mu, xi) of the finite-N Laguerre average.
class LUEContext {
 public:
  LUEContext(int N, double a, double mu, double xi);

  int N() const { return N_; }
  double a() const { return a_; }
  double mu() const { return mu_; }
  double xi() const { return xi_; }

  /// sigma-PV parameters nu_0..nu_3 = (0, -mu, N+a, N).
  std::array<double, 4> nu() const { return {0.0, -mu_, N_ + a_, static_cast<double>(N_)}; }
  double nu_sum() const { return 2.0 * N_ + a_ - mu_; }

  double theta0() const { return mu_; }
  double theta_s() const { return a_; }
  double theta_inf() const { return -2.0 * N_ - a_ - mu_; }

 private:
  int N_;
  double a_, mu_, xi_;
};

enum class CaseTag { generic, indeterminate, pole };

std::string to_string(CaseTag tag);
CaseTag parse_case_tag(const std::string& name);

/// generic when mu+a is not a nonnegative integer; otherwise indeterminate
/// when a is also a nonnegative integer, else pole.
CaseTag classify(double a, double mu, double tol = kIntegerTolerance);
inline CaseTag classify(const LUEContext& ctx, double tol = kIntegerTolerance) {
  return classify(ctx.a(), ctx.mu(), tol);
}

/// (1-xi) e^{i pi mu} - sin(pi a)/sin(pi(mu+a)), the coefficient carrying xi.
Complex xi_coefficient(double a, double mu, double xi);

/// The moment w_n(s) in closed form for the given case.
Complex moment_wn(const LUEContext& ctx, int n, double s, CaseTag tag);
inline Complex moment_wn(const LUEContext& ctx, int n, double s) { return moment_wn(ctx, n, s, classify(ctx)); }

struct DeterminantResult {
  Complex value;
  double condition_estimate = 1.0;  // ratio of extreme |U_ii| in the LU factor
  bool ill_conditioned = false;
};

/// E_{2,N}(s) = det[w_{j+k}(s)] / det[w_{j+k}(0)].
DeterminantResult e2n_determinant_checked(const LUEContext& ctx, double s, CaseTag tag);
Complex e2n_determinant(const LUEContext& ctx, double s, CaseTag tag);
inline Complex e2n_determinant(const LUEContext& ctx, double s) { return e2n_determinant(ctx, s, classify(ctx)); }

/// The small-s expansion of E_{2,N} with the terms of the relevant case.
AsymptoticExpansion e2n_expansion(const LUEContext& ctx, CaseTag tag);
inline AsymptoticExpansion e2n_expansion(const LUEContext& ctx) { return e2n_expansion(ctx, classify(ctx)); }

/// W_N = s d/ds log(s^{-N mu} E) from the retained terms: -N mu + s d/ds E.
AsymptoticExpansion wn_expansion(const LUEContext& ctx, CaseTag tag);
inline AsymptoticExpansion wn_expansion(const LUEContext& ctx) { return wn_expansion(ctx, classify(ctx)); }

/// High-order two-scale expansion of E (generic case): the Taylor data of
/// a_n(s), b_n(s) pushed through the Hankel determinant, keeping every term
/// s^{i + j(mu+a+1)} with i <= max_i, j <= max_j.
AsymptoticExpansion e2n_two_scale_expansion(const LUEContext& ctx, int max_i, int max_j);
AsymptoticExpansion wn_two_scale_expansion(const LUEContext& ctx, int max_i, int max_j);

/// The three blocks of the determinant expansion evaluated by LU and by the
/// Gamma-product identity, normalized against e2n_expansion's coefficients.
struct HdetReport {
  Complex constant_block_lu, constant_block_identity;
  Complex linear_block_lu, linear_block_identity;
  Complex power_block_lu, power_block_identity;
  Complex linear_coefficient;  // from the blocks
  Complex power_coefficient;
  Complex linear_reference;  // from e2n_expansion
  Complex power_reference;
  double max_rel_discrepancy = 0.0;
};
HdetReport hdet_expansion_check(const LUEContext& ctx);

/// det[Gamma(z_k + j)]_{j,k=0..n-1} = prod Gamma(z_j) prod_{j<k}(z_k - z_j).
double gamma_determinant_identity(const std::vector<double>& z);

}  // namespace painleve

#endif  // PAINLEVE_LUE_HPP
