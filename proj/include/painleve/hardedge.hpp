#ifndef PAINLEVE_HARDEDGE_HPP
#define PAINLEVE_HARDEDGE_HPP

#include <vector>

#include "painleve/rational.hpp"
#include "painleve/series.hpp"

namespace painleve {

/// Coefficients c_0..c_P of the even series eta(s) = sum c_n s^{2n}, where
/// sigma(s) = eta(s) + s/8 solves the sigma-PIII' equation at v1 = 2k, v2 = 0.
struct EtaSeries {
  int k = 0;
  std::vector<Rational> c;

  int terms() const { return static_cast<int>(c.size()) - 1; }

  /// eta as a series in s. The order is 2P+1: the s^{2P+1} coefficient of the
  /// true solution is zero by parity, so the polynomial is exact that far.
  RationalSeries as_series() const;
};

enum class TauProvenance { recurrence, bessel_oracle };

struct HardEdgeTauSeries {
  int k = 0;
  RationalSeries series;  // E^hard_2(4x; k, k; xi = 1) in x
  TauProvenance provenance = TauProvenance::recurrence;
};

EtaSeries eta_coefficients(int k, int P);

/// sigma_III'(s) = eta(s) + s/8 through s^{2P+1}.
RationalSeries sigma_series(int k, int P);

/// E^hard_2(4x; k, k; 1) = exp(-∫_0^{4x} (sigma + k^2) ds/s) through x^P.
HardEdgeTauSeries ehard_series(int k, int P);

/// A(a, mu) = a! prod_{j=1}^a (j+mu-1)!/j!.
Rational hardedge_normalization(int a, int mu);

/// b_k and b'_k from the tau series. Uses order 2k unless a longer series is
/// supplied through the overloads taking one.
Rational bk_constant(int k);
Rational bkprime_constant(int k);
Rational bk_from_tau(int k, const RationalSeries& ehard);
Rational bkprime_from_tau(int k, const RationalSeries& ehard);

}  // namespace painleve

#endif  // PAINLEVE_HARDEDGE_HPP
