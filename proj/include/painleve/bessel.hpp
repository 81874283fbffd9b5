#ifndef PAINLEVE_BESSEL_HPP
#define PAINLEVE_BESSEL_HPP

#include "painleve/rational.hpp"
#include "painleve/series.hpp"
#include "painleve/series_matrix.hpp"

namespace painleve {

/// g_n(x) = x^{-n/2} I_n(2 sqrt x) = sum_m x^m / (m! (m+n)!), through x^P.
struct ShiftedBesselSeries {
  int n = 0;
  RationalSeries series;
};

ShiftedBesselSeries shifted_bessel_series(int n, int P);

enum class DeterminantMethod { elimination, cofactor };

/// x^{-k^2/2} det[I_{α+β-1}(2 sqrt x)]_{α,β=1..k} = det[g_{α+β-1}(x)].
RationalSeries hankel_bessel_det(int k, int P, DeterminantMethod method = DeterminantMethod::elimination);

/// b_k, b'_k evaluated directly from the Bessel-Hankel determinant.
Rational bk_direct(int k);
Rational bkprime_direct(int k);

/// E^hard_2(4x; a, mu; xi = 1) = A(a,mu) x^{-a mu/2} e^{-x} det[I_{mu+α-β}(2 sqrt x)]
/// as an exact series in x, for integer a >= 1 and mu >= 0.
///
/// With n = mu+α-β, I_n(2 sqrt x) = x^{n/2} x^{max(0,-n)} g_{|n|}(x); the x^{n/2}
/// factors split into row and column factors whose product is x^{a mu/2}, so only
/// integer powers are ever stored.
RationalSeries ehard_bessel(int a, int mu, int P);

/// Overload for callers holding a rational mu; throws unless a and mu are integers.
RationalSeries ehard_bessel(const Rational& a, const Rational& mu, int P);

/// sigma_III'(s) = -s d/ds log E^hard(s) - mu(mu+a)/2 from an exact series of
/// E^hard(4x) in x, returned in s = 4x.
RationalSeries sigma_from_ehard(const RationalSeries& ehard_x, int a, int mu);

}  // namespace painleve

#endif  // PAINLEVE_BESSEL_HPP
