#include "painleve/hardedge.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace painleve {

RationalSeries EtaSeries::as_series() const {
  RationalSeries r(2 * terms() + 1, Var::s);
  for (int n = 0; n <= terms(); ++n) r[2 * n] = c[static_cast<std::size_t>(n)];
  return r;
}

EtaSeries eta_coefficients(int k, int P) {
  if (k < 1) throw std::invalid_argument("eta_coefficients: k must be >= 1");
  if (P < 1) throw std::invalid_argument("eta_coefficients: P must be >= 1");

  EtaSeries eta;
  eta.k = k;
  auto& c = eta.c;
  const Rational k2(k * k);
  c.push_back(-k2);
  c.push_back(make_rational(1, 64L * (4L * k * k - 1)));

  // A_q = sum_{l=0}^q a_l a_{q-l}, a_l = (l+1) c_{l+1}.
  auto A = [&c](int q) {
    Rational acc = 0;
    for (int l = 0; l <= q; ++l)
      acc += Rational((l + 1) * (q - l + 1)) * c[static_cast<std::size_t>(l + 1)] *
             c[static_cast<std::size_t>(q - l + 1)];
    return acc;
  };

  // Coefficient of s^{2p} in H_{p-1} + G_p = 0, solved for c_p.
  for (int p = 2; p <= P; ++p) {
    const Rational& c1 = c[1];
    Rational den = Rational(2 * p * (2 * p - 1)) * c1 + make_rational(2 * p - 1, 64) - Rational(8 * p) * k2 * c1;
    if (sgn(den) == 0) throw std::domain_error("eta_coefficients: degenerate denominator at p=" + std::to_string(p));

    Rational cross = 0, curv = 0, tail = 0;
    for (int l = 1; l <= p - 2; ++l) {
      const Rational prod = c[static_cast<std::size_t>(l + 1)] * c[static_cast<std::size_t>(p - l)];
      cross += Rational((l + 1) * (p - l)) * prod;
      curv += Rational((l + 1) * (p - l) * (2 * l + 1) * (2 * p - 2 * l - 1)) * prod;
    }
    for (int l = 1; l <= p - 1; ++l) tail += Rational(1 - 2 * l) * c[static_cast<std::size_t>(l)] * A(p - l - 1);

    Rational num = Rational(4) * k2 * cross - curv - Rational(4) * tail;
    c.push_back(num / den);
  }
  return eta;
}

RationalSeries sigma_series(int k, int P) {
  RationalSeries sigma = eta_coefficients(k, P).as_series();
  sigma[1] += make_rational(1, 8);
  return sigma;
}

HardEdgeTauSeries ehard_series(int k, int P) {
  if (P < 1) throw std::invalid_argument("ehard_series: P must be >= 1");
  // sigma through s^P needs c_n for 2n <= P.
  RationalSeries sigma = sigma_series(k, (P + 1) / 2).truncated(P);
  RationalSeries integrand = sigma;
  integrand[0] += Rational(k * k);

  // ∫_0^X (sigma + k^2) ds/s, then X = 4x.
  RationalSeries integral = rescale_variable(integrate_logfree(integrand), Rational(4), Var::x);
  HardEdgeTauSeries out;
  out.k = k;
  out.series = exp(-integral);
  out.provenance = TauProvenance::recurrence;
  assert(out.series[0] == 1);
  return out;
}

Rational hardedge_normalization(int a, int mu) {
  if (a < 0 || mu < 0) throw std::invalid_argument("hardedge_normalization: a, mu must be >= 0");
  Rational r(factorial(static_cast<unsigned long>(a)));
  for (int j = 1; j <= a; ++j)
    r *= make_rational(factorial(static_cast<unsigned long>(j + mu - 1)), factorial(static_cast<unsigned long>(j)));
  return r;
}

namespace {

void require_order(int k, const RationalSeries& f) {
  if (f.order() < 2 * k) throw std::domain_error("b_k needs the tau series through x^{2k}");
}

Rational sign_over_normalization(int k) {
  Rational r = 1 / hardedge_normalization(k, k);
  return (k % 2 == 0) ? Rational(r) : Rational(-r);
}

}  // namespace

Rational bk_from_tau(int k, const RationalSeries& ehard) {
  require_order(k, ehard);
  Rational acc = 0;
  for (int h = 0; h <= k; ++h)
    acc += Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(h)) *
                    factorial(static_cast<unsigned long>(k + h))) *
           ehard[k + h];
  return sign_over_normalization(k) * acc;
}

Rational bkprime_from_tau(int k, const RationalSeries& ehard) {
  require_order(k, ehard);
  const int P = 2 * k;
  RationalSeries half_exp(P, Var::x);
  for (int m = 0; m <= P; ++m)
    half_exp[m] = make_rational(Integer(1), Integer(factorial(static_cast<unsigned long>(m)) << m));
  const RationalSeries weighted = half_exp * ehard.truncated(P);
  return sign_over_normalization(k) * Rational(factorial(static_cast<unsigned long>(P))) * weighted[P];
}

Rational bk_constant(int k) { return bk_from_tau(k, ehard_series(k, 2 * k).series); }

Rational bkprime_constant(int k) { return bkprime_from_tau(k, ehard_series(k, 2 * k).series); }

}  // namespace painleve
