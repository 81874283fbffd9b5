#include "painleve/bessel.hpp"

#include <cstdlib>
#include <stdexcept>

#include "painleve/hardedge.hpp"

namespace painleve {

ShiftedBesselSeries shifted_bessel_series(int n, int P) {
  if (n < 0) throw std::invalid_argument("shifted_bessel_series: n must be >= 0");
  ShiftedBesselSeries g;
  g.n = n;
  g.series = RationalSeries(P, Var::x);
  for (int m = 0; m <= P; ++m)
    g.series[m] = make_rational(Integer(1), factorial(static_cast<unsigned long>(m)) *
                                                factorial(static_cast<unsigned long>(m + n)));
  return g;
}

RationalSeries hankel_bessel_det(int k, int P, DeterminantMethod method) {
  if (k < 1) throw std::invalid_argument("hankel_bessel_det: k must be >= 1");
  std::vector<RationalSeries> g;
  for (int n = 0; n <= 2 * k - 1; ++n) g.push_back(shifted_bessel_series(n, P).series);

  SeriesMatrix<Rational> m(static_cast<std::size_t>(k));
  for (int alpha = 1; alpha <= k; ++alpha)
    for (int beta = 1; beta <= k; ++beta) m[static_cast<std::size_t>(alpha - 1)].push_back(g[alpha + beta - 1]);

  return method == DeterminantMethod::cofactor ? determinant_cofactor(m) : determinant(std::move(m));
}

namespace {

RationalSeries exp_series(const Rational& c, int P) {
  RationalSeries r(P, Var::x);
  Rational term = 1;
  for (int m = 0; m <= P; ++m) {
    r[m] = term;
    term = term * c / Rational(m + 1);
  }
  return r;
}

Rational crs_sign(int k) { return ((k * (k + 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

Rational bk_direct(int k) {
  const int P = 2 * k;
  const RationalSeries f = exp_series(Rational(-1), P) * hankel_bessel_det(k, P);
  Rational acc = 0;
  for (int h = 0; h <= k; ++h)
    acc += Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(h)) *
                    factorial(static_cast<unsigned long>(k + h))) *
           f[k + h];
  return crs_sign(k) * acc;
}

Rational bkprime_direct(int k) {
  const int P = 2 * k;
  const RationalSeries f = exp_series(make_rational(-1, 2), P) * hankel_bessel_det(k, P);
  return crs_sign(k) * Rational(factorial(static_cast<unsigned long>(P))) * f[P];
}

RationalSeries ehard_bessel(int a, int mu, int P) {
  if (a < 1) throw std::invalid_argument("ehard_bessel: a must be a positive integer");
  if (mu < 0) throw std::invalid_argument("ehard_bessel: mu must be a nonnegative integer");

  // Columns can lose up to a-1 orders when I_{-n} entries carry extra x powers.
  const int work = P + a;
  SeriesMatrix<Rational> m(static_cast<std::size_t>(a));
  for (int alpha = 1; alpha <= a; ++alpha) {
    for (int beta = 1; beta <= a; ++beta) {
      const int n = mu + alpha - beta;
      RationalSeries entry = shifted_bessel_series(std::abs(n), work).series;
      if (n < 0) entry = shift_up(entry, -n).truncated(work);
      m[static_cast<std::size_t>(alpha - 1)].push_back(std::move(entry));
    }
  }
  RationalSeries det = determinant(std::move(m));
  if (det.order() < P) throw std::domain_error("ehard_bessel: working order too small");
  RationalSeries e = hardedge_normalization(a, mu) * (exp_series(Rational(-1), P) * det.truncated(P));
  return e;
}

RationalSeries ehard_bessel(const Rational& a, const Rational& mu, int P) {
  if (a.get_den() != 1 || mu.get_den() != 1)
    throw std::invalid_argument("ehard_bessel: exact path requires integer a and mu");
  return ehard_bessel(static_cast<int>(a.get_num().get_si()), static_cast<int>(mu.get_num().get_si()), P);
}

RationalSeries sigma_from_ehard(const RationalSeries& ehard_x, int a, int mu) {
  if (ehard_x.var() != Var::x) throw std::invalid_argument("sigma_from_ehard: expects a series in x");
  // s d/ds = x d/dx under s = 4x.
  RationalSeries sigma = -euler_derivative(log(ehard_x));
  sigma[0] -= make_rational(mu * (mu + a), 2);
  return rescale_variable(sigma, make_rational(1, 4), Var::s);
}

}  // namespace painleve
