#ifndef PAINLEVE_SERIES_HPP
#define PAINLEVE_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "painleve/rational.hpp"

namespace painleve {

enum class Var : char { s = 's', t = 't', x = 'x' };

inline char var_name(Var v) { return static_cast<char>(v); }

namespace detail {

template <class S>
S from_int(long n) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(n);
  } else {
    return S(static_cast<double>(n));
  }
}

template <class S>
bool is_zero(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return sgn(v) == 0;
  } else {
    return v == S(0);
  }
}

}  // namespace detail

/// Dense truncated power series c_0 + c_1 v + ... + c_P v^P + O(v^{P+1}).
///
/// The truncation order P is part of the value: binary operations produce
/// min(P_a, P_b), and operations that lose information (differentiation,
/// division by v) lower it. Nothing ever raises the order silently.
template <class Scalar>
class TruncatedSeries {
 public:
  using scalar_type = Scalar;

  TruncatedSeries() : TruncatedSeries(0, Var::x) {}

  TruncatedSeries(int order, Var var) : coeffs_(static_cast<std::size_t>(check(order)) + 1), var_(var) {
    for (auto& c : coeffs_) c = detail::from_int<Scalar>(0);
  }

  TruncatedSeries(std::vector<Scalar> coeffs, int order, Var var) : coeffs_(std::move(coeffs)), var_(var) {
    coeffs_.resize(static_cast<std::size_t>(check(order)) + 1, detail::from_int<Scalar>(0));
  }

  static TruncatedSeries constant(const Scalar& c, int order, Var var) {
    TruncatedSeries r(order, var);
    r.coeffs_[0] = c;
    return r;
  }

  static TruncatedSeries monomial(const Scalar& c, int power, int order, Var var) {
    TruncatedSeries r(order, var);
    if (power <= order) r.coeffs_[static_cast<std::size_t>(power)] = c;
    return r;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  Var var() const { return var_; }

  const Scalar& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Scalar& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  std::span<const Scalar> coeffs() const { return coeffs_; }

  /// Lowest index with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!detail::is_zero(coeffs_[static_cast<std::size_t>(n)])) return n;
    return order() + 1;
  }

  bool is_zero() const { return valuation() > order(); }

  TruncatedSeries truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
    return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1), order, var_);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_var(a, b);
    const int p = std::min(a.order(), b.order());
    TruncatedSeries r(p, a.var_);
    for (int n = 0; n <= p; ++n) r[n] = a[n] + b[n];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_var(a, b);
    const int p = std::min(a.order(), b.order());
    TruncatedSeries r(p, a.var_);
    for (int n = 0; n <= p; ++n) r[n] = a[n] - b[n];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order(), a.var_);
    for (int n = 0; n <= a.order(); ++n) r[n] = -a[n];
    return r;
  }

  /// Cauchy product.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_var(a, b);
    const int p = std::min(a.order(), b.order());
    TruncatedSeries r(p, a.var_);
    for (int i = 0; i <= p; ++i) {
      if (detail::is_zero(a[i])) continue;
      for (int j = 0; i + j <= p; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  friend TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order(), a.var_);
    for (int n = 0; n <= a.order(); ++n) r[n] = c * a[n];
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }

  static void require_same_var(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.var_ != b.var_)
      throw std::invalid_argument(std::string("series variable mismatch: ") + var_name(a.var_) + " vs " +
                                  var_name(b.var_));
  }

  std::vector<Scalar> coeffs_;
  Var var_;
};

using RationalSeries = TruncatedSeries<Rational>;
using ComplexSeries = TruncatedSeries<Complex>;

template <class S>
TruncatedSeries<S> scale(const S& c, const TruncatedSeries<S>& a) {
  return c * a;
}

/// d/dv; the order drops by one (at least zero-order stays meaningful).
template <class S>
TruncatedSeries<S> derivative(const TruncatedSeries<S>& f) {
  if (f.order() == 0) return TruncatedSeries<S>(0, f.var());
  TruncatedSeries<S> r(f.order() - 1, f.var());
  for (int n = 1; n <= f.order(); ++n) r[n - 1] = detail::from_int<S>(n) * f[n];
  return r;
}

/// v^m f(v); the order rises by m because the product is known exactly that far.
template <class S>
TruncatedSeries<S> shift_up(const TruncatedSeries<S>& f, int m) {
  TruncatedSeries<S> r(f.order() + m, f.var());
  for (int n = 0; n <= f.order(); ++n) r[n + m] = f[n];
  return r;
}

/// f(v)/v^m, requires the first m coefficients to vanish.
template <class S>
TruncatedSeries<S> shift_down(const TruncatedSeries<S>& f, int m) {
  if (f.valuation() < m) throw std::domain_error("shift_down: series not divisible by v^m");
  if (f.order() < m) throw std::domain_error("shift_down: nothing left after division");
  TruncatedSeries<S> r(f.order() - m, f.var());
  for (int n = m; n <= f.order(); ++n) r[n - m] = f[n];
  return r;
}

/// v d/dv (Euler operator); order preserved.
template <class S>
TruncatedSeries<S> euler_derivative(const TruncatedSeries<S>& f) {
  TruncatedSeries<S> r(f.order(), f.var());
  for (int n = 1; n <= f.order(); ++n) r[n] = detail::from_int<S>(n) * f[n];
  return r;
}

/// f(c v), optionally relabelled to a new variable (e.g. s = 4x).
template <class S>
TruncatedSeries<S> rescale_variable(const TruncatedSeries<S>& f, const S& c, Var new_var) {
  TruncatedSeries<S> r(f.order(), new_var);
  S p = detail::from_int<S>(1);
  for (int n = 0; n <= f.order(); ++n) {
    r[n] = p * f[n];
    p *= c;
  }
  return r;
}

/// ∫_0^X f(v) dv / v for f with f(0) = 0: coefficient f_n / n at X^n.
template <class S>
TruncatedSeries<S> integrate_logfree(const TruncatedSeries<S>& f) {
  if (!detail::is_zero(f[0])) throw std::domain_error("integrate_logfree: nonzero constant term diverges");
  TruncatedSeries<S> r(f.order(), f.var());
  for (int n = 1; n <= f.order(); ++n) r[n] = f[n] / detail::from_int<S>(n);
  return r;
}

/// exp(f) for f(0) = 0 via g' = f' g: g_n = (1/n) sum_{m=1}^n m f_m g_{n-m}.
template <class S>
TruncatedSeries<S> exp(const TruncatedSeries<S>& f) {
  if (!detail::is_zero(f[0])) throw std::domain_error("series exp: nonzero constant term");
  TruncatedSeries<S> g(f.order(), f.var());
  g[0] = detail::from_int<S>(1);
  for (int n = 1; n <= f.order(); ++n) {
    S acc = detail::from_int<S>(0);
    for (int m = 1; m <= n; ++m) acc += detail::from_int<S>(m) * f[m] * g[n - m];
    g[n] = acc / detail::from_int<S>(n);
  }
  return g;
}

/// 1/f for f(0) != 0.
template <class S>
TruncatedSeries<S> inverse(const TruncatedSeries<S>& f) {
  if (detail::is_zero(f[0])) throw std::domain_error("series inverse: zero constant term");
  TruncatedSeries<S> r(f.order(), f.var());
  S inv0 = detail::from_int<S>(1) / f[0];
  r[0] = inv0;
  for (int n = 1; n <= f.order(); ++n) {
    S acc = detail::from_int<S>(0);
    for (int m = 1; m <= n; ++m) acc += f[m] * r[n - m];
    r[n] = -acc * inv0;
  }
  return r;
}

template <class S>
TruncatedSeries<S> operator/(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  return a * inverse(b);
}

/// log(f) for f(0) = 1, as the antiderivative of f'/f.
template <class S>
TruncatedSeries<S> log(const TruncatedSeries<S>& f) {
  if (!(f[0] == detail::from_int<S>(1))) throw std::domain_error("series log: constant term must be 1");
  // v d/dv log f = (v f') / f, then divide coefficient n by n.
  return integrate_logfree(euler_derivative(f) / f);
}

/// Horner evaluation of the retained terms.
template <class S, class T>
T evaluate(const TruncatedSeries<S>& f, const T& v) {
  T acc = T(0);
  for (int n = f.order(); n >= 0; --n) {
    if constexpr (std::is_same_v<S, Rational>) {
      acc = acc * v + T(f[n].get_d());
    } else {
      acc = acc * v + T(f[n]);
    }
  }
  return acc;
}

inline ComplexSeries to_complex(const RationalSeries& f) {
  ComplexSeries r(f.order(), f.var());
  for (int n = 0; n <= f.order(); ++n) r[n] = Complex(f[n].get_d(), 0.0);
  return r;
}

}  // namespace painleve

#endif  // PAINLEVE_SERIES_HPP
