#ifndef PAINLEVE_TWO_SCALE_SERIES_HPP
#define PAINLEVE_TWO_SCALE_SERIES_HPP

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "painleve/expansion.hpp"
#include "painleve/series.hpp"

namespace painleve {

/// Truncated double series sum_{i<=I, j<=J} d_ij s^i y^j with y = s^lambda.
///
/// Products are exact inside the (I, J) box because indices only grow, so the
/// box is a consistent truncation for ring operations.
template <class S>
class TwoScaleSeries {
 public:
  using Coeffs = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

  TwoScaleSeries(int I, int J) : d_(Coeffs::Zero(I + 1, J + 1)) {}

  static TwoScaleSeries constant(const S& c, int I, int J) {
    TwoScaleSeries r(I, J);
    r.d_(0, 0) = c;
    return r;
  }

  /// f(s) y^j s^shift from an ordinary series in s.
  static TwoScaleSeries from_series(const TruncatedSeries<S>& f, int shift, int j, int I, int J) {
    TwoScaleSeries r(I, J);
    if (j > J) return r;
    for (int i = 0; i <= f.order() && i + shift <= I; ++i) r.d_(i + shift, j) = f[i];
    return r;
  }

  int I() const { return static_cast<int>(d_.rows()) - 1; }
  int J() const { return static_cast<int>(d_.cols()) - 1; }
  const S& operator()(int i, int j) const { return d_(i, j); }
  S& operator()(int i, int j) { return d_(i, j); }

  friend TwoScaleSeries operator+(const TwoScaleSeries& a, const TwoScaleSeries& b) {
    TwoScaleSeries r = a;
    r.d_ += b.d_;
    return r;
  }
  friend TwoScaleSeries operator-(const TwoScaleSeries& a, const TwoScaleSeries& b) {
    TwoScaleSeries r = a;
    r.d_ -= b.d_;
    return r;
  }
  friend TwoScaleSeries operator*(const S& c, const TwoScaleSeries& a) {
    TwoScaleSeries r = a;
    r.d_ *= c;
    return r;
  }
  friend TwoScaleSeries operator*(const TwoScaleSeries& a, const TwoScaleSeries& b) {
    TwoScaleSeries r(a.I(), a.J());
    for (int i1 = 0; i1 <= a.I(); ++i1)
      for (int j1 = 0; j1 <= a.J(); ++j1) {
        if (a.d_(i1, j1) == S(0)) continue;
        for (int i2 = 0; i1 + i2 <= a.I(); ++i2)
          for (int j2 = 0; j1 + j2 <= a.J(); ++j2) r.d_(i1 + i2, j1 + j2) += a.d_(i1, j1) * b.d_(i2, j2);
      }
    return r;
  }

  /// 1/f via the fixed point r = (1 - (f - f00) r)/f00, exact after I+J+1 sweeps.
  TwoScaleSeries inverse() const {
    if (d_(0, 0) == S(0)) throw std::domain_error("two-scale inverse: zero constant term");
    const S inv0 = S(1) / d_(0, 0);
    TwoScaleSeries rest = *this;
    rest.d_(0, 0) = S(0);
    TwoScaleSeries r = constant(inv0, I(), J());
    const TwoScaleSeries one = constant(S(1), I(), J());
    for (int sweep = 0; sweep <= I() + J(); ++sweep) r = inv0 * (one - rest * r);
    return r;
  }

  /// s d/ds with y = s^lambda: multiplies d_ij by i + j lambda.
  TwoScaleSeries euler_derivative(double lambda) const {
    TwoScaleSeries r = *this;
    for (int i = 0; i <= I(); ++i)
      for (int j = 0; j <= J(); ++j) r.d_(i, j) *= S(i + j * lambda);
    return r;
  }

  /// Terms of total exponent < max_exponent as an AsymptoticExpansion.
  AsymptoticExpansion to_expansion(double lambda, double max_exponent) const {
    AsymptoticExpansion e(max_exponent);
    for (int i = 0; i <= I(); ++i)
      for (int j = 0; j <= J(); ++j) {
        const double ex = i + j * lambda;
        if (ex < max_exponent - 1e-12 && d_(i, j) != S(0)) e.add(Complex(d_(i, j)), ex, 0);
      }
    return e;
  }

 private:
  Coeffs d_;
};

/// Determinant by elimination without pivot search; requires the leading
/// minors of the constant-term matrix to be nonzero.
template <class S>
TwoScaleSeries<S> determinant(std::vector<std::vector<TwoScaleSeries<S>>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  TwoScaleSeries<S> det = TwoScaleSeries<S>::constant(S(1), m[0][0].I(), m[0][0].J());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c][c](0, 0) == S(0)) throw std::domain_error("two-scale determinant: vanishing leading minor");
    const TwoScaleSeries<S> inv = m[c][c].inverse();
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const TwoScaleSeries<S> f = m[r][c] * inv;
      for (std::size_t k = c + 1; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

}  // namespace painleve

#endif  // PAINLEVE_TWO_SCALE_SERIES_HPP
