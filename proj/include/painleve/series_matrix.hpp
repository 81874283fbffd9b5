#ifndef PAINLEVE_SERIES_MATRIX_HPP
#define PAINLEVE_SERIES_MATRIX_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "painleve/series.hpp"

namespace painleve {

template <class S>
using SeriesMatrix = std::vector<std::vector<TruncatedSeries<S>>>;

namespace detail {

template <class S>
void require_square(const SeriesMatrix<S>& m) {
  if (m.empty()) throw std::invalid_argument("empty series matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("series matrix is not square");
}

}  // namespace detail

/// Determinant by Gaussian elimination over truncated series.
///
/// Pivots need a unit (nonzero constant term). Rows are searched in natural
/// order, so a matrix whose leading constant-term minors are nonzero is
/// eliminated without swaps. If a column has no unit left, the common factor
/// v is pulled out of that column (each such step costs one order of
/// truncation, which the series bookkeeping records).
template <class S>
TruncatedSeries<S> determinant(SeriesMatrix<S> m) {
  detail::require_square(m);
  const std::size_t n = m.size();
  const Var var = m[0][0].var();
  int order = m[0][0].order();
  for (const auto& row : m)
    for (const auto& e : row) order = std::min(order, e.order());

  int x_power = 0;
  bool negate = false;
  TruncatedSeries<S> det = TruncatedSeries<S>::constant(detail::from_int<S>(1), order, var);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (;;) {
      for (std::size_t r = col; r < n; ++r) {
        if (!detail::is_zero(m[r][col][0])) {
          pivot = r;
          break;
        }
      }
      if (pivot != n) break;
      bool all_zero = true;
      for (std::size_t r = col; r < n; ++r) all_zero = all_zero && m[r][col].is_zero();
      if (all_zero) return TruncatedSeries<S>(order + x_power, var);
      for (std::size_t r = col; r < n; ++r) m[r][col] = shift_down(m[r][col], 1);
      ++x_power;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      negate = !negate;
    }
    const TruncatedSeries<S> inv = inverse(m[col][col]);
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const TruncatedSeries<S> factor = m[r][col] * inv;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  if (negate) det = -det;
  return shift_up(det, x_power);
}

/// Laplace expansion along the first row. Exponential cost; used as an
/// independent second route for small matrices.
template <class S>
TruncatedSeries<S> determinant_cofactor(const SeriesMatrix<S>& m) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  TruncatedSeries<S> acc;
  bool first = true;
  for (std::size_t c = 0; c < n; ++c) {
    SeriesMatrix<S> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<TruncatedSeries<S>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    TruncatedSeries<S> term = m[0][c] * determinant_cofactor(minor);
    if (c % 2 == 1) term = -term;
    if (first) {
      acc = term;
      first = false;
    } else {
      acc = acc + term;
    }
  }
  return acc;
}

}  // namespace painleve

#endif  // PAINLEVE_SERIES_MATRIX_HPP
