#ifndef PAINLEVE_DOPRI_HPP
#define PAINLEVE_DOPRI_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace painleve {

struct DopriOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 picks 1e-3 of the interval
  long max_steps = 2'000'000;
};

enum class DopriStatus { ok, stopped, step_underflow, max_steps };

struct DopriResult {
  DopriStatus status = DopriStatus::ok;
  double t = 0.0;
  long accepted = 0, rejected = 0;
};

/// Dormand-Prince 5(4) with FSAL and the standard PI-free step controller.
///
/// f(t, y) returns dy/dt; observe(t, y) runs after every accepted step and may
/// return false to stop. y must support +, scalar * and indexing (Eigen).
template <class Vec, class F, class Observe>
DopriResult dopri5(F&& f, double t0, double t1, Vec y, const DopriOptions& opt, Observe&& observe) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                   e6 = 22.0 / 525, e7 = -1.0 / 40;

  DopriResult res;
  res.t = t0;
  const double span = t1 - t0;
  if (!(span > 0.0)) return res;
  double h = opt.initial_step > 0.0 ? opt.initial_step : 1e-3 * span;
  double t = t0;
  Vec k1 = f(t, y);
  while (t < t1) {
    if (res.accepted + res.rejected >= opt.max_steps) {
      res.status = DopriStatus::max_steps;
      break;
    }
    const bool last = t + h >= t1;
    if (last) h = t1 - t;
    if (h <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) {
      res.status = DopriStatus::step_underflow;
      break;
    }
    const Vec k2 = f(t + c2 * h, Vec(y + h * (a21 * k1)));
    const Vec k3 = f(t + c3 * h, Vec(y + h * (a31 * k1 + a32 * k2)));
    const Vec k4 = f(t + c4 * h, Vec(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
    const Vec k5 = f(t + c5 * h, Vec(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
    const Vec k6 = f(t + h, Vec(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)));
    const Vec ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vec k7 = f(t + h, ynew);
    const Vec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double norm = 0.0;
    for (int i = 0; i < static_cast<int>(y.size()); ++i) {
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(err[i]) / sc;
      norm += r * r;
    }
    norm = std::sqrt(norm / static_cast<double>(y.size()));
    if (!std::isfinite(norm)) norm = 1e10;

    if (norm <= 1.0) {
      t = last ? t1 : t + h;
      y = ynew;
      k1 = k7;
      ++res.accepted;
      res.t = t;
      if (!observe(t, y)) {
        res.status = DopriStatus::stopped;
        return res;
      }
      const double fac = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
      h *= fac;
    } else {
      ++res.rejected;
      h *= std::max(0.2, 0.9 * std::pow(norm, -0.2));
    }
  }
  return res;
}

}  // namespace painleve

#endif  // PAINLEVE_DOPRI_HPP
