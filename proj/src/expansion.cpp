#include "painleve/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace painleve {

namespace {

constexpr double kExponentTol = 1e-12;

bool same_slot(const ExpansionTerm& t, double exponent, int log_power) {
  return t.log_power == log_power && std::abs(t.exponent - exponent) <= kExponentTol;
}

}  // namespace

AsymptoticExpansion& AsymptoticExpansion::add(Complex coeff, double exponent, int log_power) {
  if (log_power < 0) throw std::invalid_argument("negative log power");
  for (auto& t : terms_) {
    if (same_slot(t, exponent, log_power)) {
      t.coeff += coeff;
      return *this;
    }
  }
  auto pos = std::find_if(terms_.begin(), terms_.end(), [&](const ExpansionTerm& t) {
    return t.exponent > exponent + kExponentTol ||
           (std::abs(t.exponent - exponent) <= kExponentTol && t.log_power > log_power);
  });
  terms_.insert(pos, ExpansionTerm{coeff, exponent, log_power});
  return *this;
}

Complex AsymptoticExpansion::coefficient(double exponent, int log_power) const {
  for (const auto& t : terms_)
    if (same_slot(t, exponent, log_power)) return t.coeff;
  return 0.0;
}

Complex AsymptoticExpansion::evaluate(double s) const {
  if (!(s > 0.0)) throw std::domain_error("expansion evaluated at s <= 0");
  const double L = std::log(s);
  Complex acc = 0.0;
  for (const auto& t : terms_) acc += t.coeff * std::pow(s, t.exponent) * std::pow(L, t.log_power);
  return acc;
}

AsymptoticExpansion AsymptoticExpansion::derivative() const {
  AsymptoticExpansion r(validity_order_ - 1.0);
  for (const auto& t : terms_) {
    if (t.exponent != 0.0) r.add(t.coeff * t.exponent, t.exponent - 1.0, t.log_power);
    if (t.log_power > 0) r.add(t.coeff * static_cast<double>(t.log_power), t.exponent - 1.0, t.log_power - 1);
  }
  return r;
}

AsymptoticExpansion AsymptoticExpansion::euler_derivative() const {
  AsymptoticExpansion r(validity_order_);
  for (const auto& t : terms_) {
    if (t.exponent != 0.0) r.add(t.coeff * t.exponent, t.exponent, t.log_power);
    if (t.log_power > 0) r.add(t.coeff * static_cast<double>(t.log_power), t.exponent, t.log_power - 1);
  }
  return r;
}

Complex AsymptoticExpansion::integral_over_s(double s0) const {
  const double L = std::log(s0);
  Complex acc = 0.0;
  for (const auto& t : terms_) {
    if (t.coeff == 0.0) continue;
    if (t.exponent <= 0.0) throw std::domain_error("integral_over_s: non-integrable term");
    const double e = t.exponent, p = std::pow(s0, e);
    switch (t.log_power) {
      case 0: acc += t.coeff * p / e; break;
      case 1: acc += t.coeff * p * (L / e - 1.0 / (e * e)); break;
      case 2: acc += t.coeff * p * (L * L / e - 2.0 * L / (e * e) + 2.0 / (e * e * e)); break;
      default: throw std::domain_error("integral_over_s: log power > 2");
    }
  }
  return acc;
}

AsymptoticExpansion AsymptoticExpansion::scaled(Complex c) const {
  AsymptoticExpansion r(validity_order_);
  for (const auto& t : terms_) r.add(c * t.coeff, t.exponent, t.log_power);
  return r;
}

AsymptoticExpansion AsymptoticExpansion::rescaled_argument(double c) const {
  if (!(c > 0.0)) throw std::domain_error("rescaled_argument needs c > 0");
  const double Lc = std::log(c);
  AsymptoticExpansion r(validity_order_);
  for (const auto& t : terms_) {
    const Complex base = t.coeff * std::pow(c, t.exponent);
    // (log c + log s)^m, m <= 2 in practice
    double binom = 1.0;
    for (int j = 0; j <= t.log_power; ++j) {
      r.add(base * binom * std::pow(Lc, t.log_power - j), t.exponent, j);
      binom = binom * (t.log_power - j) / (j + 1);
    }
  }
  return r;
}

AsymptoticExpansion operator+(const AsymptoticExpansion& a, const AsymptoticExpansion& b) {
  AsymptoticExpansion r(std::min(a.validity_order(), b.validity_order()));
  for (const auto& t : a.terms()) r.add(t.coeff, t.exponent, t.log_power);
  for (const auto& t : b.terms()) r.add(t.coeff, t.exponent, t.log_power);
  return r;
}

}  // namespace painleve
