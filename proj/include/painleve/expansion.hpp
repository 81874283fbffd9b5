#ifndef PAINLEVE_EXPANSION_HPP
#define PAINLEVE_EXPANSION_HPP

#include <limits>
#include <vector>

#include "painleve/rational.hpp"

namespace painleve {

/// One term gamma * s^exponent * (log s)^log_power.
struct ExpansionTerm {
  Complex coeff;
  double exponent = 0.0;
  int log_power = 0;
};

/// Finite sum of ExpansionTerm plus a remainder o(s^validity_order) or
/// O(s^validity_order); terms are kept sorted by (exponent, log_power).
class AsymptoticExpansion {
 public:
  AsymptoticExpansion() = default;
  explicit AsymptoticExpansion(double validity_order) : validity_order_(validity_order) {}

  /// Adds a term, merging it with an existing one of the same exponent and
  /// log power (exponents compared to 1e-12).
  AsymptoticExpansion& add(Complex coeff, double exponent, int log_power = 0);

  const std::vector<ExpansionTerm>& terms() const { return terms_; }
  double validity_order() const { return validity_order_; }
  void set_validity_order(double r) { validity_order_ = r; }

  /// Coefficient of s^exponent (log s)^log_power, zero if absent.
  Complex coefficient(double exponent, int log_power = 0) const;

  /// Value at s > 0.
  Complex evaluate(double s) const;

  /// d/ds termwise.
  AsymptoticExpansion derivative() const;

  /// s d/ds termwise.
  AsymptoticExpansion euler_derivative() const;

  /// ∫_0^{s0} f(s) ds/s; every term must have exponent > 0.
  Complex integral_over_s(double s0) const;

  AsymptoticExpansion scaled(Complex c) const;

  /// f(c s) for c > 0; expands log(c s) = log c + log s.
  AsymptoticExpansion rescaled_argument(double c) const;

  friend AsymptoticExpansion operator+(const AsymptoticExpansion& a, const AsymptoticExpansion& b);

 private:
  std::vector<ExpansionTerm> terms_;
  double validity_order_ = std::numeric_limits<double>::infinity();
};

}  // namespace painleve

#endif  // PAINLEVE_EXPANSION_HPP
