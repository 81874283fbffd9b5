#ifndef PAINLEVE_IO_HPP
#define PAINLEVE_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "painleve/expansion.hpp"
#include "painleve/rational.hpp"
#include "painleve/series.hpp"

namespace painleve {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"var", "order", "coeffs": ["p/q", ...]}
Json to_json(const RationalSeries& f);
RationalSeries rational_series_from_json(const Json& j);

/// {"validity_order", "terms": [{coeff_re, coeff_im, exponent, log_power}]}
Json to_json(const AsymptoticExpansion& e);
AsymptoticExpansion expansion_from_json(const Json& j);

/// Shortest round-trip decimal form; keeps JSON output byte-stable.
std::string format_double(double x);

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // the compared discrepancy
  double tolerance = 0.0;
  Json lhs, rhs;           // both compared values, never just the verdict
};

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  Json outputs = Json::object();
  std::vector<Check> checks;
  double wall_time = 0.0;  // reported out of band, not in the payload

  bool ok() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

/// The deterministic payload: schema, command, parameters, outputs, checks, status.
Json to_json(const RunReport& r);

Check make_check(std::string name, double measured, double tolerance, Json lhs, Json rhs);
Check exact_check(std::string name, bool equal, Json lhs, Json rhs);

}  // namespace painleve

#endif  // PAINLEVE_IO_HPP
