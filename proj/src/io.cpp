#include "painleve/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace painleve {

std::string format_double(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, end);
}

namespace {

// JSON has no inf/nan; fall back to strings for those.
Json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

double number_from(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw std::invalid_argument("expected a number");
}

Var parse_var(const std::string& v) {
  if (v == "s") return Var::s;
  if (v == "t") return Var::t;
  if (v == "x") return Var::x;
  throw std::invalid_argument("unknown series variable '" + v + "'");
}

}  // namespace

Json to_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Complex complex_from_json(const Json& j) { return {number_from(j.at("re")), number_from(j.at("im"))}; }

Json to_json(const RationalSeries& f) {
  Json coeffs = Json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(to_string(f[n]));
  return Json{{"var", std::string(1, static_cast<char>(f.var()))}, {"order", f.order()}, {"coeffs", coeffs}};
}

RationalSeries rational_series_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != order + 1) throw std::invalid_argument("series: coeffs length != order+1");
  RationalSeries f(order, parse_var(j.at("var").get<std::string>()));
  for (int n = 0; n <= order; ++n) f[n] = parse_rational(coeffs[static_cast<std::size_t>(n)].get<std::string>());
  return f;
}

Json to_json(const AsymptoticExpansion& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms())
    terms.push_back(Json{{"coeff_re", number(t.coeff.real())},
                         {"coeff_im", number(t.coeff.imag())},
                         {"exponent", number(t.exponent)},
                         {"log_power", t.log_power}});
  return Json{{"validity_order", number(e.validity_order())}, {"terms", terms}};
}

AsymptoticExpansion expansion_from_json(const Json& j) {
  AsymptoticExpansion e(number_from(j.at("validity_order")));
  for (const auto& t : j.at("terms"))
    e.add({number_from(t.at("coeff_re")), number_from(t.at("coeff_im"))}, number_from(t.at("exponent")),
          t.at("log_power").get<int>());
  return e;
}

bool RunReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"status", c.passed ? "pass" : "fail"},
                          {"measured", number(c.measured)},
                          {"tolerance", number(c.tolerance)},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs}});
  return Json{{"schema", kSchemaVersion}, {"command", r.command},   {"parameters", r.parameters},
              {"outputs", r.outputs},     {"checks", checks},       {"status", r.ok() ? "ok" : "fail"}};
}

Check make_check(std::string name, double measured, double tolerance, Json lhs, Json rhs) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.passed = std::isfinite(measured) && measured <= tolerance;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

Check exact_check(std::string name, bool equal, Json lhs, Json rhs) {
  Check c;
  c.name = std::move(name);
  c.passed = equal;
  c.measured = equal ? 0.0 : 1.0;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

}  // namespace painleve
