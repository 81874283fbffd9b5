#ifndef PAINLEVE_VERIFY_HPP
#define PAINLEVE_VERIFY_HPP

#include <string>
#include <vector>

#include "painleve/io.hpp"

namespace painleve {

/// series, finite-n, jimbo, ode, all.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite of module invariants; throws std::invalid_argument on an unknown name.
RunReport run_verify(const std::string& suite);

/// Measured convergence order of |f(s)| over a halving sequence: the
/// least-squares slope of log|f| against log s.
double measured_order(const std::vector<double>& s, const std::vector<double>& err);

}  // namespace painleve

#endif  // PAINLEVE_VERIFY_HPP
