#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "painleve/bessel.hpp"
#include "painleve/hardedge.hpp"
#include "painleve/io.hpp"
#include "painleve/jimbo.hpp"
#include "painleve/lue.hpp"
#include "painleve/sigma_ode.hpp"
#include "painleve/verify.hpp"

using namespace painleve;

namespace {

constexpr int kExitOk = 0, kExitCheck = 1, kExitUsage = 2;

struct Params {
  int N = 2;
  double a = 0.5, mu = 0.25, xi = 0.3;
};

void add_params(CLI::App* app, Params& p, bool with_n) {
  if (with_n) app->add_option("--N", p.N, "matrix size")->check(CLI::Range(1, 100000));
  app->add_option("--a", p.a, "Laguerre exponent a");
  app->add_option("--mu", p.mu, "singularity exponent mu");
  app->add_option("--xi", p.xi, "generating-function parameter xi");
}

Json params_json(const Params& p, bool with_n) {
  Json j = Json::object();
  if (with_n) j["N"] = p.N;
  j["a"] = p.a;
  j["mu"] = p.mu;
  j["xi"] = p.xi;
  return j;
}

Json fraction_json(const Rational& q) {
  Json j;
  j["value"] = to_string(q);
  j["numerator"] = factorization_string(factorize(Integer(q.get_num())));
  j["denominator"] = factorization_string(factorize(Integer(q.get_den())));
  return j;
}

struct BkRow {
  int k = 0;
  Rational b, bp, b_oracle, bp_oracle;
};

BkRow bk_row(int k) {
  BkRow r;
  r.k = k;
  r.b = bk_constant(k);
  r.bp = bkprime_constant(k);
  r.b_oracle = bk_direct(k);
  r.bp_oracle = bkprime_direct(k);
  return r;
}

int cmd_bk(int kmax, int threads, bool table, RunReport& report) {
  report.parameters["kmax"] = kmax;
  std::vector<BkRow> rows(static_cast<std::size_t>(kmax));
  // Largest k first so the slow oracle evaluations overlap.
  std::vector<int> order;
  for (int k = kmax; k >= 1; --k) order.push_back(k);
  for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(threads)) {
    std::vector<std::future<BkRow>> jobs;
    for (std::size_t i = start; i < std::min(order.size(), start + static_cast<std::size_t>(threads)); ++i)
      jobs.push_back(std::async(std::launch::async, bk_row, order[i]));
    for (auto& j : jobs) {
      BkRow r = j.get();
      rows[static_cast<std::size_t>(r.k - 1)] = std::move(r);
    }
  }
  Json out = Json::array();
  for (const auto& r : rows) {
    const bool match = r.b == r.b_oracle && r.bp == r.bp_oracle;
    out.push_back(Json{{"k", r.k}, {"b_k", fraction_json(r.b)}, {"b_prime_k", fraction_json(r.bp)}, {"oracle_match", match}});
    report.add(exact_check("b_k, b'_k recurrence = oracle k=" + std::to_string(r.k), match,
                           Json{to_string(r.b), to_string(r.bp)}, Json{to_string(r.b_oracle), to_string(r.bp_oracle)}));
  }
  report.outputs["rows"] = out;
  if (table) {
    for (const auto& row : out) {
      std::cout << "k=" << row["k"].get<int>() << (row["oracle_match"].get<bool>() ? "" : "  ORACLE MISMATCH") << "\n";
      for (const char* key : {"b_k", "b_prime_k"}) {
        const auto& f = row[key];
        std::cout << "  " << std::left << std::setw(10) << key << f["value"].get<std::string>() << "\n"
                  << "  " << std::setw(10) << "" << "= " << f["numerator"].get<std::string>() << " / "
                  << f["denominator"].get<std::string>() << "\n";
      }
    }
  }
  return report.ok() ? kExitOk : kExitCheck;
}

int cmd_expand(const std::string& which, const Params& p, bool sigma, int two_scale_i, int two_scale_j,
               RunReport& report) {
  const bool finite = which == "finite";
  report.parameters = params_json(p, finite);
  report.parameters["which"] = which;
  report.parameters["sigma"] = sigma;
  const CaseTag tag = classify(p.a, p.mu);
  report.outputs["case"] = to_string(tag);
  AsymptoticExpansion e;
  if (finite) {
    const LUEContext ctx(p.N, p.a, p.mu, p.xi);
    if (two_scale_i > 0) {
      report.parameters["two_scale"] = Json::array({two_scale_i, two_scale_j});
      e = sigma ? wn_two_scale_expansion(ctx, two_scale_i, two_scale_j) : e2n_two_scale_expansion(ctx, two_scale_i, two_scale_j);
    } else {
      e = sigma ? wn_expansion(ctx, tag) : e2n_expansion(ctx, tag);
    }
  } else {
    if (two_scale_i > 0) {
      if (!sigma) throw std::invalid_argument("expand hard: --two-scale applies to --sigma only");
      report.parameters["two_scale"] = Json::array({two_scale_i, two_scale_j});
      e = hardedge_two_scale_sigma(p.a, p.mu, p.xi, two_scale_i, two_scale_j);
    } else {
      e = sigma ? hardedge_sigma_expansion(p.a, p.mu, p.xi, tag) : hardedge_expansion(p.a, p.mu, p.xi, tag);
    }
  }
  report.outputs["expansion"] = to_json(e);
  return kExitOk;
}

int cmd_e2n(const Params& p, const std::vector<double>& s, bool compare, RunReport& report) {
  report.parameters = params_json(p, true);
  report.parameters["s"] = s;
  const LUEContext ctx(p.N, p.a, p.mu, p.xi);
  const CaseTag tag = classify(ctx);
  report.outputs["case"] = to_string(tag);
  const AsymptoticExpansion ex = e2n_expansion(ctx, tag);
  Json values = Json::array();
  for (double x : s) {
    const DeterminantResult d = e2n_determinant_checked(ctx, x, tag);
    Json v{{"s", x}, {"E", to_json(d.value)}, {"condition_estimate", d.condition_estimate},
           {"ill_conditioned", d.ill_conditioned}};
    if (compare && x > 0) v["expansion"] = to_json(ex.evaluate(x));
    values.push_back(v);
  }
  report.outputs["values"] = values;
  return kExitOk;
}

int cmd_jimbo(const std::string& which, const Params& p, RunReport& report) {
  const bool pv = which == "pv";
  report.parameters = params_json(p, pv);
  report.parameters["which"] = which;
  const double v = p.a + p.mu;
  if (pv) {
    const LUEContext ctx(p.N, p.a, p.mu, p.xi);
    const JimboPVParams jp = lue_pv_params(ctx);
    const JimboPVTerms t = tau_v_terms(jp);
    report.outputs["params"] = Json{{"theta0", jp.theta0}, {"theta_s", jp.theta_s}, {"theta_inf", jp.theta_inf},
                                    {"sigma", jp.sigma}, {"u", to_json(jp.u.coeff)}, {"u_order", jp.u.order}};
    report.outputs["terms"] = Json{{"prefactor_exponent", t.prefactor_exponent}, {"linear", to_json(t.linear)},
                                   {"plus", to_json(t.plus)}, {"minus", to_json(t.minus)}};
    const AsymptoticExpansion from_tau = lue_from_tau_v(ctx), direct = e2n_expansion(ctx);
    report.outputs["from_tau"] = to_json(from_tau);
    const Complex ft = from_tau.coefficient(1.0 + v), dr = direct.coefficient(1.0 + v);
    report.add(make_check("s^{1+a+mu} coefficient vs finite-N expansion", std::abs(ft - dr) / std::abs(dr), 1e-10,
                          to_json(ft), to_json(dr)));
    report.add(exact_check("s^{1-sigma} branch vanishes", t.minus == Complex(0.0), to_json(t.minus), to_json(0.0)));
  } else {
    const JimboIIIParams jp = hardedge_iii_params(p.a, p.mu, p.xi);
    const JimboIIITerms t = tau_iii_terms(jp);
    report.outputs["params"] = Json{{"v1", jp.v1}, {"v2", jp.v2}, {"sigma", jp.sigma}, {"u", to_json(jp.u.coeff)},
                                    {"u_order", jp.u.order}};
    report.outputs["terms"] = Json{{"prefactor_exponent", t.prefactor_exponent}, {"linear", to_json(t.linear)},
                                   {"plus", to_json(t.plus)}, {"minus", to_json(t.minus)}};
    const AsymptoticExpansion from_tau = hardedge_from_tau_iii(p.a, p.mu, p.xi), direct = hardedge_expansion(p.a, p.mu, p.xi);
    report.outputs["from_tau"] = to_json(from_tau);
    const Complex ft = from_tau.coefficient(1.0 + v), dr = direct.coefficient(1.0 + v);
    report.add(make_check("s^{1+a+mu} coefficient vs hard-edge expansion", std::abs(ft - dr) / std::abs(dr), 1e-10,
                          to_json(ft), to_json(dr)));
    report.add(exact_check("t^{1-sigma} branch vanishes", t.minus == Complex(0.0), to_json(t.minus), to_json(0.0)));
  }
  return report.ok() ? kExitOk : kExitCheck;
}

void write_csv(const std::string& path, const Trajectory& tr) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << "s,re_sigma,im_sigma,residual\n";
  for (const auto& p : tr.points)
    f << format_double(p.state.s) << "," << format_double(p.state.sigma.real()) << ","
      << format_double(p.state.sigma.imag()) << "," << format_double(p.residual) << "\n";
}

int cmd_ode(const std::string& which, const Params& p, double s0, double s1, const std::string& seed_name,
            const IntegrationOptions& opt, const std::string& emit, int trace, RunReport& report) {
  const bool pv = which == "pv";
  report.parameters = params_json(p, pv);
  report.parameters["which"] = which;
  report.parameters["s0"] = s0;
  report.parameters["s1"] = s1;
  report.parameters["seed"] = seed_name;
  report.parameters["rtol"] = opt.rtol;
  report.parameters["atol"] = opt.atol;
  report.parameters["monitor"] = opt.monitor;
  const SeedKind kind = parse_seed_kind(seed_name);

  Trajectory tr;
  Complex value;
  if (pv) {
    const LUEContext ctx(p.N, p.a, p.mu, p.xi);
    tr = integrate_sigma(ctx, s0, s1, pv_seed(ctx, kind), opt);
    if (tr.status == TrajectoryStatus::ok) value = e2n_from_sigma(ctx, s1, tr);
  } else {
    const HardEdgeContext ctx(p.a, p.mu, p.xi);
    tr = integrate_sigma(ctx, s0, s1, piii_seed(ctx, kind), opt);
    if (tr.status == TrajectoryStatus::ok) value = ehard_from_sigma(ctx, s1, tr);
  }
  report.outputs["status"] = to_string(tr.status);
  if (!tr.diagnostic.empty()) report.outputs["diagnostic"] = tr.diagnostic;
  report.outputs["seed_validity_order"] = tr.seed.validity_order();
  report.outputs["seed_terms"] = static_cast<int>(tr.seed.terms().size());
  report.outputs["accepted_steps"] = tr.accepted_steps;
  report.outputs["rejected_steps"] = tr.rejected_steps;
  report.outputs["max_residual_ratio"] = tr.max_residual_ratio;
  if (!tr.points.empty()) {
    const SigmaState end = tr.points.back().state;
    report.outputs["s_end"] = end.s;
    report.outputs["sigma_end"] = to_json(end.sigma);
  }
  if (tr.status == TrajectoryStatus::ok) report.outputs[pv ? "E2N" : "Ehard"] = to_json(value);

  // Residual trace at roughly evenly spaced accepted steps.
  Json tr_json = Json::array();
  if (trace > 0 && !tr.points.empty()) {
    const std::size_t n = tr.points.size();
    const std::size_t stride = std::max<std::size_t>(1, n / static_cast<std::size_t>(trace));
    for (std::size_t i = 0; i < n; i += stride)
      tr_json.push_back(Json{{"s", tr.points[i].state.s}, {"residual", tr.points[i].residual}, {"bound", tr.points[i].bound}});
    if ((n - 1) % stride != 0)
      tr_json.push_back(Json{{"s", tr.points.back().state.s}, {"residual", tr.points.back().residual},
                             {"bound", tr.points.back().bound}});
  }
  report.outputs["residual_trace"] = tr_json;
  if (!emit.empty()) write_csv(emit, tr);

  report.add(make_check("residual monitor |F| <= monitor (1 + |sigma|^2)",
                        tr.status == TrajectoryStatus::ok ? tr.max_residual_ratio : INFINITY, 1.0, to_string(tr.status),
                        tr.diagnostic));
  return report.ok() ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Painleve sigma-forms, hard-edge averages and the constants b_k, b'_k"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--compact", compact, "single-line JSON");

  int kmax = 16, threads = 4;
  bool table = false;
  auto* bk = app.add_subcommand("bk", "exact b_k and b'_k for k = 1..kmax, checked against the Bessel oracle");
  bk->add_option("kmax", kmax, "largest k")->check(CLI::Range(1, 40));
  bk->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  bk->add_flag("--table", table, "factored plain-text table on stdout instead of JSON");

  std::string expand_which;
  Params ep;
  bool expand_sigma = false;
  std::vector<int> two_scale;
  auto* expand = app.add_subcommand("expand", "small-s expansion: finite (E_2,N or W_N) or hard (E^hard or sigma_III')");
  expand->add_option("which", expand_which)->required()->check(CLI::IsMember({"finite", "hard"}));
  add_params(expand, ep, true);
  expand->add_flag("--sigma", expand_sigma, "the sigma function instead of E");
  expand->add_option("--two-scale", two_scale, "I J for the two-scale series (generic case)")->expected(2);

  Params e2p;
  std::vector<double> e2s;
  bool e2compare = false;
  auto* e2n = app.add_subcommand("e2n", "E_2,N(s) from the Hankel determinant");
  add_params(e2n, e2p, true);
  e2n->add_option("--s", e2s, "one or more s values")->required()->check(CLI::NonNegativeNumber);
  e2n->add_flag("--compare", e2compare, "also evaluate the small-s expansion");

  std::string jimbo_which;
  Params jp;
  auto* jimbo = app.add_subcommand("jimbo", "Jimbo tau-expansion data and matching for PV or III'");
  jimbo->add_option("which", jimbo_which)->required()->check(CLI::IsMember({"pv", "iii"}));
  add_params(jimbo, jp, true);

  std::string ode_which, seed_name = "auto", emit;
  Params op;
  double s0 = 1e-2, s1 = 1.0;
  int trace = 20;
  IntegrationOptions opt;
  auto* ode = app.add_subcommand("ode", "integrate sigma-PV (W_N) or sigma-PIII' from a seed expansion");
  ode->add_option("which", ode_which)->required()->check(CLI::IsMember({"pv", "iii"}));
  add_params(ode, op, true);
  ode->add_option("--s0", s0, "seeding point")->check(CLI::PositiveNumber);
  ode->add_option("--s1", s1, "endpoint")->check(CLI::PositiveNumber);
  ode->add_option("--seed", seed_name, "auto|printed|two-scale|bessel|recurrence");
  ode->add_option("--rtol", opt.rtol);
  ode->add_option("--atol", opt.atol);
  ode->add_option("--monitor", opt.monitor, "residual monitor scale");
  ode->add_option("--emit", emit, "CSV path: s, Re sigma, Im sigma, residual");
  ode->add_option("--trace", trace, "number of residual trace samples in the JSON");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run module invariant suites");
  verify->add_option("suite", suite)->check(CLI::IsMember(verify_suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunReport report;
  int rc = kExitOk;
  try {
    if (*bk) {
      report.command = "bk";
      rc = cmd_bk(kmax, threads, table, report);
    } else if (*expand) {
      report.command = "expand";
      rc = cmd_expand(expand_which, ep, expand_sigma, two_scale.empty() ? 0 : two_scale[0],
                      two_scale.empty() ? 0 : two_scale[1], report);
    } else if (*e2n) {
      report.command = "e2n";
      rc = cmd_e2n(e2p, e2s, e2compare, report);
    } else if (*jimbo) {
      report.command = "jimbo";
      rc = cmd_jimbo(jimbo_which, jp, report);
    } else if (*ode) {
      report.command = "ode";
      rc = cmd_ode(ode_which, op, s0, s1, seed_name, opt, emit, trace, report);
    } else if (*verify) {
      report = run_verify(suite);
      rc = report.ok() ? kExitOk : kExitCheck;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (!(*bk && table)) std::cout << to_json(report).dump(compact ? -1 : 2) << "\n";
  std::cerr << "wall_time " << std::fixed << std::setprecision(3) << report.wall_time << " s\n";
  return rc;
}
