// Copyright 2026 The uqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "table.hpp"
#include "uqd/caps.hpp"
#include "uqd/discrimination.hpp"
#include "uqd/ensemble.hpp"
#include "uqd/errors.hpp"
#include "uqd/hypothesis_test.hpp"
#include "verify.hpp"

namespace uqd::cli {
namespace {

struct ExperimentConfig {
  int n_qubits = 0;
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  std::vector<int> t;
  std::uint64_t trials = 10000;
  std::vector<double> epsilon;
  double delta = 0.05;
  std::uint64_t seed = 0;
  std::string out;
  Format format = Format::csv;
  unsigned threads = 0;
  int max_n = 4;
  bool inject_fault = false;
  bool closed = false;
  Caps caps;
};

/// A failure in the configuration rather than in the experiment.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t address_count(const ExperimentConfig& c) {
  if (c.n_qubits < 1 || c.n_qubits > 6) throw UsageError("--n-qubits must lie in [1, 6]");
  return std::size_t{1} << c.n_qubits;
}

template <class Write>
void emit(const ExperimentConfig& c, std::ostream& out, Write write) {
  if (c.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + c.out);
  write(file);
}

void emit(const ExperimentConfig& c, std::ostream& out, const Table& table) {
  emit(c, out, [&](std::ostream& os) { table.write(os, c.format); });
}

// ---------------------------------------------------------------------------

int cmd_single(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t size = address_count(c);
  const BiasHypothesis h0(size, c.m0), h1(size, c.m1);
  const auto report = run_single_copy_experiment(h0, h1, c.trials, c.seed, c.threads);
  if (report.degenerate) {
    err << "warning: mu0^2 == mu1^2; the hypotheses are indistinguishable (chance level)\n";
  }

  Table table({"N", "m0", "m1", "mu0_sq", "mu1_sq", "trace_distance", "theoretical_success",
               "empirical_success", "half_width_3sigma", "trials", "seed", "degenerate",
               "within_ci"});
  table.add_row({{"N", size},
                 {"m0", c.m0},
                 {"m1", c.m1},
                 {"mu0_sq", h0.phase_bias_sq()},
                 {"mu1_sq", h1.phase_bias_sq()},
                 {"trace_distance", trace_distance_closed(h0, h1)},
                 {"theoretical_success", report.theoretical_success},
                 {"empirical_success", report.empirical_success},
                 {"half_width_3sigma", report.confidence_half_width},
                 {"trials", report.trials},
                 {"seed", report.seed},
                 {"degenerate", report.degenerate},
                 {"within_ci", report.within_ci()}});
  emit(c, out, table);
  if (!report.within_ci()) {
    err << "empirical success outside the 3-sigma interval\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_multi(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t size = address_count(c);
  const BiasHypothesis h0(size, c.m0), h1(size, c.m1);
  if (c.t.empty()) throw UsageError("multi needs --t");
  if (h0.phase_bias_sq() == h1.phase_bias_sq()) {
    err << "warning: mu0^2 == mu1^2; the hypotheses are indistinguishable (chance level)\n";
  }

  Table table({"N", "m0", "m1", "mu0_sq", "mu1_sq", "t", "k_star", "larger", "exact_error", "xi",
               "chernoff_bound", "empirical_error", "half_width_3sigma", "trials", "seed",
               "degenerate", "within_ci", "bound_holds"});
  bool ok = true;
  for (int t : c.t) {
    if (t < 1) throw UsageError("--t values must be >= 1");
    const auto r = run_multi_query_experiment(h0, h1, t, c.trials, c.seed, c.threads);
    ok = ok && r.within_ci() && r.bound_holds();
    table.add_row({{"N", size},
                   {"m0", c.m0},
                   {"m1", c.m1},
                   {"mu0_sq", h0.phase_bias_sq()},
                   {"mu1_sq", h1.phase_bias_sq()},
                   {"t", t},
                   {"k_star", r.rule.threshold},
                   {"larger", r.rule.larger},
                   {"exact_error", r.exact_error},
                   {"xi", r.xi},
                   {"chernoff_bound", r.chernoff_bound},
                   {"empirical_error", r.empirical_error},
                   {"half_width_3sigma", r.confidence_half_width},
                   {"trials", r.trials},
                   {"seed", r.seed},
                   {"degenerate", r.rule.degenerate},
                   {"within_ci", r.within_ci()},
                   {"bound_holds", r.bound_holds()}});
  }
  emit(c, out, table);
  if (!ok) {
    err << "a row fell outside its 3-sigma interval or exceeded the Chernoff bound\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  if (c.max_n < 1) throw UsageError("--max-n must be >= 1");
  const auto results = run_verification_suite({.max_n = c.max_n, .inject_fault = c.inject_fault},
                                              c.caps);
  Table table({"check", "passed", "statistic", "comparison", "threshold", "cases"});
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    table.add_row({{"check", r.name},
                   {"passed", r.passed},
                   {"statistic", r.statistic},
                   {"comparison", r.comparison},
                   {"threshold", r.threshold},
                   {"cases", r.cases}});
  }
  emit(c, out, table);
  if (!ok) {
    for (const auto& r : results) {
      if (!r.passed) err << "FAILED " << r.name << ": " << format_double(r.statistic) << "\n";
    }
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_scan(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<double> grid = c.epsilon;
  if (grid.empty()) grid = {0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 0.005};

  Table table({"epsilon", "delta", "mu1_sq", "t_needed", "exact_error", "chernoff_bound", "xi",
               "meets_delta"});
  bool ok = true;
  for (double eps : grid) {
    const std::uint64_t t = queries_needed(eps, c.delta);
    const double mu_sq = 4.0 * eps * eps;
    const int queries = static_cast<int>(t);
    const double exact = exact_bayes_error(0.0, mu_sq, queries);
    const double xi = chernoff_information(0.0, mu_sq).xi;
    const bool meets = exact <= c.delta;
    ok = ok && meets;
    table.add_row({{"epsilon", eps},
                   {"delta", c.delta},
                   {"mu1_sq", mu_sq},
                   {"t_needed", t},
                   {"exact_error", exact},
                   {"chernoff_bound", chernoff_bound(queries, xi)},
                   {"xi", xi},
                   {"meets_delta", meets}});
  }
  emit(c, out, table);
  if (!ok) {
    err << "exact error above delta at the computed query count\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_chernoff(const ExperimentConfig& c, std::ostream& out, std::ostream&) {
  const std::size_t size = address_count(c);
  Table table({"m0", "m1", "mu0_sq", "mu1_sq", "s_star", "xi", "xi_bits", "boundary_case"});
  for (std::size_t m0 = 0; m0 <= size; ++m0) {
    for (std::size_t m1 = 0; m1 <= size; ++m1) {
      const BiasHypothesis h0(size, m0), h1(size, m1);
      const auto r = chernoff_information(h0.phase_bias_sq(), h1.phase_bias_sq());
      table.add_row({{"m0", m0},
                     {"m1", m1},
                     {"mu0_sq", h0.phase_bias_sq()},
                     {"mu1_sq", h1.phase_bias_sq()},
                     {"s_star", r.s_star},
                     {"xi", r.xi},
                     {"xi_bits", r.xi / std::log(2.0)},
                     {"boundary_case", r.boundary_case}});
    }
  }
  emit(c, out, table);
  return kExitOk;
}

int cmd_ensemble(const ExperimentConfig& c, std::ostream& out, std::ostream&) {
  const std::size_t size = address_count(c);
  const int copies = c.t.empty() ? 1 : c.t.front();
  if (c.t.size() > 1) throw UsageError("ensemble takes a single --t");
  if (c.closed && copies != 1) throw UsageError("--closed only describes the single-copy state");

  const DensityOperator rho =
      c.closed ? densify(ensemble_closed_form(BiasHypothesis(size, c.m0)), c.caps)
      : copies == 1 ? ensemble_brute_force(size, c.m0, c.caps)
                    : t_copy_ensemble_brute(size, c.m0, copies, c.caps);
  const Eigen::MatrixXcd& m = rho.matrix();

  emit(c, out, [&](std::ostream& os) {
    if (c.format == Format::json) {
      nlohmann::ordered_json doc;
      doc["N"] = size;
      doc["m"] = c.m0;
      doc["t"] = copies;
      doc["source"] = c.closed ? "closed" : "brute";
      doc["dim"] = m.rows();
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
      }
      doc["matrix"] = std::move(rows);
      os << doc.dump(2) << '\n';
      return;
    }
    // Row-major; each cell is a quoted "re,im" pair.
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        os << (j ? "," : "") << '"' << format_double(m(i, j).real()) << ','
           << format_double(m(i, j).imag()) << '"';
      }
      os << '\n';
    }
  });
  return kExitOk;
}

int cmd_collective(const ExperimentConfig& c, std::ostream& out, std::ostream&) {
  const std::size_t size = address_count(c);
  const BiasHypothesis h0(size, c.m0), h1(size, c.m1);
  std::vector<int> copies = c.t;
  if (copies.empty()) {
    const std::size_t limit = std::min<std::size_t>(256, c.caps.max_tcopy_dim);
    std::size_t dim = size;
    for (int t = 1; dim <= limit; ++t, dim *= size) copies.push_back(t);
  }

  Table table({"N", "m0", "m1", "t", "single_copy_trace_distance", "collective_trace_distance",
               "collective_helstrom_error", "separable_exact_error"});
  for (int t : copies) {
    if (t < 1) throw UsageError("--t values must be >= 1");
    const double collective = collective_trace_distance(size, c.m0, c.m1, t, c.caps);
    table.add_row({{"N", size},
                   {"m0", c.m0},
                   {"m1", c.m1},
                   {"t", t},
                   {"single_copy_trace_distance", trace_distance_closed(h0, h1)},
                   {"collective_trace_distance", collective},
                   {"collective_helstrom_error", 0.5 * (1.0 - collective)},
                   {"separable_exact_error", exact_bayes_error(h0, h1, t)}});
  }
  emit(c, out, table);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig c;
  CLI::App app{"Restricted-access discrimination of Boolean memories behind a U-QRAM interface",
               "uqd"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Master seed (default 0)");
    sub->add_option("--out", c.out, "Output file (default stdout)");
    sub->add_option("--format", c.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  };
  auto hypotheses = [&](CLI::App* sub, bool second) {
    sub->add_option("--n-qubits", c.n_qubits, "Address qubits n (N = 2^n)")->required();
    sub->add_option("--m0", c.m0, "Weight of hypothesis 0")->required();
    if (second) sub->add_option("--m1", c.m1, "Weight of hypothesis 1")->required();
  };

  auto* single = app.add_subcommand("single", "Single-query Helstrom test, Monte Carlo vs closed form");
  hypotheses(single, true);
  single->add_option("--trials", c.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  common(single);

  auto* multi = app.add_subcommand("multi", "Separable t-query test with likelihood-ratio decision");
  hypotheses(multi, true);
  multi->add_option("--t", c.t, "Query counts (comma-separated)")->delimiter(',')->required();
  multi->add_option("--trials", c.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  common(multi);

  auto* verify = app.add_subcommand("verify", "Oracle-equivalence suites");
  verify->add_option("--max-n", c.max_n, "Largest address-qubit count to exercise");
  verify->add_flag("--inject-fault", c.inject_fault)->group("");
  common(verify);

  auto* scan = app.add_subcommand("scan", "Queries needed for p = 1/2 vs 1/2 + epsilon");
  scan->add_option("--epsilon", c.epsilon, "Bias gaps (comma-separated)")->delimiter(',');
  scan->add_option("--delta", c.delta, "Target error");
  common(scan);

  auto* chernoff = app.add_subcommand("chernoff", "Chernoff information over all weight pairs");
  chernoff->add_option("--n-qubits", c.n_qubits, "Address qubits n (N = 2^n)")->required();
  common(chernoff);

  auto* ensemble = app.add_subcommand("ensemble", "Dump an induced ensemble density matrix");
  hypotheses(ensemble, false);
  ensemble->add_option("--t", c.t, "Copies (brute force only)");
  ensemble->add_flag("--closed", c.closed, "Use the closed form instead of enumeration");
  common(ensemble);

  auto* collective = app.add_subcommand("collective", "Trace distance of t-copy ensemble states");
  hypotheses(collective, true);
  collective->add_option("--t", c.t, "Copy counts (comma-separated)")->delimiter(',');
  common(collective);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    c.caps = Caps::from_env();
    if (single->parsed()) return cmd_single(c, out, err);
    if (multi->parsed()) return cmd_multi(c, out, err);
    if (verify->parsed()) return cmd_verify(c, out, err);
    if (scan->parsed()) return cmd_scan(c, out, err);
    if (chernoff->parsed()) return cmd_chernoff(c, out, err);
    if (ensemble->parsed()) return cmd_ensemble(c, out, err);
    if (collective->parsed()) return cmd_collective(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace uqd::cli
