// Copyright 2026 The fockrein Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line driver: verification suites, cycle-index printing, amplitudes
// and overlaps from JSON files.
//
// Exit codes: 0 success, 1 failed checks, 2 usage or parse error, 3 input
// outside the convergence hypothesis of a closed-form route.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockrein/coherent.hpp"
#include "fockrein/cycle_index.hpp"
#include "fockrein/error.hpp"
#include "fockrein/gbqft.hpp"
#include "fockrein/io.hpp"
#include "fockrein/suites.hpp"

namespace {

using namespace fockrein;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHypothesis = 3;

struct Route {
  std::string name;
  Complex value;
};

void print_routes(const std::vector<Route>& routes, bool labelled) {
  if (!labelled) {
    std::cout << format_complex(routes.front().value) << '\n';
    return;
  }
  double deviation = 0.0;
  for (const Route& a : routes) {
    std::cout << a.name << ' ' << format_complex(a.value) << '\n';
    for (const Route& b : routes) deviation = std::max(deviation, std::abs(a.value - b.value));
  }
  std::cout << "max_deviation " << format_real(deviation) << '\n';
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& json_path) {
  const Report report = run_suite(suite, cfg);
  std::cout << report.summary();
  if (!json_path.empty()) write_json_file(json_path, report.to_json());
  return report.pass() ? 0 : kExitFail;
}

int cmd_cycle_index(int n, const std::string& family, const std::string& method,
                    const std::string& eval_path) {
  if (n < 0) throw UsageError("n must be nonnegative");
  std::vector<std::pair<std::string, CycleIndexPoly>> polys;
  if (family == "x" || family == "both") {
    CycleIndexPoly p = method == "enumerate" ? p_n_enumerate(n) : p_n_recursive(n);
    polys.emplace_back("p_" + std::to_string(n), std::move(p));
  }
  if (family == "y" || family == "both") {
    CycleIndexPoly q = method == "recursive" ? q_n_recursive(n) : q_n_closed(n);
    polys.emplace_back("q_" + std::to_string(n), std::move(q));
  }
  std::optional<KVector> values;
  if (!eval_path.empty()) values = vector_from_json(read_json_file(eval_path));
  for (const auto& [name, poly] : polys) {
    std::cout << poly.to_string(name) << '\n';
    if (values) {
      const std::vector<Complex> v(values->data(), values->data() + values->size());
      std::cout << name << "(values) = " << format_complex(evaluate_poly(poly, v)) << '\n';
    }
  }
  return 0;
}

int cmd_amplitude(const std::string& region_path, const std::string& state_path,
                  const std::string& method) {
  const Region region = region_from_json(read_json_file(region_path));
  const nlohmann::json state_json = read_json_file(state_path);
  std::vector<Route> routes;
  if (state_json.is_object() && state_json.contains("coefficients")) {
    if (method != "bruteforce" && method != "all") {
      throw UsageError("a general state only supports --method bruteforce");
    }
    routes.push_back({"bruteforce", amplitude_bruteforce(region, state_from_json(state_json))});
    print_routes(routes, method == "all");
    return 0;
  }
  const CoherentData data = coherent_data_from_json(state_json);
  validate(region.boundary(), data);
  if (method == "closed" || method == "all") routes.push_back({"closed", amplitude_closed(region, data)});
  if (method == "bruteforce" || method == "all") {
    routes.push_back({"bruteforce",
                      amplitude_bruteforce(region, coherent_explicit(region.boundary(), data))});
  }
  if (method == "degreewise" || method == "all") {
    routes.push_back({"degreewise", amplitude_degreewise(region, data)});
  }
  print_routes(routes, method == "all");
  return 0;
}

int cmd_overlap(const std::string& space_path, const std::string& left_path,
                const std::string& right_path, const std::string& method) {
  const KreinSpace space = space_from_json(read_json_file(space_path));
  const CoherentData left = coherent_data_from_json(read_json_file(left_path));
  const CoherentData right = coherent_data_from_json(read_json_file(right_path));
  validate(space, left);
  validate(space, right);
  std::vector<Route> routes;
  if (method == "closed" || method == "all") routes.push_back({"closed", overlap_closed(space, left, right)});
  if (method == "bruteforce" || method == "all") {
    routes.push_back({"bruteforce", fock_inner(coherent_explicit(space, left), coherent_explicit(space, right))});
  }
  if (method == "slice" || method == "all") {
    const Hypersurface sigma{space, Orientation::standard};
    routes.push_back({"slice", slice_inner(sigma, left, right).slice_amplitude});
  }
  print_routes(routes, method == "all");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free fermionic Fock spaces over Krein spaces: verification and evaluation"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string suite = "all";
  std::string json_path;
  std::optional<int> dim;
  std::optional<std::string> signature;
  std::optional<int> trials;
  std::optional<double> tol;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"krein", "car", "lie", "coherent", "amplitude", "axioms",
                             "combinatorics", "all"}));
  verify->add_option("--dim", dim, "Space dimension");
  verify->add_option("--signature", signature, "Sign string such as ++--");
  verify->add_option("--seed", cfg.seed, "Base seed; trial i uses seed xor i");
  verify->add_option("--trials", trials, "Random trials per check");
  verify->add_option("--tol", tol, "Override floating-point tolerances");
  verify->add_option("--max-degree", cfg.max_degree, "Largest n for the exact polynomial checks");
  verify->add_option("--json", json_path, "Write the report as JSON");

  int n = 0;
  std::string family = "y";
  std::string ci_method = "closed";
  std::string eval_path;
  auto* cycle = app.add_subcommand("cycle-index", "Print p_n and/or q_n");
  cycle->add_option("n", n, "Degree")->required()->allow_extra_args(false);
  cycle->add_option("--family", family, "x prints p_n, y prints q_n")
      ->check(CLI::IsMember({"x", "y", "both"}));
  cycle->add_option("--method", ci_method, "enumerate, recursive or closed")
      ->check(CLI::IsMember({"enumerate", "recursive", "closed"}));
  cycle->add_option("--eval", eval_path, "JSON vector of variable values");

  std::string region_path;
  std::string state_path;
  std::string amp_method = "closed";
  auto* amplitude = app.add_subcommand("amplitude", "Region amplitude of a state");
  amplitude->add_option("region", region_path, "Region JSON file")->required();
  amplitude->add_option("state", state_path, "Coherent data or state JSON file")->required();
  amplitude->add_option("--method", amp_method)
      ->check(CLI::IsMember({"closed", "bruteforce", "degreewise", "all"}));

  std::string space_path;
  std::string left_path;
  std::string right_path;
  std::string ov_method = "closed";
  auto* overlap = app.add_subcommand("overlap", "Inner product of two coherent states");
  overlap->add_option("space", space_path, "Space JSON file")->required();
  overlap->add_option("left", left_path, "Coherent data JSON file")->required();
  overlap->add_option("right", right_path, "Coherent data JSON file")->required();
  overlap->add_option("--method", ov_method)
      ->check(CLI::IsMember({"closed", "bruteforce", "slice", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::cout.imbue(std::locale::classic());
  try {
    if (*verify) {
      cfg.dim = dim;
      cfg.signature = signature;
      cfg.trials = trials;
      cfg.tol = tol;
      cfg.validate();
      return cmd_verify(suite, cfg, json_path);
    }
    if (*cycle) return cmd_cycle_index(n, family, ci_method, eval_path);
    if (*amplitude) return cmd_amplitude(region_path, state_path, amp_method);
    if (*overlap) return cmd_overlap(space_path, left_path, right_path, ov_method);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << '\n' << "norm " << format_real(e.norm()) << '\n';
    return kExitHypothesis;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
