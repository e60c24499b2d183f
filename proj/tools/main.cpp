// Copyright 2026 The qeur authors
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

#include <array>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qeur/cli.hpp"

namespace {

constexpr double kDegree = qeur::kPi / 180.0;

std::array<double, 3> to_array3(const std::vector<double>& v) {
  return {v[0], v[1], v[2]};
}

}  // namespace

int main(int argc, char** argv) {
  using qeur::cli::OutputFormat;

  CLI::App app{
      "qeur - collision-entropy uncertainty relations for pairs of qubit "
      "observables"};
  app.require_subcommand(1);

  std::string format_name = "text";
  int precision = 12;
  bool degrees = false;
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", precision,
                 "significant digits for text/csv output")
      ->check(CLI::Range(3, 17))
      ->capture_default_str();
  app.add_flag("--degrees", degrees,
               "interpret angle arguments (--gamma, --min, --max, --theta, "
               "--phi) as degrees; output stays in radians");

  // bound
  auto* bound = app.add_subcommand(
      "bound", "optimal lower bound of the collision-entropy sum");
  bound->fallthrough();
  double bound_c = 0.0, bound_gamma = 0.0;
  auto* bound_c_opt = bound->add_option(
      "--c", bound_c, "eigenbasis overlap, in [1/sqrt(2), 1)");
  auto* bound_gamma_opt = bound->add_option(
      "--gamma", bound_gamma,
      "angle between the observable directions, in (0, pi)");
  bound_c_opt->excludes(bound_gamma_opt);
  bound_gamma_opt->excludes(bound_c_opt);

  // minimize
  auto* minimize = app.add_subcommand(
      "minimize", "minimum-uncertainty states for a pair of directions");
  minimize->fallthrough();
  std::vector<double> min_a, min_b;
  minimize->add_option("--a", min_a, "first direction (3 components)")
      ->expected(3)
      ->required();
  minimize->add_option("--b", min_b, "second direction (3 components)")
      ->expected(3)
      ->required();

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "stationary points of the coplanar uncertainty over gamma");
  sweep->fallthrough();
  qeur::cli::SweepQuery sweep_query;
  sweep->add_option("--min", sweep_query.gamma_min, "first gamma, in (0, pi)")
      ->required();
  sweep->add_option("--max", sweep_query.gamma_max, "last gamma, in (0, pi)")
      ->required();
  sweep->add_option("--steps", sweep_query.steps, "number of gamma values")
      ->required()
      ->check(CLI::Range(2, 1000000));

  // compare
  auto* compare = app.add_subcommand(
      "compare", "evaluate all uncertainty relations at one (pair, state)");
  compare->fallthrough();
  std::vector<double> cmp_a, cmp_b;
  qeur::cli::CompareQuery compare_query;
  double cmp_q = 0.0, cmp_qprime = 0.0;
  compare->add_option("--a", cmp_a, "first direction (3 components)")
      ->expected(3)
      ->required();
  compare->add_option("--b", cmp_b, "second direction (3 components)")
      ->expected(3)
      ->required();
  compare->add_option("--theta", compare_query.theta, "state polar angle")
      ->required();
  compare->add_option("--phi", compare_query.phi, "state azimuthal angle")
      ->required();
  compare->add_option("--alpha2", compare_query.alpha2,
                      "scale of the first observable")
      ->capture_default_str();
  compare->add_option("--beta2", compare_query.beta2,
                      "scale of the second observable")
      ->capture_default_str();
  auto* q_opt = compare->add_option(
      "--q", cmp_q, "Renyi index for the first observable, in (0, 2]");
  auto* qprime_opt = compare->add_option(
      "--qprime", cmp_qprime, "Renyi index for the second observable, in (0, 2]");
  q_opt->needs(qprime_opt);
  qprime_opt->needs(q_opt);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "seeded randomized check of the bound and every relation");
  verify->fallthrough();
  qeur::cli::VerifyQuery verify_query;
  verify->add_option("--samples", verify_query.samples, "number of random pairs")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  verify->add_option("--seed", verify_query.seed, "random seed")
      ->capture_default_str();
  verify->add_option("--grid-theta", verify_query.grid.n_theta,
                     "oracle grid resolution in theta")
      ->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();
  verify->add_option("--grid-phi", verify_query.grid.n_phi,
                     "oracle grid resolution in phi")
      ->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qeur::cli::kExitUsage;
  }

  OutputFormat format;
  format.precision = precision;
  if (format_name == "csv") {
    format.kind = OutputFormat::Kind::Csv;
  } else if (format_name == "json") {
    format.kind = OutputFormat::Kind::Json;
  }

  const double angle_unit = degrees ? kDegree : 1.0;

  if (*bound) {
    qeur::cli::BoundQuery query;
    if (bound_c_opt->count() > 0) query.c = bound_c;
    if (bound_gamma_opt->count() > 0) query.gamma = bound_gamma * angle_unit;
    return qeur::cli::cmd_bound(query, format, std::cout, std::cerr);
  }
  if (*minimize) {
    qeur::cli::MinimizeQuery query{to_array3(min_a), to_array3(min_b)};
    return qeur::cli::cmd_minimize(query, format, std::cout, std::cerr);
  }
  if (*sweep) {
    sweep_query.gamma_min *= angle_unit;
    sweep_query.gamma_max *= angle_unit;
    return qeur::cli::cmd_sweep(sweep_query, format, std::cout, std::cerr);
  }
  if (*compare) {
    compare_query.a = to_array3(cmp_a);
    compare_query.b = to_array3(cmp_b);
    compare_query.theta *= angle_unit;
    compare_query.phi *= angle_unit;
    if (q_opt->count() > 0) {
      compare_query.q = cmp_q;
      compare_query.q_prime = cmp_qprime;
    }
    return qeur::cli::cmd_compare(compare_query, format, std::cout, std::cerr);
  }
  if (*verify) {
    return qeur::cli::cmd_verify(verify_query, format, std::cout, std::cerr);
  }
  return qeur::cli::kExitUsage;
}
