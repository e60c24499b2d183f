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

#include <catch2/catch.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qeur/cli.hpp"

using namespace qeur;
using namespace qeur::cli;

namespace {

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

OutputFormat fmt(OutputFormat::Kind kind, int precision = 12) {
  OutputFormat f;
  f.kind = kind;
  f.precision = precision;
  return f;
}

}  // namespace

TEST_CASE("cmd_bound output and exit codes", "[cli]") {
  SECTION("gamma input, json") {
    BoundQuery query;
    query.gamma = kPi / 2.0;
    std::ostringstream out, err;
    const int code = cmd_bound(query, fmt(OutputFormat::Kind::Json), out, err);
    CHECK(code == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("inputs"));
    REQUIRE(doc.contains("rows"));
    CHECK(doc["command"] == "bound");
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["collision_bound"].get<double>() ==
          Approx(0.575364144903562).margin(1e-12));
    CHECK(doc["rows"][0]["c"].get<double>() ==
          Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
    CHECK(doc["rows"][0]["max_uncertainty"].get<double>() ==
          Approx(2.0 * std::log(2.0)).margin(1e-12));
  }
  SECTION("overlap input, csv") {
    BoundQuery query;
    query.c = 0.9238795325112867;
    std::ostringstream out, err;
    const int code = cmd_bound(query, fmt(OutputFormat::Kind::Csv), out, err);
    CHECK(code == 0);
    CHECK(first_line(out.str()) ==
          "c,gamma,collision_bound,max_uncertainty,maassen_uffink_bound,"
          "shannon_f1,luis_bound_n2");
    CHECK(out.str().find("0.152085264165") != std::string::npos);
  }
  SECTION("domain error exits 2 and names the interval") {
    BoundQuery query;
    query.c = 0.5;
    std::ostringstream out, err;
    CHECK(cmd_bound(query, fmt(OutputFormat::Kind::Text), out, err) == 2);
    CHECK(err.str().find("[1/sqrt(2), 1)") != std::string::npos);
  }
  SECTION("gamma outside (0, pi) exits 2") {
    BoundQuery query;
    query.gamma = 3.5;
    std::ostringstream out, err;
    CHECK(cmd_bound(query, fmt(OutputFormat::Kind::Text), out, err) == 2);
  }
  SECTION("requires exactly one input") {
    std::ostringstream out, err;
    CHECK(cmd_bound(BoundQuery{}, fmt(OutputFormat::Kind::Text), out, err) ==
          2);
    BoundQuery both;
    both.c = 0.8;
    both.gamma = 1.0;
    CHECK(cmd_bound(both, fmt(OutputFormat::Kind::Text), out, err) == 2);
  }
}

TEST_CASE("cmd_minimize output", "[cli]") {
  SECTION("complementary pair yields four minimizers") {
    MinimizeQuery query{{1, 0, 0}, {0, 1, 0}};
    std::ostringstream out, err;
    const int code =
        cmd_minimize(query, fmt(OutputFormat::Kind::Json), out, err);
    CHECK(code == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["rows"].size() == 4);
    for (const auto& row : doc["rows"]) {
      CHECK(std::abs(row["sx"].get<double>()) ==
            Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
      CHECK(std::abs(row["sy"].get<double>()) ==
            Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
      CHECK(row["sz"].get<double>() == Approx(0.0).margin(1e-12));
    }
  }
  SECTION("hadamard pair reports canonical angles for both branches") {
    MinimizeQuery query{{1, 0, 1}, {0, 0, 1}};  // normalized at the boundary
    std::ostringstream out, err;
    const int code =
        cmd_minimize(query, fmt(OutputFormat::Kind::Json), out, err);
    CHECK(code == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["theta"].get<double>() ==
          Approx(kPi / 8.0).margin(1e-12));
    CHECK(doc["rows"][0]["phi"].get<double>() == Approx(0.0).margin(1e-12));
    CHECK(doc["rows"][1]["theta"].get<double>() ==
          Approx(7.0 * kPi / 8.0).margin(1e-12));
    CHECK(doc["rows"][1]["phi"].get<double>() == Approx(kPi).margin(1e-12));
    CHECK(doc["rows"][0]["rho00"].get<double>() ==
          Approx(0.961939766255643).margin(1e-12));
  }
  SECTION("collinear directions exit 2") {
    MinimizeQuery query{{0, 0, 1}, {0, 0, 2}};
    std::ostringstream out, err;
    CHECK(cmd_minimize(query, fmt(OutputFormat::Kind::Text), out, err) == 2);
    CHECK(err.str().find("(anti)parallel") != std::string::npos);
  }
  SECTION("zero vector exits 2") {
    MinimizeQuery query{{0, 0, 0}, {0, 0, 1}};
    std::ostringstream out, err;
    CHECK(cmd_minimize(query, fmt(OutputFormat::Kind::Text), out, err) == 2);
  }
}

TEST_CASE("cmd_sweep output", "[cli]") {
  SECTION("csv header is the exact contract") {
    SweepQuery query{1.5, 1.6, 3};
    std::ostringstream out, err;
    CHECK(cmd_sweep(query, fmt(OutputFormat::Kind::Csv), out, err) == 0);
    CHECK(first_line(out.str()) == "gamma,chi,value,kind,regime");
  }
  SECTION("rows ascend in gamma then chi; trivial branches always present") {
    SweepQuery query{0.3, 2.9, 14};
    std::ostringstream out, err;
    CHECK(cmd_sweep(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    double prev_gamma = 0.0, prev_chi = -1.0;
    for (const auto& row : doc["rows"]) {
      const double gamma = row["gamma"].get<double>();
      const double chi = row["chi"].get<double>();
      if (gamma > prev_gamma + 1e-15) {
        prev_chi = -1.0;
      } else {
        CHECK(gamma == Approx(prev_gamma));
      }
      CHECK(chi > prev_chi);
      prev_gamma = gamma;
      prev_chi = chi;
    }
    // The closed-form branches appear at every swept gamma.
    for (int k = 0; k < 14; ++k) {
      const double gamma = 0.3 + (2.9 - 0.3) * k / 13.0;
      bool has_low = false, has_high = false;
      for (const auto& row : doc["rows"]) {
        if (std::abs(row["gamma"].get<double>() - gamma) > 1e-12) continue;
        const double chi = row["chi"].get<double>();
        has_low = has_low || std::abs(chi - gamma / 2.0) <= 1e-9;
        has_high = has_high || std::abs(chi - (gamma / 2.0 + kPi / 2.0)) <= 1e-9;
      }
      INFO("gamma = " << gamma);
      CHECK(has_low);
      CHECK(has_high);
    }
  }
  SECTION("low-gamma range has exactly two points per gamma") {
    SweepQuery query{0.2, 1.0, 5};
    std::ostringstream out, err;
    CHECK(cmd_sweep(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["rows"].size() == 2 * 5);
  }
  SECTION("a sweep step hitting pi/2 yields five points there") {
    SweepQuery query{kPi / 4.0, 3.0 * kPi / 4.0, 3};  // middle step = pi/2
    std::ostringstream out, err;
    CHECK(cmd_sweep(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    int complementary_rows = 0;
    for (const auto& row : doc["rows"]) {
      if (row["regime"] == "complementary") ++complementary_rows;
    }
    CHECK(complementary_rows == 5);
  }
  SECTION("bad ranges exit 2") {
    std::ostringstream out, err;
    CHECK(cmd_sweep(SweepQuery{-0.1, 1.0, 5}, fmt(OutputFormat::Kind::Text),
                    out, err) == 2);
    CHECK(cmd_sweep(SweepQuery{1.0, 0.5, 5}, fmt(OutputFormat::Kind::Text),
                    out, err) == 2);
    CHECK(cmd_sweep(SweepQuery{0.5, 3.3, 5}, fmt(OutputFormat::Kind::Text),
                    out, err) == 2);
    CHECK(cmd_sweep(SweepQuery{0.5, 1.0, 1}, fmt(OutputFormat::Kind::Text),
                    out, err) == 2);
  }
}

TEST_CASE("cmd_compare output", "[cli]") {
  SECTION("complementary pair at its minimizer") {
    CompareQuery query;
    query.a = {1, 0, 0};
    query.b = {0, 1, 0};
    query.theta = kPi / 2.0;
    query.phi = kPi / 4.0;
    std::ostringstream out, err;
    CHECK(cmd_compare(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc["rows"].size() == 4);
    for (const auto& row : doc["rows"]) {
      const std::string relation = row["relation"].get<std::string>();
      CHECK(row["satisfied"].get<bool>());
      if (relation == "landau_pollak" || relation == "maassen_uffink" ||
          relation == "collision_eur") {
        CHECK(row["saturated"].get<bool>());
      }
      if (relation == "heisenberg_robertson") {
        CHECK(row["rhs"].get<double>() <= 1e-12);
      }
    }
  }
  SECTION("extra renyi row when indices are supplied") {
    CompareQuery query;
    query.a = {1, 0, 0};
    query.b = {0, 0, 1};
    query.theta = 0.7;
    query.phi = 0.0;
    query.q = 0.8;
    query.q_prime = 1.5;
    std::ostringstream out, err;
    CHECK(cmd_compare(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    REQUIRE(doc["rows"].size() == 5);
    CHECK(doc["rows"][4]["relation"] == "renyi_pair");
    CHECK(doc["rows"][4]["satisfied"].get<bool>());
  }
  SECTION("index outside the region exits 2") {
    CompareQuery query;
    query.a = {1, 0, 0};
    query.b = {0, 0, 1};
    query.theta = 0.7;
    query.phi = 0.0;
    query.q = 3.0;
    query.q_prime = 2.0;
    std::ostringstream out, err;
    CHECK(cmd_compare(query, fmt(OutputFormat::Kind::Text), out, err) == 2);
  }
  SECTION("perpendicular state reaches the collision maximum") {
    CompareQuery query;
    query.a = {1, 0, 0};
    query.b = {0, 1, 0};
    query.theta = 0.0;
    query.phi = 0.0;
    std::ostringstream out, err;
    CHECK(cmd_compare(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    for (const auto& row : doc["rows"]) {
      if (row["relation"] == "collision_eur") {
        CHECK(row["lhs"].get<double>() ==
              Approx(2.0 * std::log(2.0)).margin(1e-12));
      }
    }
  }
}

TEST_CASE("cmd_verify exit codes and determinism", "[cli]") {
  VerifyQuery query;
  query.samples = 3;
  query.seed = 7;
  query.grid = GridSpec{128, 256, 2};

  SECTION("clean run exits 0") {
    std::ostringstream out, err;
    CHECK(cmd_verify(query, fmt(OutputFormat::Kind::Json), out, err) == 0);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["summary"]["violations"].get<int>() == 0);
    CHECK(doc["summary"]["max_abs_gap"].get<double>() <= 1e-7);
  }
  SECTION("byte-identical across runs") {
    std::ostringstream first_out, second_out, err;
    cmd_verify(query, fmt(OutputFormat::Kind::Text), first_out, err);
    cmd_verify(query, fmt(OutputFormat::Kind::Text), second_out, err);
    CHECK(first_out.str() == second_out.str());
  }
  SECTION("zero samples exit 2") {
    VerifyQuery bad = query;
    bad.samples = 0;
    std::ostringstream out, err;
    CHECK(cmd_verify(bad, fmt(OutputFormat::Kind::Text), out, err) == 2);
  }
}

TEST_CASE("format renderings agree numerically", "[cli]") {
  BoundQuery query;
  query.gamma = 1.1;
  std::ostringstream text_out, csv_out, json_out, err;
  // 17 significant digits round-trip doubles exactly.
  cmd_bound(query, fmt(OutputFormat::Kind::Text, 17), text_out, err);
  cmd_bound(query, fmt(OutputFormat::Kind::Csv, 17), csv_out, err);
  cmd_bound(query, fmt(OutputFormat::Kind::Json, 17), json_out, err);

  const auto doc = nlohmann::json::parse(json_out.str());
  const double bound = doc["rows"][0]["collision_bound"].get<double>();

  const std::string csv = csv_out.str();
  const std::string bound_str = format_double(bound, 17);
  CHECK(csv.find(bound_str) != std::string::npos);
  CHECK(text_out.str().find(bound_str) != std::string::npos);
}

TEST_CASE("csv uses the requested precision", "[cli]") {
  BoundQuery query;
  query.c = 0.8;
  std::ostringstream out3, out12, err;
  cmd_bound(query, fmt(OutputFormat::Kind::Csv, 3), out3, err);
  cmd_bound(query, fmt(OutputFormat::Kind::Csv, 12), out12, err);
  CHECK(out3.str().find("0.397") != std::string::npos);  // -2 ln(0.82)
  CHECK(out3.str().length() < out12.str().length());
}

// Integration checks against the installed binary; run only when ctest
// provides its location.
TEST_CASE("cli binary flags and exit codes", "[cli]") {
  const char* cli = std::getenv("QEUR_CLI");
  if (cli == nullptr) {
    WARN("QEUR_CLI not set; skipping binary integration checks");
    return;
  }
  const auto run = [&](const std::string& args) {
    const std::string command = std::string("'") + cli + "' " + args;
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
      output.append(buffer, n);
    }
    const int status = pclose(pipe);
    return std::make_pair(WIFEXITED(status) ? WEXITSTATUS(status) : -1,
                          output);
  };

  SECTION("--degrees converts inputs at the boundary only") {
    const auto deg = run("bound --gamma 90 --degrees --format csv 2>/dev/null");
    const auto rad =
        run("bound --gamma 1.5707963267948966 --format csv 2>/dev/null");
    CHECK(deg.first == 0);
    CHECK(deg.second == rad.second);
  }
  SECTION("usage errors exit 2, help exits 0") {
    CHECK(run("2>/dev/null").first == 2);
    CHECK(run("bound 2>/dev/null").first == 2);
    CHECK(run("bound --c 0.5 2>/dev/null").first == 2);
    CHECK(run("--help >/dev/null 2>&1").first == 0);
    CHECK(run("bound --gamma 1.0 --precision 99 2>/dev/null").first == 2);
    CHECK(run("verify --samples 0 2>/dev/null").first == 2);
  }
}
