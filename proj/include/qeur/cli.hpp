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

#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeur/bloch.hpp"
#include "qeur/entropy.hpp"
#include "qeur/oracle.hpp"
#include "qeur/relations.hpp"
#include "qeur/sampling.hpp"
#include "qeur/uncertainty.hpp"

namespace qeur::cli {

using ordered_json = nlohmann::ordered_json;

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct OutputFormat {
  enum class Kind { Text, Csv, Json };
  Kind kind = Kind::Text;
  int precision = 12;  // significant digits, valid range [3, 17]
};

inline const char* to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::AbsoluteMin:
      return "absolute_min";
    case CriticalKind::RelativeMin:
      return "relative_min";
    case CriticalKind::Maximum:
      return "maximum";
  }
  return "?";
}

inline const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::TwoSolutionsLowGamma:
      return "two_solutions_low_gamma";
    case Regime::FourSolutionsLowGamma:
      return "four_solutions_low_gamma";
    case Regime::Complementary:
      return "complementary";
    case Regime::FourSolutionsHighGamma:
      return "four_solutions_high_gamma";
    case Regime::TwoSolutionsHighGamma:
      return "two_solutions_high_gamma";
  }
  return "?";
}

/// Locale-independent significant-digit formatting.
inline std::string format_double(double value, int precision) {
  std::array<char, 64> buf{};
  const auto result =
      std::to_chars(buf.data(), buf.data() + buf.size(), value,
                    std::chars_format::general, precision);
  return std::string(buf.data(), result.ptr);
}

namespace detail {

inline std::string cell_text(const ordered_json& value, int precision) {
  if (value.is_number_float()) {
    return format_double(value.get<double>(), precision);
  }
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

inline void render_csv(const ordered_json& doc, int precision,
                       std::ostream& out) {
  const ordered_json& rows = doc.at("rows");
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << "\n";
  for (const ordered_json& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      out << (first ? "" : ",") << cell_text(value, precision);
      first = false;
    }
    out << "\n";
  }
}

inline void render_text(const ordered_json& doc, int precision,
                        std::ostream& out) {
  out << "== " << doc.at("command").get<std::string>() << "\n";
  if (doc.contains("inputs") && !doc.at("inputs").empty()) {
    for (const auto& [key, value] : doc.at("inputs").items()) {
      out << "  " << key << " = " << cell_text(value, precision) << "\n";
    }
  }
  const ordered_json& rows = doc.at("rows");
  if (!rows.empty()) {
    std::vector<std::string> headers;
    std::vector<std::size_t> widths;
    for (const auto& [key, value] : rows.front().items()) {
      (void)value;
      headers.push_back(key);
      widths.push_back(key.size());
    }
    std::vector<std::vector<std::string>> cells;
    for (const ordered_json& row : rows) {
      std::vector<std::string> line;
      std::size_t k = 0;
      for (const auto& [key, value] : row.items()) {
        (void)key;
        line.push_back(cell_text(value, precision));
        widths[k] = std::max(widths[k], line.back().size());
        ++k;
      }
      cells.push_back(std::move(line));
    }
    const auto pad = [&](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    out << "\n  ";
    for (std::size_t k = 0; k < headers.size(); ++k) {
      out << pad(headers[k], widths[k]) << (k + 1 < headers.size() ? "  " : "");
    }
    out << "\n";
    for (const auto& line : cells) {
      out << "  ";
      for (std::size_t k = 0; k < line.size(); ++k) {
        out << pad(line[k], widths[k]) << (k + 1 < line.size() ? "  " : "");
      }
      out << "\n";
    }
  }
  if (doc.contains("summary")) {
    out << "\n";
    for (const auto& [key, value] : doc.at("summary").items()) {
      out << "  " << key << " = " << cell_text(value, precision) << "\n";
    }
  }
  if (doc.contains("notes")) {
    for (const ordered_json& note : doc.at("notes")) {
      out << "  note: " << note.get<std::string>() << "\n";
    }
  }
}

inline void render(const ordered_json& doc, const OutputFormat& format,
                   std::ostream& out) {
  switch (format.kind) {
    case OutputFormat::Kind::Json: {
      ordered_json trimmed = doc;
      trimmed.erase("notes");
      out << trimmed.dump(2) << "\n";
      return;
    }
    case OutputFormat::Kind::Csv:
      render_csv(doc, format.precision, out);
      return;
    case OutputFormat::Kind::Text:
      render_text(doc, format.precision, out);
      return;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// bound

struct BoundQuery {
  std::optional<double> c;
  std::optional<double> gamma;
};

/// Reports the optimal collision bound plus the Maassen-Uffink, Shannon and
/// Luis values for context. Exactly one of overlap/angle must be given; when
/// the overlap is given, the reported angle is the gamma <= pi/2 branch.
inline int cmd_bound(const BoundQuery& query, const OutputFormat& format,
                     std::ostream& out, std::ostream& err) {
  if (query.c.has_value() == query.gamma.has_value()) {
    err << "error: provide exactly one of --c or --gamma\n";
    return kExitUsage;
  }
  try {
    double gamma, c;
    if (query.gamma) {
      gamma = *query.gamma;
      if (gamma <= kGammaTolerance || gamma >= kPi - kGammaTolerance) {
        throw std::domain_error("gamma must lie strictly inside (0, pi)");
      }
      c = gamma <= kPi / 2.0 ? std::cos(gamma / 2.0) : std::sin(gamma / 2.0);
    } else {
      c = *query.c;
      if (c < kMinOverlap - 1e-12 || c >= 1.0) {
        throw std::domain_error(
            "overlap must lie in [1/sqrt(2), 1) = [0.7071067811865476, 1)");
      }
      gamma = 2.0 * std::acos(c);
    }

    ordered_json doc;
    doc["command"] = "bound";
    doc["inputs"] = ordered_json::object();
    if (query.c) doc["inputs"]["c"] = *query.c;
    if (query.gamma) doc["inputs"]["gamma"] = *query.gamma;
    ordered_json row;
    row["c"] = c;
    row["gamma"] = gamma;
    row["collision_bound"] = analytic_bound(c);
    row["max_uncertainty"] = kMaxUncertainty;
    row["maassen_uffink_bound"] = overlap_bound(EntropyIndex::min_entropy(), c);
    row["shannon_f1"] = overlap_bound(EntropyIndex::shannon(), c);
    row["luis_bound_n2"] = luis_bound(2);
    doc["rows"] = ordered_json::array({row});
    doc["notes"] = ordered_json::array(
        {"luis_bound_n2 applies to complementary pairs (c = 1/sqrt(2)) only",
         "gamma derived from --c uses the gamma <= pi/2 branch"});
    detail::render(doc, format, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// minimize

struct MinimizeQuery {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
};

/// Prints the minimum-uncertainty states of the pair: Bloch components,
/// canonical angles, and the density-matrix entries of each state.
inline int cmd_minimize(const MinimizeQuery& query, const OutputFormat& format,
                        std::ostream& out, std::ostream& err) {
  try {
    const BlochVector a =
        BlochVector::normalized(query.a[0], query.a[1], query.a[2]);
    const BlochVector b =
        BlochVector::normalized(query.b[0], query.b[1], query.b[2]);
    const ObservablePair pair = ObservablePair::from_directions(a, b);
    const MinimizerSet set = minimizers(pair);

    ordered_json doc;
    doc["command"] = "minimize";
    doc["inputs"] = {{"a", query.a}, {"b", query.b}};
    doc["rows"] = ordered_json::array();
    for (const BlochVector& v : set.bloch_vectors) {
      const PureState state = PureState::from_bloch(v);
      const DensityMatrix rho = density_matrix(v);
      ordered_json row;
      row["gamma"] = pair.gamma();
      row["c"] = pair.overlap();
      row["bound"] = set.min_value;
      row["sx"] = v.x();
      row["sy"] = v.y();
      row["sz"] = v.z();
      row["theta"] = state.theta();
      row["phi"] = state.phi();
      row["rho00"] = rho.m[0][0].real();
      row["rho01_re"] = rho.m[0][1].real();
      row["rho01_im"] = rho.m[0][1].imag();
      row["rho11"] = rho.m[1][1].real();
      doc["rows"].push_back(row);
    }
    doc["summary"] = {{"gamma", pair.gamma()},
                      {"c", pair.overlap()},
                      {"bound", set.min_value},
                      {"minimizer_count", set.bloch_vectors.size()}};
    detail::render(doc, format, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// sweep

struct SweepQuery {
  double gamma_min = 0.0;
  double gamma_max = 0.0;
  int steps = 0;
};

/// Emits every stationary point for a grid of gamma values, one row per
/// (gamma, chi), ascending in gamma then chi. The closed-form branches
/// chi = gamma/2 and chi = gamma/2 + pi/2 appear at every gamma.
inline int cmd_sweep(const SweepQuery& query, const OutputFormat& format,
                     std::ostream& out, std::ostream& err) {
  if (!(query.steps >= 2) || !(query.gamma_min > 0.0) ||
      !(query.gamma_min < query.gamma_max) || !(query.gamma_max < kPi)) {
    err << "error: sweep requires 0 < min < max < pi and steps >= 2\n";
    return kExitUsage;
  }
  try {
    ordered_json doc;
    doc["command"] = "sweep";
    doc["inputs"] = {{"gamma_min", query.gamma_min},
                     {"gamma_max", query.gamma_max},
                     {"steps", query.steps}};
    doc["rows"] = ordered_json::array();
    for (int k = 0; k < query.steps; ++k) {
      const double gamma =
          query.gamma_min + (query.gamma_max - query.gamma_min) *
                                (static_cast<double>(k) / (query.steps - 1));
      const CriticalPointReport report = critical_points(gamma);
      for (const CriticalPoint& point : report.points) {
        ordered_json row;
        row["gamma"] = gamma;
        row["chi"] = point.chi;
        row["value"] = point.value;
        row["kind"] = to_string(point.kind);
        row["regime"] = to_string(report.regime);
        doc["rows"].push_back(row);
      }
    }
    detail::render(doc, format, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// compare

struct CompareQuery {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  double theta = 0.0;
  double phi = 0.0;
  double alpha2 = 1.0;
  double beta2 = 1.0;
  std::optional<double> q;
  std::optional<double> q_prime;
};

/// Evaluates every comparison relation at one (pair, state): the
/// Heisenberg-Robertson product (with the given scales), Landau-Pollak,
/// Maassen-Uffink, the collision relation, and optionally a generalized
/// Renyi pair for user-chosen indices in (0, 2].
inline int cmd_compare(const CompareQuery& query, const OutputFormat& format,
                       std::ostream& out, std::ostream& err) {
  if (query.q.has_value() != query.q_prime.has_value()) {
    err << "error: --q and --qprime must be given together\n";
    return kExitUsage;
  }
  try {
    const BlochVector a =
        BlochVector::normalized(query.a[0], query.a[1], query.a[2]);
    const BlochVector b =
        BlochVector::normalized(query.b[0], query.b[1], query.b[2]);
    const ObservablePair pair(Observable(0.0, query.alpha2, a),
                              Observable(0.0, query.beta2, b));
    const PureState state(query.theta, query.phi);

    const EntropyIndex collision = EntropyIndex::finite(2.0);
    std::vector<std::pair<std::string, RelationReport>> reports;
    reports.emplace_back("heisenberg_robertson",
                         heisenberg_robertson(pair, state));
    reports.emplace_back("landau_pollak", landau_pollak(pair, state));
    reports.emplace_back("maassen_uffink", maassen_uffink(pair, state));
    reports.emplace_back("collision_eur",
                         renyi_pair_bound(collision, collision, pair, state));
    if (query.q) {
      reports.emplace_back(
          "renyi_pair",
          renyi_pair_bound(EntropyIndex::finite(*query.q),
                           EntropyIndex::finite(*query.q_prime), pair, state));
    }

    ordered_json doc;
    doc["command"] = "compare";
    doc["inputs"] = {{"a", query.a},       {"b", query.b},
                     {"theta", query.theta}, {"phi", query.phi},
                     {"alpha2", query.alpha2}, {"beta2", query.beta2}};
    if (query.q) {
      doc["inputs"]["q"] = *query.q;
      doc["inputs"]["qprime"] = *query.q_prime;
    }
    doc["rows"] = ordered_json::array();
    for (const auto& [label, report] : reports) {
      ordered_json row;
      row["relation"] = label;
      row["lhs"] = report.lhs;
      row["rhs"] = report.rhs;
      row["satisfied"] = report.satisfied;
      row["saturated"] = report.saturated;
      doc["rows"].push_back(row);
    }
    detail::render(doc, format, out);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyQuery {
  int samples = 50;
  std::uint64_t seed = 1;
  GridSpec grid{};
};

/// Draws seeded random pairs and states, then checks the brute-force minimum
/// against the closed-form bound and every relation against its guarantee.
/// Exit 0 only when nothing is violated. Output is byte-identical across
/// runs with the same arguments.
inline int cmd_verify(const VerifyQuery& query, const OutputFormat& format,
                      std::ostream& out, std::ostream& err) {
  if (query.samples < 1) {
    err << "error: --samples must be at least 1\n";
    return kExitUsage;
  }
  try {
    SampleStream stream(query.seed);
    const EntropyIndex collision = EntropyIndex::finite(2.0);

    ordered_json doc;
    doc["command"] = "verify";
    doc["inputs"] = {{"samples", query.samples},
                     {"seed", query.seed},
                     {"grid_theta", query.grid.n_theta},
                     {"grid_phi", query.grid.n_phi}};
    doc["rows"] = ordered_json::array();

    int violations = 0;
    double max_abs_gap = 0.0;
    for (int k = 0; k < query.samples; ++k) {
      const ObservablePair pair = stream.pair();
      const PureState state = stream.state();
      const BoundCheck check = verify_bound(pair, query.grid);
      max_abs_gap = std::max(max_abs_gap, std::abs(check.gap));

      const double uncertainty = collision_uncertainty(pair, state);
      const bool sandwich_ok = uncertainty >= check.analytic - 1e-12 &&
                               uncertainty <= kMaxUncertainty + 1e-12;
      const bool relations_ok =
          heisenberg_robertson(pair, state).satisfied &&
          landau_pollak(pair, state).satisfied &&
          maassen_uffink(pair, state).satisfied &&
          renyi_pair_bound(collision, collision, pair, state).satisfied;
      const bool gap_ok = std::abs(check.gap) <= 1e-7;
      const bool ok = sandwich_ok && relations_ok && gap_ok;
      if (!ok) ++violations;

      ordered_json row;
      row["sample"] = k;
      row["gamma"] = pair.gamma();
      row["c"] = pair.overlap();
      row["analytic"] = check.analytic;
      row["oracle"] = check.oracle;
      row["gap"] = check.gap;
      row["uncertainty"] = uncertainty;
      row["ok"] = ok;
      doc["rows"].push_back(row);
    }
    doc["summary"] = {{"samples", query.samples},
                      {"max_abs_gap", max_abs_gap},
                      {"violations", violations}};
    detail::render(doc, format, out);
    return violations == 0 ? kExitOk : kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qeur::cli
