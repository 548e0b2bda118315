// Copyright 2026 The kronwalk Authors
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

#include "kronwalk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kronwalk/analysis.hpp"
#include "kronwalk/errors.hpp"
#include "kronwalk/graph.hpp"
#include "kronwalk/kronecker_index.hpp"
#include "kronwalk/oracle.hpp"
#include "kronwalk/search.hpp"
#include "kronwalk/spectral.hpp"

namespace kronwalk::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signals a completed run whose result failed a check (exit code 4).
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string initiator;
  std::optional<std::size_t> order;
  std::optional<std::size_t> part_size;
  std::string edges_path;
  std::optional<double> shift_alpha;
  std::optional<double> shift_beta;
  std::size_t j = 1;
  std::optional<std::uint64_t> marked;
  std::string gamma = "auto-exact";
  std::string format;
  std::string output;
  std::optional<double> t_max;
  std::optional<double> dt;
  std::string shift = "none";
  std::size_t j_min = 1;
  std::size_t j_max = 1;
  double window = 2.0;
};

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--initiator", cfg.initiator, "complete | cycle | path | knn | paley | edges")
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "path", "knn", "paley", "edges"}));
  cmd.add_option("--M", cfg.order, "Initiator order (complete, cycle, path, paley)");
  cmd.add_option("--n", cfg.part_size, "Part size of K_{n,n} (knn)");
  cmd.add_option("--edges", cfg.edges_path, "Edge-list file (edges)");
  cmd.add_option("--alpha", cfg.shift_alpha, "Self-loop shift applied to the initiator");
  cmd.add_option("--beta", cfg.shift_beta, "Rescale divisor applied to the initiator");
  cmd.add_option("--output,-o", cfg.output, "Write result to this path instead of stdout");
}

void add_search_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--j", cfg.j, "Kronecker power")->check(CLI::PositiveNumber);
  cmd.add_option("--marked", cfg.marked, "Flat index of the marked vertex (default 0)");
  cmd.add_option("--gamma", cfg.gamma, "auto-exact | auto-asymptotic | <value>");
}

InitiatorGraph build_initiator(const RunConfig& cfg) {
  const auto need_order = [&]() -> std::size_t {
    if (!cfg.order) throw UsageError("--initiator " + cfg.initiator + " requires --M");
    return *cfg.order;
  };
  if (cfg.initiator != "knn" && cfg.part_size) throw UsageError("--n only applies to --initiator knn");
  if (cfg.initiator != "edges" && !cfg.edges_path.empty())
    throw UsageError("--edges only applies to --initiator edges");

  std::optional<InitiatorGraph> g;
  if (cfg.initiator == "complete") {
    g = complete_graph(need_order());
  } else if (cfg.initiator == "cycle") {
    g = cycle_graph(need_order());
  } else if (cfg.initiator == "path") {
    g = path_graph(need_order());
  } else if (cfg.initiator == "paley") {
    g = paley_graph(need_order());
  } else if (cfg.initiator == "knn") {
    if (cfg.order) throw UsageError("--initiator knn takes --n, not --M");
    if (!cfg.part_size) throw UsageError("--initiator knn requires --n");
    g = complete_bipartite_graph(*cfg.part_size);
  } else {
    if (cfg.order) throw UsageError("--initiator edges takes its order from the file");
    if (cfg.edges_path.empty()) throw UsageError("--initiator edges requires --edges");
    std::ifstream in(cfg.edges_path);
    if (!in) throw FormatError("cannot open edge list '" + cfg.edges_path + "'");
    g = from_edge_list(in, cfg.edges_path);
  }
  if (cfg.shift_alpha || cfg.shift_beta)
    g = shift_initiator(*g, cfg.shift_alpha.value_or(0.0), cfg.shift_beta.value_or(1.0));
  return *g;
}

// Built-in families whose automorphism group acts transitively on vertices.
bool vertex_transitive_kind(const RunConfig& cfg) {
  if (cfg.initiator == "complete" || cfg.initiator == "cycle" || cfg.initiator == "knn" ||
      cfg.initiator == "paley")
    return true;
  return cfg.initiator == "path" && cfg.order == 2u;
}

GammaSelection parse_gamma(const std::string& text) {
  if (text == "auto-exact") return {GammaPolicy::kAutoExact, 0.0};
  if (text == "auto-asymptotic") return {GammaPolicy::kAutoAsymptotic, 0.0};
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value > 0.0) || !std::isfinite(value))
    throw UsageError("--gamma must be auto-exact, auto-asymptotic or a positive number");
  return {GammaPolicy::kExplicit, value};
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  if (f != "csv" && f != "json") throw UsageError("--format must be csv or json");
  return f;
}

struct Problem {
  InitiatorGraph graph;
  InitiatorSpectrum spectrum;
  KroneckerSpectrum kronecker;
};

Problem build_problem(const RunConfig& cfg) {
  InitiatorGraph g = build_initiator(cfg);
  InitiatorSpectrum s = eigendecompose(g);
  const std::uint64_t n = checked_power(g.order(), cfg.j);
  const std::uint64_t marked = cfg.marked.value_or(0);
  if (marked >= n)
    throw RangeError("--marked " + std::to_string(marked) + " is outside [0, " + std::to_string(n) + ")");
  KroneckerSpectrum ks = kronecker_spectrum(s, cfg.j, index_decompose(marked, g.order(), cfg.j));
  return {std::move(g), std::move(s), std::move(ks)};
}

Json real_or_null(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string cmd_spectrum(const RunConfig& cfg) {
  const Problem pr = build_problem(cfg);
  const InitiatorSpectrum& s = pr.spectrum;
  const KroneckerSpectrum& ks = pr.kronecker;

  if (resolve_format(cfg, "json") == "csv") {
    std::string text = "value,normalized,multiplicity,p,a\n";
    for (const auto& e : ks.entries)
      text += format_real(e.value) + "," + format_real(e.normalized) + "," +
              std::to_string(e.multiplicity) + "," + format_real(e.p) + "," + format_real(e.a) + "\n";
    return text;
  }

  Json classes = Json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"value", c.value},
                       {"normalized", c.value / s.principal_value},
                       {"multiplicity", c.multiplicity}});
  Json entries = Json::array();
  for (const auto& e : ks.entries)
    entries.push_back({{"value", e.value},
                       {"normalized", e.normalized},
                       {"multiplicity", e.multiplicity},
                       {"p", e.p},
                       {"a", e.a}});
  Json doc;
  doc["initiator"] = {{"label", pr.graph.label()},
                      {"order", s.order},
                      {"principal", s.principal_value},
                      {"principal_unique", s.principal_unique},
                      {"regular", s.regular},
                      {"c_A", real_or_null(s.dominance)},
                      {"normalized_algebraic_connectivity", real_or_null(s.normalized_connectivity)},
                      {"classes", classes}};
  doc["kronecker"] = {{"j", ks.j},
                      {"N", ks.n},
                      {"marked", index_compose(ks.marked)},
                      {"marked_digits", ks.marked.digits},
                      {"principal", ks.principal},
                      {"coupled_dimension", ks.coupled_dimension()},
                      {"unreachable_weight", ks.unreachable_weight()},
                      {"max_merge_gap", ks.max_merge_gap},
                      {"entries", entries}};
  return doc.dump(2) + "\n";
}

std::string cmd_params(const RunConfig& cfg) {
  if (cfg.shift != "none" && cfg.shift != "optimal") throw UsageError("--shift must be none or optimal");
  const Problem pr = build_problem(cfg);
  const SearchParams params =
      search_params(pr.spectrum, pr.kronecker, parse_gamma(cfg.gamma), cfg.shift == "optimal");
  const double c = pr.kronecker.non_principal_bound();

  std::vector<std::pair<std::string, Json>> fields = {
      {"gamma_policy", cfg.gamma},
      {"N", pr.kronecker.n},
      {"principal", pr.kronecker.principal},
      {"gamma", params.gamma},
      {"r", params.r},
      {"c", params.c},
      {"r_lower", -c / (1.0 + c)},
      {"r_upper", c < 1.0 ? Json(c / (1.0 - c)) : Json(nullptr)},
      {"t_star", params.t_star},
      {"p_lower_bound", params.p_lower_bound},
      {"epsilon", params.epsilon},
      {"unreachable_weight", pr.kronecker.unreachable_weight()},
  };
  if (params.shift) {
    fields.emplace_back("shift_a", params.shift->a);
    fields.emplace_back("shift_b", params.shift->b);
    fields.emplace_back("c_min", params.shift->c_min);
    fields.emplace_back("shifted_lambda2", params.shift->shifted_lambda2);
    fields.emplace_back("shifted_lambdaN", params.shift->shifted_lambdaN);
  }

  if (resolve_format(cfg, "json") == "csv") {
    std::string text = "key,value\n";
    for (const auto& [key, value] : fields) {
      std::string rendered = value.is_number_float() ? format_real(value.get<double>())
                             : value.is_string()     ? value.get<std::string>()
                                                     : value.dump();
      text += key + "," + rendered + "\n";
    }
    return text;
  }
  Json doc = Json::object();
  for (const auto& [key, value] : fields) doc[key] = value;
  return doc.dump(2) + "\n";
}

std::string cmd_evolve(const RunConfig& cfg) {
  if (!cfg.marked && !vertex_transitive_kind(cfg))
    throw UsageError("--marked is required for initiators that are not vertex-transitive");
  const Problem pr = build_problem(cfg);
  const double gamma = select_gamma(pr.spectrum, pr.kronecker, parse_gamma(cfg.gamma));
  const double t_max =
      cfg.t_max.value_or(std::numbers::pi * std::sqrt(static_cast<double>(pr.kronecker.n)));
  const double dt = cfg.dt.value_or(t_max / 2000.0);
  const std::vector<double> times = uniform_time_grid(t_max, dt);
  const EvolutionSeries series = evolve_reduced(pr.kronecker, gamma, times);

  if (resolve_format(cfg, "csv") == "json") {
    Json doc = {{"gamma", series.gamma},
                {"N", series.n},
                {"times", series.times},
                {"probabilities", series.probabilities}};
    return doc.dump(2) + "\n";
  }
  std::string text = "t,probability\n";
  for (std::size_t i = 0; i < times.size(); ++i)
    text += format_real(series.times[i]) + "," + format_real(series.probabilities[i]) + "\n";
  return text;
}

std::string cmd_scaling(const RunConfig& cfg) {
  const InitiatorGraph g = build_initiator(cfg);
  ScalingOptions options;
  options.marked = cfg.marked.value_or(0);
  options.window_factor = cfg.window;
  const std::vector<ScalingRow> rows =
      scaling_table(g, cfg.j_min, cfg.j_max, parse_gamma(cfg.gamma), options);

  if (resolve_format(cfg, "csv") == "json") {
    Json doc = Json::array();
    for (const auto& r : rows)
      doc.push_back({{"j", r.j},
                     {"N", r.n},
                     {"gamma", r.gamma},
                     {"t_peak", r.t_peak},
                     {"p_peak", r.p_peak},
                     {"t_star", r.t_star},
                     {"p_at_pi_sqrtN_over_2", r.p_at_half_pi_sqrt_n},
                     {"total", r.total},
                     {"peak_found", r.peak_found}});
    return doc.dump(2) + "\n";
  }
  std::string text = "j,N,gamma,t_peak,p_peak,t_star,p_at_pi_sqrtN_over_2,total\n";
  for (const auto& r : rows)
    text += std::to_string(r.j) + "," + std::to_string(r.n) + "," + format_real(r.gamma) + "," +
            format_real(r.t_peak) + "," + format_real(r.p_peak) + "," + format_real(r.t_star) + "," +
            format_real(r.p_at_half_pi_sqrt_n) + "," + format_real(r.total) + "\n";
  return text;
}

std::string cmd_validate(const RunConfig& cfg, bool& passed) {
  const Problem pr = build_problem(cfg);
  const double gamma = select_gamma(pr.spectrum, pr.kronecker, parse_gamma(cfg.gamma));
  const double t_max =
      cfg.t_max.value_or(2.0 * std::numbers::pi * std::sqrt(static_cast<double>(pr.kronecker.n)));
  const double dt = cfg.dt.value_or(t_max / 2000.0);
  const std::uint64_t marked = cfg.marked.value_or(0);
  const double diff = oracle::cross_validate(pr.graph, cfg.j, gamma, t_max, dt, marked);
  passed = diff <= kValidationThreshold;

  const std::size_t samples = uniform_time_grid(t_max, dt).size();
  if (resolve_format(cfg, "json") == "csv") {
    return "initiator,j,N,gamma,t_max,dt,samples,max_abs_diff,pass\n" + pr.graph.label() + "," +
           std::to_string(cfg.j) + "," + std::to_string(pr.kronecker.n) + "," + format_real(gamma) +
           "," + format_real(t_max) + "," + format_real(dt) + "," + std::to_string(samples) + "," +
           format_real(diff) + "," + (passed ? "true" : "false") + "\n";
  }
  Json doc = {{"initiator", pr.graph.label()},
              {"j", cfg.j},
              {"N", pr.kronecker.n},
              {"marked", marked},
              {"gamma", gamma},
              {"t_max", t_max},
              {"dt", dt},
              {"samples", samples},
              {"max_abs_diff", diff},
              {"threshold", kValidationThreshold},
              {"pass", passed}};
  return doc.dump(2) + "\n";
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path staging = target;
  staging += ".partial";
  {
    std::ofstream file(staging, std::ios::binary | std::ios::trunc);
    if (!file) throw FormatError("cannot write '" + staging.string() + "'");
    file << text;
    if (!file.flush()) throw FormatError("failed writing '" + staging.string() + "'");
  }
  fs::rename(staging, target);
}

}  // namespace

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Continuous-time quantum walk search on Kronecker graphs", "kronwalk"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Initiator and Kronecker-power spectra with overlaps");
  add_common_options(*spectrum, cfg);
  add_search_options(*spectrum, cfg);
  spectrum->add_option("--format", cfg.format, "json (default) | csv");

  auto* params = app.add_subcommand("params", "Critical jumping rate, runtime and bounds");
  add_common_options(*params, cfg);
  add_search_options(*params, cfg);
  params->add_option("--shift", cfg.shift, "none | optimal");
  params->add_option("--format", cfg.format, "json (default) | csv");

  auto* evolve = app.add_subcommand("evolve", "Success probability series p(t)");
  add_common_options(*evolve, cfg);
  add_search_options(*evolve, cfg);
  evolve->add_option("--t-max", cfg.t_max, "End of the time grid (default pi sqrt(N))");
  evolve->add_option("--dt", cfg.dt, "Grid step (default t_max / 2000)");
  evolve->add_option("--format", cfg.format, "csv (default) | json");

  auto* scaling = app.add_subcommand("scaling", "Peak and runtime table over a range of powers");
  add_common_options(*scaling, cfg);
  scaling->add_option("--j-min", cfg.j_min, "First power")->required()->check(CLI::PositiveNumber);
  scaling->add_option("--j-max", cfg.j_max, "Last power")->required()->check(CLI::PositiveNumber);
  scaling->add_option("--marked", cfg.marked, "Flat index of the marked vertex (default 0)");
  scaling->add_option("--gamma", cfg.gamma, "auto-exact | auto-asymptotic | <value>");
  scaling->add_option("--window", cfg.window, "Peak window in units of pi sqrt(N) / 2")
      ->check(CLI::PositiveNumber);
  scaling->add_option("--format", cfg.format, "csv (default) | json");

  auto* validate = app.add_subcommand("validate", "Compare the reduced engine with dense evolution");
  add_common_options(*validate, cfg);
  add_search_options(*validate, cfg);
  validate->add_option("--t-max", cfg.t_max, "End of the time grid (default 2 pi sqrt(N))");
  validate->add_option("--dt", cfg.dt, "Grid step (default t_max / 2000)");
  validate->add_option("--format", cfg.format, "json (default) | csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    std::string text;
    bool passed = true;
    if (*spectrum) {
      text = cmd_spectrum(cfg);
    } else if (*params) {
      text = cmd_params(cfg);
    } else if (*evolve) {
      text = cmd_evolve(cfg);
    } else if (*scaling) {
      if (cfg.j_max < cfg.j_min) throw UsageError("--j-max must be >= --j-min");
      text = cmd_scaling(cfg);
    } else {
      text = cmd_validate(cfg, passed);
    }

    if (cfg.output.empty()) {
      out << text;
      out.flush();
    } else {
      write_atomically(cfg.output, text);
    }
    if (!passed) {
      err << "kronwalk: validation failed, difference exceeds " << format_real(kValidationThreshold)
          << "\n";
      return kExitNumeric;
    }
    return kExitSuccess;
  } catch (const UsageError& e) {
    err << "kronwalk: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "kronwalk: numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const ResourceError& e) {
    err << "kronwalk: resource error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "kronwalk: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "kronwalk: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace kronwalk::cli
