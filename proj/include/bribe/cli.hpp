// Copyright 2026 The Bribelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Batch workflows behind the `bribelab` tool: solve, verify, compare,
// simulate and sweep, driven by a YAML configuration file with dotted
// `key=value` overrides.

#ifndef BRIBE_CLI_HPP_
#define BRIBE_CLI_HPP_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "bribe/baseline_es.hpp"
#include "bribe/distribution.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/io.hpp"
#include "bribe/simulation.hpp"
#include "bribe/verification.hpp"

namespace bribe::cli {

namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum ExitCode { kPass = 0, kWitness = 1, kError = 2 };

struct VerifyConfig {
  bool ic = true, d1 = true, prop4 = true;
  std::size_t ic_types = 200, ic_mimics = 400;
  double tolerance = 1e-8;
  double corrupt_bribe_scale = 1.0;
  std::size_t d1_b = 50, d1_r = 50, d1_cutoffs = 64, d1_types = 257;
  std::optional<double> d1_b_max, d1_r_max;
  bool d1_fact_rows = true;
  double prop4_gamma_scale = 0.8;
  double prop4_never_accepted_offset = 0.1;
  std::size_t prop4_types = 512;
  double prop4_tolerance = 1e-9;
};

struct SimulateConfig {
  std::uint64_t n = 100000;
  bool collusion = true;
  bool per_draw_csv = false;
};

struct SweepConfig {
  std::string parameter = "reserve";
  std::vector<std::string> values;
};

struct GameConfig {
  YAML::Node raw;  // effective configuration after overrides
  fs::path base_dir = ".";
  DistributionSpec dist1, dist2;
  double reserve = 0.0;
  bool trivial = false;
  SolveOptions solve;
  VerifyConfig verify;
  std::size_t compare_types = 512;
  SimulateConfig simulate;
  SweepConfig sweep;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  fs::path out = "out";
};

struct RunReport {
  std::string command;
  std::string inputs_digest;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::string> artifacts;  // relative to the output directory
  std::vector<std::string> notes;
  int exit_code = kPass;

  bool all_pass() const {
    for (const auto& f : flags)
      if (!f.second) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Configuration.

namespace detail {

inline std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (const auto& p : parts)
    if (p.empty()) throw ConfigError("malformed key '" + key + "'");
  return parts;
}

inline YAML::Node with_value(const YAML::Node& node,
                             const std::vector<std::string>& parts,
                             std::size_t i, const YAML::Node& value) {
  YAML::Node out = node && node.IsMap() ? YAML::Clone(node)
                                        : YAML::Node(YAML::NodeType::Map);
  if (i + 1 == parts.size()) {
    out[parts[i]] = value;
  } else {
    const YAML::Node& view = out;
    const YAML::Node child = view[parts[i]];
    out[parts[i]] = with_value(child, parts, i + 1, value);
  }
  return out;
}

template <class T>
T scalar(const YAML::Node& n, const std::string& where) {
  try {
    return n.as<T>();
  } catch (const YAML::Exception& e) {
    throw ConfigError("bad value for '" + where + "': " + e.what());
  }
}

template <class T>
T get(const YAML::Node& map, const std::string& key, T fallback,
      const std::string& prefix = "") {
  if (!map || !map.IsMap()) return fallback;
  const YAML::Node n = map[key];
  if (!n || n.IsNull()) return fallback;
  return scalar<T>(n, prefix + key);
}

inline std::vector<double> get_list(const YAML::Node& map, const std::string& key,
                                    const std::string& where) {
  const YAML::Node n = map[key];
  if (!n) return {};
  if (!n.IsSequence()) throw ConfigError("'" + where + "' must be a list");
  std::vector<double> v;
  for (const auto& e : n) v.push_back(scalar<double>(e, where));
  return v;
}

inline DistributionSpec parse_distribution(const YAML::Node& n,
                                           const std::string& name,
                                           const fs::path& base) {
  if (!n || !n.IsMap()) throw ConfigError("missing distribution '" + name + "'");
  DistributionSpec s;
  try {
    s.family = parse_family(get<std::string>(n, "family", "uniform", name + "."));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(name + ".family: " + e.what());
  }
  s.lo = get<double>(n, "lo", 0.0, name + ".");
  s.hi = get<double>(n, "hi", 1.0, name + ".");
  switch (s.family) {
    case Family::uniform: break;
    case Family::power:
      s.exponent = get<double>(n, "exponent", get<double>(n, "k", 1.0), name + ".");
      break;
    case Family::piecewise_linear_density:
      s = DistributionSpec::piecewise_linear(get_list(n, "knots", name + ".knots"),
                                             get_list(n, "density", name + ".density"));
      break;
    case Family::table: {
      const auto file = get<std::string>(n, "file", "", name + ".");
      if (!file.empty()) {
        fs::path p = file;
        if (p.is_relative()) p = base / p;
        if (!fs::exists(p)) throw ConfigError(name + ".file: no such file " + p.string());
        try {
          s = load_table_csv(p.string());
        } catch (const std::invalid_argument& e) {
          throw ConfigError(e.what());
        }
      } else {
        s = DistributionSpec::table(get_list(n, "x", name + ".x"),
                                    get_list(n, "cdf", name + ".cdf"));
      }
      break;
    }
  }
  try {
    (void)make_distribution(s);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(name + ": " + e.what());
  }
  return s;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

template <class T>
void require_positive(T x, const std::string& what) {
  if (!(x > T(0))) throw ConfigError(what + " must be positive");
}

}  // namespace detail

// Applies one `dotted.key=value` override; the value is parsed as YAML.
inline YAML::Node apply_override(const YAML::Node& root, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("override must look like key=value, got '" + kv + "'");
  YAML::Node value;
  try {
    value = YAML::Load(kv.substr(eq + 1));
  } catch (const YAML::Exception& e) {
    throw ConfigError("cannot parse override value in '" + kv + "': " + e.what());
  }
  return detail::with_value(root, detail::split_key(kv.substr(0, eq)), 0, value);
}

inline GameConfig parse_config(const YAML::Node& root, const fs::path& base_dir = ".") {
  using detail::get;
  if (!root || !root.IsMap()) throw ConfigError("configuration must be a mapping");
  GameConfig c;
  c.raw = YAML::Clone(root);
  c.base_dir = base_dir;
  c.dist1 = detail::parse_distribution(root["dist1"], "dist1", base_dir);
  c.dist2 = detail::parse_distribution(root["dist2"], "dist2", base_dir);
  c.reserve = get<double>(root, "reserve", 0.0);
  c.trivial = get<bool>(root, "trivial", false);

  const YAML::Node sv = root["solver"];
  c.solve.step.atol = get<double>(sv, "atol", c.solve.step.atol, "solver.");
  c.solve.step.rtol = get<double>(sv, "rtol", c.solve.step.rtol, "solver.");
  c.solve.step.max_step = get<double>(sv, "max_step", 0.0, "solver.");
  c.solve.export_nodes = get<std::size_t>(sv, "export_nodes", c.solve.export_nodes, "solver.");
  c.solve.seed_offset = get<double>(sv, "seed_offset", c.solve.seed_offset, "solver.");
  c.solve.allow_trivial = c.trivial;
  if (get<bool>(sv, "refined", false, "solver.")) c.solve.step = c.solve.step.refined();
  detail::require_positive(c.solve.step.atol, "solver.atol");
  detail::require_positive(c.solve.step.rtol, "solver.rtol");
  detail::require_positive(c.solve.seed_offset, "solver.seed_offset");
  if (c.solve.export_nodes < 2) throw ConfigError("solver.export_nodes must be >= 2");

  const YAML::Node vf = root["verify"];
  auto& v = c.verify;
  v.ic = get<bool>(vf, "ic", v.ic, "verify.");
  v.d1 = get<bool>(vf, "d1", v.d1, "verify.");
  v.prop4 = get<bool>(vf, "prop4", v.prop4, "verify.");
  v.ic_types = get<std::size_t>(vf, "ic_types", v.ic_types, "verify.");
  v.ic_mimics = get<std::size_t>(vf, "ic_mimics", v.ic_mimics, "verify.");
  v.tolerance = get<double>(vf, "tolerance", v.tolerance, "verify.");
  v.corrupt_bribe_scale = get<double>(vf, "corrupt_bribe_scale", v.corrupt_bribe_scale, "verify.");
  v.d1_b = get<std::size_t>(vf, "d1_b", v.d1_b, "verify.");
  v.d1_r = get<std::size_t>(vf, "d1_r", v.d1_r, "verify.");
  v.d1_cutoffs = get<std::size_t>(vf, "d1_cutoffs", v.d1_cutoffs, "verify.");
  v.d1_types = get<std::size_t>(vf, "d1_types", v.d1_types, "verify.");
  if (vf && vf["d1_b_max"]) v.d1_b_max = get<double>(vf, "d1_b_max", 0.0, "verify.");
  if (vf && vf["d1_r_max"]) v.d1_r_max = get<double>(vf, "d1_r_max", 0.0, "verify.");
  v.d1_fact_rows = get<bool>(vf, "d1_fact_rows", v.d1_fact_rows, "verify.");
  v.prop4_gamma_scale = get<double>(vf, "prop4_gamma_scale", v.prop4_gamma_scale, "verify.");
  v.prop4_never_accepted_offset =
      get<double>(vf, "prop4_never_accepted_offset", v.prop4_never_accepted_offset, "verify.");
  v.prop4_types = get<std::size_t>(vf, "prop4_types", v.prop4_types, "verify.");
  v.prop4_tolerance = get<double>(vf, "prop4_tolerance", v.prop4_tolerance, "verify.");
  detail::require_positive(v.tolerance, "verify.tolerance");
  detail::require_positive(v.prop4_tolerance, "verify.prop4_tolerance");
  if (v.ic_types < 2 || v.ic_mimics < 2 || v.d1_cutoffs < 2 || v.d1_types < 3 ||
      v.prop4_types < 2 || v.d1_b < 1 || v.d1_r < 1)
    throw ConfigError("verify grid sizes are too small");

  c.compare_types = get<std::size_t>(root["compare"], "types", c.compare_types, "compare.");
  if (c.compare_types < 2) throw ConfigError("compare.types must be >= 2");

  const YAML::Node sm = root["simulate"];
  c.simulate.n = get<std::uint64_t>(sm, "n", c.simulate.n, "simulate.");
  c.simulate.collusion = get<bool>(sm, "collusion", c.simulate.collusion, "simulate.");
  c.simulate.per_draw_csv = get<bool>(sm, "per_draw_csv", c.simulate.per_draw_csv, "simulate.");
  if (c.simulate.n == 0) throw ConfigError("simulate.n must be >= 1");

  const YAML::Node sw = root["sweep"];
  c.sweep.parameter = get<std::string>(sw, "parameter", c.sweep.parameter, "sweep.");
  if (sw && sw["values"]) {
    if (!sw["values"].IsSequence()) throw ConfigError("sweep.values must be a list");
    for (const auto& e : sw["values"]) c.sweep.values.push_back(detail::scalar<std::string>(e, "sweep.values"));
  }

  c.seed = get<std::uint64_t>(root, "seed", c.seed);
  c.threads = get<unsigned>(root, "threads", c.threads);
  c.out = get<std::string>(root, "out", c.out.string());

  const auto d1 = make_distribution(c.dist1);
  const auto d2 = make_distribution(c.dist2);
  if (!(c.reserve >= 0.0)) throw ConfigError("reserve must be >= 0");
  if (c.reserve > 0.0 && !(c.reserve < std::min(d1.hi(), d2.hi())))
    throw ConfigError("reserve must lie below both supports' upper ends");
  if (!c.trivial && !(d1.lo() < d2.hi()))
    throw ConfigError("lo1 >= hi2 needs `trivial: true`");
  return c;
}

inline GameConfig load_config(const std::string& path,
                              const std::vector<std::string>& overrides = {}) {
  YAML::Node root;
  fs::path base = ".";
  if (!path.empty()) {
    if (!fs::exists(path)) throw ConfigError("config file not found: " + path);
    try {
      root = YAML::LoadFile(path);
    } catch (const YAML::Exception& e) {
      throw ConfigError("cannot parse " + path + ": " + e.what());
    }
    base = fs::path(path).parent_path();
    if (base.empty()) base = ".";
  } else {
    root = YAML::Node(YAML::NodeType::Map);
  }
  if (!root.IsMap()) root = YAML::Node(YAML::NodeType::Map);
  for (const auto& kv : overrides) root = apply_override(root, kv);
  return parse_config(root, base);
}

// FNV-1a of the effective configuration, excluding keys that cannot change
// results (`threads`, `out`).
inline std::string inputs_digest(const GameConfig& c) {
  YAML::Node n = YAML::Clone(c.raw);
  n.remove("threads");
  n.remove("out");
  n["seed"] = c.seed;
  YAML::Emitter em;
  em << n;
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(detail::fnv1a(em.c_str())));
  return buf;
}

// ---------------------------------------------------------------------------
// Commands.

namespace detail {

inline BribeSchedule solve_config(const GameConfig& c, const Distribution& d1,
                                  const Distribution& d2) {
  if (c.reserve > 0.0) return solve_with_reserve(d1, d2, c.reserve, c.solve);
  return solve_bribing_schedule(d2, d1.lo(), d1.hi(), c.solve);
}

inline void emit(const GameConfig& c, RunReport& rep, const std::string& name,
                 const std::string& text) {
  write_file(c.out / name, text);
  rep.artifacts.push_back(name);
}

inline void status_line(const std::string& name, bool ok, double max_violation,
                        double tol) {
  std::printf("%s: %s max_violation=%s tolerance=%s\n", name.c_str(),
              ok ? "PASS" : "FAIL", fmt17(max_violation).c_str(),
              fmt17(tol).c_str());
}

}  // namespace detail

inline void write_report(const GameConfig& c, RunReport& rep) {
  rep.artifacts.push_back("report.json");
  Json j;
  j["command"] = rep.command;
  j["inputs_digest"] = rep.inputs_digest;
  Json flags = Json::object();
  for (const auto& [k, v] : rep.flags) flags[k] = v;
  j["flags"] = flags;
  j["artifacts"] = rep.artifacts;
  j["notes"] = rep.notes;
  j["exit_code"] = rep.exit_code;
  write_file(c.out / "report.json", to_json_text(j));
}

inline RunReport cmd_solve(const GameConfig& c) {
  RunReport rep;
  rep.command = "solve";
  rep.inputs_digest = inputs_digest(c);
  const auto d1 = make_distribution(c.dist1);
  const auto d2 = make_distribution(c.dist2);
  const auto s = detail::solve_config(c, d1, d2);
  detail::emit(c, rep, "schedule.csv", schedule_csv(s));
  detail::emit(c, rep, "schedule.json", to_json_text(schedule_json(s, c.dist1, c.dist2)));
  if (s.crossing())
    std::printf("solve: crossing v1=%s b=%s\n", fmt17(*s.crossing()).c_str(),
                fmt17(s.crossing_bribe()).c_str());
  else
    std::printf("solve: no crossing on [%s, %s]\n", fmt17(s.lo()).c_str(),
                fmt17(s.hi()).c_str());
  if (s.trivial()) rep.notes.push_back("trivial case: b = 0, r = v1");
  write_report(c, rep);
  return rep;
}

inline RunReport cmd_verify(const GameConfig& c) {
  RunReport rep;
  rep.command = "verify";
  rep.inputs_digest = inputs_digest(c);
  const auto d1 = make_distribution(c.dist1);
  const auto d2 = make_distribution(c.dist2);
  const auto s = detail::solve_config(c, d1, d2);
  const auto& v = c.verify;

  if (v.ic) {
    const auto types = uniform_grid(s.lo(), s.hi(), v.ic_types);
    const auto mimics = uniform_grid(s.lo(), s.hi(), v.ic_mimics);
    AuditReport a;
    if (v.corrupt_bribe_scale != 1.0) {
      a = ic_audit(ScaledBribeRule(s, v.corrupt_bribe_scale), types, mimics,
                   v.tolerance, c.threads);
      a.grid_spec += " (bribes scaled by " + fmt17(v.corrupt_bribe_scale) + ")";
    } else {
      a = ic_audit(s, types, mimics, v.tolerance, c.threads);
    }
    detail::emit(c, rep, "ic_audit.json", to_json_text(to_json(a)));
    detail::status_line("ic", a.pass(), a.max_violation, a.tolerance);
    rep.flags.emplace_back("ic", a.pass());
  }

  const bool game_ok = s.reserve() == 0.0 && !s.trivial();
  if (v.d1 && !game_ok) {
    rep.notes.push_back("d1 audit skipped: needs the no-reserve, non-trivial game");
  } else if (v.d1) {
    const double b_max = v.d1_b_max.value_or(d2.hi());
    const double r_max = v.d1_r_max.value_or(d1.hi());
    auto grid = proposal_grid(0.0, b_max, v.d1_b, 0.0, r_max, v.d1_r);
    if (v.d1_fact_rows) {
      // r <= lo1 (deterred by the b + r cutoff) and b >= hi2 - lo1 (bribe
      // taken by all types).
      for (std::size_t i = 0; i < v.d1_b; ++i)
        grid.push_back({b_max * static_cast<double>(i + 1) / (v.d1_b + 1), d1.lo()});
      const double edge = d2.hi() - d1.lo();
      for (double b : {edge, edge + 0.25 * d2.width(), edge + 0.5 * d2.width()})
        for (std::size_t j = 0; j < v.d1_r; ++j)
          grid.push_back({b, d1.lo() + (r_max - d1.lo()) * static_cast<double>(j + 1) / v.d1_r});
    }
    D1Options o;
    o.type_grid = v.d1_types;
    o.cutoff_grid = v.d1_cutoffs;
    o.tolerance = v.tolerance;
    o.threads = c.threads;
    const auto r = d1_audit(s, d1, d2, grid, o);
    Json j = to_json(r.summary);
    Json rows = Json::array();
    for (const auto& out : r.outcomes) {
      Json row;
      row["b"] = out.proposal.b;
      row["r"] = out.proposal.r;
      row["case"] = std::string(to_string(out.kind));
      row["max_gap"] = out.max_gap;
      row["v_star"] = out.v_star ? Json(*out.v_star) : Json(nullptr);
      rows.push_back(row);
    }
    j["proposals"] = rows;
    detail::emit(c, rep, "d1_audit.json", to_json_text(j));
    detail::status_line("d1", r.summary.pass(), r.summary.max_violation, o.tolerance);
    rep.flags.emplace_back("d1", r.summary.pass());
  }

  if (v.prop4 && !game_ok) {
    rep.notes.push_back("prop4 audit skipped: needs the no-reserve, non-trivial game");
  } else if (v.prop4) {
    const double k = v.prop4_gamma_scale;
    const auto g = solve_general_family(d2, [k](double x) { return k * x; },
                                        d1.lo(), d1.hi(), c.solve);
    const auto grid = uniform_grid(s.lo(), s.hi(), v.prop4_types);
    auto a = prop4_audit(s, g, d2, grid, v.prop4_tolerance);
    a.grid_spec += " (gamma = " + fmt17(k) + " v1)";
    Json j;
    j["scaled_family"] = to_json(a);
    bool ok = a.pass();
    double worst = a.max_violation;
    const auto es = solve_es(d1, d2);
    if (es.exists()) {
      const auto na = never_accepted_family(es, v.prop4_never_accepted_offset);
      auto b = prop4_audit(s, na, d2, grid, v.prop4_tolerance);
      b.grid_spec += " (gamma = v1 + " + fmt17(v.prop4_never_accepted_offset) + ")";
      j["never_accepted_family"] = to_json(b);
      ok = ok && b.pass();
      worst = std::max(worst, b.max_violation);
    } else {
      j["never_accepted_family"] = nullptr;
      rep.notes.push_back("never-accepted family skipped: " + es.diagnostic());
    }
    detail::emit(c, rep, "prop4_audit.json", to_json_text(j));
    detail::status_line("prop4", ok, worst, v.prop4_tolerance);
    rep.flags.emplace_back("prop4", ok);
  }

  rep.exit_code = rep.all_pass() ? kPass : kWitness;
  std::printf("verify: %s\n", rep.exit_code == kPass ? "PASS" : "FAIL");
  write_report(c, rep);
  return rep;
}

inline RunReport cmd_compare(const GameConfig& c) {
  RunReport rep;
  rep.command = "compare";
  rep.inputs_digest = inputs_digest(c);
  if (c.reserve != 0.0) throw ConfigError("compare covers the no-reserve game (reserve: 0)");
  const auto d1 = make_distribution(c.dist1);
  const auto d2 = make_distribution(c.dist2);
  const auto s = detail::solve_config(c, d1, d2);
  const auto es = solve_es(d1, d2);
  Json sum;
  sum["es_exists"] = es.exists();
  sum["diagnostic"] = es.diagnostic();
  if (!es.exists()) {
    sum["dominance"] = nullptr;
    detail::emit(c, rep, "summary.json", to_json_text(sum));
    rep.notes.push_back("ES equilibrium does not exist: " + es.diagnostic());
    std::printf("compare: ES equilibrium does not exist (%s); no dominance claim\n",
                es.diagnostic().c_str());
    rep.flags.emplace_back("es_exists", false);
    write_report(c, rep);
    return rep;
  }
  const auto grid = uniform_grid(s.lo(), s.hi(), c.compare_types);
  const auto d = dominance_compare(s, es, grid);
  CsvWriter w({"v1", "B", "Pi", "pi", "gap"});
  for (std::size_t i = 0; i < d.types.size(); ++i) {
    const double x = d.types[i];
    w.cell(x).cell(es.bribe(x)).cell(es.payoff(x)).cell(s.payoff(x)).cell(d.gaps[i]);
    w.end_row();
  }
  detail::emit(c, rep, "compare.csv", w.str());
  sum["v_hat"] = *es.v_hat();
  sum["B_hat"] = *es.B_hat();
  sum["admissible_interval"] = Json::array({es.admissible_interval()->first,
                                            es.admissible_interval()->second});
  sum["types"] = static_cast<long long>(grid.size());
  sum["min_gap"] = d.min_gap;
  sum["argmin"] = d.argmin;
  sum["dominance"] = !d.violation;
  detail::emit(c, rep, "summary.json", to_json_text(sum));
  std::printf("compare: %s min_gap=%s at v1=%s\n", d.violation ? "FAIL" : "PASS",
              fmt17(d.min_gap).c_str(), fmt17(d.argmin).c_str());
  rep.flags.emplace_back("es_exists", true);
  rep.flags.emplace_back("dominance", !d.violation);
  rep.exit_code = d.violation ? kWitness : kPass;
  write_report(c, rep);
  return rep;
}

namespace detail {

inline SimSummary simulate_config(const GameConfig& c, DrawLog* log) {
  const auto d1 = make_distribution(c.dist1);
  const auto d2 = make_distribution(c.dist2);
  const auto s = solve_config(c, d1, d2);
  SimConfig sc;
  sc.n = c.simulate.n;
  sc.seed = c.seed;
  sc.threads = c.threads;
  sc.collusion = c.simulate.collusion;
  return c.reserve > 0.0 ? run_reserve_monte_carlo(s, d1, d2, sc, log)
                         : run_monte_carlo(s, d1, d2, sc, log);
}

}  // namespace detail

inline RunReport cmd_simulate(const GameConfig& c) {
  RunReport rep;
  rep.command = "simulate";
  rep.inputs_digest = inputs_digest(c);
  DrawLog log;
  const auto sum = detail::simulate_config(c, c.simulate.per_draw_csv ? &log : nullptr);
  detail::emit(c, rep, "summary.json", to_json_text(to_json(sum)));
  if (c.simulate.per_draw_csv) detail::emit(c, rep, "draws.csv", draws_csv(log.rows));
  std::printf("simulate: n=%llu collusion_rate=%s mean_payoff1=%s revenue_per_sale=%s\n",
              static_cast<unsigned long long>(sum.n), fmt17(sum.collusion_rate).c_str(),
              fmt17(sum.payoff1.mean).c_str(), fmt17(sum.revenue_per_sale).c_str());
  write_report(c, rep);
  return rep;
}

inline RunReport cmd_sweep(const GameConfig& c) {
  RunReport rep;
  rep.command = "sweep";
  rep.inputs_digest = inputs_digest(c);
  if (c.sweep.values.empty()) throw ConfigError("sweep.values is empty");
  CsvWriter w({c.sweep.parameter, "collusion_rate", "conditional_collusion_rate",
               "sale_frequency", "revenue_per_sale", "mean_payoff1", "se_payoff1",
               "mean_payoff2", "mean_revenue", "efficiency_loss"});
  for (const auto& value : c.sweep.values) {
    YAML::Node root = apply_override(c.raw, c.sweep.parameter + "=" + value);
    GameConfig point = parse_config(root, c.base_dir);
    point.seed = c.seed;
    point.threads = c.threads;
    const auto s = detail::simulate_config(point, nullptr);
    w.cell(value).cell(s.collusion_rate).cell(s.conditional_collusion_rate)
        .cell(s.sale_frequency).cell(s.revenue_per_sale).cell(s.payoff1.mean)
        .cell(s.payoff1.std_error).cell(s.payoff2.mean).cell(s.revenue.mean)
        .cell(s.efficiency_loss.mean);
    w.end_row();
  }
  detail::emit(c, rep, "sweep.csv", w.str());
  std::printf("sweep: %zu points over %s\n", c.sweep.values.size(),
              c.sweep.parameter.c_str());
  write_report(c, rep);
  return rep;
}

}  // namespace bribe::cli

#endif  // BRIBE_CLI_HPP_
