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

// CSV and JSON serialisation. Every floating-point value is written with 17
// significant digits so files round-trip exactly.

#ifndef BRIBE_IO_HPP_
#define BRIBE_IO_HPP_

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bribe/baseline_es.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/simulation.hpp"
#include "bribe/verification.hpp"

namespace bribe {

using Json = nlohmann::ordered_json;

inline std::string fmt17(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void dump_json(std::ostream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        dump_json(os, it.value(), indent, depth + 1);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool scalars = true;
      for (const auto& e : j) scalars = scalars && !e.is_structured();
      if (scalars) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          dump_json(os, j[i], indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        dump_json(os, j[i], indent, depth + 1);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x))
        os << fmt17(x);
      else
        os << "null";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace detail

inline std::string to_json_text(const Json& j) {
  std::ostringstream os;
  detail::dump_json(os, j, 2, 0);
  os << "\n";
  return os.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string> header) {
    bool first = true;
    for (const auto& h : header) {
      if (!first) os_ << ',';
      first = false;
      os_ << h;
    }
    os_ << '\n';
  }
  CsvWriter& cell(double x) { return raw(fmt17(x)); }
  CsvWriter& cell(const std::string& s) { return raw(s); }
  CsvWriter& cell(long long x) { return raw(std::to_string(x)); }
  void end_row() {
    os_ << '\n';
    fresh_ = true;
  }
  std::string str() const { return os_.str(); }

 private:
  CsvWriter& raw(const std::string& s) {
    if (!fresh_) os_ << ',';
    fresh_ = false;
    os_ << s;
    return *this;
  }
  std::ostringstream os_;
  bool fresh_ = true;
};

// ---------------------------------------------------------------------------

inline Json to_json(const DistributionSpec& s) {
  Json j;
  j["family"] = std::string(to_string(s.family));
  j["lo"] = s.lo;
  j["hi"] = s.hi;
  switch (s.family) {
    case Family::uniform: break;
    case Family::power: j["exponent"] = s.exponent; break;
    case Family::piecewise_linear_density:
      j["knots"] = s.knots;
      j["density"] = s.density;
      break;
    case Family::table:
      j["x"] = s.table_x;
      j["cdf"] = s.table_cdf;
      break;
  }
  return j;
}

inline std::string schedule_csv(const BribeSchedule& s) {
  CsvWriter w({"v1", "b", "r", "pi"});
  for (const auto& n : s.nodes()) {
    w.cell(n.v1).cell(n.b).cell(n.r).cell(n.pi);
    w.end_row();
  }
  return w.str();
}

inline Json schedule_json(const BribeSchedule& s, const DistributionSpec& d1,
                          const DistributionSpec& d2) {
  Json j;
  j["lo1"] = s.lo();
  j["hi1"] = s.hi();
  j["reserve"] = s.reserve();
  j["trivial"] = s.trivial();
  j["start"] = s.start();
  if (s.crossing()) {
    j["crossing"] = *s.crossing();
    j["crossing_bribe"] = s.crossing_bribe();
  } else {
    j["crossing"] = nullptr;
  }
  j["request_rule"] = s.reserve() > 0 ? "r = max(v1 - R, 0)" : "r = v1";
  Json tol;
  tol["atol"] = s.options().step.atol;
  tol["rtol"] = s.options().step.rtol;
  tol["seed_offset"] = s.options().seed_offset;
  j["tolerances"] = tol;
  j["integrator_steps"] = static_cast<long long>(s.integrator_steps());
  j["dist1"] = to_json(d1);
  j["dist2"] = to_json(d2);
  Json nodes = Json::array();
  for (const auto& n : s.nodes()) nodes.push_back(Json::array({n.v1, n.b, n.r, n.pi}));
  j["node_columns"] = Json::array({"v1", "b", "r", "pi"});
  j["nodes"] = nodes;
  return j;
}

inline Json to_json(const Witness& w) {
  Json j;
  j["v1"] = w.v1;
  j["gap"] = w.gap;
  j["t"] = w.t;
  j["b"] = w.proposal.b;
  j["r"] = w.proposal.r;
  j["v2_b"] = w.cutoffs.v2_b;
  j["v2_r"] = w.cutoffs.v2_r;
  return j;
}

inline Json to_json(const AuditReport& a, std::size_t max_witnesses = 100) {
  Json j;
  j["audit"] = a.name;
  j["pass"] = a.pass();
  j["grid"] = a.grid_spec;
  j["tolerance"] = a.tolerance;
  j["max_violation"] = a.max_violation;
  j["witness"] = a.witness ? to_json(*a.witness) : Json(nullptr);
  j["witness_count"] = static_cast<long long>(a.witnesses.size());
  Json ws = Json::array();
  for (std::size_t i = 0; i < a.witnesses.size() && i < max_witnesses; ++i)
    ws.push_back(to_json(a.witnesses[i]));
  j["witnesses"] = ws;
  Json c = Json::object();
  for (const auto& [k, v] : a.counts) c[k] = v;
  j["counts"] = c;
  return j;
}

inline Json to_json(const MeanStat& m) {
  Json j;
  j["mean"] = m.mean;
  j["std_error"] = m.std_error;
  return j;
}

inline Json to_json(const SimSummary& s) {
  Json j;
  j["n"] = s.n;
  j["seed"] = s.seed;
  j["collusion"] = s.collusion;
  j["reserve"] = s.reserve;
  j["collusion_rate"] = s.collusion_rate;
  j["conditional_collusion_rate"] = s.conditional_collusion_rate;
  j["accepted_bribe"] = s.accepted_bribe;
  j["accepted_request"] = s.accepted_request;
  j["rejected"] = s.rejected;
  j["sales"] = s.sales;
  j["sale_frequency"] = to_json(s.sale_indicator);
  j["revenue_per_sale"] = s.revenue_per_sale;
  j["nonzero_revenue_draws"] = s.nonzero_revenue_draws;
  j["unsold_bribes"] = s.unsold_bribes;
  j["mean_payoff1"] = to_json(s.payoff1);
  j["mean_payoff2"] = to_json(s.payoff2);
  j["mean_revenue"] = to_json(s.revenue);
  j["efficiency_loss"] = to_json(s.efficiency_loss);
  j["max_accounting_error"] = s.max_accounting_error;
  return j;
}

inline std::string draws_csv(const std::vector<SimOutcome>& rows) {
  CsvWriter w({"v1", "v2", "action", "winner", "price", "transfer"});
  for (const auto& o : rows) {
    w.cell(o.v1).cell(o.v2).cell(std::string(to_string(o.action)))
        .cell(static_cast<long long>(o.winner)).cell(o.price).cell(o.transfer);
    w.end_row();
  }
  return w.str();
}

}  // namespace bribe

#endif  // BRIBE_IO_HPP_
