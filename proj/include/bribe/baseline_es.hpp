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

// Single-option benchmark: bidder 1 may only offer a take-it-or-leave-it
// bribe B. The separating branch solves
//
//     B' = f2(v + B)(v - B) / (F2(v + B) - f2(v + B)(v - B)),   B(lo1) = 0,
//
// and the robust equilibrium pools every type above a threshold v_hat on
//
//     B_hat = v_hat - F2(v_hat + B(v_hat)) (v_hat - B(v_hat)),
//
// with B_hat >= hi2 - E[v1 | v1 >= v_hat] so that every bidder-2 type takes
// the pooled bribe.

#ifndef BRIBE_BASELINE_ES_HPP_
#define BRIBE_BASELINE_ES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bribe/distribution.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/ode.hpp"
#include "bribe/quadrature.hpp"

namespace bribe {

struct EsOptions {
  StepControl step;
  std::size_t export_nodes = 2048;
  std::size_t threshold_scan = 1024;  // grid for the first v_hat bracket
  double seed_offset = 1e-8;
  double denominator_guard = 1e-12;
};

class ESEquilibrium {
 public:
  struct Node {
    double v1, B;
  };

  bool exists() const { return exists_; }
  const std::string& diagnostic() const { return diagnostic_; }
  std::optional<double> v_hat() const { return v_hat_; }
  std::optional<double> B_hat() const { return B_hat_; }
  // Largest type reached by the separating branch.
  double separating_end() const { return sep_end_; }
  // Types v with B_hat(v) >= hi2 - E[v1 | v1 >= v], contiguous from v_hat.
  std::optional<std::pair<double, double>> admissible_interval() const {
    return admissible_;
  }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<Node>& separating_nodes() const { return nodes_; }
  const Distribution& opponent() const { return *d2_; }

  // B_es on the separating branch (no pooling applied).
  double separating_bribe(double v) const {
    if (v <= seed_start_) return 0.0;
    if (crossing_ && v >= *crossing_) return flat_value_;
    if (v < seed_end_)
      return seed_linear_ ? seed_slope_ * (v - seed_start_)
                          : seed_.value(v - seed_start_);
    if (path_.empty()) return seed_value_;
    return path_.value(std::min(v, path_.t_end()));
  }
  // B(v): separating below v_hat, pooled above.
  double bribe(double v) const {
    require();
    if (v_hat_ && v > *v_hat_) return *B_hat_;
    return separating_bribe(v);
  }
  double payoff(double v) const {
    require();
    if (v_hat_ && v > *v_hat_) return v - *B_hat_;
    const double B = separating_bribe(v);
    return d2_->cdf(v + B) * (v - B);
  }
  // Probability that bidder 2 takes the bribe: F2(v + B) on the separating
  // branch, 1 on the pooled branch (the pooled bribe is taken by all types).
  double acceptance_probability(double v) const {
    require();
    if (v_hat_ && v > *v_hat_) return 1.0;
    return d2_->cdf(v + separating_bribe(v));
  }
  double denominator(double v) const {
    const double B = separating_bribe(v);
    const double x = v + B;
    return d2_->cdf(x) - d2_->pdf(x) * (v - B);
  }
  // B_hat(v) candidate pooled bribe if pooling began at v.
  double pooled_candidate(double v) const {
    const double B = separating_bribe(v);
    return v - d2_->cdf(v + B) * (v - B);
  }

 private:
  friend ESEquilibrium solve_es(const Distribution&, const Distribution&,
                                const EsOptions&);
  void require() const {
    if (!exists_)
      throw std::logic_error("ES equilibrium does not exist: " + diagnostic_);
  }

  bool exists_ = false;
  std::string diagnostic_;
  std::optional<double> v_hat_, B_hat_;
  std::optional<std::pair<double, double>> admissible_;
  std::optional<double> crossing_;
  double flat_value_ = 0.0;
  double sep_end_ = 0.0;
  double lo_ = 0.0, hi_ = 1.0;
  double seed_start_ = 0.0, seed_end_ = 0.0, seed_value_ = 0.0;
  bool seed_linear_ = false;
  double seed_slope_ = 0.0;
  detail::SqrtSeed seed_;
  DenseSolution path_;
  std::vector<Node> nodes_;
  std::shared_ptr<const Distribution> d2_;
};

// E[v1 | v1 >= v] by adaptive quadrature.
inline double conditional_mean_above(const Distribution& d1, double v) {
  const double tail = 1.0 - d1.cdf(v);
  if (!(tail > 1e-14)) return std::max(v, d1.lo());
  const double a = std::max(v, d1.lo());
  const double m =
      integrate([&d1](double x) { return x * d1.pdf(x); }, a, d1.hi(), 1e-10);
  return m / tail;
}

inline ESEquilibrium solve_es(const Distribution& d1, const Distribution& d2,
                              const EsOptions& opts = {}) {
  const double lo1 = d1.lo(), hi1 = d1.hi();
  if (!(lo1 < d2.hi()))
    throw std::invalid_argument("solve_es requires lo1 < hi2");

  ESEquilibrium e;
  e.lo_ = lo1;
  e.hi_ = hi1;
  e.d2_ = std::make_shared<const Distribution>(d2);
  e.seed_start_ = e.seed_end_ = lo1;
  e.sep_end_ = lo1;

  auto numerator = [&d2](double v, double B) {
    return d2.pdf_continued(v + B) * (v - B);
  };
  auto denom = [&d2](double v, double B) {
    const double x = v + B;
    return d2.cdf_continued(x) - d2.pdf_continued(x) * (v - B);
  };
  const double guard = opts.denominator_guard;
  auto fail = [&e](std::string why) {
    e.exists_ = false;
    e.diagnostic_ = std::move(why);
    return e;
  };

  // Initial condition and, when D(lo1, 0) = 0, the singular seed.
  const double width = hi1 - lo1;
  const double eps = opts.seed_offset * width;
  double v0 = lo1, B0 = 0.0, h0 = 0.0;
  const double d0 = denom(lo1, 0.0);
  if (d0 < -1e-14)
    return fail("separating-branch denominator negative at v1=" +
                std::to_string(lo1));
  if (!(d0 > 1e-14)) {
    const double n0 = numerator(lo1, 0.0);
    if (n0 > 0.0) {
      e.seed_ = detail::sqrt_seed(numerator, denom, lo1, d2.width());
      if (!e.seed_.ok)
        return fail("separating-branch denominator cannot turn positive at v1=" +
                    std::to_string(lo1));
      B0 = e.seed_.value(eps);
    } else {
      // lo1 = lo2 = 0 with F2 ~ c x^k near 0: B ~ k / (1 + k) v.
      const double x = eps;
      const double F = d2.cdf(x);
      if (!(F > 0.0)) return fail("bidder 2 has no mass near v1=0");
      const double k = d2.pdf(x) * x / F;
      e.seed_slope_ = k / (1.0 + k);
      e.seed_linear_ = true;
      B0 = e.seed_slope_ * eps;
    }
    v0 = lo1 + eps;
    h0 = eps;
    e.seed_end_ = v0;
    e.seed_value_ = B0;
  }

  std::vector<EventFn> events;
  const double top = d2.hi();
  events.push_back([top](double v, double B) { return v + B - top; });
  events.push_back([&denom, guard](double v, double B) {
    return guard - denom(v, B);
  });
  auto rhs = [&](double v, double B) {
    const double d = denom(v, B);
    if (!(d > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return numerator(v, B) / d;
  };

  bool stopped_singular = false;
  if (v0 < hi1) {
    OdeResult res = integrate_dopri5(rhs, v0, B0, hi1, opts.step, events, h0);
    e.path_ = std::move(res.solution);
    e.sep_end_ = res.t_stop;
    if (res.reason == StopReason::event && res.event_index == 0) {
      e.crossing_ = res.t_stop;
      e.flat_value_ = res.y_stop;
      e.sep_end_ = hi1;
    } else if (res.reason != StopReason::reached_end) {
      stopped_singular = true;
    }
  } else {
    e.sep_end_ = hi1;
  }

  const double sep_end = e.sep_end_;
  for (double v : uniform_grid(lo1, sep_end, opts.export_nodes))
    e.nodes_.push_back({v, e.separating_bribe(v)});

  // Smallest admissible pooling threshold.
  auto condition = [&](double v) {
    return e.pooled_candidate(v) - (d2.hi() - conditional_mean_above(d1, v));
  };
  const auto scan = uniform_grid(lo1, sep_end, opts.threshold_scan);
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    if (condition(scan[i]) >= 0.0) {
      first = i;
      break;
    }
  }
  if (!first) {
    return fail(stopped_singular
                    ? "separating branch ends (denominator guard) at v1=" +
                          std::to_string(sep_end) +
                          " before any admissible pooling threshold"
                    : "no type satisfies the pooled-bribe acceptance condition");
  }
  double vhat = scan[*first];
  if (*first > 0) {
    double a = scan[*first - 1], b = scan[*first];
    for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, b); ++it) {
      const double m = 0.5 * (a + b);
      if (condition(m) >= 0.0) b = m; else a = m;
    }
    vhat = b;
  }
  std::size_t last = *first;
  while (last + 1 < scan.size() && condition(scan[last + 1]) >= 0.0) ++last;

  e.exists_ = true;
  e.v_hat_ = vhat;
  e.B_hat_ = e.pooled_candidate(vhat);
  e.admissible_ = std::make_pair(vhat, scan[last]);
  if (stopped_singular)
    e.diagnostic_ = "separating branch ends at v1=" + std::to_string(sep_end);
  return e;
}

inline double es_payoff(const ESEquilibrium& e, const Distribution&, double v1) {
  return e.payoff(v1);
}

struct DominanceReport {
  std::vector<double> types;
  std::vector<double> gaps;  // pi - Pi
  double min_gap = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  bool violation = false;
};

// pi(v) - Pi(v) over the grid; flags a violation if the minimum is below
// -1e-9.
template <class Grid>
DominanceReport dominance_compare(const BribeSchedule& s, const ESEquilibrium& e,
                                  const Grid& grid, double tol = 1e-9) {
  const double slack = 1e-12 * std::max(1.0, s.hi());
  if (std::abs(s.lo() - e.lo()) > slack || std::abs(s.hi() - e.hi()) > slack)
    throw std::invalid_argument("dominance_compare: mismatched type ranges");
  if (!e.exists())
    throw std::logic_error("dominance_compare: ES equilibrium does not exist");
  DominanceReport rep;
  for (double v : grid) {
    const double gap = s.payoff(v) - e.payoff(v);
    rep.types.push_back(v);
    rep.gaps.push_back(gap);
    if (gap < rep.min_gap) {
      rep.min_gap = gap;
      rep.argmin = v;
    }
  }
  rep.violation = rep.min_gap < -tol;
  return rep;
}

}  // namespace bribe

#endif  // BRIBE_BASELINE_ES_HPP_
