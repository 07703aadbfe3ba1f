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

// Separating equilibrium of the bribe-and-request collusion game.
//
// Bidder 1 of type v proposes (b(v), r(v)); bidder 2 accepts the bribe when
// v2 <= b + r + R and the request otherwise. With r(v) = v - R, incentive
// compatibility reduces to
//
//     b'(v) = 1 / (f2(b + v) b + F2(b + v)) - 1,     b(max(lo1, R)) = 0,
//
// integrated until b(v) + v reaches the top of bidder 2's support (the
// crossing type); the bribe is constant from there on. For a general request
// rule g(v) the bribe solves
//
//     beta' = g' (1 / D - 1),   D = F2(s) - f2(s) (v - s),   s = beta + g + R.

#ifndef BRIBE_EQUILIBRIUM_HPP_
#define BRIBE_EQUILIBRIUM_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bribe/distribution.hpp"
#include "bribe/lambert_w.hpp"
#include "bribe/ode.hpp"

namespace bribe {

// Raised when an equilibrium ODE cannot be continued; `location` is the type
// at which it broke down.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double location)
      : std::runtime_error(what + " (at v1=" + std::to_string(location) + ")"),
        location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

struct SolveOptions {
  StepControl step;
  bool allow_trivial = false;       // lo1 >= hi2: return b = 0, r = v
  std::size_t export_nodes = 2048;  // uniform export grid on [lo1, hi1]
  // Singular starts are seeded this far (relative to the type range) from
  // the initial condition.
  double seed_offset = 1e-8;
};

struct ScheduleNode {
  double v1 = 0.0;
  double b = 0.0;
  double r = 0.0;
  double pi = 0.0;
};

inline std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

namespace detail {

// Two-term expansion y = c1 sqrt(dv) + c2 dv of the solution of
// y' = N(v, y) / D(v, y) leaving (v0, 0) where D(v0, 0) = 0 < N(v0, 0).
// Matching powers of sqrt(dv) in y' D = N gives
//   c1 = sqrt(2 N / D_y),
//   c2 = (N_y - D_v / 2 - D_yy c1^2 / 4) / (3 D_y / 2).
// Partial derivatives are one-sided (second-order) finite differences, so
// the expansion never probes below v0 or y = 0.
struct SqrtSeed {
  double c1 = 0.0, c2 = 0.0;
  bool ok = false;
  double value(double dv) const { return c1 * std::sqrt(dv) + c2 * dv; }
  double derivative(double dv) const {
    return 0.5 * c1 / std::sqrt(dv) + c2;
  }
};

template <class Num, class Den>
SqrtSeed sqrt_seed(Num&& num, Den&& den, double v0, double scale) {
  const double h = 1e-4 * scale;
  const double d0 = den(v0, 0.0), d1 = den(v0, h), d2 = den(v0, 2 * h);
  const double dy = (-3 * d0 + 4 * d1 - d2) / (2 * h);
  const double dyy = (d0 - 2 * d1 + d2) / (h * h);
  const double dv = (-3 * d0 + 4 * den(v0 + h, 0.0) - den(v0 + 2 * h, 0.0)) /
                    (2 * h);
  const double n0 = num(v0, 0.0);
  const double ny = (-3 * n0 + 4 * num(v0, h) - num(v0, 2 * h)) / (2 * h);
  SqrtSeed s;
  if (!(dy > 0.0) || !(n0 > 0.0)) return s;
  s.c1 = std::sqrt(2.0 * n0 / dy);
  s.c2 = (ny - 0.5 * dv - 0.25 * dyy * s.c1 * s.c1) / (1.5 * dy);
  s.ok = true;
  return s;
}

// Solution of beta' = g'(1/D - 1) from beta(start) = 0, including the
// asymptotic seed segment and the flat continuation past the crossing.
struct SeparatingPath {
  double start = 0.0;
  double seed_end = 0.0;    // == start for regular starts
  double seed_value = 0.0;  // beta(seed_end)
  SqrtSeed seed;
  // Seed segment as v(beta) when the two-term expansion does not apply
  // (density also vanishing at the start).
  bool inverse_seed = false;
  DenseSolution inverse;
  DenseSolution solution;
  std::optional<double> crossing;
  double flat_value = 0.0;  // beta beyond the crossing
  double end = 0.0;         // last solved type

  double value(double v) const {
    if (v <= start) return 0.0;
    if (crossing && v >= *crossing) return flat_value;
    if (v < seed_end) return inverse_seed ? seed_beta(v) : seed.value(v - start);
    return solution.value(std::min(v, solution.t_end()));
  }
  double derivative(double v) const {
    if (v < start) return 0.0;
    if (crossing && v > *crossing) return 0.0;
    if (v < seed_end)
      return inverse_seed ? 1.0 / inverse.derivative(seed_beta(v))
                          : seed.derivative(v - start);
    return solution.derivative(std::min(v, solution.t_end()));
  }
  double seed_beta(double v) const {
    double lo = 0.0, hi = seed_value;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++it) {
      const double m = 0.5 * (lo + hi);
      if (inverse.value(m) < v) lo = m; else hi = m;
    }
    return 0.5 * (lo + hi);
  }
};

struct SeparatingProblem {
  const Distribution* d2 = nullptr;
  std::function<double(double)> gamma;
  std::function<double(double)> dgamma;
  double start = 0.0;
  double end = 0.0;
  double range_width = 1.0;
  double reserve = 0.0;

  double denominator(double v, double beta) const {
    const double s = beta + gamma(v) + reserve;
    return d2->cdf_continued(s) - d2->pdf_continued(s) * (v - s);
  }
  double rhs(double v, double beta) const {
    const double d = denominator(v, beta);
    if (!(d > 1e-300)) return std::numeric_limits<double>::quiet_NaN();
    return dgamma(v) * (1.0 / d - 1.0);
  }
};

inline SeparatingPath solve_separating(const SeparatingProblem& p,
                                       const SolveOptions& opts) {
  SeparatingPath path;
  path.start = p.start;
  path.seed_end = p.start;
  path.end = p.end;
  const Distribution& d2 = *p.d2;
  const double top = d2.hi();

  // Already over the top at the initial condition: bribe 0 accepted by all.
  if (p.gamma(p.start) + p.reserve >= top) {
    path.crossing = p.start;
    path.flat_value = 0.0;
    return path;
  }

  double v0 = p.start, beta0 = 0.0;
  double h0 = 0.0;
  const double d0 = p.denominator(p.start, 0.0);
  if (!(d0 > 1e-14)) {
    // Singular start: D(start, 0) = 0 and beta ~ sqrt(v - start).
    auto num = [&p](double v, double beta) {
      return p.dgamma(v) * (1.0 - p.denominator(v, beta));
    };
    auto den = [&p](double v, double beta) { return p.denominator(v, beta); };
    path.seed = sqrt_seed(num, den, p.start, d2.width());
    const double eps = opts.seed_offset * p.range_width;
    if (path.seed.ok) {
      // The expansion assumes D_y(start, 0) > 0; reject it when the seeded
      // slope does not satisfy the ODE at the seed end.
      const double b = path.seed.value(eps);
      const double lhs = path.seed.derivative(eps) * den(p.start + eps, b);
      const double n = num(p.start + eps, b);
      if (!(std::abs(lhs - n) <= 1e-3 * std::abs(n))) path.seed.ok = false;
    }
    if (path.seed.ok) {
      beta0 = path.seed.value(eps);
    } else if (d0 > -1e-14 && num(p.start, 0.0) > 0.0 &&
               p.denominator(p.start, 1e-6 * d2.width()) > 0.0) {
      // Higher-order contact: integrate dv/dbeta = D / N, which is regular
      // at (start, 0), until beta' has fallen to 10 or v has moved by a
      // thousandth of the type range.
      auto inv = [&](double beta, double v) {
        const double n = num(v, beta);
        if (!(n > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        return std::max(den(v, beta), 0.0) / n;
      };
      const double far = p.start + std::min(1e-3 * p.range_width, 0.5 * (p.end - p.start));
      std::vector<EventFn> hit{
          [far](double, double v) { return v - far; },
          [&](double beta, double v) {
            const double n = num(v, beta);
            return n > 0.0 ? den(v, beta) / n - 0.1 : 1.0;
          }};
      OdeResult r = integrate_dopri5(inv, 0.0, p.start, d2.width(), opts.step,
                                     hit, 1e-6 * d2.width());
      if (r.reason != StopReason::event)
        throw SolveError("equilibrium ODE seed integration failed", p.start);
      path.inverse_seed = true;
      path.inverse = std::move(r.solution);
      beta0 = r.t_stop;
      v0 = r.y_stop;
    } else {
      throw SolveError(
          "equilibrium ODE denominator vanishes at the initial condition and "
          "no positive seed exists (is bidder 2's support entirely above "
          "bidder 1's lowest type?)",
          p.start);
    }
    if (!path.inverse_seed) v0 = p.start + eps;
    path.seed_end = v0;
    path.seed_value = beta0;
    h0 = std::min(eps, v0 - p.start);
  }
  if (d0 < -1e-14)
    throw SolveError("equilibrium ODE denominator negative at start", p.start);

  if (v0 >= p.end) {
    path.seed_end = p.end;
    return path;
  }

  std::vector<EventFn> events;
  events.push_back([&p, top](double v, double beta) {
    return beta + p.gamma(v) + p.reserve - top;
  });
  events.push_back([&p](double v, double beta) {
    return 1e-12 - p.denominator(v, beta);
  });
  auto rhs = [&p](double v, double beta) { return p.rhs(v, beta); };
  OdeResult res = integrate_dopri5(rhs, v0, beta0, p.end, opts.step, events, h0);

  if (res.reason == StopReason::event && res.event_index == 1)
    throw SolveError("equilibrium ODE denominator vanishes", res.t_stop);
  if (res.reason == StopReason::singular || res.reason == StopReason::step_limit)
    throw SolveError("equilibrium ODE integration failed", res.t_stop);
  if (res.solution.empty())
    throw SolveError("equilibrium ODE produced no steps", v0);

  path.solution = std::move(res.solution);
  if (res.reason == StopReason::event && res.event_index == 0) {
    path.crossing = res.t_stop;
    path.flat_value = res.y_stop;
  }
  return path;
}

}  // namespace detail

// The solved bribing function b, the request rule r(v) = max(v - R, 0) and
// the crossing type. Immutable once built; safe for concurrent reads.
class BribeSchedule {
 public:
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double reserve() const { return reserve_; }
  bool trivial() const { return trivial_; }
  // First type on the solved (non-zero) branch: max(lo1, R).
  double start() const { return path_.start; }
  std::optional<double> crossing() const { return path_.crossing; }
  double crossing_bribe() const { return path_.flat_value; }
  const Distribution& opponent() const { return *d2_; }
  const SolveOptions& options() const { return opts_; }
  std::span<const ScheduleNode> nodes() const { return nodes_; }
  std::size_t integrator_steps() const { return path_.solution.steps(); }

  bool in_range(double v) const {
    const double slack = 1e-12 * std::max(1.0, hi_ - lo_);
    return v >= lo_ - slack && v <= hi_ + slack;
  }
  void check_range(double v) const {
    if (!in_range(v))
      throw std::out_of_range("type " + std::to_string(v) +
                              " outside the schedule range [" +
                              std::to_string(lo_) + ", " +
                              std::to_string(hi_) + "]");
  }

  double bribe(double v) const {
    check_range(v);
    return bribe_unchecked(v);
  }
  double request(double v) const {
    check_range(v);
    return request_unchecked(v);
  }
  // Bidder 2 accepts the bribe iff v2 <= b + r + R.
  double acceptance_threshold(double v) const {
    return bribe_unchecked(v) + request_unchecked(v) + reserve_;
  }
  // pi(v) = v - R - F2(b + v) b above the reserve, 0 below it.
  double payoff(double v) const {
    check_range(v);
    if (trivial_) return v;
    if (v <= reserve_) return 0.0;
    const double b = bribe_unchecked(v);
    return v - reserve_ - d2_->cdf(b + v) * b;
  }
  // Slope of b from the dense output.
  double bribe_derivative(double v) const { return path_.derivative(v); }

  // |b'(v) - rhs(v, b(v))| for v on the solved branch below the crossing.
  double ode_residual(double v) const {
    if (trivial_ || v <= path_.start) return 0.0;
    if (path_.crossing && v >= *path_.crossing) return 0.0;
    const double b = bribe_unchecked(v);
    const double d = d2_->cdf(b + v) + d2_->pdf(b + v) * b;
    return std::abs(path_.derivative(v) - (1.0 / d - 1.0));
  }

  double bribe_unchecked(double v) const {
    if (trivial_) return 0.0;
    return path_.value(v);
  }
  double request_unchecked(double v) const {
    if (trivial_) return v;
    return std::max(v - reserve_, 0.0);
  }

 private:
  friend BribeSchedule solve_bribing_schedule(const Distribution&, double,
                                              double, const SolveOptions&);
  friend BribeSchedule solve_with_reserve(const Distribution&,
                                          const Distribution&, double,
                                          const SolveOptions&);
  static BribeSchedule build(const Distribution& d2, double lo, double hi,
                             double reserve, const SolveOptions& opts);
  void export_nodes() {
    nodes_.clear();
    for (double v : uniform_grid(lo_, hi_, opts_.export_nodes))
      nodes_.push_back({v, bribe_unchecked(v), request_unchecked(v), payoff(v)});
  }

  std::shared_ptr<const Distribution> d2_;
  double lo_ = 0.0, hi_ = 1.0, reserve_ = 0.0;
  bool trivial_ = false;
  SolveOptions opts_;
  detail::SeparatingPath path_;
  std::vector<ScheduleNode> nodes_;
};

inline BribeSchedule BribeSchedule::build(const Distribution& d2, double lo,
                                          double hi, double reserve,
                                          const SolveOptions& opts) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("type range must satisfy lo < hi");
  BribeSchedule s;
  s.d2_ = std::make_shared<const Distribution>(d2);
  s.lo_ = lo;
  s.hi_ = hi;
  s.reserve_ = reserve;
  s.opts_ = opts;

  detail::SeparatingProblem p;
  p.d2 = s.d2_.get();
  p.gamma = [reserve](double v) { return v - reserve; };
  p.dgamma = [](double) { return 1.0; };
  p.start = std::max(lo, reserve);
  p.end = hi;
  p.range_width = hi - lo;
  p.reserve = reserve;
  s.path_ = detail::solve_separating(p, opts);
  s.export_nodes();
  return s;
}

// Solves the bribing schedule for bidder-1 types in [lo1, hi1] against
// bidder 2's distribution.
inline BribeSchedule solve_bribing_schedule(const Distribution& d2, double lo1,
                                            double hi1,
                                            const SolveOptions& opts = {}) {
  if (lo1 >= d2.hi()) {
    if (!opts.allow_trivial)
      throw std::invalid_argument(
          "lo1 >= hi2: the trivial case must be requested explicitly");
    BribeSchedule s;
    s.d2_ = std::make_shared<const Distribution>(d2);
    s.lo_ = lo1;
    s.hi_ = hi1;
    s.trivial_ = true;
    s.opts_ = opts;
    s.path_.start = lo1;
    s.path_.seed_end = lo1;
    s.export_nodes();
    return s;
  }
  return BribeSchedule::build(d2, lo1, hi1, 0.0, opts);
}

inline double eval_bribe(const BribeSchedule& s, double v1) {
  return s.bribe(v1);
}

inline double equilibrium_payoff(const BribeSchedule& s, const Distribution&,
                                 double v1) {
  return s.payoff(v1);
}

// Reserve price R: b = r = 0 for v <= R, r = v - R above, same ODE from R.
inline BribeSchedule solve_with_reserve(const Distribution& d1,
                                        const Distribution& d2, double reserve,
                                        const SolveOptions& opts = {}) {
  if (!(reserve >= 0.0) || !std::isfinite(reserve))
    throw std::invalid_argument("reserve must be finite and >= 0");
  if (reserve >= d1.hi() || reserve >= d2.hi())
    throw std::invalid_argument(
        "reserve must lie below both supports' upper ends");
  if (reserve == 0.0) return solve_bribing_schedule(d2, d1.lo(), d1.hi(), opts);
  if (d1.lo() >= d2.hi())
    throw std::invalid_argument("lo1 >= hi2 with a reserve is not supported");
  return BribeSchedule::build(d2, d1.lo(), d1.hi(), reserve, opts);
}

// Closed form for bidder 2 uniform on [0, 1] and lo1 = 0 on the separating
// branch v in [0, 2/e]: b = (2 W(-exp(-v/2 - 1)) - v + 2) / 2.
inline double closed_form_uniform_bribe(double v1) {
  const double top = 2.0 / std::numbers::e;
  if (!(v1 >= 0.0) || v1 > top * (1.0 + 1e-12))
    throw std::domain_error(
        "closed form applies on [0, 2/e] only (beyond the crossing type)");
  // W(x) + 1 with x = -exp(-v/2 - 1), i.e. e x + 1 = -expm1(-v/2).
  const double u = lambert_w0_shifted(-std::expm1(-0.5 * v1));
  return u - 0.5 * v1;
}

// ---------------------------------------------------------------------------
// General separating families (beta, gamma).

class GeneralSchedule {
 public:
  struct Node {
    double v1, beta, gamma;
  };

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::span<const Node> nodes() const { return nodes_; }
  std::optional<double> crossing() const { return crossing_; }
  // True where the request can be accepted (gamma <= v); false for families
  // whose request exceeds the type and is therefore never accepted.
  bool request_acceptable(double v) const { return acceptable_(v); }

  double beta(double v) const { return beta_(v); }
  double gamma(double v) const { return gamma_(v); }
  double payoff(double v) const { return payoff_(v); }
  double beta_derivative(double v) const { return dbeta_(v); }

  static GeneralSchedule from_functions(
      double lo, double hi, std::function<double(double)> beta,
      std::function<double(double)> gamma,
      std::function<double(double)> payoff,
      std::function<bool(double)> acceptable, std::size_t n = 2048) {
    GeneralSchedule g;
    g.lo_ = lo;
    g.hi_ = hi;
    g.beta_ = std::move(beta);
    g.gamma_ = std::move(gamma);
    g.payoff_ = std::move(payoff);
    g.acceptable_ = std::move(acceptable);
    g.dbeta_ = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    for (double v : uniform_grid(lo, hi, n))
      g.nodes_.push_back({v, g.beta_(v), g.gamma_(v)});
    return g;
  }

 private:
  friend GeneralSchedule solve_general_family(const Distribution&,
                                              std::function<double(double)>,
                                              double, double,
                                              const SolveOptions&);
  double lo_ = 0.0, hi_ = 1.0;
  std::optional<double> crossing_;
  std::vector<Node> nodes_;
  std::function<double(double)> beta_, gamma_, payoff_, dbeta_;
  std::function<bool(double)> acceptable_;
};

// Solves the bribe that makes (beta, gamma) incentive compatible for a given
// request rule gamma with 0 <= gamma(v) <= v.
inline GeneralSchedule solve_general_family(const Distribution& d2,
                                            std::function<double(double)> gamma,
                                            double lo1, double hi1,
                                            const SolveOptions& opts = {}) {
  if (!(hi1 > lo1)) throw std::invalid_argument("type range must satisfy lo < hi");
  const double tol = 1e-12 * std::max(1.0, hi1);
  for (double v : uniform_grid(lo1, hi1, 4097)) {
    const double g = gamma(v);
    if (!std::isfinite(g) || g > v + tol)
      throw std::invalid_argument("request rule must satisfy gamma(v) <= v (v=" +
                                  std::to_string(v) + ")");
    if (g < -tol)
      throw std::invalid_argument("request rule must be nonnegative (v=" +
                                  std::to_string(v) + ")");
  }
  const double hd = 1e-6 * (hi1 - lo1);
  auto dgamma = [gamma, lo1, hi1, hd](double v) {
    const double a = std::max(lo1, v - hd), b = std::min(hi1, v + hd);
    return (gamma(b) - gamma(a)) / (b - a);
  };

  auto state = std::make_shared<detail::SeparatingPath>();
  auto dist = std::make_shared<const Distribution>(d2);
  detail::SeparatingProblem p;
  p.d2 = dist.get();
  p.gamma = gamma;
  p.dgamma = dgamma;
  p.start = lo1;
  p.end = hi1;
  p.range_width = hi1 - lo1;
  *state = detail::solve_separating(p, opts);

  GeneralSchedule g;
  g.lo_ = lo1;
  g.hi_ = hi1;
  g.crossing_ = state->crossing;
  g.beta_ = [state](double v) { return state->value(v); };
  g.dbeta_ = [state](double v) { return state->derivative(v); };
  g.gamma_ = gamma;
  g.payoff_ = [state, dist, gamma](double v) {
    const double b = state->value(v), r = gamma(v);
    const double s = b + r;
    return dist->cdf(s) * (v - s) + r;
  };
  g.acceptable_ = [](double) { return true; };
  for (double v : uniform_grid(lo1, hi1, opts.export_nodes))
    g.nodes_.push_back({v, state->value(v), gamma(v)});
  return g;
}

}  // namespace bribe

#endif  // BRIBE_EQUILIBRIUM_HPP_
