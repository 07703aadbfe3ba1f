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

// Scalar Dormand-Prince 5(4) integrator with continuous (dense) output and
// event location.
//
// The coefficients are those of DOPRI5 (Hairer, Norsett & Wanner, "Solving
// Ordinary Differential Equations I", 2nd ed.), including the fourth-order
// continuous extension. Events are sign changes g(t, y) : <0 -> >=0, located
// by bisection on the dense output.

#ifndef BRIBE_ODE_HPP_
#define BRIBE_ODE_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bribe {

struct StepControl {
  double atol = 1e-13;
  double rtol = 1e-12;
  double max_step = 0.0;  // 0 selects span / 64
  long max_steps = 2'000'000;

  // The control used for refinement studies: a 5th-order method halves its
  // step when the local tolerance shrinks by 2^5.
  StepControl refined() const {
    StepControl s = *this;
    s.atol /= 32.0;
    s.rtol /= 32.0;
    if (s.max_step > 0) s.max_step /= 2.0;
    return s;
  }
};

// One accepted step's continuous extension.
struct DenseSegment {
  double t0 = 0.0, h = 0.0;
  double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0, r5 = 0.0;

  double value(double t) const {
    const double th = (t - t0) / h, s = 1.0 - th;
    return r1 + th * (r2 + s * (r3 + th * (r4 + s * r5)));
  }
  double derivative(double t) const {
    const double th = (t - t0) / h, s = 1.0 - th;
    const double p = r3 + th * (r4 + s * r5);
    const double dp = r4 + (1.0 - 2.0 * th) * r5;
    return (r2 + s * p + th * (-p + s * dp)) / h;
  }
};

class DenseSolution {
 public:
  bool empty() const { return segments_.empty(); }
  double t_begin() const { return segments_.front().t0; }
  double t_end() const { return t_end_; }
  std::size_t steps() const { return segments_.size(); }

  double value(double t) const { return find(t).value(t); }
  double derivative(double t) const { return find(t).derivative(t); }

  void push(const DenseSegment& s) {
    segments_.push_back(s);
    t_end_ = s.t0 + s.h;
  }
  void truncate(double t) { t_end_ = std::min(t_end_, t); }

 private:
  const DenseSegment& find(double t) const {
    auto it = std::upper_bound(
        segments_.begin(), segments_.end(), t,
        [](double v, const DenseSegment& s) { return v < s.t0; });
    if (it == segments_.begin()) return segments_.front();
    return *(it - 1);
  }

  std::vector<DenseSegment> segments_;
  double t_end_ = 0.0;
};

enum class StopReason { reached_end, event, singular, step_limit };

struct OdeResult {
  DenseSolution solution;
  StopReason reason = StopReason::reached_end;
  int event_index = -1;
  double t_stop = 0.0;
  double y_stop = 0.0;
};

using EventFn = std::function<double(double, double)>;

// Integrates y' = rhs(t, y) from (t0, y0) towards t_end (> t0). A non-finite
// right side rejects the step; if the step then shrinks below roundoff the
// integration stops with StopReason::singular at the last accepted point.
template <class Rhs>
OdeResult integrate_dopri5(Rhs&& rhs, double t0, double y0, double t_end,
                           const StepControl& ctl,
                           const std::vector<EventFn>& events = {},
                           double initial_step = 0.0) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                   a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                   a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                   a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                   a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double d1 = -12715105075.0 / 11282082432.0,
                   d3 = 87487479700.0 / 32700410799.0,
                   d4 = -10690763975.0 / 1880347072.0,
                   d5 = 701980252875.0 / 199316789632.0,
                   d6 = -1453857185.0 / 822651844.0,
                   d7 = 69997945.0 / 29380423.0;

  if (!(t_end > t0)) throw std::invalid_argument("integrate: empty interval");
  const double span = t_end - t0;
  const double hmax = ctl.max_step > 0 ? ctl.max_step : span / 64.0;
  const double hmin = 16.0 * std::numeric_limits<double>::epsilon() *
                      std::max(std::abs(t0), std::abs(t_end));

  OdeResult out;
  double t = t0, y = y0;
  double h = initial_step > 0 ? initial_step : std::min(hmax, 1e-4 * span);
  double k1 = rhs(t, y);
  if (!std::isfinite(k1)) {
    out.reason = StopReason::singular;
    out.t_stop = t;
    out.y_stop = y;
    return out;
  }
  std::vector<double> g_prev(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) g_prev[e] = events[e](t, y);

  long nsteps = 0;
  double err_prev = 1e-4;
  while (t < t_end) {
    if (++nsteps > ctl.max_steps) {
      out.reason = StopReason::step_limit;
      break;
    }
    const bool last = t + h >= t_end;
    if (last) h = t_end - t;

    const double k2 = rhs(t + c2 * h, y + h * a21 * k1);
    const double k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const double k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const double k5 = rhs(t + c5 * h, y + h * (a51 * k1 + a52 * k2 +
                                               a53 * k3 + a54 * k4));
    const double k6 = rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                          a64 * k4 + a65 * k5));
    const double y1 =
        y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const double k7 = rhs(t + h, y1);

    const double err_raw =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    const double scale = ctl.atol + ctl.rtol * std::max(std::abs(y), std::abs(y1));
    const double err = std::abs(err_raw) / scale;

    if (!std::isfinite(err) || !std::isfinite(y1)) {
      h *= 0.25;
      if (h < hmin) {
        out.reason = StopReason::singular;
        break;
      }
      continue;
    }

    if (err <= 1.0) {
      DenseSegment seg;
      seg.t0 = t;
      seg.h = h;
      seg.r1 = y;
      seg.r2 = y1 - y;
      seg.r3 = h * k1 - seg.r2;
      seg.r4 = seg.r2 - h * k7 - seg.r3;
      seg.r5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      out.solution.push(seg);

      const double t_new = last ? t_end : t + h;
      for (std::size_t e = 0; e < events.size(); ++e) {
        const double g_new = events[e](t_new, y1);
        if (g_prev[e] < 0.0 && g_new >= 0.0) {
          double lo = t, hi = t_new;
          for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (events[e](mid, seg.value(mid)) >= 0.0) hi = mid; else lo = mid;
          }
          out.reason = StopReason::event;
          out.event_index = static_cast<int>(e);
          out.t_stop = hi;
          out.y_stop = seg.value(hi);
          out.solution.truncate(hi);
          return out;
        }
        g_prev[e] = g_new;
      }

      t = t_new;
      y = y1;
      k1 = k7;
      // PI step-size controller.
      const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
                         std::pow(err_prev, 0.4 / 5.0);
      err_prev = std::max(err, 1e-4);
      h = std::min(hmax, h * std::clamp(fac, 0.2, 5.0));
    } else {
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
      if (h < hmin) {
        out.reason = StopReason::singular;
        break;
      }
    }
  }
  out.t_stop = t;
  out.y_stop = y;
  if (out.reason == StopReason::reached_end && t < t_end)
    out.reason = StopReason::singular;
  return out;
}

}  // namespace bribe

#endif  // BRIBE_ODE_HPP_
