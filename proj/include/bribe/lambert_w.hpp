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

#ifndef BRIBE_LAMBERT_W_HPP_
#define BRIBE_LAMBERT_W_HPP_

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bribe {

// Principal branch W0 parameterised by the distance to the branch point,
// x = (delta - 1) / e with delta >= 0. Returns u = W0(x) + 1.
//
// Solves h(u) = 1 - (1 - u) e^u = delta, which is the identity w e^w = x
// with w = u - 1. Near the branch point h is summed as its power series
// sum_{m>=2} (m - 1) u^m / m! so that no cancellation occurs.
// h'(u) = u e^u, and h is increasing and convex on u >= 0, so Newton from
// the branch-point series is safeguarded by a bisection bracket.
inline double lambert_w0_shifted(double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::domain_error("lambert_w0: argument below -1/e");
  if (delta == 0.0) return 0.0;
  auto h = [](double u) {
    if (u < 0.5) {
      double term = u, sum = 0.0;  // term = u^m / m!
      for (int m = 2; m < 30; ++m) {
        term *= u / m;
        sum += (m - 1) * term;
        if ((m - 1) * term < 1e-17 * sum) break;
      }
      return sum;
    }
    return (u - 1.0) * std::expm1(u) + u;
  };

  double lo = 0.0, hi = 1.0;
  while (h(hi) < delta) hi *= 2.0;
  double u;
  const double p = std::sqrt(2.0 * delta);
  if (p < 1.0) {
    u = p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    const double x = (delta - 1.0) / std::numbers::e;
    const double l = std::log1p(x);
    u = 1.0 + l - (l > 1.0 ? std::log(l) : 0.0);
  }
  if (!(u > lo && u < hi)) u = 0.5 * (lo + hi);

  for (int iter = 0; iter < 200; ++iter) {
    const double r = h(u) - delta;
    if (r == 0.0) break;
    if (r > 0) hi = u; else lo = u;
    const double slope = u * std::exp(u);
    double next = u - r / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - u);
    u = next;
    if (step <= 2e-16 * u || hi - lo <= 2e-16 * u) break;
  }
  return u;
}

// W0(x) for x >= -1/e. Away from the branch point the shifted estimate is
// polished by Halley steps on w e^w - x, which keep relative accuracy near
// w = 0.
inline double lambert_w0(double x) {
  const double delta = std::fma(std::numbers::e, x, 1.0);
  if (delta < 0.0 && delta > -1e-15) return -1.0;
  double w = lambert_w0_shifted(delta) - 1.0;
  if (delta < 0.25) return w;
  for (int it = 0; it < 4; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp = w + 1.0;
    const double step = f / (ew * wp - (w + 2.0) * f / (2.0 * wp));
    w -= step;
    if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

}  // namespace bribe

#endif  // BRIBE_LAMBERT_W_HPP_
