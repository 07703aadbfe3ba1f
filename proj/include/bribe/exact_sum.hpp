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

// Exact floating-point accumulation (Shewchuk's non-overlapping partials).
// The represented sum is exact for finite inputs, so the result does not
// depend on the order in which values or sub-sums are added.

#ifndef BRIBE_EXACT_SUM_HPP_
#define BRIBE_EXACT_SUM_HPP_

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bribe {

class ExactSum {
 public:
  void add(double x) {
    if (!std::isfinite(x)) {
      nonfinite_ += x;
      return;
    }
    std::size_t i = 0;
    for (double y : partials_) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[i++] = lo;
      x = hi;
    }
    partials_.resize(i);
    partials_.push_back(x);
  }

  void add(const ExactSum& other) {
    for (double p : other.partials_) add(p);
    nonfinite_ += other.nonfinite_;
  }

  // Adds a * b exactly.
  void add_product(double a, double b) {
    const double p = a * b;
    add(p);
    add(std::fma(a, b, -p));
  }

  // Sum correctly rounded to double (round-half-even), as in Python's fsum.
  double value() const {
    if (nonfinite_ != 0.0 || std::isnan(nonfinite_)) return nonfinite_;
    if (partials_.empty()) return 0.0;
    std::size_t n = partials_.size();
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      const double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) ||
                  (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = lo * 2.0;
      const double x = hi + y;
      const double yr = x - hi;
      if (y == yr) hi = x;
    }
    return hi;
  }

  // Sum / k correctly rounded.
  double mean(std::uint64_t k) const {
    if (k == 0) throw std::invalid_argument("mean of zero terms");
    const double kd = static_cast<double>(k);
    double q = value() / kd;
    if (!std::isfinite(q) || q == 0.0) return q;
    for (int iter = 0; iter < 3; ++iter) q += residual(q, kd) / kd;
    // Pick the nearest of q and its neighbours by exact residual.
    const double cand[3] = {std::nextafter(q, -INFINITY), q,
                            std::nextafter(q, INFINITY)};
    double best = q, best_r = std::abs(residual(q, kd));
    for (double c : cand) {
      const double r = std::abs(residual(c, kd));
      if (r < best_r) {
        best = c;
        best_r = r;
      }
    }
    return best;
  }

  const std::vector<double>& partials() const { return partials_; }

 private:
  // S - c * k, rounded.
  double residual(double c, double kd) const {
    ExactSum r = *this;
    r.add_product(-c, kd);
    return r.value();
  }

  std::vector<double> partials_;
  double nonfinite_ = 0.0;
};

}  // namespace bribe

#endif  // BRIBE_EXACT_SUM_HPP_
