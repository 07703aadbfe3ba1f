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

// Bidder value distributions on compact supports.
//
// Every family exposes the CDF, the density, the quantile function and the
// integrated CDF  I(x) = \int_lo^x F(t) dt,  which turns the partial
// expectations appearing in auction payoffs into closed-form expressions.
// Evaluation outside [lo, hi] clamps (F = 0 below, 1 above; f = 0 outside).

#ifndef BRIBE_DISTRIBUTION_HPP_
#define BRIBE_DISTRIBUTION_HPP_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bribe {

enum class Family { uniform, power, piecewise_linear_density, table };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::uniform: return "uniform";
    case Family::power: return "power";
    case Family::piecewise_linear_density: return "piecewise-linear-density";
    case Family::table: return "table";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  if (name == "uniform") return Family::uniform;
  if (name == "power") return Family::power;
  if (name == "piecewise-linear-density" || name == "piecewise_linear_density")
    return Family::piecewise_linear_density;
  if (name == "table") return Family::table;
  throw std::invalid_argument("unknown distribution family '" +
                              std::string(name) + "'");
}

// Family parameters. Only the fields relevant to `family` are read.
struct DistributionSpec {
  Family family = Family::uniform;
  double lo = 0.0;
  double hi = 1.0;
  double exponent = 1.0;            // power: F(x) = ((x - lo) / (hi - lo))^k
  std::vector<double> knots;        // piecewise-linear-density: abscissae
  std::vector<double> density;      //   unnormalised density at each knot
  std::vector<double> table_x;      // table: CDF samples (x, F(x))
  std::vector<double> table_cdf;

  static DistributionSpec uniform(double lo, double hi) {
    DistributionSpec s;
    s.family = Family::uniform;
    s.lo = lo;
    s.hi = hi;
    return s;
  }
  static DistributionSpec power(double k, double lo = 0.0, double hi = 1.0) {
    DistributionSpec s = uniform(lo, hi);
    s.family = Family::power;
    s.exponent = k;
    return s;
  }
  static DistributionSpec piecewise_linear(std::vector<double> x,
                                           std::vector<double> f) {
    DistributionSpec s;
    s.family = Family::piecewise_linear_density;
    s.lo = x.empty() ? 0.0 : x.front();
    s.hi = x.empty() ? 0.0 : x.back();
    s.knots = std::move(x);
    s.density = std::move(f);
    return s;
  }
  static DistributionSpec table(std::vector<double> x, std::vector<double> c) {
    DistributionSpec s;
    s.family = Family::table;
    s.lo = x.empty() ? 0.0 : x.front();
    s.hi = x.empty() ? 0.0 : x.back();
    s.table_x = std::move(x);
    s.table_cdf = std::move(c);
    return s;
  }
};

namespace detail {

struct UniformLaw {
  double lo, hi;
  double cdf(double x) const { return (x - lo) / (hi - lo); }
  double pdf(double) const { return 1.0 / (hi - lo); }
  double quantile(double u) const { return lo + u * (hi - lo); }
  double integrated_cdf(double x) const {
    const double t = x - lo;
    return 0.5 * t * t / (hi - lo);
  }
};

struct PowerLaw {
  double lo, hi, k;
  double cdf(double x) const { return std::pow((x - lo) / (hi - lo), k); }
  double pdf(double x) const {
    const double w = hi - lo;
    return k / w * std::pow((x - lo) / w, k - 1.0);
  }
  double quantile(double u) const {
    return lo + (hi - lo) * std::pow(u, 1.0 / k);
  }
  double integrated_cdf(double x) const {
    const double w = hi - lo;
    return w * std::pow((x - lo) / w, k + 1.0) / (k + 1.0);
  }
};

// Density linear between knots; CDF piecewise quadratic.
struct PiecewiseLinearLaw {
  std::vector<double> x, f, cum, icum;  // cum = F(x_i), icum = I(x_i)

  std::size_t cell(double v) const {
    auto it = std::upper_bound(x.begin(), x.end(), v);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, x.size() - 2);
  }
  double slope(std::size_t i) const {
    return (f[i + 1] - f[i]) / (x[i + 1] - x[i]);
  }
  double cdf(double v) const {
    const std::size_t i = cell(v);
    const double t = v - x[i];
    return cum[i] + f[i] * t + 0.5 * slope(i) * t * t;
  }
  double pdf(double v) const {
    const std::size_t i = cell(v);
    return f[i] + slope(i) * (v - x[i]);
  }
  double quantile(double u) const {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cum.begin());
    i = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, x.size() - 2);
    const double q = u - cum[i];
    const double disc = f[i] * f[i] + 2.0 * slope(i) * q;
    const double t = 2.0 * q / (f[i] + std::sqrt(std::max(disc, 0.0)));
    return std::min(x[i] + t, x[i + 1]);
  }
  double integrated_cdf(double v) const {
    const std::size_t i = cell(v);
    const double t = v - x[i];
    return icum[i] + cum[i] * t + 0.5 * f[i] * t * t +
           slope(i) * t * t * t / 6.0;
  }
};

// Monotone piecewise-cubic Hermite interpolation of tabulated CDF values.
struct TableLaw {
  std::vector<double> x, c, m, icum;  // m = dF/dx at the nodes

  std::size_t cell(double v) const {
    auto it = std::upper_bound(x.begin(), x.end(), v);
    std::size_t i = static_cast<std::size_t>(it - x.begin());
    return std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, x.size() - 2);
  }
  double eval_in(std::size_t i, double t) const {
    const double h = x[i + 1] - x[i];
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * c[i] + (t3 - 2 * t2 + t) * h * m[i] +
           (-2 * t3 + 3 * t2) * c[i + 1] + (t3 - t2) * h * m[i + 1];
  }
  double deriv_in(std::size_t i, double t) const {
    const double h = x[i + 1] - x[i];
    const double t2 = t * t;
    return (6 * t2 - 6 * t) * c[i] / h + (3 * t2 - 4 * t + 1) * m[i] +
           (-6 * t2 + 6 * t) * c[i + 1] / h + (3 * t2 - 2 * t) * m[i + 1];
  }
  // \int_0^t of the Hermite basis, scaled by the cell width.
  double integral_in(std::size_t i, double t) const {
    const double h = x[i + 1] - x[i];
    const double t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    return h * ((0.5 * t4 - t3 + t) * c[i] +
                (0.25 * t4 - 2.0 * t3 / 3.0 + 0.5 * t2) * h * m[i] +
                (-0.5 * t4 + t3) * c[i + 1] +
                (0.25 * t4 - t3 / 3.0) * h * m[i + 1]);
  }
  double cdf(double v) const {
    const std::size_t i = cell(v);
    return eval_in(i, (v - x[i]) / (x[i + 1] - x[i]));
  }
  double pdf(double v) const {
    const std::size_t i = cell(v);
    return deriv_in(i, (v - x[i]) / (x[i + 1] - x[i]));
  }
  double quantile(double u) const {
    auto it = std::upper_bound(c.begin(), c.end(), u);
    std::size_t i = static_cast<std::size_t>(it - c.begin());
    i = std::clamp<std::size_t>(i == 0 ? 0 : i - 1, 0, x.size() - 2);
    // Safeguarded Newton on the (strictly increasing) cell cubic.
    double a = 0.0, b = 1.0;
    double t = (u - c[i]) / (c[i + 1] - c[i]);
    const double h = x[i + 1] - x[i];
    for (int iter = 0; iter < 100; ++iter) {
      const double g = eval_in(i, t) - u;
      if (g > 0) b = t; else a = t;
      const double step = g / (deriv_in(i, t) * h);
      double next = t - step;
      if (!(next > a && next < b)) next = 0.5 * (a + b);
      if (std::abs(next - t) < 1e-16) { t = next; break; }
      t = next;
    }
    return x[i] + t * h;
  }
  double integrated_cdf(double v) const {
    const std::size_t i = cell(v);
    return icum[i] + integral_in(i, (v - x[i]) / (x[i + 1] - x[i]));
  }
};

inline void require_finite_support(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("distribution bounds must be finite");
  if (lo < 0.0) throw std::invalid_argument("distribution requires lo >= 0");
  if (!(hi > lo)) throw std::invalid_argument("distribution requires hi > lo");
}

}  // namespace detail

// An immutable value distribution. Cheap to copy; safe to share read-only
// across threads.
class Distribution {
 public:
  static Distribution make(const DistributionSpec& spec);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  Family family() const { return spec_.family; }
  const DistributionSpec& spec() const { return spec_; }

  double cdf(double x) const {
    if (!(x > lo_)) return 0.0;
    if (x >= hi_) return 1.0;
    return std::clamp(visit([x](const auto& l) { return l.cdf(x); }), 0.0, 1.0);
  }
  double pdf(double x) const {
    if (x < lo_ || x > hi_) return 0.0;
    return visit([x](const auto& l) { return l.pdf(x); });
  }
  double quantile(double u) const {
    if (!(u > 0.0)) return lo_;
    if (u >= 1.0) return hi_;
    return std::clamp(visit([u](const auto& l) { return l.quantile(u); }),
                      lo_, hi_);
  }
  // \int_lo^x F(t) dt.
  double integrated_cdf(double x) const {
    if (!(x > lo_)) return 0.0;
    if (x >= hi_) return total_integrated_cdf_ + (x - hi_);
    return visit([x](const auto& l) { return l.integrated_cdf(x); });
  }
  // \int_a^b t f(t) dt, via integration by parts.
  double partial_moment(double a, double b) const {
    auto g = [this](double x) { return x * cdf(x) - integrated_cdf(x); };
    return g(b) - g(a);
  }
  double mean() const { return partial_moment(lo_, hi_); }

  // C^1 continuation past the support (tangent line at each end). Used only
  // by ODE integrators that must step across the support boundary before the
  // boundary event is located; never for payoffs.
  double cdf_continued(double x) const {
    if (x > hi_) return 1.0 + pdf_hi_ * (x - hi_);
    if (x < lo_) return pdf_lo_ * (x - lo_);
    return visit([x](const auto& l) { return l.cdf(x); });
  }
  double pdf_continued(double x) const {
    if (x > hi_) return pdf_hi_;
    if (x < lo_) return pdf_lo_;
    return visit([x](const auto& l) { return l.pdf(x); });
  }
  // Central-difference density slope, one-sided at the support ends.
  double pdf_slope(double x) const {
    const double h = 1e-6 * width();
    const double a = std::max(lo_, x - h), b = std::min(hi_, x + h);
    return (pdf(b) - pdf(a)) / (b - a);
  }

 private:
  using Law = std::variant<detail::UniformLaw, detail::PowerLaw,
                           detail::PiecewiseLinearLaw, detail::TableLaw>;

  Distribution(DistributionSpec spec, Law law)
      : spec_(std::move(spec)), law_(std::move(law)) {
    lo_ = spec_.lo;
    hi_ = spec_.hi;
    total_integrated_cdf_ =
        visit([this](const auto& l) { return l.integrated_cdf(hi_); });
    pdf_lo_ = visit([this](const auto& l) { return l.pdf(lo_); });
    pdf_hi_ = visit([this](const auto& l) { return l.pdf(hi_); });
  }

  template <class F>
  double visit(F&& f) const {
    return std::visit(std::forward<F>(f), law_);
  }

  DistributionSpec spec_;
  Law law_;
  double lo_ = 0.0, hi_ = 1.0;
  double total_integrated_cdf_ = 0.0;
  double pdf_lo_ = 0.0, pdf_hi_ = 0.0;
};

inline Distribution Distribution::make(const DistributionSpec& in) {
  DistributionSpec spec = in;
  switch (spec.family) {
    case Family::uniform:
      detail::require_finite_support(spec.lo, spec.hi);
      return Distribution(spec, detail::UniformLaw{spec.lo, spec.hi});

    case Family::power:
      detail::require_finite_support(spec.lo, spec.hi);
      if (!std::isfinite(spec.exponent) || spec.exponent < 1.0)
        throw std::invalid_argument(
            "power family requires exponent >= 1 (finite density)");
      return Distribution(spec,
                          detail::PowerLaw{spec.lo, spec.hi, spec.exponent});

    case Family::piecewise_linear_density: {
      const auto& x = spec.knots;
      const auto& f = spec.density;
      if (x.size() < 2 || x.size() != f.size())
        throw std::invalid_argument(
            "piecewise-linear density needs >= 2 knots with matching values");
      detail::require_finite_support(x.front(), x.back());
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(f[i]))
          throw std::invalid_argument("non-finite density knot");
        if (!(f[i] > 0.0))
          throw std::invalid_argument("density must be positive at every knot");
        if (i > 0 && !(x[i] > x[i - 1]))
          throw std::invalid_argument("density knots must be increasing");
      }
      detail::PiecewiseLinearLaw law;
      law.x = x;
      law.f = f;
      double area = 0.0;
      for (std::size_t i = 0; i + 1 < x.size(); ++i)
        area += 0.5 * (f[i] + f[i + 1]) * (x[i + 1] - x[i]);
      for (double& v : law.f) v /= area;
      law.cum.assign(x.size(), 0.0);
      law.icum.assign(x.size(), 0.0);
      for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        law.cum[i + 1] = law.cum[i] + 0.5 * (law.f[i] + law.f[i + 1]) * h;
        law.icum[i + 1] = law.icum[i] + law.cum[i] * h +
                          0.5 * law.f[i] * h * h +
                          (law.f[i + 1] - law.f[i]) * h * h / 6.0;
      }
      law.cum.back() = 1.0;
      spec.lo = x.front();
      spec.hi = x.back();
      return Distribution(spec, std::move(law));
    }

    case Family::table: {
      const auto& x = spec.table_x;
      const auto& c = spec.table_cdf;
      if (x.size() < 2 || x.size() != c.size())
        throw std::invalid_argument(
            "table family needs >= 2 rows of (x, cdf)");
      detail::require_finite_support(x.front(), x.back());
      if (std::abs(c.front()) > 1e-12 || std::abs(c.back() - 1.0) > 1e-12)
        throw std::invalid_argument("table cdf must run from 0 to 1");
      for (std::size_t i = 1; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(c[i]))
          throw std::invalid_argument("non-finite table entry");
        if (!(x[i] > x[i - 1]))
          throw std::invalid_argument("table x must be strictly increasing");
        if (!(c[i] > c[i - 1]))
          throw std::invalid_argument(
              "table cdf must be strictly increasing (zero-density cell at x=" +
              std::to_string(x[i - 1]) + ")");
      }
      detail::TableLaw law;
      law.x = x;
      law.c = c;
      law.c.front() = 0.0;
      law.c.back() = 1.0;
      const std::size_t n = x.size();
      std::vector<double> h(n - 1), d(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (law.c[i + 1] - law.c[i]) / h[i];
      }
      // Weighted centred slopes inside (a convex mix of the two secants), a
      // three-point slope at the ends, then the Fritsch-Carlson limiter
      // alpha^2 + beta^2 <= 9 per cell.
      law.m.assign(n, 0.0);
      law.m.front() = d.front();
      law.m.back() = d.back();
      for (std::size_t i = 1; i + 1 < n; ++i)
        law.m[i] = (h[i] * d[i - 1] + h[i - 1] * d[i]) / (h[i - 1] + h[i]);
      if (n >= 3) {
        auto end_slope = [](double h0, double h1, double d0, double d1) {
          const double m = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
          if (!(m > 0.0)) return d0;
          return std::min(m, 3.0 * d0);
        };
        law.m.front() = end_slope(h[0], h[1], d[0], d[1]);
        law.m.back() = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = law.m[i] / d[i], b = law.m[i + 1] / d[i];
        const double r = a * a + b * b;
        if (r > 9.0) {
          const double tau = 3.0 / std::sqrt(r);
          law.m[i] = tau * a * d[i];
          law.m[i + 1] = tau * b * d[i];
        }
      }
      // Reject any cell whose cubic derivative is not strictly positive.
      for (std::size_t i = 0; i + 1 < n; ++i) {
        // p'(t) h = A t^2 + B t + C
        const double dc = law.c[i + 1] - law.c[i];
        const double m0 = law.m[i] * h[i], m1 = law.m[i + 1] * h[i];
        const double A = -6 * dc + 3 * m0 + 3 * m1;
        const double B = 6 * dc - 4 * m0 - 2 * m1;
        const double C = m0;
        double lowest = std::min(C, A + B + C);
        if (A > 0) {
          const double t = -B / (2 * A);
          if (t > 0 && t < 1) lowest = std::min(lowest, C - B * B / (4 * A));
        }
        if (!(lowest > 0.0))
          throw std::invalid_argument(
              "table interpolant has non-positive density in cell starting at "
              "x=" + std::to_string(x[i]));
      }
      law.icum.assign(n, 0.0);
      for (std::size_t i = 0; i + 1 < n; ++i)
        law.icum[i + 1] = law.icum[i] + law.integral_in(i, 1.0);
      spec.lo = x.front();
      spec.hi = x.back();
      return Distribution(spec, std::move(law));
    }
  }
  throw std::invalid_argument("unknown distribution family");
}

inline Distribution make_distribution(const DistributionSpec& spec) {
  return Distribution::make(spec);
}

// Reads a two-column CSV with header `x,cdf`.
inline DistributionSpec load_table_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open table file " + path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("x,cdf", 0) != 0)
    throw std::invalid_argument(path + ": expected header 'x,cdf'");
  std::vector<double> xs, cs;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b))
      throw std::invalid_argument(path + ":" + std::to_string(row) +
                                  ": expected two columns");
    try {
      xs.push_back(std::stod(a));
      cs.push_back(std::stod(b));
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ":" + std::to_string(row) +
                                  ": malformed number");
    }
  }
  return DistributionSpec::table(std::move(xs), std::move(cs));
}

}  // namespace bribe

#endif  // BRIBE_DISTRIBUTION_HPP_
