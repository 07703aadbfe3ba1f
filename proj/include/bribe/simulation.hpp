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

// Monte Carlo play of the collusion game: bidder 1 proposes (b(v1), r(v1)),
// bidder 2 takes the bribe iff v2 <= b + r + R and the request otherwise, and
// the seller receives the reserve from the single active bidder. Without
// collusion the bidders bid truthfully in a second-price auction.

#ifndef BRIBE_SIMULATION_HPP_
#define BRIBE_SIMULATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bribe/distribution.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/exact_sum.hpp"
#include "bribe/parallel.hpp"
#include "bribe/rng.hpp"
#include "bribe/verification.hpp"

namespace bribe {

enum class Action { accepted_bribe, accepted_request, rejected };

inline std::string_view to_string(Action a) {
  switch (a) {
    case Action::accepted_bribe: return "accepted-bribe";
    case Action::accepted_request: return "accepted-request";
    case Action::rejected: return "rejected";
  }
  return "?";
}

struct SimOutcome {
  double v1 = 0.0, v2 = 0.0;
  Proposal proposal;
  Action action = Action::rejected;
  int winner = 0;  // 0: no sale
  bool sold = false;
  double price = 0.0;
  double transfer = 0.0;  // bidder 1 -> bidder 2
  double payoff1 = 0.0, payoff2 = 0.0;
  // Positive bribe accepted by a type below the reserve: no sale, transfer
  // paid.
  bool unsold_bribe = false;
  // Social value of the realised allocation.
  double social_value() const {
    if (!sold) return 0.0;
    return winner == 1 ? v1 : v2;
  }
  // |payoff1 + payoff2 + price - social value|.
  double accounting_error() const {
    return std::abs(payoff1 + payoff2 + price - social_value());
  }
};

// Equilibrium play for one draw.
inline SimOutcome play_once(double v1, double v2, const BribeSchedule& s,
                            const Distribution&) {
  SimOutcome o;
  o.v1 = v1;
  o.v2 = v2;
  const double R = s.reserve();
  o.proposal = {s.bribe(v1), s.request(v1)};
  const double b = o.proposal.b, r = o.proposal.r;
  if (v2 <= b + r + R) {
    o.action = Action::accepted_bribe;
    o.transfer = b;
    o.payoff2 = b;
    if (v1 >= R) {
      o.sold = true;
      o.winner = 1;
      o.price = R;
      o.payoff1 = v1 - R - b;
    } else {
      o.unsold_bribe = b > 0.0;
      o.payoff1 = -b;
    }
  } else {
    o.action = Action::accepted_request;
    o.transfer = -r;
    o.sold = true;
    o.winner = 2;
    o.price = R;
    o.payoff1 = r;
    o.payoff2 = v2 - R - r;
  }
  return o;
}

// Truthful second-price auction with reserve R and no side deal. Ties go to
// bidder 1.
inline SimOutcome play_noncooperative(double v1, double v2, double R) {
  SimOutcome o;
  o.v1 = v1;
  o.v2 = v2;
  o.action = Action::rejected;
  const double high = std::max(v1, v2);
  if (high < R) return o;
  o.sold = true;
  o.winner = v1 >= v2 ? 1 : 2;
  o.price = std::max(std::min(v1, v2), R);
  if (o.winner == 1)
    o.payoff1 = v1 - o.price;
  else
    o.payoff2 = v2 - o.price;
  return o;
}

struct SimConfig {
  std::uint64_t n = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool collusion = true;  // false: truthful second-price auction baseline
  std::size_t chunk = 4096;
};

struct MeanStat {
  double mean = 0.0;
  double std_error = 0.0;
};

struct SimSummary {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  bool collusion = true;
  double reserve = 0.0;
  std::uint64_t accepted_bribe = 0, accepted_request = 0, rejected = 0;
  std::uint64_t sales = 0;
  std::uint64_t unsold_bribes = 0;
  std::uint64_t nonzero_revenue_draws = 0;
  double collusion_rate = 0.0;            // accepted proposals / n
  double conditional_collusion_rate = 0.0;  // among sales
  double sale_frequency = 0.0;
  MeanStat sale_indicator;
  MeanStat payoff1, payoff2, revenue, efficiency_loss;
  double revenue_per_sale = 0.0;
  double max_accounting_error = 0.0;
};

// Per-draw record sink; called in draw order (single-threaded).
struct DrawLog {
  std::vector<SimOutcome> rows;
  std::size_t cap = 1'000'000;
};

namespace detail {

struct SimAccumulator {
  ExactSum p1, p1sq, p2, p2sq, rev, revsq, loss, losssq;
  std::uint64_t n = 0, ab = 0, ar = 0, rj = 0, sales = 0, unsold = 0,
                nonzero_rev = 0, colluded_sales = 0;
  double max_acc = 0.0;

  void add(const SimOutcome& o) {
    ++n;
    p1.add(o.payoff1);
    p1sq.add_product(o.payoff1, o.payoff1);
    p2.add(o.payoff2);
    p2sq.add_product(o.payoff2, o.payoff2);
    rev.add(o.price);
    revsq.add_product(o.price, o.price);
    const double loss_v = std::max(o.v1, o.v2) - o.social_value();
    loss.add(loss_v);
    losssq.add_product(loss_v, loss_v);
    switch (o.action) {
      case Action::accepted_bribe: ++ab; break;
      case Action::accepted_request: ++ar; break;
      case Action::rejected: ++rj; break;
    }
    if (o.sold) {
      ++sales;
      if (o.action != Action::rejected) ++colluded_sales;
    }
    if (o.unsold_bribe) ++unsold;
    if (o.price != 0.0) ++nonzero_rev;
    max_acc = std::max(max_acc, o.accounting_error());
  }
  void merge(const SimAccumulator& a) {
    p1.add(a.p1); p1sq.add(a.p1sq);
    p2.add(a.p2); p2sq.add(a.p2sq);
    rev.add(a.rev); revsq.add(a.revsq);
    loss.add(a.loss); losssq.add(a.losssq);
    n += a.n; ab += a.ab; ar += a.ar; rj += a.rj; sales += a.sales;
    unsold += a.unsold; nonzero_rev += a.nonzero_rev;
    colluded_sales += a.colluded_sales;
    max_acc = std::max(max_acc, a.max_acc);
  }
};

inline MeanStat mean_stat(const ExactSum& s, const ExactSum& sq, std::uint64_t n) {
  MeanStat m;
  m.mean = s.mean(n);
  if (n > 1) {
    ExactSum dev = sq;
    // sum x^2 - n mean^2
    dev.add_product(-static_cast<double>(n) * m.mean, m.mean);
    const double var = std::max(dev.value(), 0.0) / static_cast<double>(n - 1);
    m.std_error = std::sqrt(var / static_cast<double>(n));
  }
  return m;
}

inline MeanStat proportion_stat(std::uint64_t k, std::uint64_t n) {
  MeanStat m;
  m.mean = static_cast<double>(k) / static_cast<double>(n);
  if (n > 1) {
    const double var = m.mean * (1.0 - m.mean) * static_cast<double>(n) /
                       static_cast<double>(n - 1);
    m.std_error = std::sqrt(var / static_cast<double>(n));
  }
  return m;
}

}  // namespace detail

// Draw i uses generator outputs 2i (bidder 1) and 2i + 1 (bidder 2), so the
// summary is identical for any worker count.
inline SimSummary run_simulation(const BribeSchedule& s, const Distribution& d1,
                                 const Distribution& d2, const SimConfig& cfg,
                                 DrawLog* log = nullptr) {
  if (cfg.n == 0) throw std::invalid_argument("simulation needs n >= 1");
  const CounterRng rng(cfg.seed);
  const double R = s.reserve();
  const std::size_t chunk = std::max<std::size_t>(cfg.chunk, 1);
  const std::size_t chunks = static_cast<std::size_t>((cfg.n + chunk - 1) / chunk);
  std::vector<detail::SimAccumulator> acc(chunks);
  auto draw = [&](std::uint64_t i) {
    const double v1 = d1.quantile(rng.uniform(2 * i));
    const double v2 = d2.quantile(rng.uniform(2 * i + 1));
    return cfg.collusion ? play_once(v1, v2, s, d2) : play_noncooperative(v1, v2, R);
  };
  parallel_for(chunks, cfg.threads, [&](std::size_t c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    const std::uint64_t end = std::min<std::uint64_t>(cfg.n, begin + chunk);
    for (std::uint64_t i = begin; i < end; ++i) acc[c].add(draw(i));
  });
  if (log) {
    const std::uint64_t rows = std::min<std::uint64_t>(cfg.n, log->cap);
    log->rows.clear();
    log->rows.reserve(static_cast<std::size_t>(rows));
    for (std::uint64_t i = 0; i < rows; ++i) log->rows.push_back(draw(i));
  }

  detail::SimAccumulator total;
  for (const auto& a : acc) total.merge(a);

  SimSummary out;
  out.n = total.n;
  out.seed = cfg.seed;
  out.collusion = cfg.collusion;
  out.reserve = R;
  out.accepted_bribe = total.ab;
  out.accepted_request = total.ar;
  out.rejected = total.rj;
  out.sales = total.sales;
  out.unsold_bribes = total.unsold;
  out.nonzero_revenue_draws = total.nonzero_rev;
  out.collusion_rate = static_cast<double>(total.ab + total.ar) /
                       static_cast<double>(total.n);
  out.conditional_collusion_rate =
      total.sales > 0 ? static_cast<double>(total.colluded_sales) /
                            static_cast<double>(total.sales)
                      : 0.0;
  out.sale_indicator = detail::proportion_stat(total.sales, total.n);
  out.sale_frequency = out.sale_indicator.mean;
  out.payoff1 = detail::mean_stat(total.p1, total.p1sq, total.n);
  out.payoff2 = detail::mean_stat(total.p2, total.p2sq, total.n);
  out.revenue = detail::mean_stat(total.rev, total.revsq, total.n);
  out.efficiency_loss = detail::mean_stat(total.loss, total.losssq, total.n);
  out.revenue_per_sale = total.sales > 0 ? total.rev.mean(total.sales) : 0.0;
  out.max_accounting_error = total.max_acc;
  return out;
}

// No-reserve game under the equilibrium schedule (or the baseline when
// cfg.collusion is false).
inline SimSummary run_monte_carlo(const BribeSchedule& s, const Distribution& d1,
                                  const Distribution& d2, const SimConfig& cfg,
                                  DrawLog* log = nullptr) {
  if (s.reserve() != 0.0)
    throw std::invalid_argument("run_monte_carlo expects a no-reserve schedule");
  return run_simulation(s, d1, d2, cfg, log);
}

inline SimSummary run_reserve_monte_carlo(const BribeSchedule& s,
                                          const Distribution& d1,
                                          const Distribution& d2,
                                          const SimConfig& cfg,
                                          DrawLog* log = nullptr) {
  const double R = s.reserve();
  if (!(R < std::min(d1.hi(), d2.hi())))
    throw std::invalid_argument("reserve must lie below both supports' upper ends");
  return run_simulation(s, d1, d2, cfg, log);
}

}  // namespace bribe

#endif  // BRIBE_SIMULATION_HPP_
