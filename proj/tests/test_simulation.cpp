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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "bribe/equilibrium.hpp"
#include "bribe/io.hpp"
#include "bribe/simulation.hpp"
#include "oracles.hpp"

namespace bribe {
namespace {

constexpr double kE = std::numbers::e;

Distribution U(double lo, double hi) {
  return make_distribution(DistributionSpec::uniform(lo, hi));
}

const BribeSchedule& uniform_schedule() {
  static const BribeSchedule s = solve_bribing_schedule(U(0, 1), 0.0, 1.0);
  return s;
}

std::string summary_text(const SimSummary& s) { return to_json_text(to_json(s)); }

// a few ulps of the largest quantity in the bookkeeping
double accounting_slack(const SimOutcome& o) {
  return 4.0 * std::numeric_limits<double>::epsilon() * std::max({1.0, o.v1, o.v2});
}

TEST(PlayOnce, Examples) {
  const auto& s = uniform_schedule();
  const auto d2 = U(0, 1);
  auto o = play_once(0.4, 0.2, s, d2);
  EXPECT_EQ(o.action, Action::accepted_bribe);
  EXPECT_EQ(o.winner, 1);
  EXPECT_TRUE(o.sold);
  EXPECT_EQ(o.price, 0.0);
  EXPECT_NEAR(o.transfer, oracle::uniform_bribe(0.4), 1e-9);
  EXPECT_NEAR(o.transfer, 0.3068, 1e-4);
  EXPECT_NEAR(o.proposal.b + o.proposal.r, 0.7068, 1e-4);

  o = play_once(0.4, 0.9, s, d2);
  EXPECT_EQ(o.action, Action::accepted_request);
  EXPECT_EQ(o.winner, 2);
  EXPECT_EQ(o.price, 0.0);
  EXPECT_EQ(o.transfer, -0.4);
  EXPECT_NEAR(o.payoff1, 0.4, 0.0);
  EXPECT_NEAR(o.payoff2, 0.5, 1e-15);
}

TEST(PlayOnce, LowestType) {
  const auto& s = uniform_schedule();
  for (double v2 : {0.0, 0.3, 1.0}) {
    const auto o = play_once(0.0, v2, s, U(0, 1));
    EXPECT_EQ(o.proposal.b, 0.0);
    EXPECT_EQ(o.proposal.r, 0.0);
    EXPECT_EQ(o.transfer, 0.0);
    // Ties at v2 = b + r go to the bribe.
    EXPECT_EQ(o.action, v2 <= 0.0 ? Action::accepted_bribe : Action::accepted_request);
  }
}

TEST(PlayOnce, BookkeepingInvariants) {
  const auto& s = uniform_schedule();
  const auto reserve = solve_with_reserve(U(0, 1), U(0, 1), 0.3);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const BribeSchedule* sched : {&s, &reserve}) {
    const double R = sched->reserve();
    for (int i = 0; i < 20000; ++i) {
      const double v1 = u(rng), v2 = u(rng);
      const auto o = play_once(v1, v2, *sched, U(0, 1));
      const double b = sched->bribe(v1), r = sched->request(v1);
      EXPECT_EQ(o.action == Action::accepted_bribe, v2 <= b + r + R);
      EXPECT_NE(o.action, Action::rejected);
      if (o.action == Action::accepted_bribe) {
        EXPECT_EQ(o.transfer, b);
        if (v1 >= R) {
          EXPECT_EQ(o.winner, 1);
          EXPECT_EQ(o.price, R);
        } else {
          EXPECT_FALSE(o.sold);
          EXPECT_EQ(o.unsold_bribe, b > 0.0);
        }
      } else {
        EXPECT_EQ(o.winner, 2);
        EXPECT_EQ(o.price, R);
        EXPECT_EQ(o.transfer, -r);
      }
      EXPECT_LE(o.accounting_error(), accounting_slack(o));
    }
  }
}

TEST(PlayNoncooperative, SecondPriceRules) {
  auto o = play_noncooperative(0.3, 0.6, 0.0);
  EXPECT_EQ(o.winner, 2);
  EXPECT_EQ(o.price, 0.3);
  EXPECT_EQ(o.payoff2, 0.6 - 0.3);
  EXPECT_EQ(o.action, Action::rejected);
  o = play_noncooperative(0.5, 0.5, 0.0);
  EXPECT_EQ(o.winner, 1);
  o = play_noncooperative(0.3, 0.4, 0.5);
  EXPECT_FALSE(o.sold);
  EXPECT_EQ(o.winner, 0);
  EXPECT_EQ(o.price, 0.0);
  o = play_noncooperative(0.3, 0.7, 0.5);
  EXPECT_EQ(o.winner, 2);
  EXPECT_EQ(o.price, 0.5);
  EXPECT_LE(o.accounting_error(), accounting_slack(o));
}

TEST(MonteCarlo, UniformCollusionIsCertain) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 100000;
  cfg.seed = 2024;
  const auto sum = run_monte_carlo(s, d, d, cfg);
  EXPECT_EQ(sum.n, 100000u);
  EXPECT_EQ(sum.collusion_rate, 1.0);
  EXPECT_EQ(sum.rejected, 0u);
  EXPECT_EQ(sum.accepted_bribe + sum.accepted_request, sum.n);
  // The seller never earns anything.
  EXPECT_EQ(sum.nonzero_revenue_draws, 0u);
  EXPECT_EQ(sum.revenue.mean, 0.0);
  EXPECT_LE(sum.max_accounting_error, 4 * std::numeric_limits<double>::epsilon());

  const double top = 2.0 / kE;
  const double expected1 = oracle::integrate(oracle::uniform_payoff, 0.0, top) +
                           oracle::integrate(oracle::uniform_payoff, top, 1.0);
  EXPECT_NEAR(sum.payoff1.mean, expected1, 4 * sum.payoff1.std_error);
  EXPECT_GT(sum.payoff1.std_error, 0.0);

  // Bidder 2: b below the threshold b + v1, v2 - v1 above it.
  auto p2 = [top](double v) {
    const double b = v < top ? oracle::uniform_bribe(v) : 1.0 - top;
    const double x = std::min(b + v, 1.0);
    return x * b + 0.5 * ((1.0 - v) * (1.0 - v) - (x - v) * (x - v));
  };
  const double expected2 = oracle::integrate(p2, 0.0, top) + oracle::integrate(p2, top, 1.0);
  EXPECT_NEAR(sum.payoff2.mean, expected2, 4 * sum.payoff2.std_error);
}

TEST(MonteCarlo, EfficiencyLossMatchesQuadrature) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 100000;
  cfg.seed = 77;
  const auto sum = run_monte_carlo(s, d, d, cfg);
  // E[(v2 - v1) 1{v1 < v2 <= b(v1) + v1}] = E[min(b, 1 - v1)^2 / 2].
  const double top = 2.0 / kE;
  auto inner = [top](double v) {
    const double b = v < top ? oracle::uniform_bribe(v) : 1.0 - top;
    const double w = std::min(b, 1.0 - v);
    return 0.5 * w * w;
  };
  const double expected = oracle::integrate(inner, 0.0, top) + oracle::integrate(inner, top, 1.0);
  EXPECT_NEAR(sum.efficiency_loss.mean, expected, 4 * sum.efficiency_loss.std_error);
}

TEST(MonteCarlo, NoncooperativeRevenue) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 100000;
  cfg.seed = 5;
  cfg.collusion = false;
  const auto sum = run_monte_carlo(s, d, d, cfg);
  const double expected = oracle::integrate(
      [](double v1) { return v1 * (1.0 - v1) + 0.5 * v1 * v1; }, 0.0, 1.0);
  EXPECT_NEAR(expected, 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(sum.revenue.mean, expected, 4 * sum.revenue.std_error);
  EXPECT_EQ(sum.collusion_rate, 0.0);
  EXPECT_EQ(sum.rejected, sum.n);
  EXPECT_EQ(sum.efficiency_loss.mean, 0.0);
}

TEST(MonteCarlo, OtherFamilies) {
  const auto d1 = U(0, 1);
  const auto d2 = make_distribution(DistributionSpec::power(2.0));
  const auto s = solve_bribing_schedule(d2, 0.0, 1.0);
  SimConfig cfg;
  cfg.n = 50000;
  cfg.seed = 31;
  const auto sum = run_monte_carlo(s, d1, d2, cfg);
  EXPECT_EQ(sum.collusion_rate, 1.0);
  const double split = s.crossing().value_or(1.0);
  auto pi = [&s](double v) { return s.payoff(v); };
  const double expected = oracle::integrate(pi, 0.0, split) +
                          (split < 1.0 ? oracle::integrate(pi, split, 1.0) : 0.0);
  EXPECT_NEAR(sum.payoff1.mean, expected, 4 * sum.payoff1.std_error);
}

TEST(MonteCarlo, DeterministicAcrossThreadsAndRuns) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 30000;
  cfg.seed = 123;
  cfg.chunk = 1000;
  cfg.threads = 1;
  const std::string one = summary_text(run_monte_carlo(s, d, d, cfg));
  for (unsigned t : {1u, 4u, 8u}) {
    cfg.threads = t;
    EXPECT_EQ(summary_text(run_monte_carlo(s, d, d, cfg)), one) << t;
  }
  cfg.seed = 124;
  EXPECT_NE(summary_text(run_monte_carlo(s, d, d, cfg)), one);
}

TEST(MonteCarlo, DrawLogFollowsDrawOrder) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 500;
  cfg.seed = 9;
  DrawLog log;
  log.cap = 200;
  run_monte_carlo(s, d, d, cfg, &log);
  ASSERT_EQ(log.rows.size(), 200u);
  const CounterRng rng(9);
  for (std::size_t i = 0; i < log.rows.size(); ++i) {
    EXPECT_EQ(log.rows[i].v1, d.quantile(rng.uniform(2 * i)));
    EXPECT_EQ(log.rows[i].v2, d.quantile(rng.uniform(2 * i + 1)));
  }
  const std::string csv = draws_csv(log.rows);
  EXPECT_EQ(csv.rfind("v1,v2,action,winner,price,transfer", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), 201u);
}

TEST(MonteCarlo, RejectsBadInputs) {
  const auto& s = uniform_schedule();
  const auto d = U(0, 1);
  SimConfig cfg;
  cfg.n = 0;
  EXPECT_THROW(run_monte_carlo(s, d, d, cfg), std::invalid_argument);
  cfg.n = 10;
  const auto r = solve_with_reserve(d, d, 0.3);
  EXPECT_THROW(run_monte_carlo(r, d, d, cfg), std::invalid_argument);
}

TEST(ReserveMonteCarlo, UniformMetrics) {
  const auto d = U(0, 1);
  const auto s = solve_with_reserve(d, d, 0.3);
  SimConfig cfg;
  cfg.n = 100000;
  cfg.seed = 8;
  const auto sum = run_reserve_monte_carlo(s, d, d, cfg);
  EXPECT_EQ(sum.revenue_per_sale, 0.3);
  EXPECT_EQ(sum.conditional_collusion_rate, 1.0);
  EXPECT_EQ(sum.unsold_bribes, 0u);
  EXPECT_EQ(sum.collusion_rate, 1.0);
  const double expected = 1.0 - d.cdf(0.3) * d.cdf(0.3);
  EXPECT_NEAR(expected, 0.91, 1e-15);
  EXPECT_NEAR(sum.sale_frequency, expected, 4 * sum.sale_indicator.std_error);
  EXPECT_NEAR(sum.revenue.mean, 0.3 * sum.sale_frequency, 1e-15);
  EXPECT_LE(sum.max_accounting_error, 4 * std::numeric_limits<double>::epsilon());
  // Sale happens exactly when the winner's value reaches the reserve.
  DrawLog log;
  log.cap = 5000;
  run_reserve_monte_carlo(s, d, d, cfg, &log);
  for (const auto& o : log.rows) {
    if (o.sold) {
      EXPECT_GE(o.winner == 1 ? o.v1 : o.v2, 0.3);
    } else {
      EXPECT_LT(std::max(o.v1, o.v2), 0.3);
    }
  }
}

TEST(ReserveMonteCarlo, ZeroReserveMatchesNoReserveRun) {
  const auto d = U(0, 1);
  const auto s0 = solve_with_reserve(d, d, 0.0);
  SimConfig cfg;
  cfg.n = 20000;
  cfg.seed = 4;
  EXPECT_EQ(summary_text(run_reserve_monte_carlo(s0, d, d, cfg)),
            summary_text(run_monte_carlo(uniform_schedule(), d, d, cfg)));
}

TEST(ReserveMonteCarlo, NoncooperativeWithReserve) {
  const auto d = U(0, 1);
  const auto s = solve_with_reserve(d, d, 0.3);
  SimConfig cfg;
  cfg.n = 100000;
  cfg.seed = 12;
  cfg.collusion = false;
  const auto sum = run_reserve_monte_carlo(s, d, d, cfg);
  // E[max(min(v1, v2), R) 1{max >= R}] for two uniforms: price R when only
  // one value reaches R, the lower value when both do.
  const double R = 0.3;
  const double expected =
      2.0 * R * (1.0 - R) * R +
      oracle::integrate([](double m) { return 2.0 * (1.0 - m) * m; }, R, 1.0);
  EXPECT_NEAR(sum.revenue.mean, expected, 4 * sum.revenue.std_error);
  EXPECT_EQ(sum.revenue_per_sale > R, true);
}

}  // namespace
}  // namespace bribe
