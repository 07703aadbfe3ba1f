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
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "bribe/baseline_es.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/verification.hpp"
#include "oracles.hpp"

namespace bribe {
namespace {

Distribution U(double lo, double hi) {
  return make_distribution(DistributionSpec::uniform(lo, hi));
}

const BribeSchedule& uniform_schedule() {
  static const BribeSchedule s = solve_bribing_schedule(U(0, 1), 0.0, 1.0);
  return s;
}

const BribeSchedule& shifted_schedule() {
  static const BribeSchedule s = solve_bribing_schedule(U(0, 1), 0.2, 1.0);
  return s;
}

std::vector<Distribution> opponents() {
  return {U(0, 1), make_distribution(DistributionSpec::power(2.0)),
          make_distribution(DistributionSpec::piecewise_linear({0, 0.5, 1}, {1, 2, 1})),
          U(0, 2)};
}

// Random proposal and admissible cutoffs for bidder 2's law d2.
struct Draw {
  Proposal p;
  CutoffPair c;
  double v1;
};

Draw random_draw(std::mt19937_64& rng, const Distribution& d2, double hi1) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Draw d;
  d.p = {u(rng) * d2.hi(), u(rng) * d2.hi()};
  const double top = std::min(d.p.b + d.p.r, d2.hi());
  d.c.v2_b = d2.lo() + u(rng) * (top - d2.lo());
  d.c.v2_r = top + u(rng) * (d2.hi() - top);
  d.v1 = u(rng) * hi1;
  return d;
}

// Deviation payoff with the middle integral by tanh-sinh quadrature.
double offpath_oracle(double v1, const Proposal& p, const CutoffPair& c,
                      const Distribution& d2) {
  const double a = std::min(c.v2_b, v1), b = std::min(c.v2_r, v1);
  double mid = 0.0;
  if (b > a) {
    // Split at piecewise knots so the integrand is smooth on each piece.
    std::vector<double> cuts{a};
    for (double k : {0.5}) if (k > a && k < b) cuts.push_back(k);
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      mid += oracle::integrate([&](double x) { return (v1 - x) * d2.pdf(x); }, cuts[i],
                               cuts[i + 1]);
  }
  return d2.cdf(c.v2_b) * (v1 - p.b) + mid + (1.0 - d2.cdf(c.v2_r)) * p.r;
}

TEST(OffpathPayoff, Examples) {
  const auto d2 = U(0, 1);
  // Cutoffs (b + r, b + r) with r <= v1 give the on-path form.
  EXPECT_NEAR(offpath_payoff(0.7, {0.2, 0.3}, {0.5, 0.5}, d2), 0.5 * (0.7 - 0.5) + 0.3, 1e-15);
  // Every type takes the bribe when b + r reaches the top.
  EXPECT_NEAR(offpath_payoff(0.7, {0.6, 0.5}, {1.0, 1.0}, d2), 0.1, 1e-15);
  // Second-price auction: integral of (0.5 - x) over [0, 0.5].
  EXPECT_NEAR(offpath_payoff(0.5, {0.0, 0.0}, {0.0, 1.0}, d2), 0.125, 1e-15);
}

TEST(OffpathPayoff, MatchesQuadrature) {
  std::mt19937_64 rng(404);
  for (const auto& d2 : opponents()) {
    for (int i = 0; i < 300; ++i) {
      const auto d = random_draw(rng, d2, d2.hi());
      EXPECT_NEAR(offpath_payoff(d.v1, d.p, d.c, d2), offpath_oracle(d.v1, d.p, d.c, d2), 1e-10);
    }
  }
}

TEST(OffpathPayoff, RejectsInvalidCutoffs) {
  const auto d2 = U(0, 1);
  EXPECT_THROW(offpath_payoff(0.5, {0.2, 0.3}, {0.6, 0.7}, d2), std::invalid_argument);
  EXPECT_THROW(offpath_payoff(0.5, {0.2, 0.3}, {0.4, 0.45}, d2), std::invalid_argument);
  EXPECT_THROW(offpath_payoff(0.5, {0.2, 0.3}, {0.4, 1.2}, d2), std::invalid_argument);
  EXPECT_THROW(offpath_payoff(0.5, {-0.1, 0.3}, {0.1, 0.5}, d2), std::invalid_argument);
}

TEST(OffpathPayoff, SlopeLaw) {
  std::mt19937_64 rng(17);
  const double h = 1e-6;
  for (const auto& d2 : opponents()) {
    for (int i = 0; i < 300; ++i) {
      auto d = random_draw(rng, d2, d2.hi());
      d.v1 = std::clamp(d.v1, 2 * h, d2.hi() - 2 * h);
      const double v = d.v1;
      if (std::abs(v - d.c.v2_b) < 4 * h || std::abs(v - d.c.v2_r) < 4 * h) continue;
      if (std::abs(v - 0.5) < 4 * h) continue;
      const double slope =
          (offpath_payoff(v + h, d.p, d.c, d2) - offpath_payoff(v - h, d.p, d.c, d2)) / (2 * h);
      const double expected = v < d.c.v2_b   ? d2.cdf(d.c.v2_b)
                              : v < d.c.v2_r ? d2.cdf(v)
                                             : d2.cdf(d.c.v2_r);
      EXPECT_NEAR(slope, expected, 1e-4) << v;
    }
  }
}

// If type v2b does not gain from the deviation, no higher type does.
TEST(OffpathPayoff, MonotoneDomination) {
  const auto& s = uniform_schedule();
  const auto& d2 = s.opponent();
  std::mt19937_64 rng(5);
  int tested = 0;
  for (int i = 0; i < 400; ++i) {
    const auto d = random_draw(rng, d2, 1.0);
    const double x = d.c.v2_b;
    if (offpath_payoff(x, d.p, d.c, d2) > s.payoff(x)) continue;
    ++tested;
    for (int k = 1; k <= 200; ++k) {
      const double v = x + 1e-6 + (1.0 - x - 1e-6) * k / 200.0;
      EXPECT_LT(offpath_payoff(v, d.p, d.c, d2), s.payoff(v)) << x << " " << v;
    }
  }
  EXPECT_GT(tested, 50);
}

TEST(RejectionValue, MatchesQuadrature) {
  const auto d1 = make_distribution(DistributionSpec::power(2.0));
  for (double v2 : {0.0, 0.1, 0.35, 0.6, 0.95}) {
    for (auto [a, c] : {std::pair{0.0, 1.0}, std::pair{0.2, 0.7}, std::pair{0.5, 0.9}}) {
      const double mass = d1.cdf(c) - d1.cdf(a);
      const double top = std::clamp(v2, a, c);
      const double num =
          top > a ? oracle::integrate([&](double x) { return (v2 - x) * d1.pdf(x); }, a, top) : 0.0;
      EXPECT_NEAR(rejection_value(v2, Belief::set(a, c), d1), num / mass, 1e-12);
    }
    EXPECT_NEAR(rejection_value(v2, Belief::point(0.3), d1), std::max(v2 - 0.3, 0.0), 0.0);
  }
}

TEST(BestResponse, Examples) {
  const auto d1 = U(0.2, 1), d2 = U(0, 1);
  // Least favourable point belief: accept b up to b + lo1, never take r.
  auto c = best_response({0.3, 0.5}, Belief::point(0.2), d1, d2);
  EXPECT_NEAR(c.v2_b, 0.5, 1e-15);
  EXPECT_NEAR(c.v2_r, 1.0, 1e-15);
  // r <= lo1: bribe below b + r, request above, for any belief.
  for (const auto& belief : {Belief::point(0.6), Belief::set(0.2, 1.0), Belief::set(0.5, 0.8)}) {
    c = best_response({0.4, 0.1}, belief, d1, d2);
    EXPECT_NEAR(c.v2_b, 0.5, 1e-12);
    EXPECT_NEAR(c.v2_r, 0.5, 1e-12);
  }
  // b >= hi2 - lo1: the bribe is taken by everyone.
  for (const auto& belief : {Belief::point(0.2), Belief::set(0.2, 1.0)}) {
    c = best_response({0.85, 0.3}, belief, d1, d2);
    EXPECT_NEAR(c.v2_b, 1.0, 1e-12);
    EXPECT_NEAR(c.v2_r, 1.0, 1e-12);
  }
  EXPECT_THROW(best_response({0.3, 0.5}, Belief::point(0.1), d1, d2), std::invalid_argument);
}

TEST(BestResponse, PointBeliefBelowRequest) {
  const auto d1 = U(0, 1), d2 = U(0, 1);
  for (double v : {0.1, 0.3, 0.45}) {
    const Proposal p{0.2, 0.5};
    const auto c = best_response(p, Belief::point(v), d1, d2);
    EXPECT_NEAR(c.v2_b, p.b + v, 1e-15);
    EXPECT_NEAR(c.v2_r, 1.0, 1e-15);
    for (int i = 0; i <= 100; ++i) {
      const double v2 = i / 100.0;
      const auto r = respond(v2, p, Belief::point(v), d1);
      if (v2 <= p.b + v - 1e-12) {
        EXPECT_EQ(r, Response::accept_bribe) << v2;
      }
      if (v2 >= p.b + v + 1e-12) {
        EXPECT_EQ(r, Response::reject) << v2;
      }
    }
  }
}

// Pointwise decisions form a lower accept-b interval and an upper accept-r
// interval, and the bisection cutoffs sit at their boundaries.
TEST(BestResponse, ThresholdStructure) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto d1 = U(0, 1);
  for (const auto& d2 : opponents()) {
    for (int i = 0; i < 200; ++i) {
      const Proposal p{u(rng) * d2.hi(), u(rng) * d2.hi()};
      Belief belief = Belief::point(u(rng));
      if (i % 2) {
        const double a = u(rng), c = u(rng);
        belief = Belief::set(std::min(a, c), std::max(a, c));
      }
      const auto cut = best_response(p, belief, d1, d2);
      const double slack = 1e-9 * d2.hi();
      bool seen_not_b = false, seen_r = false;
      for (int k = 0; k <= 400; ++k) {
        const double v2 = d2.lo() + d2.width() * k / 400.0;
        const auto r = respond(v2, p, belief, d1);
        if (r != Response::accept_bribe) seen_not_b = true;
        if (seen_not_b) {
          EXPECT_NE(r, Response::accept_bribe) << v2;
        }
        if (r == Response::accept_request) seen_r = true;
        if (seen_r) {
          EXPECT_EQ(r, Response::accept_request) << v2;
        }
        if (v2 < cut.v2_b - slack) {
          EXPECT_EQ(r, Response::accept_bribe) << v2;
        }
        if (v2 > cut.v2_b + slack && v2 < cut.v2_r - slack) {
          EXPECT_EQ(r, Response::reject) << v2;
        }
        if (v2 > cut.v2_r + slack) {
          EXPECT_EQ(r, Response::accept_request) << v2;
        }
      }
      EXPECT_LE(cut.v2_b, std::min(p.b + p.r, d2.hi()) + 1e-12);
      EXPECT_GE(cut.v2_r, std::min(p.b + p.r, d2.hi()) - 1e-12);
      EXPECT_LE(cut.v2_r, d2.hi() + 1e-12);
    }
  }
}

TEST(OnPath, BidderTwoAlwaysAccepts) {
  const auto& s = uniform_schedule();
  const auto d1 = U(0, 1);
  for (int i = 0; i <= 100; ++i) {
    const double v1 = i / 100.0;
    const Proposal p{s.bribe(v1), s.request(v1)};
    for (int k = 0; k <= 100; ++k) {
      const double v2 = k / 100.0;
      const auto r = respond(v2, p, Belief::point(v1), d1);
      EXPECT_NE(r, Response::reject) << v1 << " " << v2;
      EXPECT_EQ(r == Response::accept_bribe, v2 <= p.b + p.r) << v1 << " " << v2;
    }
  }
}

TEST(IcAudit, UniformPasses) {
  const auto& s = uniform_schedule();
  const auto rep = ic_audit(s, uniform_grid(0, 1, 200), uniform_grid(0, 1, 400));
  EXPECT_TRUE(rep.pass());
  EXPECT_LE(rep.max_violation, 1e-8);
  EXPECT_FALSE(rep.witness.has_value());
  EXPECT_EQ(rep.counts.at("types"), 200);
}

TEST(IcAudit, OtherFamiliesPass) {
  for (const auto& d2 : opponents()) {
    const auto s = solve_bribing_schedule(d2, 0.0, 1.0);
    const auto rep = ic_audit(s, uniform_grid(0, 1, 101), uniform_grid(0, 1, 301));
    EXPECT_TRUE(rep.pass()) << d2.hi() << " " << rep.max_violation;
  }
  const auto rep = ic_audit(shifted_schedule(), uniform_grid(0.2, 1, 101), uniform_grid(0.2, 1, 301));
  EXPECT_TRUE(rep.pass()) << rep.max_violation;
}

TEST(IcAudit, SelfMimicIsOnPathPayoff) {
  const auto& s = uniform_schedule();
  for (int i = 0; i <= 100; ++i) {
    const double v = i / 100.0;
    EXPECT_NEAR(mimic_payoff(s, v, v), s.payoff(v), 1e-14);
    EXPECT_EQ(mimic_payoff(s, v, v) - mimic_payoff(s, v, v), 0.0);
  }
}

TEST(IcAudit, CorruptedScheduleIsCaught) {
  const ScaledBribeRule bad(uniform_schedule(), 0.5);
  const auto rep = ic_audit(bad, uniform_grid(0, 1, 200), uniform_grid(0, 1, 400));
  EXPECT_FALSE(rep.pass());
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_GT(rep.witness->gap, 1e-8);
  EXPECT_GT(rep.max_violation, 1e-8);
  // The witness gap is reproduced by a direct evaluation.
  const auto& w = *rep.witness;
  EXPECT_NEAR(w.gap, mimic_payoff(bad, w.v1, w.t) - mimic_payoff(bad, w.v1, w.v1), 1e-15);
}

TEST(IcAudit, ParallelMatchesSerial) {
  const ScaledBribeRule bad(uniform_schedule(), 0.5);
  const auto a = ic_audit(bad, uniform_grid(0, 1, 120), uniform_grid(0, 1, 200), 1e-8, 1);
  const auto b = ic_audit(bad, uniform_grid(0, 1, 120), uniform_grid(0, 1, 200), 1e-8, 4);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    EXPECT_EQ(a.witnesses[i].v1, b.witnesses[i].v1);
    EXPECT_EQ(a.witnesses[i].t, b.witnesses[i].t);
    EXPECT_EQ(a.witnesses[i].gap, b.witnesses[i].gap);
  }
  EXPECT_EQ(a.max_violation, b.max_violation);
}

TEST(D1MaxGap, LeastFavourableBeliefDeters) {
  const auto& s = uniform_schedule();
  const auto& d2 = s.opponent();
  for (double b : {0.05, 0.2, 0.5}) {
    for (double r : {0.1, 0.4, 0.9}) {
      const auto g = d1_max_gap({b, r}, {b, 1.0}, s, d2);
      EXPECT_LT(g.gap, 0.0) << b << " " << r;
      // A dense sweep never finds a gaining type either.
      for (int i = 0; i <= 2000; ++i) {
        const double v = i / 2000.0;
        EXPECT_LT(offpath_payoff(v, {b, r}, {b, 1.0}, d2), s.payoff(v) + 1e-15);
      }
    }
  }
}

TEST(D1MaxGap, OnPathTangency) {
  const auto& s = uniform_schedule();
  const auto& d2 = s.opponent();
  for (double t : {0.1, 0.3, 0.6}) {
    const Proposal p{s.bribe(t), s.request(t)};
    const double x = p.b + p.r;
    const CutoffPair c{x, x};
    const DeviationGrid grid(s, 257);
    EXPECT_NEAR(grid.gap_at(t, p, c), 0.0, 1e-12);
    const auto g = d1_max_gap(p, c, s, d2);
    EXPECT_LE(g.gap, 1e-8);
    EXPECT_GE(g.gap, -1e-12);
  }
}

TEST(D1MaxGap, MatchesDenseSweep) {
  const auto& s = uniform_schedule();
  const auto& d2 = s.opponent();
  for (const auto& [p, c] : std::vector<std::pair<Proposal, CutoffPair>>{
           {{0.15, 0.5}, {0.65, 0.65}}, {{0.15, 0.5}, {0.4, 0.9}}, {{0.3, 0.2}, {0.35, 0.8}}}) {
    double best = -INFINITY;
    for (int i = 0; i <= 20000; ++i) {
      const double v = i / 20000.0;
      best = std::max(best, offpath_oracle(v, p, c, d2) - oracle::uniform_payoff(v));
    }
    const auto g = d1_max_gap(p, c, s, d2);
    EXPECT_NEAR(g.gap, best, 1e-7) << p.b << " " << p.r;
    EXPECT_GE(g.gap, best - 1e-9);
  }
}

TEST(D1Audit, SmallUniformGridHasNoWitnesses) {
  const auto& s = uniform_schedule();
  const auto d1 = U(0, 1);
  D1Options opts;
  opts.cutoff_grid = 24;
  opts.type_grid = 129;
  const auto rep = d1_audit(s, d1, s.opponent(), proposal_grid(0, 1, 8, 0, 1, 8), opts);
  EXPECT_TRUE(rep.summary.pass()) << rep.summary.max_violation;
  EXPECT_TRUE(rep.summary.witnesses.empty());
  EXPECT_LE(rep.summary.max_violation, 1e-8);
  EXPECT_EQ(rep.outcomes.size(), 64u);
  for (const auto& o : rep.outcomes) {
    if (o.v_star) {
      EXPECT_LE(o.max_gap, 1e-8);
    }
  }
}

TEST(D1Audit, ExcludedRegionsDeterDirectly) {
  const auto& s = shifted_schedule();
  const auto d1 = U(0.2, 1);
  const auto& d2 = s.opponent();
  const DeviationGrid grid(s, 257);
  for (const Proposal p : {Proposal{0.3, 0.1}, Proposal{0.6, 0.2}, Proposal{0.05, 0.15}}) {
    const auto o = d1_check_proposal(p, grid, d1, d2);
    EXPECT_EQ(o.kind, D1Case::fact3);
    const double x = std::min(p.b + p.r, 1.0);
    EXPECT_NEAR(o.cutoffs.v2_b, x, 0.0);
    EXPECT_NEAR(o.cutoffs.v2_r, x, 0.0);
    EXPECT_LE(o.max_gap, 1e-8);
  }
  for (const Proposal p : {Proposal{0.8, 0.3}, Proposal{0.95, 0.9}}) {
    const auto o = d1_check_proposal(p, grid, d1, d2);
    EXPECT_EQ(o.kind, D1Case::fact4);
    EXPECT_NEAR(o.cutoffs.v2_b, 1.0, 0.0);
    EXPECT_LE(o.max_gap, 1e-8);
    // Every type's deviation earns v1 - b.
    for (int i = 0; i <= 100; ++i) {
      const double v = 0.2 + 0.8 * i / 100.0;
      EXPECT_NEAR(offpath_payoff(v, p, o.cutoffs, d2), v - p.b, 1e-15);
    }
  }
}

TEST(D1Audit, ZeroBribeAtZeroLowestType) {
  const auto& s = uniform_schedule();
  const DeviationGrid grid(s, 257);
  const auto o = d1_check_proposal({0.0, 0.5}, grid, U(0, 1), s.opponent());
  EXPECT_EQ(o.kind, D1Case::zero_bribe);
  EXPECT_NEAR(o.cutoffs.v2_b, 0.0, 0.0);
  EXPECT_NEAR(o.cutoffs.v2_r, 1.0, 0.0);
  EXPECT_LE(o.max_gap, 1e-8);
}

TEST(D1Audit, ShiftedRangePasses) {
  const auto& s = shifted_schedule();
  const auto d1 = U(0.2, 1);
  D1Options opts;
  opts.cutoff_grid = 16;
  opts.type_grid = 129;
  const auto rep = d1_audit(s, d1, s.opponent(), proposal_grid(0, 1, 6, 0, 1, 6), opts);
  EXPECT_TRUE(rep.summary.pass()) << rep.summary.max_violation;
  EXPECT_GT(rep.summary.counts.at("fact3") + rep.summary.counts.at("fact4"), 0);
}

TEST(D1Audit, ParallelMatchesSerial) {
  const auto& s = uniform_schedule();
  D1Options opts;
  opts.cutoff_grid = 12;
  opts.type_grid = 65;
  const auto grid = proposal_grid(0, 1, 5, 0, 1, 5);
  opts.threads = 1;
  const auto a = d1_audit(s, U(0, 1), s.opponent(), grid, opts);
  opts.threads = 4;
  const auto b = d1_audit(s, U(0, 1), s.opponent(), grid, opts);
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    EXPECT_EQ(a.outcomes[i].kind, b.outcomes[i].kind);
    EXPECT_EQ(a.outcomes[i].max_gap, b.outcomes[i].max_gap);
    EXPECT_EQ(a.outcomes[i].argmax_v1, b.outcomes[i].argmax_v1);
    EXPECT_EQ(a.outcomes[i].v_star, b.outcomes[i].v_star);
  }
  EXPECT_EQ(a.summary.counts, b.summary.counts);
}

TEST(D1Audit, RejectsReserveSchedules) {
  const auto s = solve_with_reserve(U(0, 1), U(0, 1), 0.3);
  EXPECT_THROW(d1_audit(s, U(0, 1), U(0, 1), proposal_grid(0, 1, 2, 0, 1, 2)),
               std::invalid_argument);
}

TEST(Prop4Audit, IdentityRequestHasZeroGap) {
  const auto& s = uniform_schedule();
  const auto g = solve_general_family(s.opponent(), [](double v) { return v; }, 0.0, 1.0);
  const auto grid = uniform_grid(0, 1, 257);
  const auto rep = prop4_audit(s, g, s.opponent(), grid);
  EXPECT_TRUE(rep.pass());
  for (double v : grid) EXPECT_NEAR(s.payoff(v), g.payoff(v), 1e-8);
}

TEST(Prop4Audit, ScaledRequestIsDominated) {
  const auto& s = uniform_schedule();
  const auto g = solve_general_family(s.opponent(), [](double v) { return 0.8 * v; }, 0.0, 1.0);
  const auto grid = uniform_grid(0, 1, 257);
  const auto rep = prop4_audit(s, g, s.opponent(), grid);
  EXPECT_TRUE(rep.pass()) << rep.max_violation;
  // The family payoff follows the on-path form.
  for (double v : grid) {
    const double x = g.beta(v) + g.gamma(v);
    EXPECT_NEAR(g.payoff(v), s.opponent().cdf(x) * (v - x) + g.gamma(v), 1e-12);
    EXPECT_GE(s.payoff(v) - g.payoff(v), -1e-9);
  }
}

TEST(Prop4Audit, NeverAcceptedRequestsRouteThroughBaseline) {
  const auto& s = uniform_schedule();
  const auto e = solve_es(U(0, 1), U(0, 1));
  const auto g = never_accepted_family(e, 0.1);
  const auto grid = uniform_grid(0, 1, 257);
  const auto rep = prop4_audit(s, g, s.opponent(), grid);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.counts.at("es_routed"), 257);
  for (double v : grid) EXPECT_NEAR(g.payoff(v), e.payoff(v), 0.0);
  EXPECT_THROW(never_accepted_family(e, 0.0), std::invalid_argument);
}

TEST(Prop4Audit, RejectsMismatchedRanges) {
  const auto& s = uniform_schedule();
  const auto g = solve_general_family(s.opponent(), [](double v) { return v; }, 0.0, 0.9);
  EXPECT_THROW(prop4_audit(s, g, s.opponent(), uniform_grid(0, 0.9, 10)), std::invalid_argument);
}

TEST(AuditReport, WitnessIffAboveTolerance) {
  const ScaledBribeRule bad(uniform_schedule(), 0.999999);
  for (double tol : {1e-12, 1e-8, 1e-3}) {
    const auto rep = ic_audit(bad, uniform_grid(0, 1, 50), uniform_grid(0, 1, 100), tol);
    EXPECT_EQ(rep.witness.has_value(), rep.max_violation > tol) << tol;
  }
}

}  // namespace
}  // namespace bribe
