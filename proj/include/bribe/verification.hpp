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

// Audits of a solved schedule: bidder 2's cutoff best responses, on-path
// incentive compatibility, the D1 refinement at off-path proposals and
// dominance over alternative separating families.
//
// Given a proposal (b, r) answered by cutoffs (v2b, v2r), bidder 2 takes b
// for v2 <= v2b, rejects for v2b < v2 < v2r and takes r above v2r, so type v1
// earns
//
//     F2(v2b)(v1 - b) + \int_{min(v2b,v1)}^{min(v2r,v1)} (v1 - x) f2(x) dx
//                     + (1 - F2(v2r)) r.
//
// All audits are falsifiers on a stated grid, not proofs.

#ifndef BRIBE_VERIFICATION_HPP_
#define BRIBE_VERIFICATION_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bribe/baseline_es.hpp"
#include "bribe/distribution.hpp"
#include "bribe/equilibrium.hpp"
#include "bribe/parallel.hpp"

namespace bribe {

struct Proposal {
  double b = 0.0;
  double r = 0.0;
};

struct CutoffPair {
  double v2_b = 0.0;
  double v2_r = 0.0;
};

// Bidder 2's belief about bidder 1's type after an off-path proposal: a point
// or an interval [a, c] weighted by d1.
struct Belief {
  enum class Kind { point, set };
  Kind kind = Kind::point;
  double a = 0.0;
  double c = 0.0;

  static Belief point(double v) { return {Kind::point, v, v}; }
  static Belief set(double a, double c) { return {Kind::set, a, c}; }
};

enum class Response { accept_bribe, accept_request, reject };

struct Witness {
  double v1 = 0.0;
  double gap = 0.0;
  // Context: the mimicked type (IC audit) or the proposal (D1 audit).
  double t = 0.0;
  Proposal proposal;
  CutoffPair cutoffs;
};

struct AuditReport {
  std::string name;
  double tolerance = 1e-8;
  double max_violation = -std::numeric_limits<double>::infinity();
  std::optional<Witness> witness;  // worst violation above tolerance
  std::vector<Witness> witnesses;  // every violating cell (D1: per proposal)
  std::string grid_spec;
  std::map<std::string, long> counts;

  bool pass() const { return !witness.has_value(); }
};

inline void validate_proposal(const Proposal& p) {
  if (!(p.b >= 0.0) || !(p.r >= 0.0) || !std::isfinite(p.b) ||
      !std::isfinite(p.r))
    throw std::invalid_argument("proposal must be finite and nonnegative");
}

// v2b <= min(b + r, hi2) <= v2r <= hi2.
inline void validate_cutoffs(const Proposal& p, const CutoffPair& c,
                             const Distribution& d2) {
  const double top = std::min(p.b + p.r, d2.hi());
  const double slack = 1e-12 * std::max(1.0, d2.hi());
  if (!(c.v2_b <= top + slack) || !(c.v2_r >= top - slack) ||
      !(c.v2_r <= d2.hi() + slack))
    throw std::invalid_argument("cutoffs violate v2b <= min(b+r, hi2) <= v2r <= hi2");
}

namespace detail {

// Payoff with precomputed F2 and G(x) = x F2(x) - \int F2 at the cutoffs.
struct CutoffTerms {
  double Fb, Fr, Gb, Gr;
};

inline CutoffTerms cutoff_terms(const CutoffPair& c, const Distribution& d2) {
  auto G = [&d2](double x) { return x * d2.cdf(x) - d2.integrated_cdf(x); };
  return {d2.cdf(c.v2_b), d2.cdf(c.v2_r), G(c.v2_b), G(c.v2_r)};
}

inline double offpath_value(double v1, double F1v, double G1v,
                            const Proposal& p, const CutoffPair& c,
                            const CutoffTerms& k) {
  double mid = 0.0;
  if (v1 > c.v2_r)
    mid = v1 * (k.Fr - k.Fb) - (k.Gr - k.Gb);
  else if (v1 > c.v2_b)
    mid = v1 * (F1v - k.Fb) - (G1v - k.Gb);
  return k.Fb * (v1 - p.b) + mid + (1.0 - k.Fr) * p.r;
}

}  // namespace detail

// Deviation payoff of type v1 at proposal p answered by cutoffs c. The middle
// integral is evaluated in closed form from the integrated CDF.
inline double offpath_payoff(double v1, const Proposal& p, const CutoffPair& c,
                             const Distribution& d2) {
  validate_proposal(p);
  validate_cutoffs(p, c, d2);
  const auto k = detail::cutoff_terms(c, d2);
  const double G = v1 * d2.cdf(v1) - d2.integrated_cdf(v1);
  return detail::offpath_value(v1, d2.cdf(v1), G, p, c, k);
}

// E[(v2 - v1)^+ | belief], bidder 2's payoff from rejecting.
inline double rejection_value(double v2, const Belief& belief,
                              const Distribution& d1) {
  if (belief.kind == Belief::Kind::point || !(belief.c > belief.a))
    return std::max(v2 - belief.a, 0.0);
  const double mass = d1.cdf(belief.c) - d1.cdf(belief.a);
  if (!(mass > 0.0)) return std::max(v2 - belief.a, 0.0);
  const double m = std::clamp(v2, belief.a, belief.c);
  const double part = v2 * (d1.cdf(m) - d1.cdf(belief.a)) - d1.partial_moment(belief.a, m);
  return std::max(part / mass, 0.0);
}

// Pointwise decision of type v2. Ties go to the bribe, then to acceptance.
inline Response respond(double v2, const Proposal& p, const Belief& belief,
                        const Distribution& d1) {
  const double reject = rejection_value(v2, belief, d1);
  const double take_r = v2 - p.r;
  if (p.b >= reject && p.b >= take_r) return Response::accept_bribe;
  if (take_r >= reject) return Response::accept_request;
  return Response::reject;
}

namespace detail {

// sup { x in [lo, hi] : pred(x) }, pred true on a lower interval.
template <class Pred>
double lower_set_sup(double lo, double hi, Pred&& pred) {
  if (!pred(lo)) return lo;
  if (pred(hi)) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double m = 0.5 * (lo + hi);
    if (pred(m)) lo = m; else hi = m;
  }
  return lo;
}

// inf { x in [lo, hi] : pred(x) }, pred true on an upper interval; hi when
// empty.
template <class Pred>
double upper_set_inf(double lo, double hi, Pred&& pred) {
  if (pred(lo)) return lo;
  if (!pred(hi)) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double m = 0.5 * (lo + hi);
    if (pred(m)) hi = m; else lo = m;
  }
  return hi;
}

}  // namespace detail

// Bidder 2's cutoff best response. Point beliefs are solved exactly: accept b
// iff v2 <= b + min(v*, r); the request is taken above b + r when v* >= r and
// never otherwise.
inline CutoffPair best_response(const Proposal& p, const Belief& belief,
                                const Distribution& d1, const Distribution& d2) {
  validate_proposal(p);
  const double support_slack = 1e-12 * std::max(1.0, d1.hi());
  if (belief.a < d1.lo() - support_slack || belief.c > d1.hi() + support_slack ||
      belief.c < belief.a)
    throw std::invalid_argument("belief support outside bidder 1's type range");
  const double top = std::min(p.b + p.r, d2.hi());
  const double floor = std::min(d2.lo(), top);

  if (belief.kind == Belief::Kind::point || !(belief.c > belief.a)) {
    const double v = belief.a;
    const double vb = std::clamp(p.b + std::min(v, p.r), floor, top);
    const double vr = v >= p.r ? top : d2.hi();
    return {vb, vr};
  }
  auto prefers_b = [&](double v2) {
    return p.b >= std::max(rejection_value(v2, belief, d1), v2 - p.r);
  };
  auto prefers_r = [&](double v2) {
    return v2 - p.r >= rejection_value(v2, belief, d1);
  };
  const double vb = detail::lower_set_sup(floor, top, prefers_b);
  const double vr = detail::upper_set_inf(top, d2.hi(), prefers_r);
  return {vb, std::max(vr, top)};
}

// ---------------------------------------------------------------------------
// On-path incentive compatibility.

template <class S>
concept ProposalRule = requires(const S& s, double v) {
  { s.bribe(v) } -> std::convertible_to<double>;
  { s.request(v) } -> std::convertible_to<double>;
  { s.reserve() } -> std::convertible_to<double>;
  { s.lo() } -> std::convertible_to<double>;
  { s.hi() } -> std::convertible_to<double>;
  { s.opponent() } -> std::convertible_to<const Distribution&>;
};

// A schedule whose bribes are multiplied by `scale` (negative control).
class ScaledBribeRule {
 public:
  ScaledBribeRule(const BribeSchedule& base, double scale)
      : base_(&base), scale_(scale) {}
  double bribe(double v) const { return scale_ * base_->bribe(v); }
  double request(double v) const { return base_->request(v); }
  double reserve() const { return base_->reserve(); }
  double lo() const { return base_->lo(); }
  double hi() const { return base_->hi(); }
  const Distribution& opponent() const { return base_->opponent(); }

 private:
  const BribeSchedule* base_;
  double scale_;
};

// Payoff of type v1 sending type t's proposal; bidder 2 uses the on-path rule
// (accept b iff v2 <= b(t) + r(t) + R).
template <ProposalRule S>
double mimic_payoff(const S& s, double v1, double t) {
  const double b = s.bribe(t), r = s.request(t), R = s.reserve();
  const double F = s.opponent().cdf(b + r + R);
  return F * (std::max(v1 - R, 0.0) - b) + (1.0 - F) * r;
}

template <ProposalRule S, class TypeGrid, class MimicGrid>
AuditReport ic_audit(const S& s, const TypeGrid& types, const MimicGrid& mimics,
                     double tol = 1e-8, unsigned threads = 1) {
  const std::vector<double> tv(std::begin(types), std::end(types));
  const std::vector<double> mv(std::begin(mimics), std::end(mimics));
  std::vector<Witness> best(tv.size());
  parallel_for(tv.size(), threads, [&](std::size_t i) {
    const double v1 = tv[i];
    const double own = mimic_payoff(s, v1, v1);
    Witness w{v1, 0.0, v1, {s.bribe(v1), s.request(v1)}, {}};
    for (double t : mv) {
      const double gap = mimic_payoff(s, v1, t) - own;
      if (gap > w.gap) {
        w.gap = gap;
        w.t = t;
        w.proposal = {s.bribe(t), s.request(t)};
      }
    }
    best[i] = w;
  });
  AuditReport rep;
  rep.name = "ic";
  rep.tolerance = tol;
  rep.max_violation = 0.0;
  std::ostringstream g;
  g << tv.size() << " types x " << mv.size() << " mimics";
  rep.grid_spec = g.str();
  for (const auto& w : best) {
    if (w.gap > tol) rep.witnesses.push_back(w);
    if (w.gap > rep.max_violation) {
      rep.max_violation = w.gap;
      if (w.gap > tol) rep.witness = w;
    }
  }
  rep.counts["types"] = static_cast<long>(tv.size());
  rep.counts["mimics"] = static_cast<long>(mv.size());
  return rep;
}

// ---------------------------------------------------------------------------
// D1 refinement.

// Equilibrium payoff and F2 terms on a fixed type grid, for fast evaluation
// of pi(v1, b, r, c) - pi(v1) over many cutoff pairs.
class DeviationGrid {
 public:
  DeviationGrid(const BribeSchedule& s, std::size_t n)
      : s_(&s), types_(uniform_grid(s.lo(), s.hi(), n)) {
    const Distribution& d2 = s.opponent();
    for (double v : types_) {
      pi_.push_back(s.payoff(v));
      F_.push_back(d2.cdf(v));
      G_.push_back(v * d2.cdf(v) - d2.integrated_cdf(v));
    }
  }

  const BribeSchedule& schedule() const { return *s_; }
  const std::vector<double>& types() const { return types_; }
  std::size_t size() const { return types_.size(); }

  struct Max {
    double gap;
    double v1;
  };

  // max over types of deviation - equilibrium payoff. With `polish`, the
  // grid maximum is refined by golden-section search on its neighbours.
  Max max_gap(const Proposal& p, const CutoffPair& c, bool polish) const {
    const auto k = detail::cutoff_terms(c, s_->opponent());
    std::size_t arg = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < types_.size(); ++i) {
      const double g = detail::offpath_value(types_[i], F_[i], G_[i], p, c, k) - pi_[i];
      if (g > best) {
        best = g;
        arg = i;
      }
    }
    Max m{best, types_[arg]};
    if (polish) m = golden(p, c, k, arg, m);
    return m;
  }

  double gap_at(double v1, const Proposal& p, const CutoffPair& c) const {
    return gap_direct(v1, p, c, detail::cutoff_terms(c, s_->opponent()));
  }

 private:
  double gap_direct(double v1, const Proposal& p, const CutoffPair& c,
                    const detail::CutoffTerms& k) const {
    const Distribution& d2 = s_->opponent();
    const double G = v1 * d2.cdf(v1) - d2.integrated_cdf(v1);
    return detail::offpath_value(v1, d2.cdf(v1), G, p, c, k) - s_->payoff(v1);
  }

  Max golden(const Proposal& p, const CutoffPair& c, const detail::CutoffTerms& k,
             std::size_t arg, Max m) const {
    double a = types_[arg == 0 ? 0 : arg - 1];
    double d = types_[std::min(arg + 1, types_.size() - 1)];
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = d - inv_phi * (d - a), x2 = a + inv_phi * (d - a);
    double f1 = gap_direct(x1, p, c, k), f2 = gap_direct(x2, p, c, k);
    for (int it = 0; it < 60 && d - a > 1e-13 * std::max(1.0, d); ++it) {
      if (f1 >= f2) {
        d = x2;
        x2 = x1;
        f2 = f1;
        x1 = d - inv_phi * (d - a);
        f1 = gap_direct(x1, p, c, k);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (d - a);
        f2 = gap_direct(x2, p, c, k);
      }
    }
    if (f1 > m.gap) m = {f1, x1};
    if (f2 > m.gap) m = {f2, x2};
    return m;
  }

  const BribeSchedule* s_;
  std::vector<double> types_;
  std::vector<double> pi_, F_, G_;
};

struct GapResult {
  double gap;
  double argmax_v1;
};

// M(v2b, v2r) = max over types of pi(v1, b, r, v2b, v2r) - pi(v1): negative
// when no type gains from the deviation.
inline GapResult d1_max_gap(const Proposal& p, const CutoffPair& c,
                            const BribeSchedule& s, const Distribution& d2,
                            std::size_t type_grid = 257) {
  validate_proposal(p);
  validate_cutoffs(p, c, d2);
  const DeviationGrid grid(s, type_grid);
  const auto m = grid.max_gap(p, c, true);
  return {m.gap, m.v1};
}

struct D1Options {
  std::size_t type_grid = 257;
  std::size_t cutoff_grid = 64;
  double tolerance = 1e-8;
  unsigned threads = 1;
};

enum class D1Case { fact3, fact4, zero_bribe, no_belief, tangency };

inline std::string_view to_string(D1Case c) {
  switch (c) {
    case D1Case::fact3: return "fact3";
    case D1Case::fact4: return "fact4";
    case D1Case::zero_bribe: return "zero_bribe";
    case D1Case::no_belief: return "no_profitable_belief";
    case D1Case::tangency: return "tangency";
  }
  return "?";
}

struct D1Outcome {
  Proposal proposal;
  D1Case kind = D1Case::no_belief;
  CutoffPair cutoffs;               // response that deters the proposal
  double max_gap = 0.0;             // max deviation gain under `cutoffs`
  double argmax_v1 = 0.0;
  std::optional<double> v_star;     // tangency belief
  double tangency_slack = 0.0;      // |v2b* - (b(v*) + v*)|
  double sampled_max = 0.0;         // max M over the cutoff rectangle
};

// Checks one off-path proposal. Proposals with r <= lo1 or b >= hi2 - lo1
// are answered directly; otherwise the admissible cutoff rectangle is sampled
// and, if some belief would make the deviation profitable, the tangency
// belief v* is located and its best response is checked.
inline D1Outcome d1_check_proposal(const Proposal& p, const DeviationGrid& grid,
                                   const Distribution& d1, const Distribution& d2,
                                   const D1Options& opts = {}) {
  validate_proposal(p);
  const BribeSchedule& s = grid.schedule();
  const double lo1 = s.lo(), hi2 = d2.hi();
  D1Outcome out;
  out.proposal = p;
  auto finish = [&](D1Case kind, CutoffPair c) {
    out.kind = kind;
    out.cutoffs = c;
    const auto m = grid.max_gap(p, c, true);
    out.max_gap = m.gap;
    out.argmax_v1 = m.v1;
    return out;
  };

  if (p.r <= lo1) {
    const double x = std::min(p.b + p.r, hi2);
    return finish(D1Case::fact3, {x, x});
  }
  if (p.b >= hi2 - lo1) return finish(D1Case::fact4, {hi2, hi2});
  if (p.b == 0.0 && lo1 == 0.0)
    return finish(D1Case::zero_bribe, best_response(p, Belief::point(lo1), d1, d2));

  const double top = std::min(p.b + p.r, hi2);
  const double vb_lo = p.b + lo1;
  const std::size_t n = std::max<std::size_t>(opts.cutoff_grid, 2);
  double best = -std::numeric_limits<double>::infinity();
  CutoffPair arg{vb_lo, hi2};
  for (std::size_t i = 0; i < n; ++i) {
    const double vb = vb_lo + (top - vb_lo) * static_cast<double>(i) / (n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double vr = top + (hi2 - top) * static_cast<double>(j) / (n - 1);
      const CutoffPair c{std::min(vb, top), std::max(vr, top)};
      auto m = grid.max_gap(p, c, false);
      if (m.gap > -1e-4) m = grid.max_gap(p, c, true);
      if (m.gap > best) {
        best = m.gap;
        arg = c;
      }
    }
  }
  out.sampled_max = best;
  if (best <= opts.tolerance) {
    out.kind = D1Case::no_belief;
    out.cutoffs = arg;
    out.max_gap = best;
    return out;
  }

  // M is negative at (b + lo1, hi2) and positive at `arg`: locate M = 0 on
  // the segment between them.
  const CutoffPair anchor{vb_lo, hi2};
  auto at = [&](double t) {
    return CutoffPair{anchor.v2_b + t * (arg.v2_b - anchor.v2_b),
                      anchor.v2_r + t * (arg.v2_r - anchor.v2_r)};
  };
  double ta = 0.0, tb = 1.0;
  auto ma = grid.max_gap(p, anchor, true);
  if (ma.gap >= 0.0) {
    // No sign change: the least favourable belief already gains.
    return finish(D1Case::tangency, best_response(p, Belief::point(lo1), d1, d2));
  }
  DeviationGrid::Max root = ma;
  for (int it = 0; it < 80 && tb - ta > 1e-15; ++it) {
    const double tm = 0.5 * (ta + tb);
    const auto m = grid.max_gap(p, at(tm), true);
    if (m.gap >= 0.0) {
      tb = tm;
      root = m;
    } else {
      ta = tm;
    }
  }
  const CutoffPair star = at(tb);
  const double v_star = std::clamp(root.v1, lo1, s.hi());
  out.v_star = v_star;
  out.tangency_slack = std::abs(star.v2_b - (s.bribe(v_star) + v_star));
  return finish(D1Case::tangency, best_response(p, Belief::point(v_star), d1, d2));
}

// Proposals (b, r) with b on the open interval (b_lo, b_hi) and r on
// (r_lo, r_hi], nb x nr points, b-major.
inline std::vector<Proposal> proposal_grid(double b_lo, double b_hi, std::size_t nb,
                                           double r_lo, double r_hi, std::size_t nr) {
  std::vector<Proposal> g;
  for (std::size_t i = 0; i < nb; ++i) {
    const double b = b_lo + (b_hi - b_lo) * static_cast<double>(i + 1) / (nb + 1);
    for (std::size_t j = 0; j < nr; ++j) {
      const double r = r_lo + (r_hi - r_lo) * static_cast<double>(j + 1) / nr;
      g.push_back({b, r});
    }
  }
  return g;
}

struct D1Report {
  AuditReport summary;
  std::vector<D1Outcome> outcomes;  // in grid order
};

inline D1Report d1_audit(const BribeSchedule& s, const Distribution& d1,
                         const Distribution& d2,
                         const std::vector<Proposal>& offpath,
                         const D1Options& opts = {}) {
  if (s.reserve() != 0.0)
    throw std::invalid_argument("d1_audit covers the no-reserve game only");
  if (s.trivial())
    throw std::invalid_argument("d1_audit requires a non-trivial schedule");
  const DeviationGrid grid(s, opts.type_grid);
  D1Report rep;
  rep.outcomes.resize(offpath.size());
  parallel_for(offpath.size(), opts.threads, [&](std::size_t i) {
    rep.outcomes[i] = d1_check_proposal(offpath[i], grid, d1, d2, opts);
  });

  AuditReport& a = rep.summary;
  a.name = "d1";
  a.tolerance = opts.tolerance;
  std::ostringstream g;
  g << offpath.size() << " proposals, " << opts.cutoff_grid << "x"
    << opts.cutoff_grid << " cutoffs, " << opts.type_grid << " types";
  a.grid_spec = g.str();
  for (const auto& o : rep.outcomes) {
    a.counts[std::string(to_string(o.kind))]++;
    if (o.max_gap > a.max_violation) a.max_violation = o.max_gap;
    if (o.max_gap > opts.tolerance) {
      Witness w{o.argmax_v1, o.max_gap, o.v_star.value_or(0.0), o.proposal,
                o.cutoffs};
      a.witnesses.push_back(w);
      if (!a.witness || w.gap > a.witness->gap) a.witness = w;
    }
  }
  a.counts["proposals"] = static_cast<long>(offpath.size());
  return rep;
}

// ---------------------------------------------------------------------------
// Dominance over alternative separating families.

// The family with requests gamma(v) = v + offset > v: bidder 2 never accepts
// the request, so each type is left with the bribe-only game and earns the
// ES payoff.
inline GeneralSchedule never_accepted_family(const ESEquilibrium& e,
                                             double offset) {
  if (!(offset > 0.0))
    throw std::invalid_argument("never-accepted family needs offset > 0");
  auto es = std::make_shared<const ESEquilibrium>(e);
  return GeneralSchedule::from_functions(
      e.lo(), e.hi(), [es](double v) { return es->bribe(v); },
      [offset](double v) { return v + offset; },
      [es](double v) { return es->payoff(v); }, [](double) { return false; });
}

template <class Grid>
AuditReport prop4_audit(const BribeSchedule& s, const GeneralSchedule& g,
                        const Distribution&, const Grid& grid,
                        double tol = 1e-9) {
  const double slack = 1e-12 * std::max(1.0, s.hi());
  if (std::abs(s.lo() - g.lo()) > slack || std::abs(s.hi() - g.hi()) > slack)
    throw std::invalid_argument("prop4_audit: mismatched type ranges");
  AuditReport rep;
  rep.name = "prop4";
  rep.tolerance = tol;
  long routed = 0, n = 0;
  for (double v : grid) {
    ++n;
    if (!g.request_acceptable(v)) ++routed;
    const double gap = s.payoff(v) - g.payoff(v);
    const double violation = 0.0 - gap;
    if (violation > rep.max_violation) {
      rep.max_violation = violation;
      if (violation > tol) rep.witness = Witness{v, violation, v, {}, {}};
    }
    if (violation > tol) rep.witnesses.push_back({v, violation, v, {}, {}});
  }
  std::ostringstream gs;
  gs << n << " types";
  rep.grid_spec = gs.str();
  rep.counts["types"] = n;
  rep.counts["es_routed"] = routed;
  return rep;
}

}  // namespace bribe

#endif  // BRIBE_VERIFICATION_HPP_
