#pragma once

#include <span>
#include <string>
#include <vector>

#include "csb/bounds.hpp"
#include "csb/step_cdf.hpp"

namespace csb {

enum class WeightFamily {
  Utilitarian,      // w(tau) = 1
  Gini,             // w(tau) = 2 (1 - tau)
  Dominance,        // w(tau) = 1{tau <= u}
  LowerTailGini,    // w(tau) = (2/u^2) (u - tau) 1{tau <= u}
  InterquantileGini // w(tau) = 2/(hi-lo)^2 (hi - tau) 1{lo < tau <= hi}
};

// Rank-weighting function restricted to the supported families. Each family
// is piecewise linear, so quantile-path integrals evaluate in closed form
// segment by segment; cumulative() is the exact antiderivative.
struct WeightSpec {
  WeightFamily family = WeightFamily::Utilitarian;
  double u_lo = 0.0;
  double u_hi = 1.0;

  static WeightSpec utilitarian();
  static WeightSpec gini();
  static WeightSpec dominance(double u);
  static WeightSpec lower_tail_gini(double u);
  static WeightSpec interquantile_gini(double u_lo, double u_hi);

  // W(tau) = integral of the weight from 0 to tau. The normalized families
  // reach exactly 1 at tau = 1 (dominance reaches u).
  double cumulative(double tau) const;
  double total() const { return cumulative(1.0); }
  std::string name() const;
};

enum class IntervalTag { Sharp, Outerset };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  IntervalTag tag = IntervalTag::Sharp;

  static Interval ordered(double a, double b, IntervalTag tag);
  Interval scaled(double s) const;  // reorders when s < 0
  double width() const { return hi - lo; }
};

// SW_w(F) = integral of w(tau) * Q^-_F(tau) over [0,1], exact on the step
// representation. Requires a proper distribution (terminal mass 1) with
// finite support; a defective bound envelope is reported as an error rather
// than silently clipped.
double sw(const StepCdf& f, const WeightSpec& w);

// Exact partial quantile integral over [0, u] (unnormalized second-order
// dominance curve ordinate).
double partial_quantile_integral(const StepCdf& f, double u);

// Gini inequality index: integral of (2 tau - 1) Q^-(tau) divided by the
// mean. Undefined at zero mean (throws). Conventionally defined for
// nonnegative outcomes; callers flag negative support as nonstandard.
double gini_index(const StepCdf& f);

// Distribution of the outcome conditional on rank <= u (lower truncation) or
// rank in (u_lo, u_hi] (range truncation), per the generalized quantile
// representation; exact on step functions.
StepCdf truncate_lower(const StepCdf& f, double u);
StepCdf truncate_range(const StepCdf& f, double u_lo, double u_hi);

// SWTT interval from CDF bounds: nonnegative weights make SW antitone in the
// CDF, so the interval ends come from evaluating SW at the two envelope
// CDFs. Tagged sharp (induced by sharp CDF bounds on monotone functionals).
Interval swtt_interval(const StepCdf& observed, const BoundsPair& b,
                       const WeightSpec& w);

// ATT intervals: utilitarian overall; truncated means for the tail variants.
Interval att_interval(const StepCdf& observed, const BoundsPair& b);
Interval att_interval_lower_tail(const StepCdf& observed, const BoundsPair& b,
                                 double u);
Interval att_interval_range(const StepCdf& observed, const BoundsPair& b,
                            double u_lo, double u_hi);

// Mean/inequality split of the Gini-family SWTT. The mean component scales
// the ATT interval by the point-identified (1 - Gini) of the observed
// (truncated) distribution; the inequality component is an outerset interval
// combined from the other two.
struct GiniDecomposition {
  Interval att;
  Interval swtt;
  Interval mean_component;
  Interval inequality_component;  // tagged Outerset
};

GiniDecomposition gini_decomposition(const StepCdf& observed, const BoundsPair& b);
GiniDecomposition gini_decomposition_lower_tail(const StepCdf& observed,
                                                const BoundsPair& b, double u);
GiniDecomposition gini_decomposition_range(const StepCdf& observed,
                                           const BoundsPair& b, double u_lo,
                                           double u_hi);

struct DominancePoint {
  double u;
  Interval interval;
  std::string verdict;  // "dominates", "dominated", or "ambiguous"
};

// Second-order dominance curve: interval on the partial quantile integral
// difference at each u in the grid.
std::vector<DominancePoint> dominance_curve(const StepCdf& observed,
                                            const BoundsPair& b,
                                            std::span<const double> grid);

// Employment-share changes around a new minimum wage:
//   delta_below = [F_obs(mw) - F_obs(zero)] - [F_cf(mw) - F_cf(zero)]
//   delta_above = the analog on (mw, wbar]
//   delta_employment = delta_above + delta_below (computed as the sum).
struct PolicyShares {
  double delta_below;
  double delta_above;
  double delta_employment;
};

PolicyShares policy_shares(const StepCdf& observed, const StepCdf& counterfactual,
                           double mw, double wbar, double zero = 0.0);

}  // namespace csb
