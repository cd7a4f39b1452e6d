#include "csb/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace csb {

WeightSpec WeightSpec::utilitarian() { return {WeightFamily::Utilitarian, 0.0, 1.0}; }
WeightSpec WeightSpec::gini() { return {WeightFamily::Gini, 0.0, 1.0}; }

WeightSpec WeightSpec::dominance(double u) {
  require_probability(u);
  return {WeightFamily::Dominance, 0.0, u};
}

WeightSpec WeightSpec::lower_tail_gini(double u) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::invalid_argument("lower_tail_gini: u must be in (0,1]");
  }
  return {WeightFamily::LowerTailGini, 0.0, u};
}

WeightSpec WeightSpec::interquantile_gini(double u_lo, double u_hi) {
  require_probability(u_lo);
  require_probability(u_hi);
  if (!(u_lo < u_hi)) {
    throw std::invalid_argument("interquantile_gini: u_lo must be below u_hi");
  }
  return {WeightFamily::InterquantileGini, u_lo, u_hi};
}

double WeightSpec::cumulative(double tau) const {
  switch (family) {
    case WeightFamily::Utilitarian:
      return tau;
    case WeightFamily::Gini:
      return tau * (2.0 - tau);
    case WeightFamily::Dominance:
      return tau < u_hi ? tau : u_hi;
    case WeightFamily::LowerTailGini: {
      // Same parabola as Gini in the rescaled rank s = tau/u; exactly 1 at
      // and above the tail cutoff.
      const double s = tau / u_hi;
      return s < 1.0 ? s * (2.0 - s) : 1.0;
    }
    case WeightFamily::InterquantileGini: {
      if (tau <= u_lo) return 0.0;
      const double s = (tau - u_lo) / (u_hi - u_lo);
      return s < 1.0 ? s * (2.0 - s) : 1.0;
    }
  }
  throw std::logic_error("WeightSpec::cumulative: unreachable");
}

std::string WeightSpec::name() const {
  switch (family) {
    case WeightFamily::Utilitarian: return "utilitarian";
    case WeightFamily::Gini: return "gini";
    case WeightFamily::Dominance: return "dominance";
    case WeightFamily::LowerTailGini: return "lower_tail_gini";
    case WeightFamily::InterquantileGini: return "interquantile_gini";
  }
  throw std::logic_error("WeightSpec::name: unreachable");
}

Interval Interval::ordered(double a, double b, IntervalTag tag) {
  return a <= b ? Interval{a, b, tag} : Interval{b, a, tag};
}

Interval Interval::scaled(double s) const { return ordered(lo * s, hi * s, tag); }

namespace {

void require_proper(const StepCdf& f, const char* what) {
  if (!f.is_proper()) {
    throw std::domain_error(std::string(what) +
                            ": bound CDF does not reach 1, its upper quantiles "
                            "are infinite (support condition likely violated)");
  }
}

}  // namespace

double sw(const StepCdf& f, const WeightSpec& w) {
  require_proper(f, "sw");
  // Q^-(tau) is constant at points[i] on (cum[i-1], cum[i]], and W is the
  // exact antiderivative of the weight, so each segment integrates in closed
  // form.
  double acc = 0.0;
  double w_prev = 0.0;  // W(0) = 0 for every family
  const auto& pts = f.points();
  const auto& cum = f.cumprobs();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double w_cur = w.cumulative(cum[i]);
    acc += pts[i] * (w_cur - w_prev);
    w_prev = w_cur;
  }
  return acc;
}

double partial_quantile_integral(const StepCdf& f, double u) {
  require_probability(u);
  require_proper(f, "partial_quantile_integral");
  double acc = 0.0;
  double prev = 0.0;
  const auto& pts = f.points();
  const auto& cum = f.cumprobs();
  for (std::size_t i = 0; i < pts.size() && prev < u; ++i) {
    const double cur = cum[i] < u ? cum[i] : u;
    acc += pts[i] * (cur - prev);
    prev = cur;
  }
  return acc;
}

double gini_index(const StepCdf& f) {
  require_proper(f, "gini_index");
  const double m = f.mean();
  if (m == 0.0) {
    throw std::domain_error("gini_index: undefined for zero-mean distributions");
  }
  double acc = 0.0;
  double g_prev = 0.0;  // G(tau) = tau^2 - tau, the antiderivative of 2 tau - 1
  const auto& pts = f.points();
  const auto& cum = f.cumprobs();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double g_cur = cum[i] * cum[i] - cum[i];
    acc += pts[i] * (g_cur - g_prev);
    g_prev = g_cur;
  }
  return acc / m;
}

StepCdf truncate_lower(const StepCdf& f, double u) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::invalid_argument("truncate_lower: u must be in (0,1]");
  }
  require_proper(f, "truncate_lower");
  if (u == 1.0) return f;
  const auto& pts = f.points();
  const auto& cum = f.cumprobs();
  // Cut at Q^-(u): F(x)/u below it, 1 at and above it.
  std::size_t j = static_cast<std::size_t>(
      std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
  std::vector<double> points;
  std::vector<double> cum_out;
  points.reserve(j + 1);
  cum_out.reserve(j + 1);
  for (std::size_t i = 0; i < j; ++i) {
    const double v = cum[i] / u;
    // Division can round onto the cut value; merge such one-ulp slivers into
    // the cut atom.
    if (v >= 1.0 || (!cum_out.empty() && v <= cum_out.back())) continue;
    points.push_back(pts[i]);
    cum_out.push_back(v);
  }
  points.push_back(pts[j]);
  cum_out.push_back(1.0);
  return StepCdf::from_cdf_values(std::move(points), std::move(cum_out));
}

StepCdf truncate_range(const StepCdf& f, double u_lo, double u_hi) {
  require_probability(u_lo);
  require_probability(u_hi);
  if (!(u_lo < u_hi)) {
    throw std::invalid_argument("truncate_range: u_lo must be below u_hi");
  }
  require_proper(f, "truncate_range");
  const auto& pts = f.points();
  const auto& cum = f.cumprobs();
  const double d = u_hi - u_lo;
  std::size_t j = static_cast<std::size_t>(
      std::lower_bound(cum.begin(), cum.end(), u_hi) - cum.begin());
  std::vector<double> points;
  std::vector<double> cum_out;
  for (std::size_t i = 0; i < j; ++i) {
    if (cum[i] <= u_lo) continue;  // zero mass below the lower rank cut
    const double v = (cum[i] - u_lo) / d;
    if (v >= 1.0 || (!cum_out.empty() && v <= cum_out.back())) continue;
    points.push_back(pts[i]);
    cum_out.push_back(v);
  }
  points.push_back(pts[j]);
  cum_out.push_back(1.0);
  return StepCdf::from_cdf_values(std::move(points), std::move(cum_out));
}

Interval swtt_interval(const StepCdf& observed, const BoundsPair& b,
                       const WeightSpec& w) {
  require_proper(b.lb, "swtt_interval(lb)");
  require_proper(b.ub, "swtt_interval(ub)");
  const double base = sw(observed, w);
  return Interval::ordered(base - sw(b.lb, w), base - sw(b.ub, w),
                           IntervalTag::Sharp);
}

Interval att_interval(const StepCdf& observed, const BoundsPair& b) {
  return swtt_interval(observed, b, WeightSpec::utilitarian());
}

Interval att_interval_lower_tail(const StepCdf& observed, const BoundsPair& b,
                                 double u) {
  require_proper(b.lb, "att_interval_lower_tail(lb)");
  require_proper(b.ub, "att_interval_lower_tail(ub)");
  const double base = truncate_lower(observed, u).mean();
  return Interval::ordered(base - truncate_lower(b.lb, u).mean(),
                           base - truncate_lower(b.ub, u).mean(),
                           IntervalTag::Sharp);
}

Interval att_interval_range(const StepCdf& observed, const BoundsPair& b,
                            double u_lo, double u_hi) {
  require_proper(b.lb, "att_interval_range(lb)");
  require_proper(b.ub, "att_interval_range(ub)");
  const double base = truncate_range(observed, u_lo, u_hi).mean();
  return Interval::ordered(base - truncate_range(b.lb, u_lo, u_hi).mean(),
                           base - truncate_range(b.ub, u_lo, u_hi).mean(),
                           IntervalTag::Sharp);
}

namespace {

GiniDecomposition decompose(Interval att, Interval swtt, double observed_gini) {
  GiniDecomposition d;
  d.att = att;
  d.swtt = swtt;
  d.mean_component = att.scaled(1.0 - observed_gini);
  d.inequality_component = Interval{d.mean_component.lo - swtt.hi,
                                    d.mean_component.hi - swtt.lo,
                                    IntervalTag::Outerset};
  return d;
}

}  // namespace

GiniDecomposition gini_decomposition(const StepCdf& observed, const BoundsPair& b) {
  return decompose(att_interval(observed, b),
                   swtt_interval(observed, b, WeightSpec::gini()),
                   gini_index(observed));
}

GiniDecomposition gini_decomposition_lower_tail(const StepCdf& observed,
                                                const BoundsPair& b, double u) {
  return decompose(att_interval_lower_tail(observed, b, u),
                   swtt_interval(observed, b, WeightSpec::lower_tail_gini(u)),
                   gini_index(truncate_lower(observed, u)));
}

GiniDecomposition gini_decomposition_range(const StepCdf& observed,
                                           const BoundsPair& b, double u_lo,
                                           double u_hi) {
  return decompose(att_interval_range(observed, b, u_lo, u_hi),
                   swtt_interval(observed, b,
                                 WeightSpec::interquantile_gini(u_lo, u_hi)),
                   gini_index(truncate_range(observed, u_lo, u_hi)));
}

std::vector<DominancePoint> dominance_curve(const StepCdf& observed,
                                            const BoundsPair& b,
                                            std::span<const double> grid) {
  require_proper(b.lb, "dominance_curve(lb)");
  require_proper(b.ub, "dominance_curve(ub)");
  std::vector<DominancePoint> out;
  out.reserve(grid.size());
  for (double u : grid) {
    if (!(u > 0.0 && u <= 1.0)) {
      throw std::invalid_argument("dominance_curve: grid values must be in (0,1]");
    }
    const double base = partial_quantile_integral(observed, u);
    const Interval iv = Interval::ordered(
        base - partial_quantile_integral(b.lb, u),
        base - partial_quantile_integral(b.ub, u), IntervalTag::Sharp);
    const char* verdict =
        iv.lo > 0.0 ? "dominates" : (iv.hi < 0.0 ? "dominated" : "ambiguous");
    out.push_back({u, iv, verdict});
  }
  return out;
}

PolicyShares policy_shares(const StepCdf& observed, const StepCdf& counterfactual,
                           double mw, double wbar, double zero) {
  if (!(zero < mw && mw < wbar)) {
    throw std::invalid_argument("policy_shares: need zero < mw < wbar");
  }
  const double below =
      (observed.evaluate(mw) - observed.evaluate(zero)) -
      (counterfactual.evaluate(mw) - counterfactual.evaluate(zero));
  const double above =
      (observed.evaluate(wbar) - observed.evaluate(mw)) -
      (counterfactual.evaluate(wbar) - counterfactual.evaluate(mw));
  return {below, above, above + below};
}

}  // namespace csb
