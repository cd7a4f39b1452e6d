#include "csb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace csb {

namespace {
// Violations smaller than this are float noise, not evidence; genuine data
// violations are at least one observation's weight.
constexpr double kDiagnosticTol = 1e-12;
}  // namespace

GroupedSample::GroupedSample(StepCdf g0_, StepCdf g1_, StepCdf h0_,
                             std::optional<StepCdf> h1_, double p_)
    : g0(std::move(g0_)), g1(std::move(g1_)), h0(std::move(h0_)),
      h1(std::move(h1_)), p(p_) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("GroupedSample: p must lie strictly inside (0,1)");
  }
}

RawBounds raw_cs_values(const EvaluableCdf& g0, const EvaluableCdf& g1,
                        const EvaluableCdf& h0, std::vector<double> eval) {
  RawBounds out;
  out.eval = std::move(eval);
  out.lb.reserve(out.eval.size());
  out.ub.reserve(out.eval.size());
  for (double t : out.eval) {
    const double u = g1.evaluate(t);
    out.ub.push_back(h0.evaluate_ext(g0.quantile_left(u)));
    out.lb.push_back(h0.left_limit_ext(g0.quantile_right(u)));
  }
  return out;
}

RawBounds raw_cs_values(const GroupedSample& sample) {
  return raw_cs_values(sample.g0, sample.g1, sample.h0, sample.g1.points());
}

StepCdf envelope(std::span<const double> support, std::span<const double> raw) {
  if (support.empty() || support.size() != raw.size()) {
    throw std::invalid_argument("envelope: empty or mismatched arrays");
  }
  std::vector<double> points;
  std::vector<double> cum;
  double running = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    double v = raw[i];
    if (v < -1e-12 || v > 1.0 + 1e-12) {
      throw std::invalid_argument("envelope: raw value outside [0,1]");
    }
    v = std::clamp(v, 0.0, 1.0);
    if (v > running) {
      points.push_back(support[i]);
      cum.push_back(v);
      running = v;
    }
  }
  if (points.empty()) {
    // All raw values are 0; keep a single defective point so downstream
    // evaluation still works.
    points.push_back(support.back());
    cum.push_back(std::numeric_limits<double>::min());
  }
  return StepCdf::from_cdf_values(std::move(points), std::move(cum),
                                  /*allow_defective_tail=*/true);
}

namespace {

CrossingReport scan_crossings(std::span<const double> eval, const StepCdf& lb,
                              const StepCdf& ub) {
  CrossingReport report;
  for (double y : eval) {
    const double lv = lb.evaluate(y);
    const double uv = ub.evaluate(y);
    if (lv > uv + kDiagnosticTol) {
      report.violations.push_back({y, lv, uv});
      report.max_gap = std::max(report.max_gap, lv - uv);
    }
  }
  return report;
}

BoundsPair assemble_bounds(RawBounds raw) {
  BoundsPair b{envelope(raw.eval, raw.lb), envelope(raw.eval, raw.ub),
               std::move(raw.eval), std::move(raw.lb), std::move(raw.ub),
               CrossingReport{}, SupportReport{}};
  b.crossings = scan_crossings(b.eval_support, b.lb, b.ub);
  return b;
}

}  // namespace

BoundsPair cs_bounds(const GroupedSample& sample) {
  BoundsPair b = assemble_bounds(raw_cs_values(sample));
  b.support = check_support_condition(sample);
  return b;
}

BoundsPair cs_bounds_on(const EvaluableCdf& g0, const EvaluableCdf& g1,
                        const EvaluableCdf& h0, std::vector<double> eval) {
  return assemble_bounds(raw_cs_values(g0, g1, h0, std::move(eval)));
}

StepCdf cic_point_estimate(const GroupedSample& sample) {
  // Identical formula and code path as the upper bound.
  return cs_bounds(sample).ub;
}

BoundsPair ai2006_discrete_bounds(const GroupedSample& sample) {
  const auto& support = sample.g0.points();
  RawBounds raw;
  raw.eval = sample.g1.points();
  raw.lb.reserve(raw.eval.size());
  raw.ub.reserve(raw.eval.size());
  for (double t : raw.eval) {
    const double u = sample.g1.evaluate(t);
    raw.ub.push_back(
        sample.h0.evaluate_ext(quantile_left_on_support(sample.g0, u, support)));
    raw.lb.push_back(
        sample.h0.evaluate_ext(quantile_right_on_support(sample.g0, u, support)));
  }
  BoundsPair b = assemble_bounds(std::move(raw));
  b.support = check_support_condition(sample);
  return b;
}

DistDidEstimate dist_did(const GroupedSample& sample) {
  // Union support of the three cells.
  std::vector<double> eval;
  eval.reserve(sample.g0.size() + sample.g1.size() + sample.h0.size());
  eval.insert(eval.end(), sample.g0.points().begin(), sample.g0.points().end());
  eval.insert(eval.end(), sample.g1.points().begin(), sample.g1.points().end());
  eval.insert(eval.end(), sample.h0.points().begin(), sample.h0.points().end());
  std::sort(eval.begin(), eval.end());
  eval.erase(std::unique(eval.begin(), eval.end()), eval.end());

  DistDidEstimate out;
  out.eval = eval;
  out.raw.reserve(eval.size());
  for (double y : eval) {
    out.raw.push_back(sample.h0.evaluate(y) + sample.g1.evaluate(y) -
                      sample.g0.evaluate(y));
  }
  for (std::size_t i = 0; i < out.raw.size(); ++i) {
    if (out.raw[i] < -kDiagnosticTol) {
      out.violations.push_back({DistDidViolationKind::BelowZero, eval[i], eval[i],
                                -out.raw[i]});
    } else if (out.raw[i] > 1.0 + kDiagnosticTol) {
      out.violations.push_back({DistDidViolationKind::AboveOne, eval[i], eval[i],
                                out.raw[i] - 1.0});
    }
    if (i > 0 && out.raw[i] < out.raw[i - 1] - kDiagnosticTol) {
      out.violations.push_back({DistDidViolationKind::Decrease, eval[i - 1], eval[i],
                                out.raw[i - 1] - out.raw[i]});
    }
  }
  std::vector<double> clamped(out.raw.size());
  for (std::size_t i = 0; i < out.raw.size(); ++i) {
    clamped[i] = std::clamp(out.raw[i], 0.0, 1.0);
  }
  out.rearranged = envelope(eval, clamped);
  return out;
}

SupportReport check_support_condition(const GroupedSample& sample,
                                      double tolerance) {
  SupportReport report;
  report.checked = true;
  report.tolerance = tolerance;
  const auto& need = sample.h0.points();
  const auto& have = sample.g0.points();
  for (double y : need) {
    auto it = std::lower_bound(have.begin(), have.end(), y);
    bool matched = false;
    if (it != have.end() && std::abs(*it - y) <= tolerance) matched = true;
    if (it != have.begin() && std::abs(*(it - 1) - y) <= tolerance) matched = true;
    if (!matched) report.missing_points.push_back(y);
  }
  report.holds = report.missing_points.empty();
  return report;
}

}  // namespace csb
