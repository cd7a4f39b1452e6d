#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csb/step_cdf.hpp"

namespace csb {

// The four observed cells of a two-group, two-period design plus the
// treatment share p = P(D=1). h1 is optional because bound computation only
// needs the other three cells; treatment effects need it.
struct GroupedSample {
  StepCdf g0;  // F_{Y0 | D=0}
  StepCdf g1;  // F_{Y1 | D=0}
  StepCdf h0;  // F_{Y0 | D=1}
  std::optional<StepCdf> h1;  // F_{Y1 | D=1}
  double p;

  GroupedSample(StepCdf g0_, StepCdf g1_, StepCdf h0_, std::optional<StepCdf> h1_,
                double p_);
  double q() const { return 1.0 - p; }
};

struct CrossingViolation {
  double y;
  double lb;
  double ub;
};

// Bound crossings are evidence against the identifying assumption, not an
// error; magnitudes are reported and the caller decides.
struct CrossingReport {
  std::vector<CrossingViolation> violations;
  double max_gap = 0.0;
  bool empty() const { return violations.empty(); }
};

struct SupportReport {
  bool checked = false;
  bool holds = true;
  double tolerance = 1e-9;
  std::vector<double> missing_points;  // atoms of h0 with no match in g0
  // The period-1 condition involves the unobserved counterfactual and cannot
  // be verified from data.
  std::string period1 = "assumed";
};

struct RawBounds {
  std::vector<double> eval;
  std::vector<double> lb;
  std::vector<double> ub;
};

// Envelope CDFs for the counterfactual F_{Y10|D=1} with the raw pre-envelope
// values and all diagnostics. The upper envelope can be defective (terminal
// mass < 1) when the support condition fails; lb always reaches 1.
struct BoundsPair {
  StepCdf lb;
  StepCdf ub;
  std::vector<double> eval_support;
  std::vector<double> raw_lb;
  std::vector<double> raw_ub;
  CrossingReport crossings;
  SupportReport support;
};

// Pointwise bound values at each evaluation point t:
//   u     = g1(t)
//   ub(t) = h0( Q^-_{g0}(u) )      (evaluate at +inf gives 1)
//   lb(t) = h0( Q^+_{g0}(u) - )    (left limit; -inf gives 0)
// Works on any EvaluableCdf implementations, so the same kernel serves
// empirical step functions and exact analytic oracles.
RawBounds raw_cs_values(const EvaluableCdf& g0, const EvaluableCdf& g1,
                        const EvaluableCdf& h0, std::vector<double> eval);
RawBounds raw_cs_values(const GroupedSample& sample);

// Right-continuous running-max envelope of raw values on a finite ascending
// support; value 0 below the first point. The raw maps are already
// nondecreasing compositions, so this is a numerical safety net.
StepCdf envelope(std::span<const double> support, std::span<const double> raw);

// Full bound computation on the observed support of g1.
BoundsPair cs_bounds(const GroupedSample& sample);

// Same kernel on arbitrary CDF implementations and a caller-chosen grid
// (used by the analytic oracle suite). No support check is performed.
BoundsPair cs_bounds_on(const EvaluableCdf& g0, const EvaluableCdf& g1,
                        const EvaluableCdf& h0, std::vector<double> eval);

// The upper envelope, documented as the changes-in-changes point estimate:
// valid as point identification for continuous strictly increasing outcome
// distributions.
StepCdf cic_point_estimate(const GroupedSample& sample);

// Comparison bounds using quantiles restricted to the observed support of g0
// and no left limit in the lower bound. Valid for discrete outcomes; known
// to collapse (lower = upper) in mixed-outcome censoring cases.
BoundsPair ai2006_discrete_bounds(const GroupedSample& sample);

enum class DistDidViolationKind { Decrease, BelowZero, AboveOne };

struct DistDidViolation {
  DistDidViolationKind kind;
  double from_y;
  double to_y;
  double magnitude;
};

// Distributional difference-in-differences estimate h0 + g1 - g0 on the
// union support. The raw signed function is reported as-is; the rearranged
// version (clamp to [0,1], then running max) is a proper CDF usable
// downstream. A non-empty violations list indicates the raw function is not
// a CDF, which is evidence against the distributional-DiD assumption.
struct DistDidEstimate {
  std::vector<double> eval;
  std::vector<double> raw;
  StepCdf rearranged;
  std::vector<DistDidViolation> violations;
};

DistDidEstimate dist_did(const GroupedSample& sample);

// Checks support(h0) within support(g0) by absolute point matching.
SupportReport check_support_condition(const GroupedSample& sample,
                                      double tolerance = 1e-9);

}  // namespace csb
