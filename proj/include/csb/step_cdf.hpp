#pragma once

#include <span>
#include <vector>

#include "csb/evaluable_cdf.hpp"

namespace csb {

// Finite right-continuous step distribution: strictly ascending jump points
// paired with strictly ascending cumulative probabilities in (0, 1]. The
// universal representation of empirical and discretized distributions.
//
// evaluate(y) is the cumulative probability at the greatest point <= y, and
// 0 when no point qualifies. All quantile and evaluation paths use
// comparisons only (no arithmetic), so the Lemma-style quantile brackets
// hold exactly in floating point.
//
// A StepCdf built from data always terminates at exactly 1. Bound envelopes
// may carry a defective tail (terminal mass < 1) when the identifying
// support condition fails; is_proper() distinguishes the two.
class StepCdf final : public EvaluableCdf {
 public:
  // Weighted empirical CDF. Duplicate values are merged; weights are
  // normalized to sum 1 (all weights default to 1 when omitted).
  static StepCdf from_samples(std::span<const double> values,
                              std::span<const double> weights = {});

  // Direct construction from validated arrays. The terminal cumulative
  // probability must equal 1 within 1e-12 and is stored exactly as 1;
  // larger drift is an error. With allow_defective_tail, a terminal value
  // below 1 is kept as-is.
  static StepCdf from_cdf_values(std::vector<double> points,
                                 std::vector<double> cumprobs,
                                 bool allow_defective_tail = false);

  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  double total_mass() const override { return cum_.back(); }

  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& cumprobs() const { return cum_; }
  std::size_t size() const { return points_.size(); }
  double min_point() const { return points_.front(); }
  double max_point() const { return points_.back(); }
  bool is_proper() const { return cum_.back() == 1.0; }

  // {0} united with the achieved cumulative probabilities.
  std::vector<double> cdf_range() const;

  // Expectation, exact on the step representation.
  double mean() const;

 private:
  StepCdf(std::vector<double> points, std::vector<double> cum)
      : points_(std::move(points)), cum_(std::move(cum)) {}

  std::vector<double> points_;
  std::vector<double> cum_;
};

// Generalized quantiles over a restricted domain S (finite ascending set):
// inf{x in S u {+inf} : F(x) >= u} and sup{x in S u {-inf} : F(x) <= u}.
// Unlike the real-line variants these can return the finite extremes of S
// at u = 0 resp. fail down to -inf when no point of S qualifies.
ExtendedReal quantile_left_on_support(const EvaluableCdf& f, double u,
                                      std::span<const double> support);
ExtendedReal quantile_right_on_support(const EvaluableCdf& f, double u,
                                       std::span<const double> support);

}  // namespace csb
