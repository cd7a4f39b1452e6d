#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "csb/copula.hpp"
#include "csb/evaluable_cdf.hpp"

namespace csb {

// A distribution with exact atom bookkeeping and exact (to root-finding
// precision) generalized quantiles. The synthetic-DGP oracle families all
// implement this, so bound formulas can be evaluated without smearing mass
// points or discretizing.
class AnalyticCdf : public EvaluableCdf {
 public:
  virtual std::vector<double> atoms() const = 0;
};

class PoissonCdf final : public AnalyticCdf {
 public:
  explicit PoissonCdf(double lambda);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override;
  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

// Chi-squared censored from below: all mass at or under the cut collapses
// onto an atom at the cut.
class LeftCensoredChi2Cdf final : public AnalyticCdf {
 public:
  LeftCensoredChi2Cdf(double cut, double dof);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return {cut_}; }

 private:
  double cut_;
  double dof_;
  double mass_at_cut_;
};

// Chi-squared censored from above: the upper tail collapses onto an atom at
// the cut, where the CDF reaches 1.
class RightCensoredChi2Cdf final : public AnalyticCdf {
 public:
  RightCensoredChi2Cdf(double cut, double dof);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return {cut_}; }

 private:
  double cut_;
  double dof_;
  double cdf_below_cut_;
};

// Normal outcome with a fraction of the mass on (cut, window_end) bunched
// onto an atom at the cut; strictly increasing but discontinuous at the cut.
class BunchingNormalCdf final : public AnalyticCdf {
 public:
  BunchingNormalCdf(double mu, double sigma, double cut, double window_end,
                    double bunch_prob);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return {cut_}; }

 private:
  double normal_cdf(double y) const;
  double normal_quantile(double p) const;

  double mu_, sigma_, cut_, window_end_, bunch_prob_;
  double phi_cut_, phi_end_, atom_top_;  // F(cut-), F(window_end), F(cut)
};

class NormalCdf final : public AnalyticCdf {
 public:
  NormalCdf(double mu, double sigma);
  double evaluate(double y) const override;
  double left_limit(double y) const override { return evaluate(y); }
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return {}; }

 private:
  double mu_, sigma_;
};

// Conditional cell of a marginal under a copula-stable dependence with group
// membership: the cell CDF is the group transform applied to the marginal
// CDF, so quantiles invert through the transform exactly.
class ConditionalCdf final : public AnalyticCdf {
 public:
  ConditionalCdf(std::shared_ptr<const AnalyticCdf> marginal,
                 GroupTransforms transforms, int group);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return marginal_->atoms(); }

 private:
  std::shared_ptr<const AnalyticCdf> marginal_;
  GroupTransforms transforms_;
  int group_;
};

// Conditional pair (control cell, treated cell) for one marginal; satisfies
// the mixture identity q * F0 + (1-q) * F1 = F by construction.
std::pair<std::shared_ptr<const AnalyticCdf>, std::shared_ptr<const AnalyticCdf>>
conditional_pair(std::shared_ptr<const AnalyticCdf> marginal, const Copula& copula,
                 double q);

}  // namespace csb
