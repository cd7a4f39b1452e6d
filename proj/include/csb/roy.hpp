#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "csb/marginals.hpp"

namespace csb {

// Selection-on-gain Gaussian model: outcome U with scale sigma, selection
// indicator D = 1{eta >= 0}, corr(U, eta) = rho, both standard-normal-based.
// The conditional cells have closed forms through the half-plane bivariate
// normal CDF:
//   F_{U|D=0}(y) = 2 Phi2(y/sigma, 0; rho)
//   F_{U|D=1}(y) = 2 (Phi(y/sigma) - Phi2(y/sigma, 0; rho))
// Continuous and strictly increasing; quantiles by bracketed bisection.
class GaussianSelectionCdf final : public AnalyticCdf {
 public:
  GaussianSelectionCdf(double sigma, double rho, int group);
  double evaluate(double y) const override;
  double left_limit(double y) const override { return evaluate(y); }
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override { return {}; }

 private:
  double sigma_, rho_;
  int group_;
};

// Left-censoring wrapper: all mass at or below the floor collapses onto an
// atom at the floor (a wage floor in the structural story).
class CensoredBelowCdf final : public AnalyticCdf {
 public:
  CensoredBelowCdf(std::shared_ptr<const AnalyticCdf> base, double floor);
  double evaluate(double y) const override;
  double left_limit(double y) const override;
  ExtendedReal quantile_left(double u) const override;
  ExtendedReal quantile_right(double u) const override;
  std::vector<double> atoms() const override;

 private:
  std::shared_ptr<const AnalyticCdf> base_;
  double floor_;
  double mass_at_floor_;
};

struct RoyParams {
  double sigma0 = 1.0;
  double sigma1 = 1.0;
  double delta = 0.0;  // corr(U0, U1); delta = rho0*rho1 always yields a valid covariance
  double rho0 = 0.0;
  double rho1 = 0.0;
};

struct RoyCellSamples {
  std::vector<double> g0;  // Y0 | D=0
  std::vector<double> g1;  // Y1 | D=0
  std::vector<double> h0;  // Y0 | D=1
  std::vector<double> h1;  // Y1 | D=1
};

// Two-period Roy model: Y0 = U0, Y1 = eta D + U1, D = 1{eta >= 0}, with
// (U0, U1, eta) jointly normal. P(D=1) = 1/2 is forced by the model.
class RoyModel {
 public:
  explicit RoyModel(RoyParams p);

  const RoyParams& params() const { return p_; }
  double q() const { return 0.5; }

  // F_{Y_t0 | D=d} for the untreated potential outcome, t, d in {0,1}.
  std::shared_ptr<const AnalyticCdf> untreated_cell(int t, int d) const;

  // F_{Y_11 | D=1}: observed treated outcome eta + U1 given eta >= 0.
  std::shared_ptr<const AnalyticCdf> treated_outcome_cell() const;

  // Horizontal copula section C_{Y_t0,D}(u, 1/2) = Phi2(PhiInv(u), 0; rho_t).
  double horizontal_copula(double u, int t) const;

  // E[Y10 - Y00 | D=1] - E[Y10 - Y00 | D=0] = 2 sqrt(2/pi) (rho1 s1 - rho0 s0).
  double parallel_trends_gap() const;

  // Cov(Y_t0, D) = rho_t sigma_t / sqrt(2 pi); covariance stability holds iff
  // the two periods agree.
  double untreated_group_covariance(int t) const;

  // n draws per cell by simulating the joint system; deterministic in the
  // (seed, stream) key. Rejection-free: one latent triple per observation.
  RoyCellSamples sample_cells(std::size_t n_per_cell, std::uint64_t seed) const;

 private:
  RoyParams p_;
  std::array<double, 6> chol_;  // lower-triangular factor of the 3x3 covariance
};

// Censored two-period Roy model: the untreated potential outcomes are
// censored at floor0 in both periods, the treated observed outcome at floor1.
struct CensoredRoyModel {
  RoyModel base;
  double floor0;
  double floor1;

  CensoredRoyModel(RoyParams p, double floor0, double floor1);

  std::shared_ptr<const AnalyticCdf> untreated_cell(int t, int d) const;
  std::shared_ptr<const AnalyticCdf> treated_outcome_cell() const;
};

}  // namespace csb
