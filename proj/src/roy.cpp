#include "csb/roy.hpp"

#include <cmath>
#include <stdexcept>

#include "csb/rng.hpp"
#include "csb/special_functions.hpp"

namespace csb {

namespace {
constexpr double kSqrt2OverPi = 0.79788456080286535588;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

GaussianSelectionCdf::GaussianSelectionCdf(double sigma, double rho, int group)
    : sigma_(sigma), rho_(rho), group_(group) {
  if (!(sigma > 0.0)) throw std::invalid_argument("GaussianSelectionCdf: sigma must be positive");
  if (!(std::abs(rho) < 1.0)) {
    throw std::invalid_argument("GaussianSelectionCdf: |rho| must be < 1");
  }
  if (group != 0 && group != 1) {
    throw std::invalid_argument("GaussianSelectionCdf: group must be 0 or 1");
  }
}

double GaussianSelectionCdf::evaluate(double y) const {
  const double z = y / sigma_;
  const double joint = bvn_cdf_half(z, rho_);
  double v = group_ == 0 ? 2.0 * joint : 2.0 * (std_normal_cdf(z) - joint);
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

ExtendedReal GaussianSelectionCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u == 1.0) return ExtendedReal::pos_inf();
  double lo = -40.0 * sigma_, hi = 40.0 * sigma_;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (evaluate(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-13 * sigma_) break;
  }
  return ExtendedReal::finite(0.5 * (lo + hi));
}

ExtendedReal GaussianSelectionCdf::quantile_right(double u) const {
  // Continuous strictly increasing distribution: both quantiles coincide on
  // (0,1); only the endpoint conventions differ.
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u == 1.0) return ExtendedReal::pos_inf();
  return quantile_left(u);
}

CensoredBelowCdf::CensoredBelowCdf(std::shared_ptr<const AnalyticCdf> base,
                                   double floor)
    : base_(std::move(base)), floor_(floor), mass_at_floor_(base_->evaluate(floor)) {
  if (!(mass_at_floor_ > 0.0)) {
    throw std::invalid_argument("CensoredBelowCdf: floor carries no mass");
  }
}

double CensoredBelowCdf::evaluate(double y) const {
  if (y < floor_) return 0.0;
  return base_->evaluate(y);
}

double CensoredBelowCdf::left_limit(double y) const {
  if (y <= floor_) return 0.0;
  return base_->left_limit(y);
}

ExtendedReal CensoredBelowCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u <= mass_at_floor_) return ExtendedReal::finite(floor_);
  return base_->quantile_left(u);
}

ExtendedReal CensoredBelowCdf::quantile_right(double u) const {
  require_probability(u);
  if (u == 1.0) return ExtendedReal::pos_inf();
  if (u <= mass_at_floor_) return ExtendedReal::finite(floor_);
  return base_->quantile_right(u);
}

std::vector<double> CensoredBelowCdf::atoms() const {
  std::vector<double> a = {floor_};
  for (double x : base_->atoms()) {
    if (x > floor_) a.push_back(x);
  }
  return a;
}

RoyModel::RoyModel(RoyParams p) : p_(p) {
  if (!(p_.sigma0 > 0.0 && p_.sigma1 > 0.0)) {
    throw std::invalid_argument("RoyModel: sigmas must be positive");
  }
  if (!(std::abs(p_.rho0) < 1.0 && std::abs(p_.rho1) < 1.0)) {
    throw std::invalid_argument("RoyModel: |rho| must be < 1");
  }
  // Cholesky of [[s0^2, d s0 s1, r0 s0], [d s0 s1, s1^2, r1 s1], [r0 s0, r1 s1, 1]].
  const double s0 = p_.sigma0, s1 = p_.sigma1, d = p_.delta;
  const double l11 = s0;
  const double l21 = d * s1;
  const double t22 = s1 * s1 - l21 * l21;
  if (!(t22 > 0.0)) throw std::invalid_argument("RoyModel: covariance not positive definite");
  const double l22 = std::sqrt(t22);
  const double l31 = p_.rho0;
  const double l32 = (p_.rho1 * s1 - l31 * l21) / l22;
  const double t33 = 1.0 - l31 * l31 - l32 * l32;
  if (!(t33 > 0.0)) throw std::invalid_argument("RoyModel: covariance not positive definite");
  chol_ = {l11, l21, l22, l31, l32, std::sqrt(t33)};
}

std::shared_ptr<const AnalyticCdf> RoyModel::untreated_cell(int t, int d) const {
  if ((t != 0 && t != 1) || (d != 0 && d != 1)) {
    throw std::invalid_argument("RoyModel::untreated_cell: t, d must be 0 or 1");
  }
  const double sigma = t == 0 ? p_.sigma0 : p_.sigma1;
  const double rho = t == 0 ? p_.rho0 : p_.rho1;
  return std::make_shared<GaussianSelectionCdf>(sigma, rho, d);
}

std::shared_ptr<const AnalyticCdf> RoyModel::treated_outcome_cell() const {
  // Y11 = eta + U1 with Var = sigma1^2 + 2 rho1 sigma1 + 1 and
  // corr(Y11, eta) = (1 + rho1 sigma1) / sd.
  const double var = p_.sigma1 * p_.sigma1 + 2.0 * p_.rho1 * p_.sigma1 + 1.0;
  const double sd = std::sqrt(var);
  const double corr = (1.0 + p_.rho1 * p_.sigma1) / sd;
  return std::make_shared<GaussianSelectionCdf>(sd, corr, 1);
}

double RoyModel::horizontal_copula(double u, int t) const {
  require_probability(u);
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 0.5;
  const double rho = t == 0 ? p_.rho0 : p_.rho1;
  return bvn_cdf_half(inv_std_normal_cdf(u), rho);
}

double RoyModel::parallel_trends_gap() const {
  return 2.0 * kSqrt2OverPi * (p_.rho1 * p_.sigma1 - p_.rho0 * p_.sigma0);
}

double RoyModel::untreated_group_covariance(int t) const {
  const double sigma = t == 0 ? p_.sigma0 : p_.sigma1;
  const double rho = t == 0 ? p_.rho0 : p_.rho1;
  return rho * sigma * kInvSqrt2Pi;
}

RoyCellSamples RoyModel::sample_cells(std::size_t n_per_cell, std::uint64_t seed) const {
  RoyCellSamples out;
  out.g0.reserve(n_per_cell);
  out.g1.reserve(n_per_cell);
  out.h0.reserve(n_per_cell);
  out.h1.reserve(n_per_cell);
  CounterRng rng(seed, 7);
  // Draw latent triples until every cell is full; each draw lands in either
  // the control cells or the treatment cells.
  while (out.g0.size() < n_per_cell || out.g1.size() < n_per_cell ||
         out.h0.size() < n_per_cell || out.h1.size() < n_per_cell) {
    const double z0 = rng.next_gaussian();
    const double z1 = rng.next_gaussian();
    const double z2 = rng.next_gaussian();
    const double u0 = chol_[0] * z0;
    const double u1 = chol_[1] * z0 + chol_[2] * z1;
    const double eta = chol_[3] * z0 + chol_[4] * z1 + chol_[5] * z2;
    if (eta >= 0.0) {
      if (out.h0.size() < n_per_cell) out.h0.push_back(u0);
      if (out.h1.size() < n_per_cell) out.h1.push_back(eta + u1);
    } else {
      if (out.g0.size() < n_per_cell) out.g0.push_back(u0);
      if (out.g1.size() < n_per_cell) out.g1.push_back(u1);
    }
  }
  return out;
}

CensoredRoyModel::CensoredRoyModel(RoyParams p, double f0, double f1)
    : base(p), floor0(f0), floor1(f1) {
  if (!(floor1 > floor0)) {
    throw std::invalid_argument("CensoredRoyModel: the new floor must exceed the old one");
  }
}

std::shared_ptr<const AnalyticCdf> CensoredRoyModel::untreated_cell(int t, int d) const {
  return std::make_shared<CensoredBelowCdf>(base.untreated_cell(t, d), floor0);
}

std::shared_ptr<const AnalyticCdf> CensoredRoyModel::treated_outcome_cell() const {
  return std::make_shared<CensoredBelowCdf>(base.treated_outcome_cell(), floor1);
}

}  // namespace csb
