#include "csb/marginals.hpp"

#include <cmath>
#include <stdexcept>

#include "csb/special_functions.hpp"

namespace csb {

// ---------------------------------------------------------------- Poisson

PoissonCdf::PoissonCdf(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("PoissonCdf: lambda must be positive");
}

double PoissonCdf::evaluate(double y) const {
  if (y < 0.0) return 0.0;
  return poisson_cdf(static_cast<std::int64_t>(std::floor(y)), lambda_);
}

double PoissonCdf::left_limit(double y) const {
  if (y <= 0.0) return 0.0;
  const double f = std::floor(y);
  const std::int64_t k = (f == y) ? static_cast<std::int64_t>(f) - 1
                                  : static_cast<std::int64_t>(f);
  return poisson_cdf(k, lambda_);
}

ExtendedReal PoissonCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  const std::int64_t k = poisson_quantile_left(u, lambda_);
  if (k < 0) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(static_cast<double>(k));
}

ExtendedReal PoissonCdf::quantile_right(double u) const {
  require_probability(u);
  // sup{x : F(x) <= u} is the next support point after the last one with
  // CDF <= u; below the first atom the CDF is 0 <= u everywhere.
  if (u == 0.0) return ExtendedReal::finite(0.0);
  const std::int64_t k = poisson_quantile_left(u, lambda_);
  if (k < 0) return ExtendedReal::pos_inf();
  if (poisson_cdf(k, lambda_) == u) {
    return ExtendedReal::finite(static_cast<double>(k + 1));
  }
  return ExtendedReal::finite(static_cast<double>(k));
}

std::vector<double> PoissonCdf::atoms() const {
  std::vector<double> a;
  for (std::int64_t k = 0;; ++k) {
    a.push_back(static_cast<double>(k));
    if (poisson_cdf(k, lambda_) >= 1.0 - 1e-13) break;
    if (k > 100000) break;
  }
  return a;
}

// ---------------------------------------------------- left-censored chi^2

LeftCensoredChi2Cdf::LeftCensoredChi2Cdf(double cut, double dof)
    : cut_(cut), dof_(dof), mass_at_cut_(chi2_cdf(cut, dof)) {
  if (!(dof > 0.0)) throw std::invalid_argument("LeftCensoredChi2Cdf: dof must be positive");
  if (!(mass_at_cut_ > 0.0)) {
    throw std::invalid_argument("LeftCensoredChi2Cdf: cut carries no mass");
  }
}

double LeftCensoredChi2Cdf::evaluate(double y) const {
  if (y < cut_) return 0.0;
  return chi2_cdf(y, dof_);
}

double LeftCensoredChi2Cdf::left_limit(double y) const {
  if (y <= cut_) return 0.0;
  return chi2_cdf(y, dof_);
}

ExtendedReal LeftCensoredChi2Cdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u <= mass_at_cut_) return ExtendedReal::finite(cut_);
  if (u == 1.0) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(chi2_quantile(u, dof_));
}

ExtendedReal LeftCensoredChi2Cdf::quantile_right(double u) const {
  require_probability(u);
  if (u == 1.0) return ExtendedReal::pos_inf();
  if (u < mass_at_cut_) return ExtendedReal::finite(cut_);
  if (u == mass_at_cut_) return ExtendedReal::finite(cut_);
  return ExtendedReal::finite(chi2_quantile(u, dof_));
}

// --------------------------------------------------- right-censored chi^2

RightCensoredChi2Cdf::RightCensoredChi2Cdf(double cut, double dof)
    : cut_(cut), dof_(dof), cdf_below_cut_(chi2_cdf(cut, dof)) {
  if (!(dof > 0.0)) throw std::invalid_argument("RightCensoredChi2Cdf: dof must be positive");
  if (!(cdf_below_cut_ < 1.0)) {
    throw std::invalid_argument("RightCensoredChi2Cdf: cut carries no mass");
  }
}

double RightCensoredChi2Cdf::evaluate(double y) const {
  if (y >= cut_) return 1.0;
  return chi2_cdf(y, dof_);
}

double RightCensoredChi2Cdf::left_limit(double y) const {
  if (y > cut_) return 1.0;
  return chi2_cdf(y, dof_);
}

ExtendedReal RightCensoredChi2Cdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u > cdf_below_cut_) return ExtendedReal::finite(cut_);
  return ExtendedReal::finite(chi2_quantile(u, dof_));
}

ExtendedReal RightCensoredChi2Cdf::quantile_right(double u) const {
  require_probability(u);
  if (u == 1.0) return ExtendedReal::pos_inf();
  if (u >= cdf_below_cut_) return ExtendedReal::finite(cut_);
  if (u == 0.0) return ExtendedReal::finite(0.0);  // chi^2 mass starts at 0
  return ExtendedReal::finite(chi2_quantile(u, dof_));
}

// --------------------------------------------------------- bunching normal

BunchingNormalCdf::BunchingNormalCdf(double mu, double sigma, double cut,
                                     double window_end, double bunch_prob)
    : mu_(mu), sigma_(sigma), cut_(cut), window_end_(window_end),
      bunch_prob_(bunch_prob) {
  if (!(sigma > 0.0)) throw std::invalid_argument("BunchingNormalCdf: sigma must be positive");
  if (!(cut < window_end)) {
    throw std::invalid_argument("BunchingNormalCdf: cut must lie below window end");
  }
  if (!(bunch_prob >= 0.0 && bunch_prob <= 1.0)) {
    throw std::invalid_argument("BunchingNormalCdf: bunching probability outside [0,1]");
  }
  phi_cut_ = normal_cdf(cut_);
  phi_end_ = normal_cdf(window_end_);
  atom_top_ = phi_cut_ + bunch_prob_ * (phi_end_ - phi_cut_);
}

double BunchingNormalCdf::normal_cdf(double y) const {
  return std_normal_cdf((y - mu_) / sigma_);
}

double BunchingNormalCdf::normal_quantile(double p) const {
  return mu_ + sigma_ * inv_std_normal_cdf(p);
}

double BunchingNormalCdf::evaluate(double y) const {
  if (y < cut_ || y >= window_end_) return normal_cdf(y);
  if (y == cut_) return atom_top_;
  return atom_top_ + (1.0 - bunch_prob_) * (normal_cdf(y) - phi_cut_);
}

double BunchingNormalCdf::left_limit(double y) const {
  // Continuous everywhere except the atom at the cut.
  if (y <= cut_ || y >= window_end_) return normal_cdf(y);
  return atom_top_ + (1.0 - bunch_prob_) * (normal_cdf(y) - phi_cut_);
}

ExtendedReal BunchingNormalCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u == 1.0) return ExtendedReal::pos_inf();
  if (u <= phi_cut_) return ExtendedReal::finite(normal_quantile(u));
  if (u <= atom_top_) return ExtendedReal::finite(cut_);
  if (u < phi_end_) {
    const double p = phi_cut_ + (u - atom_top_) / (1.0 - bunch_prob_);
    return ExtendedReal::finite(normal_quantile(p < phi_end_ ? p : phi_end_));
  }
  return ExtendedReal::finite(normal_quantile(u));
}

ExtendedReal BunchingNormalCdf::quantile_right(double u) const {
  require_probability(u);
  if (u == 1.0) return ExtendedReal::pos_inf();
  if (u == 0.0) return ExtendedReal::neg_inf();  // normal support is all of R
  if (u < phi_cut_) return ExtendedReal::finite(normal_quantile(u));
  if (u < atom_top_) return ExtendedReal::finite(cut_);
  if (u < phi_end_) {
    const double p = phi_cut_ + (u - atom_top_) / (1.0 - bunch_prob_);
    return ExtendedReal::finite(normal_quantile(p < phi_end_ ? p : phi_end_));
  }
  return ExtendedReal::finite(normal_quantile(u));
}

// ------------------------------------------------------------------ normal

NormalCdf::NormalCdf(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("NormalCdf: sigma must be positive");
}

double NormalCdf::evaluate(double y) const {
  return std_normal_cdf((y - mu_) / sigma_);
}

ExtendedReal NormalCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u == 1.0) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(mu_ + sigma_ * inv_std_normal_cdf(u));
}

ExtendedReal NormalCdf::quantile_right(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  if (u == 1.0) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(mu_ + sigma_ * inv_std_normal_cdf(u));
}

// ------------------------------------------------------- conditional cells

ConditionalCdf::ConditionalCdf(std::shared_ptr<const AnalyticCdf> marginal,
                               GroupTransforms transforms, int group)
    : marginal_(std::move(marginal)), transforms_(transforms), group_(group) {
  if (group != 0 && group != 1) {
    throw std::invalid_argument("ConditionalCdf: group must be 0 or 1");
  }
}

double ConditionalCdf::evaluate(double y) const {
  return transforms_.apply(group_, marginal_->evaluate(y));
}

double ConditionalCdf::left_limit(double y) const {
  // The transforms are continuous, so they commute with the sup.
  return transforms_.apply(group_, marginal_->left_limit(y));
}

ExtendedReal ConditionalCdf::quantile_left(double u) const {
  require_probability(u);
  return marginal_->quantile_left(transforms_.invert(group_, u));
}

ExtendedReal ConditionalCdf::quantile_right(double u) const {
  require_probability(u);
  return marginal_->quantile_right(transforms_.invert(group_, u));
}

std::pair<std::shared_ptr<const AnalyticCdf>, std::shared_ptr<const AnalyticCdf>>
conditional_pair(std::shared_ptr<const AnalyticCdf> marginal, const Copula& copula,
                 double q) {
  GroupTransforms t(copula, q);
  auto control = std::make_shared<ConditionalCdf>(marginal, t, 0);
  auto treated = std::make_shared<ConditionalCdf>(marginal, t, 1);
  return {control, treated};
}

}  // namespace csb
