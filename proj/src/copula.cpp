#include "csb/copula.hpp"

#include <cmath>
#include <stdexcept>

#include "csb/evaluable_cdf.hpp"

namespace csb {

double clayton_copula(double u, double v, double theta) {
  if (!(theta > 0.0)) {
    throw std::invalid_argument("clayton_copula: theta must be positive");
  }
  require_probability(u);
  require_probability(v);
  if (u == 0.0 || v == 0.0) return 0.0;
  const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
  if (s <= 0.0) return 0.0;
  return std::pow(s, -1.0 / theta);
}

Copula Copula::clayton(double theta) {
  if (!(theta > 0.0)) {
    throw std::invalid_argument("Copula::clayton: theta must be positive");
  }
  return Copula{CopulaFamily::Clayton, theta};
}

Copula Copula::independence() { return Copula{CopulaFamily::Independence, 0.0}; }

double Copula::value(double u, double v) const {
  if (family == CopulaFamily::Independence) {
    require_probability(u);
    require_probability(v);
    return u * v;
  }
  return clayton_copula(u, v, theta);
}

GroupTransforms::GroupTransforms(Copula c, double q_share) : copula(c), q(q_share) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("GroupTransforms: q must be in (0,1)");
  }
}

double GroupTransforms::control(double v) const { return copula.value(v, q) / q; }

double GroupTransforms::treated(double v) const {
  return (v - copula.value(v, q)) / (1.0 - q);
}

double GroupTransforms::control_inverse(double u) const {
  require_probability(u);
  if (copula.family == CopulaFamily::Independence) return u;
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  // Solve C(v, q) = q u: v = ((qu)^-theta - q^-theta + 1)^(-1/theta).
  const double th = copula.theta;
  const double s = std::pow(q * u, -th) - std::pow(q, -th) + 1.0;
  double v = std::pow(s, -1.0 / th);
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

double GroupTransforms::treated_inverse(double u) const {
  require_probability(u);
  if (copula.family == CopulaFamily::Independence) return u;
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  if (copula.theta == 1.0) {
    // v - vq/(v + q - vq) = (1-q) u reduces to a quadratic in v.
    const double b = u * (1.0 - q);
    double v = 0.5 * (b + std::sqrt(b * b + 4.0 * u * q));
    if (v > 1.0) v = 1.0;
    return v;
  }
  // Monotone bisection; treated() is continuous and strictly increasing.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (treated(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace csb
