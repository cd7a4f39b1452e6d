#pragma once

#include <stdexcept>

#include "csb/extended_real.hpp"

namespace csb {

// Behavioral contract shared by empirical step distributions and analytic
// distribution families.
//
// evaluate is nondecreasing and right-continuous with limits 0 and 1;
// left_limit(y) = sup of evaluate over arguments strictly below y.
// quantile_left(u) = inf{x : F(x) >= u} and quantile_right(u) =
// sup{x : F(x) <= u}, both taken over the extended reals, so
// quantile_left(0) = -inf and quantile_right(1) = +inf. Ties at atom
// boundaries resolve by the set definitions verbatim; implementations must
// use comparisons only, no epsilon nudging.
//
// Implementations are immutable after construction and safe to share across
// threads.
class EvaluableCdf {
 public:
  virtual ~EvaluableCdf() = default;

  virtual double evaluate(double y) const = 0;
  virtual double left_limit(double y) const = 0;
  virtual ExtendedReal quantile_left(double u) const = 0;
  virtual ExtendedReal quantile_right(double u) const = 0;

  // Total mass; 1 for a proper distribution. Bound envelopes may be
  // defective when the identifying support condition fails.
  virtual double total_mass() const { return 1.0; }

  // Extended-real conventions: F(-inf) = 0, F(+inf) = total mass, and the
  // left limit at +inf is the total mass as well.
  double evaluate_ext(const ExtendedReal& y) const {
    if (y.is_neg_inf()) return 0.0;
    if (y.is_pos_inf()) return total_mass();
    return evaluate(y.value());
  }
  double left_limit_ext(const ExtendedReal& y) const {
    if (y.is_neg_inf()) return 0.0;
    if (y.is_pos_inf()) return total_mass();
    return left_limit(y.value());
  }
};

inline void require_probability(double u) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument("probability argument outside [0,1]");
  }
}

}  // namespace csb
