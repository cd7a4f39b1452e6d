#include "csb/step_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csb {

StepCdf StepCdf::from_samples(std::span<const double> values,
                              std::span<const double> weights) {
  if (values.empty()) {
    throw std::invalid_argument("StepCdf::from_samples: empty input");
  }
  if (!weights.empty() && weights.size() != values.size()) {
    throw std::invalid_argument(
        "StepCdf::from_samples: weights length does not match values");
  }
  std::vector<std::pair<double, double>> vw(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const double w = weights.empty() ? 1.0 : weights[i];
    if (!std::isfinite(v)) {
      throw std::invalid_argument("StepCdf::from_samples: non-finite value");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument(
          "StepCdf::from_samples: weight must be positive and finite");
    }
    vw[i] = {v, w};
  }
  std::sort(vw.begin(), vw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<double> points;
  std::vector<double> mass;
  points.reserve(vw.size());
  mass.reserve(vw.size());
  for (const auto& [v, w] : vw) {
    if (!points.empty() && points.back() == v) {
      mass.back() += w;
    } else {
      points.push_back(v);
      mass.push_back(w);
    }
  }
  double total = 0.0;
  for (double m : mass) total += m;

  std::vector<double> cum(mass.size());
  double running = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    running += mass[i];
    cum[i] = running / total;
  }
  cum.back() = 1.0;
  for (std::size_t i = 1; i < cum.size(); ++i) {
    // Weights are strictly positive, so this only trips on pathological
    // rounding (tiny weight next to a huge accumulated sum).
    if (!(cum[i] > cum[i - 1])) {
      throw std::invalid_argument(
          "StepCdf::from_samples: weight underflow produced a flat step");
    }
  }
  return StepCdf(std::move(points), std::move(cum));
}

StepCdf StepCdf::from_cdf_values(std::vector<double> points,
                                 std::vector<double> cumprobs,
                                 bool allow_defective_tail) {
  if (points.empty() || points.size() != cumprobs.size()) {
    throw std::invalid_argument(
        "StepCdf::from_cdf_values: empty or mismatched arrays");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) {
      throw std::invalid_argument("StepCdf::from_cdf_values: non-finite point");
    }
    if (i > 0 && !(points[i] > points[i - 1])) {
      throw std::invalid_argument(
          "StepCdf::from_cdf_values: points not strictly ascending");
    }
    if (!(cumprobs[i] > 0.0 && cumprobs[i] <= 1.0)) {
      throw std::invalid_argument(
          "StepCdf::from_cdf_values: cumulative probability outside (0,1]");
    }
    if (i > 0 && !(cumprobs[i] > cumprobs[i - 1])) {
      throw std::invalid_argument(
          "StepCdf::from_cdf_values: cumprobs not strictly ascending");
    }
  }
  if (std::abs(cumprobs.back() - 1.0) <= 1e-12) {
    cumprobs.back() = 1.0;
  } else if (!allow_defective_tail) {
    throw std::invalid_argument(
        "StepCdf::from_cdf_values: terminal cumulative probability not 1");
  }
  return StepCdf(std::move(points), std::move(cumprobs));
}

double StepCdf::evaluate(double y) const {
  // Greatest point <= y.
  auto it = std::upper_bound(points_.begin(), points_.end(), y);
  if (it == points_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double StepCdf::left_limit(double y) const {
  // Greatest point strictly below y.
  auto it = std::lower_bound(points_.begin(), points_.end(), y);
  if (it == points_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

ExtendedReal StepCdf::quantile_left(double u) const {
  require_probability(u);
  if (u == 0.0) return ExtendedReal::neg_inf();
  // First cumulative probability >= u.
  auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(points_[static_cast<std::size_t>(it - cum_.begin())]);
}

ExtendedReal StepCdf::quantile_right(double u) const {
  require_probability(u);
  // First cumulative probability strictly above u: the qualifying set is
  // everything below that jump point.
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(points_[static_cast<std::size_t>(it - cum_.begin())]);
}

std::vector<double> StepCdf::cdf_range() const {
  std::vector<double> r;
  r.reserve(cum_.size() + 1);
  r.push_back(0.0);
  r.insert(r.end(), cum_.begin(), cum_.end());
  return r;
}

double StepCdf::mean() const {
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    acc += points_[i] * (cum_[i] - prev);
    prev = cum_[i];
  }
  return acc;
}

ExtendedReal quantile_left_on_support(const EvaluableCdf& f, double u,
                                      std::span<const double> support) {
  require_probability(u);
  if (support.empty()) {
    throw std::invalid_argument("quantile_left_on_support: empty support");
  }
  // F is nondecreasing, so the qualifying prefix/suffix structure allows a
  // binary search over the support set.
  std::size_t lo = 0, hi = support.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (f.evaluate(support[mid]) >= u) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == support.size()) return ExtendedReal::pos_inf();
  return ExtendedReal::finite(support[lo]);
}

ExtendedReal quantile_right_on_support(const EvaluableCdf& f, double u,
                                       std::span<const double> support) {
  require_probability(u);
  if (support.empty()) {
    throw std::invalid_argument("quantile_right_on_support: empty support");
  }
  std::size_t lo = 0, hi = support.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (f.evaluate(support[mid]) <= u) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) return ExtendedReal::neg_inf();
  return ExtendedReal::finite(support[lo - 1]);
}

}  // namespace csb
