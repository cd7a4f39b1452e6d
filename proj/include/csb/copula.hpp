#pragma once

namespace csb {

// Clayton copula C(u,v) = (max(u^-theta + v^-theta - 1, 0))^(-1/theta),
// theta > 0, with the grounded-boundary convention C = 0 when u or v is 0.
double clayton_copula(double u, double v, double theta);

enum class CopulaFamily { Clayton, Independence };

struct Copula {
  CopulaFamily family = CopulaFamily::Clayton;
  double theta = 1.0;

  static Copula clayton(double theta);
  static Copula independence();

  double value(double u, double v) const;
};

// Maps a marginal CDF value into the conditional-cell CDF value for each
// group, at fixed control share q = P(D=0):
//   control: C(v, q) / q        treated: (v - C(v, q)) / (1 - q)
// Both maps are continuous, strictly increasing bijections of [0,1] for the
// supported copulas, so conditional quantiles reduce to marginal quantiles
// at the inverse-transformed level.
struct GroupTransforms {
  Copula copula;
  double q;

  GroupTransforms(Copula c, double q_share);

  double control(double v) const;
  double treated(double v) const;
  double control_inverse(double u) const;
  double treated_inverse(double u) const;
  double apply(int group, double v) const { return group == 0 ? control(v) : treated(v); }
  double invert(int group, double u) const {
    return group == 0 ? control_inverse(u) : treated_inverse(u);
  }
};

}  // namespace csb
