#include "csb/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace csb {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double inv_std_normal_cdf(double p) {
  // Wichura (1988), algorithm AS 241, PPND16.
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("inv_std_normal_cdf: p must be in (0,1)");
  }
  const double q = p - 0.5;
  double r;
  if (std::abs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -x : x;
}

namespace {

// Lower series: P(s,x) = x^s e^-x / Gamma(s+1) * sum x^n / ((s+1)...(s+n)).
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  double a = s;
  for (int n = 0; n < 1000; ++n) {
    a += 1.0;
    term *= x / a;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

// Upper continued fraction (modified Lentz): Q(s,x).
double gamma_q_contfrac(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 1000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double reg_lower_gamma(double s, double x) {
  if (!(s > 0.0)) {
    throw std::invalid_argument("reg_lower_gamma: s must be positive");
  }
  if (x < 0.0) throw std::invalid_argument("reg_lower_gamma: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (x < s + 1.0) return gamma_p_series(s, x);
  return 1.0 - gamma_q_contfrac(s, x);
}

double inv_reg_lower_gamma(double s, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("inv_reg_lower_gamma: p must be in (0,1)");
  }
  // Wilson-Hilferty start for the equivalent chi-squared quantile.
  const double k = 2.0 * s;
  const double z = inv_std_normal_cdf(p);
  const double t = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
  double x = 0.5 * k * t * t * t;
  if (!(x > 0.0)) x = 0.5 * std::exp((std::log(p) + std::lgamma(s + 1.0)) / s) * 2.0;
  if (!(x > 0.0) || !std::isfinite(x)) x = s;

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = reg_lower_gamma(s, x) - p;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double pdf =
        std::exp(-x + (s - 1.0) * std::log(x) - std::lgamma(s));
    double step = pdf > 0.0 ? f / pdf : 0.0;
    double next = x - step;
    if (!(next > lo && (next < hi))) {
      next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * x;
    }
    if (std::abs(next - x) <= 1e-15 * std::abs(x)) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

double chi2_cdf(double y, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("chi2_cdf: negative degrees of freedom");
  if (y <= 0.0) return 0.0;
  return reg_lower_gamma(0.5 * k, 0.5 * y);
}

double chi2_quantile(double p, double k) {
  if (!(k > 0.0)) throw std::invalid_argument("chi2_quantile: negative degrees of freedom");
  return 2.0 * inv_reg_lower_gamma(0.5 * k, p);
}

double poisson_cdf(std::int64_t k, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("poisson_cdf: lambda must be positive");
  if (k < 0) return 0.0;
  double term = std::exp(-lambda);
  double sum = term;
  double comp = 0.0;  // Kahan compensation
  for (std::int64_t i = 1; i <= k; ++i) {
    term *= lambda / static_cast<double>(i);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum < 1.0 ? sum : 1.0;
}

std::int64_t poisson_quantile_left(double u, double lambda) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::invalid_argument("poisson_quantile_left: u must be in (0,1]");
  }
  const std::int64_t cap =
      static_cast<std::int64_t>(lambda + 60.0 * std::sqrt(lambda) + 200.0);
  double term = std::exp(-lambda);
  double sum = term;
  double comp = 0.0;
  std::int64_t k = 0;
  while (sum < u) {
    if (k >= cap) return -1;
    ++k;
    term *= lambda / static_cast<double>(k);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return k;
}

namespace {

double bvn_integrand(double s, double slope) {
  return std_normal_pdf(s) * std_normal_cdf(slope * s);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double slope, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = bvn_integrand(lm, slope);
  const double frm = bvn_integrand(rm, slope);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(a, m, fa, flm, fm, left, slope, 0.5 * tol, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, slope, 0.5 * tol, depth - 1);
}

double integrate_bvn(double a, double b, double slope) {
  if (!(b > a)) return 0.0;
  const double fa = bvn_integrand(a, slope);
  const double fb = bvn_integrand(b, slope);
  const double fm = bvn_integrand(0.5 * (a + b), slope);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(a, b, fa, fm, fb, whole, slope, 1e-13, 48);
}

}  // namespace

double bvn_cdf_half(double x, double rho) {
  if (!(std::abs(rho) < 1.0)) {
    throw std::invalid_argument("bvn_cdf_half: |rho| must be < 1");
  }
  if (rho == 0.0) return 0.5 * std_normal_cdf(x);
  const double lo = -9.0;
  if (x <= lo) return 0.0;
  const double hi = x < 9.0 ? x : 9.0;
  const double slope = -rho / std::sqrt(1.0 - rho * rho);
  // Split at 0 where the conditional factor bends the hardest.
  double v;
  if (hi <= 0.0) {
    v = integrate_bvn(lo, hi, slope);
  } else {
    v = integrate_bvn(lo, 0.0, slope) + integrate_bvn(0.0, hi, slope);
  }
  if (v < 0.0) v = 0.0;
  if (v > 1.0) v = 1.0;
  return v;
}

}  // namespace csb
