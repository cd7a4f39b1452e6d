#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csb/copula.hpp"
#include "csb/marginals.hpp"
#include "csb/roy.hpp"
#include "csb/step_cdf.hpp"

namespace csb {

enum class DgpFamily {
  Poisson,
  LeftCensoredChi2,
  RightCensoredChi2,
  BunchingNormal,
  RoyGaussian,
  CensoredRoy,
};

std::string to_string(DgpFamily f);
DgpFamily dgp_family_from_string(const std::string& s);

// Synthetic-DGP description, serializable to a key=value config. The copula
// families build both periods' conditional cells from marginal distributions
// of the untreated potential outcome; the Roy families define the cells
// structurally.
struct DgpSpec {
  DgpFamily family = DgpFamily::Poisson;
  Copula copula = Copula::clayton(1.0);
  double q = 0.5;

  // poisson
  double lambda0 = 1.0, lambda1 = 3.0;
  // censored chi^2 families
  double c0 = 5.0, c1 = 5.0, k0 = 5.0, k1 = 3.0;
  // bunching normal (mu/sigma default to the standard normal)
  double mu0 = 0.0, sigma0 = 1.0, w0 = 1.0, b0 = 0.25;
  double mu1 = 0.0, sigma1 = 1.0, w1 = 3.0, b1 = 0.75;
  // roy families
  double delta = std::numeric_limits<double>::quiet_NaN();  // defaults to rho0*rho1
  double rho0 = 0.5, rho1 = 0.5;
  double wlow0 = -1.0, wlow1 = 0.0;

  int grid_points = 2001;

  void validate() const;
  std::string to_config() const;
  static DgpSpec parse_config(std::istream& in);
  static DgpSpec parse_config_file(const std::string& path);

  double resolved_delta() const;
};

// The four conditional cells plus the unobserved truth. h1 is absent for the
// copula-built families, which model the untreated potential outcome only.
struct DgpCells {
  std::shared_ptr<const AnalyticCdf> g0;     // F_{Y0 | D=0}
  std::shared_ptr<const AnalyticCdf> g1;     // F_{Y1 | D=0}
  std::shared_ptr<const AnalyticCdf> h0;     // F_{Y0 | D=1}
  std::shared_ptr<const AnalyticCdf> h1;     // F_{Y1 | D=1}, may be null
  std::shared_ptr<const AnalyticCdf> truth;  // F_{Y10 | D=1}
  double q = 0.5;
};

DgpCells build_cells(const DgpSpec& spec);

// Evaluation grid: for discrete families the atom set; otherwise equispaced
// points spanning the 1e-6 .. 1-1e-6 quantile range of both periods'
// distributions, with every atom included exactly.
std::vector<double> evaluation_grid(const DgpSpec& spec, const DgpCells& cells);

// Step representation of an arbitrary CDF on a grid. Values are exact at the
// grid points; the upper tail mass beyond the last grid point is assigned to
// that point so the result is a proper distribution. Intended for export and
// welfare summaries, not for bound evaluation (which works on the exact
// quantile interface).
StepCdf discretize(const EvaluableCdf& f, std::span<const double> grid);

// Inverse-transform sampling, deterministic in (seed, stream).
std::vector<double> sample(const EvaluableCdf& f, std::size_t n,
                           std::uint64_t seed, std::uint64_t stream);

}  // namespace csb
