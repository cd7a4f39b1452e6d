#include "csb/dgp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csb/rng.hpp"
#include "csb/special_functions.hpp"

namespace csb {

std::string to_string(DgpFamily f) {
  switch (f) {
    case DgpFamily::Poisson: return "poisson";
    case DgpFamily::LeftCensoredChi2: return "left_censored_chi2";
    case DgpFamily::RightCensoredChi2: return "right_censored_chi2";
    case DgpFamily::BunchingNormal: return "bunching_normal";
    case DgpFamily::RoyGaussian: return "roy_gaussian";
    case DgpFamily::CensoredRoy: return "censored_roy";
  }
  throw std::logic_error("to_string(DgpFamily): unreachable");
}

DgpFamily dgp_family_from_string(const std::string& s) {
  if (s == "poisson") return DgpFamily::Poisson;
  if (s == "left_censored_chi2") return DgpFamily::LeftCensoredChi2;
  if (s == "right_censored_chi2") return DgpFamily::RightCensoredChi2;
  if (s == "bunching_normal") return DgpFamily::BunchingNormal;
  if (s == "roy_gaussian") return DgpFamily::RoyGaussian;
  if (s == "censored_roy") return DgpFamily::CensoredRoy;
  throw std::invalid_argument("unknown DGP family: " + s);
}

double DgpSpec::resolved_delta() const {
  return std::isnan(delta) ? rho0 * rho1 : delta;
}

void DgpSpec::validate() const {
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("DgpSpec: q must be in (0,1)");
  if (copula.family == CopulaFamily::Clayton && !(copula.theta > 0.0)) {
    throw std::invalid_argument("DgpSpec: clayton theta must be positive");
  }
  switch (family) {
    case DgpFamily::Poisson:
      if (!(lambda0 > 0.0 && lambda1 > 0.0)) {
        throw std::invalid_argument("DgpSpec: poisson means must be positive");
      }
      break;
    case DgpFamily::LeftCensoredChi2:
    case DgpFamily::RightCensoredChi2:
      if (!(k0 >= 1.0 && k1 >= 1.0)) {
        throw std::invalid_argument("DgpSpec: chi2 degrees of freedom must be >= 1");
      }
      break;
    case DgpFamily::BunchingNormal:
      if (!(sigma0 > 0.0 && sigma1 > 0.0)) {
        throw std::invalid_argument("DgpSpec: sigma must be positive");
      }
      if (!(c0 < w0 && c1 < w1)) {
        throw std::invalid_argument("DgpSpec: bunching cut must lie below the window end");
      }
      if (!(b0 >= 0.0 && b0 <= 1.0 && b1 >= 0.0 && b1 <= 1.0)) {
        throw std::invalid_argument("DgpSpec: bunching probability outside [0,1]");
      }
      break;
    case DgpFamily::RoyGaussian:
    case DgpFamily::CensoredRoy:
      if (!(sigma0 > 0.0 && sigma1 > 0.0)) {
        throw std::invalid_argument("DgpSpec: sigma must be positive");
      }
      if (!(std::abs(rho0) < 1.0 && std::abs(rho1) < 1.0)) {
        throw std::invalid_argument("DgpSpec: |rho| must be < 1");
      }
      if (family == DgpFamily::CensoredRoy && !(wlow1 > wlow0)) {
        throw std::invalid_argument("DgpSpec: wlow1 must exceed wlow0");
      }
      break;
  }
  if (grid_points < 3) throw std::invalid_argument("DgpSpec: grid too small");
}

std::string DgpSpec::to_config() const {
  std::ostringstream os;
  os.precision(17);
  os << "family=" << to_string(family) << "\n";
  os << "copula=" << (copula.family == CopulaFamily::Clayton ? "clayton" : "independence")
     << "\n";
  if (copula.family == CopulaFamily::Clayton) os << "theta=" << copula.theta << "\n";
  os << "q=" << q << "\n";
  switch (family) {
    case DgpFamily::Poisson:
      os << "lambda0=" << lambda0 << "\nlambda1=" << lambda1 << "\n";
      break;
    case DgpFamily::LeftCensoredChi2:
    case DgpFamily::RightCensoredChi2:
      os << "c0=" << c0 << "\nc1=" << c1 << "\nk0=" << k0 << "\nk1=" << k1 << "\n";
      break;
    case DgpFamily::BunchingNormal:
      os << "mu0=" << mu0 << "\nsigma0=" << sigma0 << "\nc0=" << c0 << "\nw0=" << w0
         << "\nb0=" << b0 << "\n";
      os << "mu1=" << mu1 << "\nsigma1=" << sigma1 << "\nc1=" << c1 << "\nw1=" << w1
         << "\nb1=" << b1 << "\n";
      break;
    case DgpFamily::RoyGaussian:
    case DgpFamily::CensoredRoy:
      os << "sigma0=" << sigma0 << "\nsigma1=" << sigma1 << "\ndelta=" << resolved_delta()
         << "\nrho0=" << rho0 << "\nrho1=" << rho1 << "\n";
      if (family == DgpFamily::CensoredRoy) {
        os << "wlow0=" << wlow0 << "\nwlow1=" << wlow1 << "\n";
      }
      break;
  }
  os << "grid=" << grid_points << "\n";
  return os.str();
}

DgpSpec DgpSpec::parse_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("dgp config line " + std::to_string(lineno) +
                                  ": expected key=value");
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto get_num = [&](const std::string& key, double dflt) {
    auto it = kv.find(key);
    if (it == kv.end()) return dflt;
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) {
      throw std::invalid_argument("dgp config: bad number for " + key);
    }
    return v;
  };

  DgpSpec s;
  auto fam = kv.find("family");
  if (fam == kv.end()) throw std::invalid_argument("dgp config: missing family");
  s.family = dgp_family_from_string(fam->second);
  const std::string cop = kv.count("copula") ? kv.at("copula") : "clayton";
  if (cop == "clayton") {
    s.copula = Copula::clayton(get_num("theta", 1.0));
  } else if (cop == "independence") {
    s.copula = Copula::independence();
  } else {
    throw std::invalid_argument("dgp config: unknown copula " + cop);
  }
  s.q = get_num("q", 0.5);
  s.lambda0 = get_num("lambda0", s.lambda0);
  s.lambda1 = get_num("lambda1", s.lambda1);
  s.c0 = get_num("c0", s.c0);
  s.c1 = get_num("c1", s.c1);
  s.k0 = get_num("k0", s.k0);
  s.k1 = get_num("k1", s.k1);
  s.mu0 = get_num("mu0", s.mu0);
  s.sigma0 = get_num("sigma0", s.sigma0);
  s.w0 = get_num("w0", s.w0);
  s.b0 = get_num("b0", s.b0);
  s.mu1 = get_num("mu1", s.mu1);
  s.sigma1 = get_num("sigma1", s.sigma1);
  s.w1 = get_num("w1", s.w1);
  s.b1 = get_num("b1", s.b1);
  s.delta = get_num("delta", s.delta);
  s.rho0 = get_num("rho0", s.rho0);
  s.rho1 = get_num("rho1", s.rho1);
  s.wlow0 = get_num("wlow0", s.wlow0);
  s.wlow1 = get_num("wlow1", s.wlow1);
  s.grid_points = static_cast<int>(get_num("grid", s.grid_points));
  s.validate();
  return s;
}

DgpSpec DgpSpec::parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dgp config: " + path);
  return parse_config(in);
}

namespace {

std::shared_ptr<const AnalyticCdf> make_marginal(const DgpSpec& s, int t) {
  switch (s.family) {
    case DgpFamily::Poisson:
      return std::make_shared<PoissonCdf>(t == 0 ? s.lambda0 : s.lambda1);
    case DgpFamily::LeftCensoredChi2:
      return std::make_shared<LeftCensoredChi2Cdf>(t == 0 ? s.c0 : s.c1,
                                                   t == 0 ? s.k0 : s.k1);
    case DgpFamily::RightCensoredChi2:
      return std::make_shared<RightCensoredChi2Cdf>(t == 0 ? s.c0 : s.c1,
                                                    t == 0 ? s.k0 : s.k1);
    case DgpFamily::BunchingNormal:
      return t == 0 ? std::make_shared<BunchingNormalCdf>(s.mu0, s.sigma0, s.c0, s.w0, s.b0)
                    : std::make_shared<BunchingNormalCdf>(s.mu1, s.sigma1, s.c1, s.w1, s.b1);
    default:
      throw std::logic_error("make_marginal: not a copula-built family");
  }
}

}  // namespace

DgpCells build_cells(const DgpSpec& spec) {
  spec.validate();
  DgpCells cells;
  cells.q = spec.q;
  if (spec.family == DgpFamily::RoyGaussian || spec.family == DgpFamily::CensoredRoy) {
    RoyParams p;
    p.sigma0 = spec.sigma0;
    p.sigma1 = spec.sigma1;
    p.delta = spec.resolved_delta();
    p.rho0 = spec.rho0;
    p.rho1 = spec.rho1;
    cells.q = 0.5;  // forced by the selection rule
    if (spec.family == DgpFamily::RoyGaussian) {
      RoyModel m(p);
      cells.g0 = m.untreated_cell(0, 0);
      cells.g1 = m.untreated_cell(1, 0);
      cells.h0 = m.untreated_cell(0, 1);
      cells.h1 = m.treated_outcome_cell();
      cells.truth = m.untreated_cell(1, 1);
    } else {
      CensoredRoyModel m(p, spec.wlow0, spec.wlow1);
      cells.g0 = m.untreated_cell(0, 0);
      cells.g1 = m.untreated_cell(1, 0);
      cells.h0 = m.untreated_cell(0, 1);
      cells.h1 = m.treated_outcome_cell();
      cells.truth = m.untreated_cell(1, 1);
    }
    return cells;
  }
  auto m0 = make_marginal(spec, 0);
  auto m1 = make_marginal(spec, 1);
  auto [g0, h0] = conditional_pair(m0, spec.copula, spec.q);
  auto [g1, h1] = conditional_pair(m1, spec.copula, spec.q);
  cells.g0 = g0;
  cells.h0 = h0;
  cells.g1 = g1;
  cells.truth = h1;  // F_{Y10|D=1}: the unobserved counterfactual cell
  cells.h1 = nullptr;
  return cells;
}

std::vector<double> evaluation_grid(const DgpSpec& spec, const DgpCells& cells) {
  std::vector<double> grid;
  if (spec.family == DgpFamily::Poisson) {
    // Discrete support is its own grid.
    const double lam = std::max(spec.lambda0, spec.lambda1);
    const std::int64_t top = poisson_quantile_left(1.0 - 1e-13, lam);
    for (std::int64_t k = 0; k <= top; ++k) grid.push_back(static_cast<double>(k));
    return grid;
  }
  auto finite_quantile = [](const EvaluableCdf& f, double u) {
    return f.quantile_left(u).value();
  };
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::vector<double> atom_list;
  for (const auto* cell : {cells.g0.get(), cells.g1.get()}) {
    lo = std::min(lo, finite_quantile(*cell, 1e-6));
    hi = std::max(hi, finite_quantile(*cell, 1.0 - 1e-6));
    for (double a : cell->atoms()) atom_list.push_back(a);
  }
  grid.reserve(static_cast<std::size_t>(spec.grid_points) + atom_list.size());
  for (int i = 0; i < spec.grid_points; ++i) {
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                            static_cast<double>(spec.grid_points - 1));
  }
  grid.insert(grid.end(), atom_list.begin(), atom_list.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

StepCdf discretize(const EvaluableCdf& f, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("discretize: empty grid");
  std::vector<double> points;
  std::vector<double> cum;
  for (double y : grid) {
    const double v = f.evaluate(y);
    if (v <= 0.0) continue;
    if (!cum.empty() && v <= cum.back()) continue;  // flat stretch
    points.push_back(y);
    cum.push_back(v);
  }
  if (points.empty()) {
    throw std::invalid_argument("discretize: grid carries no mass");
  }
  cum.back() = 1.0;  // tail mass beyond the grid lands on the last point
  return StepCdf::from_cdf_values(std::move(points), std::move(cum));
}

std::vector<double> sample(const EvaluableCdf& f, std::size_t n, std::uint64_t seed,
                           std::uint64_t stream) {
  std::vector<double> out;
  out.reserve(n);
  CounterRng rng(seed, stream);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(f.quantile_left(rng.next_unit()).value());
  }
  return out;
}

}  // namespace csb
