#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/numeric.hpp"

namespace hurwitz {

namespace {

OscillatorModel at_energy(const OscillatorModel& model, double E) {
  const double half_split = 0.5 * (model.E1 - model.E2);
  OscillatorModel shifted = model;
  shifted.E1 = E + half_split;
  shifted.E2 = E - half_split;
  return shifted;
}

struct ParabolicSpectra {
  Spectrum u, v;
};

class ParabolicProblem {
 public:
  ParabolicProblem(const OscillatorModel& model, const MiczParams& m, const Grid& grid,
                   double E_ref, const ParabolicOptions& opt)
      : model_(model), micz_(m), grid_(grid), opt_(opt), k_(opt.max_nodes + 1) {
    hi_u_ = opt.hi_u > 0.0 ? opt.hi_u : default_extent(true, E_ref);
    hi_v_ = opt.hi_v > 0.0 ? opt.hi_v : default_extent(false, E_ref);
    // settle the domains once so that every trial energy sees the same grid
    const ParabolicSpectra s = solve(E_ref);
    hi_u_ = s.u.hi_used;
    hi_v_ = s.v.hi_used;
  }

  ParabolicSpectra solve(double E) const {
    const OscillatorModel at = at_energy(model_, E);
    ParabolicSpectra s;
    s.u = fd_eigensolve(build_para_u_problem(at, micz_, hi_u_), grid_, k_, opt_.solve);
    s.v = fd_eigensolve(build_para_v_problem(at, micz_, hi_v_), grid_, k_, opt_.solve);
    return s;
  }

  int states() const { return k_; }

 private:
  double default_extent(bool u_side, double E) const {
    const OscillatorModel at = at_energy(model_, E);
    const double Ea = u_side ? at.E1 : at.E2;
    const Potential8D& pot = u_side ? at.p1 : at.p2;
    const bool confining_extra =
        pot.family == Family::Super2 && (pot.a > 0.0 || pot.b > 0.0);
    if (!(Ea < 0.0) && !confining_extra) {
      throw DomainError("parabolic solve: factor energy must be negative for a bound state");
    }
    const double kappa = Ea < 0.0 ? std::sqrt(-0.5 * Ea) : 1.0;
    const double guess = 60.0 / kappa;
    RadialProblem pr = u_side ? build_para_u_problem(at, micz_, guess)
                              : build_para_v_problem(at, micz_, guess);
    Grid coarse = grid_;
    coarse.n = std::max(64, grid_.n / 4);
    const Spectrum s = fd_eigensolve_level(pr, coarse, k_);
    return std::min(guess * 4.0, wkb_extent(pr, s.eigenvalues.back(), 25.0));
  }

  OscillatorModel model_;
  MiczParams micz_;
  Grid grid_;
  ParabolicOptions opt_;
  int k_;
  double hi_u_ = 0.0, hi_v_ = 0.0;
};

double mismatch(const ParabolicSpectra& s, int nu, int nv) {
  // P = -mu_u and P = +mu_v
  return s.u.eigenvalues[nu] + s.v.eigenvalues[nv];
}

}  // namespace

std::vector<ParabolicState> parabolic_levels(const OscillatorModel& model, const MiczParams& m,
                                             const Grid& grid,
                                             std::pair<double, double> bracket,
                                             const ParabolicOptions& options) {
  const auto [E_lo, E_hi] = bracket;
  if (!(E_lo < E_hi) || !(E_hi < 0.0)) {
    throw DomainError("parabolic solve: bracket must satisfy E_lo < E_hi < 0");
  }
  const double Zs = std::max(1.0, std::abs(m.Z));
  if (std::abs(m.Z - model.Z()) > 1e-12 * Zs) {
    throw DomainError("parabolic solve: model charge Z1 + Z2 differs from the MICZ charge");
  }
  m.validate();

  const ParabolicProblem problem(model, m, grid, E_hi, options);
  std::map<double, ParabolicSpectra> cache;
  auto spectra = [&](double E) -> const ParabolicSpectra& {
    auto it = cache.find(E);
    if (it == cache.end()) it = cache.emplace(E, problem.solve(E)).first;
    return it->second;
  };

  const ParabolicSpectra& low = spectra(E_lo);
  const ParabolicSpectra& high = spectra(E_hi);

  std::vector<ParabolicState> found;
  for (int nu = 0; nu <= options.max_nodes; ++nu) {
    for (int nv = 0; nu + nv <= options.max_nodes; ++nv) {
      double f_lo = mismatch(low, nu, nv);
      double f_hi = mismatch(high, nu, nv);
      if ((f_lo > 0.0) == (f_hi > 0.0)) continue;
      // Illinois regula falsi: bracketing like bisection, superlinear on the
      // smooth mismatch curve
      double a = E_lo, b = E_hi;
      int side = 0;
      double E = 0.5 * (a + b);
      double E_prev = E_lo;
      for (int it = 0; it < 200; ++it) {
        E = (a * f_hi - b * f_lo) / (f_hi - f_lo);
        if (!(E > a && E < b)) E = 0.5 * (a + b);
        const double f = mismatch(spectra(E), nu, nv);
        if (f == 0.0) break;
        if ((f > 0.0) == (f_lo > 0.0)) {
          a = E;
          f_lo = f;
          if (side == -1) f_hi *= 0.5;
          side = -1;
        } else {
          b = E;
          f_hi = f;
          if (side == 1) f_lo *= 0.5;
          side = 1;
        }
        const double tol = options.energy_tol * std::abs(E);
        if (b - a < tol || std::abs(E - E_prev) < tol) break;
        E_prev = E;
      }
      const ParabolicSpectra& at = spectra(E);
      ParabolicState st;
      st.E = E;
      st.P = 0.5 * (-at.u.eigenvalues[nu] + at.v.eigenvalues[nv]);
      st.nodes_u = at.u.node_counts[nu];
      st.nodes_v = at.v.node_counts[nv];
      st.residual_u = at.u.residuals[nu];
      st.residual_v = at.v.residuals[nv];
      found.push_back(st);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const ParabolicState& x, const ParabolicState& y) { return x.E < y.E; });
  return found;
}

ParabolicState parabolic_joint_solve(const OscillatorModel& model, const MiczParams& m,
                                     const Grid& grid, std::pair<double, double> bracket,
                                     const ParabolicOptions& options) {
  const auto levels = parabolic_levels(model, m, grid, bracket, options);
  if (levels.empty()) {
    std::ostringstream msg;
    msg << "parabolic_joint_solve: no state in bracket [" << bracket.first << ", "
        << bracket.second << "]";
    throw BracketError(msg.str());
  }
  const double E0 = levels.front().E;
  ParabolicState best = levels.front();
  for (const auto& s : levels) {
    if (std::abs(s.E - E0) > 1e-9 * std::abs(E0)) break;
    if (std::abs(s.P) < std::abs(best.P)) best = s;
  }
  return best;
}

std::vector<SphericalState> spherical_levels(const OscillatorModel& model, const MiczParams& m,
                                             const Grid& radial_grid, const Grid& theta_grid,
                                             int levels, const SolveOptions& options) {
  if (levels < 1) throw DomainError("spherical_levels: levels must be positive");
  if (!is_spherically_separable(model)) {
    throw SeparabilityError(std::string("spherical chart requires ") + kSeparabilityCondition);
  }
  if (!(m.Z > 0.0)) throw DomainError("spherical_levels: bound states need Z > 0");
  const Spectrum theta = fd_eigensolve(build_theta_problem(m), theta_grid, levels, options);

  std::vector<SphericalState> all;
  for (int nt = 0; nt < levels; ++nt) {
    const double Lambda = theta.eigenvalues[nt];
    const double n_guess = 5.0 + levels + std::sqrt(std::max(Lambda, 0.0));
    const double hi = (2.0 * n_guess * n_guess + 30.0 * n_guess) / m.Z;
    const Spectrum radial =
        fd_eigensolve(build_coul9_problem(model, m, Lambda, hi), radial_grid, levels, options);
    for (int nr = 0; nr < levels; ++nr) {
      all.push_back({radial.eigenvalues[nr], Lambda, nt, nr});
    }
  }
  std::sort(all.begin(), all.end(),
            [](const SphericalState& x, const SphericalState& y) { return x.E < y.E; });
  all.resize(levels);
  return all;
}

}  // namespace hurwitz
