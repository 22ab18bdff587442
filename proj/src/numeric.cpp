#include "hurwitz/numeric.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::Osc8: return "osc8";
    case ProblemKind::Coul9: return "coul9";
    case ProblemKind::Theta: return "theta";
    case ProblemKind::ParaU: return "para_u";
    case ProblemKind::ParaV: return "para_v";
    case ProblemKind::Qes: return "qes";
  }
  return "unknown";
}

double RadialProblem::p(double x) const {
  switch (weight) {
    case WeightKind::Power: return std::pow(x, weight_exponent);
    case WeightKind::SinPower: return std::pow(std::sin(x), weight_exponent);
    case WeightKind::Parabolic: return std::pow(x, weight_exponent + 1);
  }
  return 0.0;
}

double RadialProblem::w(double x) const {
  switch (weight) {
    case WeightKind::Power:
    case WeightKind::Parabolic: return std::pow(x, weight_exponent);
    case WeightKind::SinPower: return std::pow(std::sin(x), weight_exponent);
  }
  return 0.0;
}

double RadialProblem::U(double x) const {
  double cent = 0.0;
  switch (weight) {
    case WeightKind::Power: cent = kinetic * centrifugal_coeff / (x * x); break;
    case WeightKind::Parabolic: cent = centrifugal_coeff / x; break;
    case WeightKind::SinPower: {
      const double c = std::cos(0.5 * x), s = std::sin(0.5 * x);
      cent = centrifugal_coeff / (c * c) + secondary_coeff / (s * s);
      break;
    }
  }
  return cent + effective_term(x);
}

void RadialProblem::validate() const {
  if (!(hi > lo) || !(lo >= 0.0)) throw DomainError("radial problem: need hi > lo >= 0");
  if (!(kinetic > 0.0)) throw DomainError("radial problem: kinetic coefficient must be positive");
  if (weight == WeightKind::SinPower && hi > std::numbers::pi + 1e-15) {
    throw DomainError("radial problem: angular domain exceeds (0, pi)");
  }
}

void Grid::validate() const {
  if (n < 16) throw DomainError("grid: n must be at least 16");
  if (mapping == GridMapping::Exponential && !(scale > 0.0)) {
    throw DomainError("grid: exponential mapping needs a positive scale");
  }
}

namespace {

struct Mapping {
  double lo, hi, scale, beta;
  bool exponential;

  Mapping(const RadialProblem& pr, const Grid& g)
      : lo(pr.lo), hi(pr.hi), scale(g.scale), beta(0.0),
        exponential(g.mapping == GridMapping::Exponential) {
    if (exponential) beta = std::log1p((hi - lo) / scale);
  }
  double x(double t) const {
    return exponential ? lo + scale * std::expm1(beta * t) : lo + (hi - lo) * t;
  }
  double dx(double t) const {
    return exponential ? scale * beta * std::exp(beta * t) : hi - lo;
  }
};

struct Tridiagonal {
  std::vector<double> diag, off, nodes, sqrt_w;
};

Tridiagonal assemble(const RadialProblem& pr, const Grid& g, int n) {
  const Mapping map(pr, g);
  const double h = 1.0 / n;
  const int m = n - 1;
  Tridiagonal tri;
  tri.diag.resize(m);
  tri.off.resize(std::max(m - 1, 0));
  tri.nodes.resize(m);
  tri.sqrt_w.resize(m);

  std::vector<double> P_half(n);  // P at t = (j + 1/2) h, j = 0..n-1
  for (int j = 0; j < n; ++j) {
    const double t = (j + 0.5) * h;
    P_half[j] = pr.p(map.x(t)) / map.dx(t);
  }
  std::vector<double> W(m);
  for (int i = 0; i < m; ++i) {
    const double t = (i + 1) * h;
    const double x = map.x(t);
    tri.nodes[i] = x;
    W[i] = pr.w(x) * map.dx(t);
    tri.sqrt_w[i] = std::sqrt(W[i]);
    tri.diag[i] = pr.kinetic * (P_half[i] + P_half[i + 1]) / (h * h) / W[i] + pr.U(x);
  }
  for (int i = 0; i + 1 < m; ++i) {
    tri.off[i] = -pr.kinetic * P_half[i + 1] / (h * h) / (tri.sqrt_w[i] * tri.sqrt_w[i + 1]);
  }
  return tri;
}

int count_nodes(const std::vector<double>& z) {
  double peak = 0.0;
  for (double v : z) peak = std::max(peak, std::abs(v));
  int count = 0;
  double prev = 0.0;
  for (double v : z) {
    if (std::abs(v) <= 1e-7 * peak) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++count;
    prev = v;
  }
  return count;
}

struct LevelResult {
  std::vector<double> mu;
  std::vector<std::vector<double>> z;  // symmetrized eigenvectors
  Tridiagonal tri;
};

LevelResult solve_level(const RadialProblem& pr, const Grid& g, int n, int k) {
  LevelResult res;
  res.tri = assemble(pr, g, n);
  const int m = static_cast<int>(res.tri.diag.size());
  if (k > m) throw DomainError("fd_eigensolve: more states requested than grid points");
  std::vector<double> d = res.tri.diag;
  std::vector<double> e(m, 0.0);
  std::copy(res.tri.off.begin(), res.tri.off.end(), e.begin());
  std::vector<double> w(m), z(static_cast<std::size_t>(m) * k);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(k));
  lapack_int found = 0;
  const lapack_int info =
      LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m, d.data(), e.data(), 0.0, 0.0, 1, k, 0.0,
                     &found, w.data(), z.data(), m, isuppz.data());
  if (info != 0 || found != k) {
    throw AccuracyError("fd_eigensolve: tridiagonal eigensolver failed (info " +
                        std::to_string(info) + ")");
  }
  res.mu.assign(w.begin(), w.begin() + k);
  for (int j = 0; j < k; ++j) {
    std::vector<double> col(z.begin() + static_cast<std::ptrdiff_t>(j) * m,
                            z.begin() + static_cast<std::ptrdiff_t>(j + 1) * m);
    // sign convention: first significant entry positive
    double peak = 0.0;
    for (double v : col) peak = std::max(peak, std::abs(v));
    for (double v : col) {
      if (std::abs(v) > 1e-7 * peak) {
        if (v < 0.0)
          for (double& c : col) c = -c;
        break;
      }
    }
    res.z.push_back(std::move(col));
  }
  return res;
}

double tail_ratio(const std::vector<double>& z) {
  double peak = 0.0, tail = 0.0;
  const std::size_t start = z.size() - std::max<std::size_t>(z.size() / 50, 1);
  for (std::size_t i = 0; i < z.size(); ++i) {
    peak = std::max(peak, std::abs(z[i]));
    if (i >= start) tail = std::max(tail, std::abs(z[i]));
  }
  return peak > 0.0 ? tail / peak : 0.0;
}

Spectrum package(const RadialProblem& pr, const LevelResult& fine) {
  Spectrum s;
  s.hi_used = pr.hi;
  s.nodes = fine.tri.nodes;
  const auto& tri = fine.tri;
  const std::size_t m = tri.diag.size();
  for (std::size_t j = 0; j < fine.mu.size(); ++j) {
    const auto& z = fine.z[j];
    double res = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double bz = tri.diag[i] * z[i];
      if (i > 0) bz += tri.off[i - 1] * z[i - 1];
      if (i + 1 < m) bz += tri.off[i] * z[i + 1];
      res += (bz - fine.mu[j] * z[i]) * (bz - fine.mu[j] * z[i]);
    }
    s.residuals.push_back(std::sqrt(res));
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = z[i] / tri.sqrt_w[i];
    s.eigenvectors.push_back(std::move(y));
    s.node_counts.push_back(count_nodes(z));
  }
  return s;
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> assemble_tridiagonal(
    const RadialProblem& problem, const Grid& grid) {
  problem.validate();
  grid.validate();
  Tridiagonal tri = assemble(problem, grid, grid.n);
  return {std::move(tri.diag), std::move(tri.off)};
}

Spectrum fd_eigensolve_level(const RadialProblem& problem, const Grid& grid, int k) {
  problem.validate();
  grid.validate();
  if (k < 1) throw DomainError("fd_eigensolve: k must be positive");
  const LevelResult lr = solve_level(problem, grid, grid.n, k);
  Spectrum s = package(problem, lr);
  s.eigenvalues = lr.mu;
  s.error_estimates.assign(lr.mu.size(), 0.0);
  return s;
}

Spectrum fd_eigensolve(const RadialProblem& problem, const Grid& grid, int k,
                       const SolveOptions& options) {
  problem.validate();
  grid.validate();
  if (k < 1) throw DomainError("fd_eigensolve: k must be positive");
  if (4 * k > grid.n) throw DomainError("fd_eigensolve: k must not exceed n/4");
  if (options.levels < 1) throw DomainError("fd_eigensolve: at least one level");

  RadialProblem pr = problem;
  for (int attempt = 0;; ++attempt) {
    std::vector<LevelResult> levels;
    for (int l = 0; l < options.levels; ++l) {
      levels.push_back(solve_level(pr, grid, grid.n << l, k));
    }
    const LevelResult& fine = levels.back();

    double worst_tail = 0.0;
    if (problem.truncated) {
      for (const auto& z : fine.z) worst_tail = std::max(worst_tail, tail_ratio(z));
    }
    if (worst_tail > options.tail_decay) {
      if (attempt < options.max_extensions) {
        pr.hi = pr.lo + 1.25 * (pr.hi - pr.lo);
        continue;
      }
      std::ostringstream msg;
      msg << "fd_eigensolve(" << to_string(pr.kind) << "): states do not decay by hi = "
          << pr.hi << " (tail ratio " << worst_tail << ")";
      throw AccuracyError(msg.str());
    }

    Spectrum s = package(pr, fine);
    // eigenvalues of the finest matrix are only known to eps*|T| (backward
    // error of the tridiagonal solver); near-zero states sit on that floor
    double t_norm = 0.0;
    for (std::size_t i = 0; i < fine.tri.diag.size(); ++i) {
      double row = std::abs(fine.tri.diag[i]);
      if (i > 0) row += std::abs(fine.tri.off[i - 1]);
      if (i < fine.tri.off.size()) row += std::abs(fine.tri.off[i]);
      t_norm = std::max(t_norm, row);
    }
    const double floor = std::numeric_limits<double>::epsilon() * t_norm;
    const int L = options.levels;
    for (int j = 0; j < k; ++j) {
      double value = fine.mu[j];
      double err = 0.0;
      if (L >= 3) {
        const double r_fine = (4.0 * levels[L - 1].mu[j] - levels[L - 2].mu[j]) / 3.0;
        const double r_coarse = (4.0 * levels[L - 2].mu[j] - levels[L - 3].mu[j]) / 3.0;
        value = r_fine;
        err = std::abs(r_fine - r_coarse);
      } else if (L == 2) {
        value = (4.0 * levels[1].mu[j] - levels[0].mu[j]) / 3.0;
        err = std::abs(levels[1].mu[j] - levels[0].mu[j]) / 3.0;
      }
      const double allowed =
          std::max({options.abs_tol, floor, options.rel_tol * std::abs(value)});
      if (err > allowed) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "fd_eigensolve(" << to_string(pr.kind) << "): state " << j
            << " not converged under grid doubling: value " << value << ", change " << err
            << " > " << allowed << " (n = " << grid.n << ", hi = " << pr.hi << ")";
        throw AccuracyError(msg.str());
      }
      s.eigenvalues.push_back(value);
      s.error_estimates.push_back(err);
    }
    return s;
  }
}

double wkb_extent(const RadialProblem& problem, double mu_ceiling, double decay) {
  double x = problem.lo + 1e-6 * std::max(1.0, problem.hi - problem.lo);
  double integral = 0.0;
  double prev_k = 0.0;
  double prev_x = x;
  while (integral < decay) {
    const double step = 1e-3 * (1.0 + x);
    x += step;
    if (x > 1e7) throw DomainError("wkb_extent: state does not decay");
    const double excess = problem.U(x) - mu_ceiling;
    if (excess <= 0.0) {
      integral = 0.0;
      prev_k = 0.0;
      prev_x = x;
      continue;
    }
    const double k = std::sqrt(excess * problem.w(x) / (problem.kinetic * problem.p(x)));
    integral += 0.5 * (k + prev_k) * (x - prev_x);
    prev_k = k;
    prev_x = x;
  }
  return x;
}

// --- builders -----------------------------------------------------------------

namespace {

// potential minus its c/rho^2 part
double regular_part(const Potential8D& p, double r) {
  const double r2 = r * r;
  double v = 0.5 * p.omega * p.omega * r2;
  switch (p.family) {
    case Family::Sho: break;
    case Family::Sub2: v += p.a * r + p.b / r; break;
    case Family::Super2: v += p.b * r2 * r2 + p.a * r2 * r2 * r2; break;
  }
  return v;
}

}  // namespace

RadialProblem build_osc8_problem(const Potential8D& p, int L, double hi) {
  if (L < 0) throw DomainError("osc8 problem: L must be nonnegative");
  RadialProblem pr;
  pr.kind = ProblemKind::Osc8;
  pr.weight = WeightKind::Power;
  pr.weight_exponent = 7;
  pr.kinetic = 0.5;
  pr.centrifugal_coeff = L * (L + 6.0) + 2.0 * p.c;
  pr.effective_term = [p](double r) { return regular_part(p, r); };
  pr.hi = hi;
  return pr;
}

RadialProblem build_qes_problem(const Potential8D& p, int Dim, double hi) {
  if (Dim < 1) throw DomainError("qes problem: Dim must be positive");
  RadialProblem pr;
  pr.kind = ProblemKind::Qes;
  pr.weight = WeightKind::Power;
  pr.weight_exponent = Dim;
  pr.kinetic = 1.0;
  pr.centrifugal_coeff = p.c;  // kinetic * c / r^2 with kinetic = 1
  pr.effective_term = [p](double r) { return regular_part(p, r); };
  pr.hi = hi;
  return pr;
}

RadialProblem build_coul9_problem(const OscillatorModel& model, const MiczParams& m,
                                  double Lambda, double hi) {
  if (!is_spherically_separable(model)) {
    throw SeparabilityError(std::string("spherical chart requires ") + kSeparabilityCondition);
  }
  m.validate();
  RadialProblem pr;
  pr.kind = ProblemKind::Coul9;
  pr.weight = WeightKind::Power;
  pr.weight_exponent = 8;
  pr.kinetic = 0.5;
  pr.centrifugal_coeff = Lambda;
  const double Z = m.Z;
  pr.effective_term = [Z](double r) { return -Z / r; };
  pr.hi = hi;
  return pr;
}

RadialProblem build_theta_problem(const MiczParams& m) {
  m.validate();
  RadialProblem pr;
  pr.kind = ProblemKind::Theta;
  pr.weight = WeightKind::SinPower;
  pr.weight_exponent = 7;
  pr.kinetic = 1.0;
  const auto [alpha_u, alpha_v] = micz_centrifugal_strengths(m);
  pr.centrifugal_coeff = alpha_u;  // (J(J+6) + 8 c1)/4 over cos^2(theta/2)
  pr.secondary_coeff = alpha_v;    // (L(L+6) + 8 c2)/4 over sin^2(theta/2)
  pr.lo = 0.0;
  pr.hi = std::numbers::pi;
  pr.truncated = false;
  return pr;
}

namespace {

RadialProblem para_problem(ProblemKind kind, double alpha, FactorW W, double hi) {
  RadialProblem pr;
  pr.kind = kind;
  pr.weight = WeightKind::Parabolic;
  pr.weight_exponent = 3;
  pr.kinetic = 1.0;
  pr.centrifugal_coeff = alpha;
  pr.effective_term = [W](double x) { return W(x); };
  pr.hi = hi;
  pr.eigen_sign = kind == ProblemKind::ParaU ? -1.0 : 1.0;
  return pr;
}

}  // namespace

RadialProblem build_para_u_problem(const OscillatorModel& model, const MiczParams& m,
                                   double hi) {
  m.validate();
  const auto alpha = micz_centrifugal_strengths(m).first;
  return para_problem(ProblemKind::ParaU, alpha, parabolic_W(model).Wu, hi);
}

RadialProblem build_para_v_problem(const OscillatorModel& model, const MiczParams& m,
                                   double hi) {
  m.validate();
  const auto alpha = micz_centrifugal_strengths(m).second;
  return para_problem(ProblemKind::ParaV, alpha, parabolic_W(model).Wv, hi);
}

}  // namespace hurwitz
