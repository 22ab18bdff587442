#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/potentials.hpp"

namespace hurwitz {

// Every separated equation is handled as a Sturm-Liouville problem
//
//     -kinetic (p y')' + w U(x) y = mu w y,   y(lo) = y(hi) = 0,
//
// discretized with second-order central differences on a (possibly mapped)
// grid and symmetrized by y = w^{-1/2} z.

enum class ProblemKind { Osc8, Coul9, Theta, ParaU, ParaV, Qes };

std::string to_string(ProblemKind k);

enum class WeightKind {
  Power,      // p = w = x^m
  SinPower,   // p = w = sin^m(x)
  Parabolic,  // p = x^(m+1), w = x^m
};

struct RadialProblem {
  ProblemKind kind = ProblemKind::Osc8;
  WeightKind weight = WeightKind::Power;
  int weight_exponent = 7;
  double kinetic = 0.5;
  /// Numerator of the centrifugal term: kinetic*C/x^2 (Power), C/x
  /// (Parabolic), C/cos^2(x/2) (SinPower).
  double centrifugal_coeff = 0.0;
  /// SinPower only: numerator of the 1/sin^2(x/2) term.
  double secondary_coeff = 0.0;
  /// Remaining potential U(x) beyond the centrifugal part.
  std::function<double(double)> effective_term = [](double) { return 0.0; };
  double lo = 0.0;
  double hi = 1.0;
  /// hi cuts off an infinite domain: states are checked for decay there and
  /// the domain is enlarged when they have not.
  bool truncated = true;
  /// The reported eigenvalue is eigen_sign * mu (ParaU reports P = -mu).
  double eigen_sign = 1.0;

  double p(double x) const;
  double w(double x) const;
  double U(double x) const;
  void validate() const;
};

enum class GridMapping { Uniform, Exponential };

struct Grid {
  int n = 4000;  // intervals on the coarsest level
  GridMapping mapping = GridMapping::Uniform;
  /// Exponential only: x = lo + scale (exp(beta t) - 1), t in [0, 1].
  double scale = 1.0;

  void validate() const;
};

struct SolveOptions {
  double rel_tol = 1e-7;
  double abs_tol = 1e-12;
  /// Refinement levels n, 2n, 4n; the answer is the Richardson value of the
  /// two finest, its error estimate the distance to the coarser pair.
  int levels = 3;
  /// Enlarge hi by 25% (up to this many times) when the tail check fails.
  int max_extensions = 4;
  /// Required decay of every returned state at hi (symmetrized amplitude).
  double tail_decay = 2.061e-9;  // e^-20
};

struct Spectrum {
  std::vector<double> eigenvalues;                // ascending in mu
  std::vector<double> error_estimates;
  std::vector<std::vector<double>> eigenvectors;  // y on `nodes`, finest level
  std::vector<double> nodes;                      // interior grid points
  std::vector<double> residuals;                  // |B z - mu z| on finest level
  std::vector<int> node_counts;
  double hi_used = 0.0;
};

/// Lowest k eigenpairs.  Throws AccuracyError when refinement does not meet
/// the tolerance or the tail never decays.
Spectrum fd_eigensolve(const RadialProblem& problem, const Grid& grid, int k,
                       const SolveOptions& options = {});

/// Single-level solve (no extrapolation), exposed for convergence studies.
Spectrum fd_eigensolve_level(const RadialProblem& problem, const Grid& grid, int k);

/// Symmetric tridiagonal (diag, offdiag) of the discretized operator, for
/// testing the symmetrization.
std::pair<std::vector<double>, std::vector<double>> assemble_tridiagonal(
    const RadialProblem& problem, const Grid& grid);

/// Smallest hi past the outermost turning point where the WKB decay
/// integral at eigenvalue mu_ceiling reaches `decay`.
double wkb_extent(const RadialProblem& problem, double mu_ceiling, double decay = 25.0);

// --- builders, one per separated equation ---------------------------------

/// 8-D factor radial equation (weight r^7, kinetic 1/2):
///   -(1/2) r^-7 (r^7 R')' + [(L(L+6)+2c)/(2r^2) + V_rest(r)] R = Z_a R.
RadialProblem build_osc8_problem(const Potential8D& p, int L, double hi);

/// QES radial problem: -r^-Dim (r^Dim psi')' + V(r) psi = E psi.
RadialProblem build_qes_problem(const Potential8D& p, int Dim, double hi);

/// 9-D hyperradial equation (weight r^8, kinetic 1/2) with separation
/// constant Lambda; eigenvalue E.  Throws SeparabilityError for models
/// failing is_spherically_separable.
RadialProblem build_coul9_problem(const OscillatorModel& model, const MiczParams& m,
                                  double Lambda, double hi);

/// theta equation on (0, pi); eigenvalue Lambda.
RadialProblem build_theta_problem(const MiczParams& m);

/// Parabolic u and v equations (p = w^4, weight w^3).  ParaU reports
/// P = -mu, ParaV reports P = +mu.  The model's E1/E2 sit inside W'.
RadialProblem build_para_u_problem(const OscillatorModel& model, const MiczParams& m,
                                   double hi);
RadialProblem build_para_v_problem(const OscillatorModel& model, const MiczParams& m,
                                   double hi);

// --- parabolic joint eigenvalue search ------------------------------------

struct ParabolicState {
  double E = 0.0;
  double P = 0.0;
  int nodes_u = 0;
  int nodes_v = 0;
  double residual_u = 0.0;
  double residual_v = 0.0;
};

struct ParabolicOptions {
  int max_nodes = 2;        // node counts searched per equation
  double energy_tol = 1e-12;
  double hi_u = 0.0;        // 0 selects a decay-based default
  double hi_v = 0.0;
  SolveOptions solve{};
};

/// Finds E in (E_lo, E_hi) where an eigenvalue P of the u-equation matches
/// one of the v-equation.  Anisotropy E1 - E2 of the model is kept fixed
/// while E = (E1 + E2)/2 is varied.  Among roots the lowest E is returned;
/// degenerate node pairs are resolved by the smallest |P|.  The charge is
/// Z1 + Z2 of the model and must agree with m.Z.  Throws BracketError when
/// no mismatch function changes sign.
ParabolicState parabolic_joint_solve(const OscillatorModel& model, const MiczParams& m,
                                     const Grid& grid, std::pair<double, double> bracket,
                                     const ParabolicOptions& options = {});

/// All roots for node sums n_u + n_v <= options.max_nodes, sorted by E.
std::vector<ParabolicState> parabolic_levels(const OscillatorModel& model, const MiczParams& m,
                                             const Grid& grid,
                                             std::pair<double, double> bracket,
                                             const ParabolicOptions& options = {});

// --- spherical composition --------------------------------------------------

struct SphericalState {
  double E = 0.0;
  double Lambda = 0.0;
  int n_theta = 0;
  int n_r = 0;
};

/// Solves the theta equation for the lowest `levels` Lambda, then the 9-D
/// hyperradial equation for each; returns the lowest `levels` energies.
std::vector<SphericalState> spherical_levels(const OscillatorModel& model, const MiczParams& m,
                                             const Grid& radial_grid, const Grid& theta_grid,
                                             int levels, const SolveOptions& options = {});

}  // namespace hurwitz
