#pragma once

#include <optional>
#include <vector>

#include "hurwitz/potentials.hpp"

namespace hurwitz {

struct QuantumNumbers {
  int N = 0;  // radial node count
  int L = 0;
  int J = 0;
  double Lprime = 0.0;
  double lambda = 0.0;
};

/// Terminating confluent hypergeometric series
///   1F1(-n; beta; z) = sum_{k=0}^{n} (-n)_k / ((beta)_k k!) z^k.
/// Throws DomainError if (beta)_k vanishes for some k <= n.
double kummer_1f1_terminating(int n, double beta, double z);

/// Regular root of L'(L'+6) = L(L+6) + 2c, i.e. L' = -3 + sqrt((L+3)^2 + 2c).
double effective_lprime(int L, double c);

/// Factor eigenvalue of the 8-D singular oscillator, Z_a = omega (2N + L' + 4).
/// Uses q.N and q.L; q.Lprime is ignored.
double singular_oscillator_energy(const QuantumNumbers& q, double omega, double c);

/// r^{L'} exp(-omega r^2/2) 1F1(-N; L'+4; omega r^2), normalization constant 1.
double radial_wavefunction(const QuantumNumbers& q, double omega, double c, double r);

/// Separation index of the theta equation.  With J'(J'+6) = J(J+6) + 8 c1 and
/// L'(L'+6) = L(L+6) + 8 c2, lambda = n_theta + (J' + L')/2 and the separation
/// constant is lambda (lambda + 7).
double theta_lambda(int n_theta, int J, int L, double c1, double c2);

/// Bound level of the 9-D generalized MICZ-Coulomb problem,
///   E = -Z^2 / (2 (n + (J'+L')/2 + 4)^2),  n = n_r + n_theta.
double micz_coulomb_energy(int n, const MiczParams& m);

/// Oscillator <-> Coulomb role exchange: E = -omega^2/2, Z passes through.
struct DualPair {
  double omega = 0.0;
  double Z = 0.0;
  double E = 0.0;
};

DualPair dual_map(double omega, double Z);
/// Throws DomainError for E >= 0 (no bound state).
DualPair dual_map_inverse(double E, double Z);

/// Coulomb charge whose 9-D ground level equals E = -omega^2/2 when the 16-D
/// eigenvalue is Z16 = 8 omega: Z_C = Z16 / 2.
double coulomb_charge_for(double Z16);

// --- quasi-exactly solvable families -------------------------------------

/// Primed constants of the QES families.  The radial problem is posed as
///
///     -psi'' - (Dim/r) psi' + V(r) psi = E psi
///
/// (unit kinetic coefficient, weight r^Dim).  Dim = d' + 2 l' - 1 absorbs the
/// angular momentum l' of a d'-dimensional problem.
struct QesPrimedParams {
  double a_p = 0.0;
  double b_p = 1.0;
  double c_p = 0.0;
  int N = 1;
  int Dim = 7;
  double l_p = 0.0;
  std::optional<double> d_p;

  void validate() const;
};

struct Sub2Map {
  Potential8D potential;
  double d = 0.0;  // a'^2 - b'(2N + Dim - 1 - 2c'); minus the top-degree energy
};

/// omega^2 = 2 b'^2, a = 2 a' b', b = -a'(Dim - 2c'), c = c'(c' - Dim + 1).
/// Throws QesPreconditionError for b' <= 0.
Sub2Map qes_map_sub2(const QesPrimedParams& p);

/// omega^2 = 2[b'^2 - (4N + Dim - 2c' - 1) a'], a = a'^2, b = 2 a' b',
/// c = c'(c' - Dim + 1).  Throws QesPreconditionError when omega^2 <= 0 or
/// a' <= 0.
Potential8D qes_map_super2(const QesPrimedParams& p);

struct QesSolution {
  Family family = Family::Super2;
  Potential8D potential;
  std::vector<double> energies;                 // ascending
  std::vector<std::vector<double>> poly_coeffs;  // p_{N-1}, lowest power first
  std::vector<double> residuals;                 // |(H-E)psi| / |E psi|
  std::vector<int> nodes;                        // zeros of p on (0, inf)
  double a_p = 0.0;
  double b_p = 0.0;
  double power_offset = 0.0;  // l' - c'
  double reduced_power = 0.0; // -c', the power carried by the reduced problem
  int Dim = 7;
  std::optional<double> d;     // Sub2 only
  int rejected = 0;            // eigenvectors of the span matrix that leak out of it
};

/// Gauge-rotates the radial Hamiltonian onto
///   {r^{j} r^{-c'} exp(-b' r^2/2 - a' r)}       (Sub2),
///   {r^{2j} r^{-c'} exp(-a' r^4/4 - b' r^2/2)}  (Super2),   j = 0..N-1,
/// and diagonalizes its restriction to the span.  Eigenvectors whose image
/// leaves the span are discarded.  Throws InconsistentParametersError when
/// none survive.
QesSolution qes_solve(const QesPrimedParams& p, Family family);

/// psi(r) of the reduced problem for a returned QES pair.
double qes_wavefunction(const QesSolution& s, std::size_t index, double r);

}  // namespace hurwitz
