#include "hurwitz/analytic.hpp"

#include <cmath>
#include <string>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Regular root of x(x+6) = n(n+6) + strength.
double shifted_index(int n, double strength) {
  const double s = (n + 3.0) * (n + 3.0) + strength;
  if (s < 0.0) throw DomainError("effective index: (n+3)^2 + strength < 0");
  return -3.0 + std::sqrt(s);
}

}  // namespace

double kummer_1f1_terminating(int n, double beta, double z) {
  if (n < 0) throw DomainError("kummer_1f1_terminating: n must be nonnegative");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    const double denom = (beta + k) * (k + 1.0);
    if (beta + k == 0.0) {
      throw DomainError("kummer_1f1_terminating: (beta)_k vanishes at k = " +
                        std::to_string(k + 1));
    }
    term *= (k - n) * z / denom;
    sum += term;
  }
  return sum;
}

double effective_lprime(int L, double c) { return shifted_index(L, 2.0 * c); }

double singular_oscillator_energy(const QuantumNumbers& q, double omega, double c) {
  if (q.N < 0) throw DomainError("singular_oscillator_energy: N must be nonnegative");
  if (!(omega > 0.0)) throw DomainError("singular_oscillator_energy: omega must be positive");
  return omega * (2.0 * q.N + effective_lprime(q.L, c) + 4.0);
}

double radial_wavefunction(const QuantumNumbers& q, double omega, double c, double r) {
  const double lp = effective_lprime(q.L, c);
  const double z = omega * r * r;
  return std::pow(r, lp) * std::exp(-0.5 * z) * kummer_1f1_terminating(q.N, lp + 4.0, z);
}

double theta_lambda(int n_theta, int J, int L, double c1, double c2) {
  const double jp = shifted_index(J, 8.0 * c1);
  const double lp = shifted_index(L, 8.0 * c2);
  return n_theta + 0.5 * (jp + lp);
}

double micz_coulomb_energy(int n, const MiczParams& m) {
  const double n_eff = theta_lambda(n, m.J, m.L, m.c1, m.c2) + 4.0;
  return -m.Z * m.Z / (2.0 * n_eff * n_eff);
}

DualPair dual_map(double omega, double Z) {
  if (!(omega > 0.0)) throw DomainError("dual_map: omega must be positive");
  return {omega, Z, -0.5 * omega * omega};
}

DualPair dual_map_inverse(double E, double Z) {
  if (!(E < 0.0)) throw DomainError("dual_map_inverse: E >= 0 has no oscillator partner");
  return {std::sqrt(-2.0 * E), Z, E};
}

double coulomb_charge_for(double Z16) { return 0.5 * Z16; }

}  // namespace hurwitz
