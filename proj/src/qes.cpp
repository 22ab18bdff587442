#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "hurwitz/analytic.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Finite Laurent polynomial in r: exponent -> coefficient.
using Laurent = std::map<int, double>;

void add_to(Laurent& acc, const Laurent& x, double scale = 1.0, int shift = 0) {
  for (const auto& [e, c] : x) acc[e + shift] += scale * c;
}

Laurent multiply(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) out[ex + ey] += cx * cy;
  return out;
}

Laurent derivative(const Laurent& x) {
  Laurent out;
  for (const auto& [e, c] : x)
    if (e != 0) out[e - 1] += e * c;
  return out;
}

double evaluate(const Laurent& x, double r) {
  double acc = 0.0;
  for (const auto& [e, c] : x) acc += c * std::pow(r, e);
  return acc;
}

// Exponent g(r) of the ansatz factor exp(g).
Laurent gauge_exponent(Family family, double a_p, double b_p) {
  if (family == Family::Sub2) return {{1, -a_p}, {2, -0.5 * b_p}};
  return {{2, -0.5 * b_p}, {4, -0.25 * a_p}};
}

Laurent potential_laurent(const Potential8D& p) {
  Laurent v{{2, 0.5 * p.omega * p.omega}, {-2, p.c}};
  if (p.family == Family::Sub2) {
    v[1] += p.a;
    v[-1] += p.b;
  } else if (p.family == Family::Super2) {
    v[4] += p.b;
    v[6] += p.a;
  }
  return v;
}

// exp(-phi) H (r^m exp(phi)) for H = -d^2/dr^2 - (k/r) d/dr + V and
// phi = s ln r + g(r).  Every term is a Laurent monomial.
Laurent rotated_action(int m, double s, const Laurent& g, const Laurent& V, double k) {
  Laurent dphi = derivative(g);
  dphi[-1] += s;
  const Laurent ddphi = derivative(dphi);
  Laurent phi_sq = multiply(dphi, dphi);

  Laurent out;
  out[m - 2] += -(m * (m - 1.0)) - k * m;
  add_to(out, dphi, -2.0 * m - k, m - 1);
  add_to(out, ddphi, -1.0, m);
  add_to(out, phi_sq, -1.0, m);
  add_to(out, V, 1.0, m);
  return out;
}

double escape_radius(const Laurent& g, double decay) {
  // g is negative and decreasing for large r; find g(r) = -decay
  double hi = 1.0;
  while (evaluate(g, hi) > -decay) hi *= 1.5;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (evaluate(g, mid) > -decay ? lo : hi) = mid;
  }
  return hi;
}

int ansatz_power(Family family, int j) { return family == Family::Sub2 ? j : 2 * j; }

struct WaveDerivs {
  double f, df, ddf;
};

// f = p(x) r^s with x = r or r^2.
WaveDerivs prefactor(const QesSolution& sol, std::size_t idx, double r) {
  WaveDerivs d{0.0, 0.0, 0.0};
  const auto& coeffs = sol.poly_coeffs[idx];
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const double p = ansatz_power(sol.family, static_cast<int>(j)) + sol.reduced_power;
    const double rp = std::pow(r, p);
    d.f += coeffs[j] * rp;
    d.df += coeffs[j] * p * rp / r;
    d.ddf += coeffs[j] * p * (p - 1.0) * rp / (r * r);
  }
  return d;
}

double qes_residual(const QesSolution& sol, std::size_t idx, const Laurent& g, double r_hi) {
  const Laurent dg = derivative(g);
  const Laurent ddg = derivative(dg);
  const double E = sol.energies[idx];
  const double r_lo = r_hi / 100.0;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / 99.0;
    const WaveDerivs f = prefactor(sol, idx, r);
    const double h = std::exp(evaluate(g, r));
    const double g1 = evaluate(dg, r), g2 = evaluate(ddg, r);
    const double psi = f.f * h;
    const double dpsi = (f.df + f.f * g1) * h;
    const double ddpsi = (f.ddf + 2.0 * f.df * g1 + f.f * (g2 + g1 * g1)) * h;
    double V = 0.5 * sol.potential.omega * sol.potential.omega * r * r +
               sol.potential.c / (r * r);
    if (sol.family == Family::Sub2) {
      V += sol.potential.a * r + sol.potential.b / r;
    } else {
      V += sol.potential.b * std::pow(r, 4) + sol.potential.a * std::pow(r, 6);
    }
    const double hpsi = -ddpsi - sol.Dim / r * dpsi + V * psi;
    num += (hpsi - E * psi) * (hpsi - E * psi);
    den += (E * psi) * (E * psi);
  }
  if (den == 0.0) return std::sqrt(num);
  return std::sqrt(num / den);
}

int positive_roots(Family family, const std::vector<double>& coeffs, double r_hi) {
  // sign changes of p on a fine sweep of (0, r_hi]
  int count = 0;
  double prev = 0.0;
  const int samples = 4000;
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  for (int i = 1; i <= samples; ++i) {
    const double r = r_hi * i / samples;
    const double x = family == Family::Sub2 ? r : r * r;
    double val = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 0;) val = val * x + coeffs[j];
    if (std::abs(val) <= 1e-13 * scale) continue;
    if (prev != 0.0 && (val > 0.0) != (prev > 0.0)) ++count;
    prev = val;
  }
  return count;
}

}  // namespace

void QesPrimedParams::validate() const {
  if (N < 1) throw DomainError("qes: N must be at least 1");
  if (Dim < 1) throw DomainError("qes: Dim must be at least 1");
  if (d_p && std::abs(*d_p + 2.0 * l_p - 1.0 - Dim) > 1e-12) {
    throw DomainError("qes: Dim must equal d' + 2 l' - 1");
  }
}

Sub2Map qes_map_sub2(const QesPrimedParams& p) {
  p.validate();
  if (!(p.b_p > 0.0)) {
    throw QesPreconditionError("sub2 map: b' > 0 required (omega^2 = 2 b'^2 with omega > 0)");
  }
  const double D = p.Dim;
  Sub2Map m;
  m.potential = Potential8D::sub2(std::sqrt(2.0) * p.b_p, p.c_p * (p.c_p - D + 1.0) + 0.0,
                                  2.0 * p.a_p * p.b_p, -p.a_p * (D - 2.0 * p.c_p));
  m.d = p.a_p * p.a_p - p.b_p * (2.0 * p.N + D - 1.0 - 2.0 * p.c_p);
  return m;
}

Potential8D qes_map_super2(const QesPrimedParams& p) {
  p.validate();
  const double D = p.Dim;
  const double omega_sq = 2.0 * (p.b_p * p.b_p - (4.0 * p.N + D - 2.0 * p.c_p - 1.0) * p.a_p);
  if (!(omega_sq > 0.0)) {
    std::ostringstream msg;
    msg << "super2 map: omega^2 = 2[b'^2 - (4N+D-2c'-1)a'] = " << omega_sq
        << " must be positive";
    throw QesPreconditionError(msg.str());
  }
  if (!(p.a_p > 0.0)) {
    throw QesPreconditionError("super2 map: a' > 0 required for a normalizable ansatz");
  }
  return Potential8D::super2(std::sqrt(omega_sq), p.c_p * (p.c_p - D + 1.0) + 0.0, p.a_p * p.a_p,
                             2.0 * p.a_p * p.b_p);
}

QesSolution qes_solve(const QesPrimedParams& p, Family family) {
  if (family == Family::Sho) throw DomainError("qes_solve: family must be sub2 or super2");
  QesSolution sol;
  sol.family = family;
  if (family == Family::Sub2) {
    const Sub2Map m = qes_map_sub2(p);
    sol.potential = m.potential;
    sol.d = m.d;
  } else {
    sol.potential = qes_map_super2(p);
  }
  sol.a_p = p.a_p;
  sol.b_p = p.b_p;
  sol.power_offset = p.l_p - p.c_p;
  sol.reduced_power = -p.c_p;
  sol.Dim = p.Dim;

  const Laurent g = gauge_exponent(family, p.a_p, p.b_p);
  const Laurent V = potential_laurent(sol.potential);
  const int n = p.N;

  std::vector<Laurent> images(n);
  for (int j = 0; j < n; ++j) {
    images[j] = rotated_action(ansatz_power(family, j), sol.reduced_power, g, V, p.Dim);
  }

  Eigen::MatrixXd span(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = images[j].find(ansatz_power(family, i));
      span(i, j) = it == images[j].end() ? 0.0 : it->second;
    }

  Eigen::EigenSolver<Eigen::MatrixXd> es(span);
  const double mat_scale = std::max(1.0, span.cwiseAbs().maxCoeff());
  const double r_hi = escape_radius(g, 30.0);

  struct Pair {
    double E;
    std::vector<double> c;
  };
  std::vector<Pair> accepted;
  for (int k = 0; k < n; ++k) {
    const auto lambda = es.eigenvalues()[k];
    if (std::abs(lambda.imag()) > 1e-9 * mat_scale) {
      ++sol.rejected;
      continue;
    }
    Eigen::VectorXd c = es.eigenvectors().col(k).real();
    c /= c.cwiseAbs().maxCoeff();
    if (c(n - 1) < 0.0 || (c(n - 1) == 0.0 && c(0) < 0.0)) c = -c;

    Laurent total;
    for (int j = 0; j < n; ++j) add_to(total, images[j], c(j));
    double leak = 0.0, all = 0.0;
    for (const auto& [e, coef] : total) {
      all += coef * coef;
      bool in_span = false;
      for (int i = 0; i < n; ++i) in_span = in_span || e == ansatz_power(family, i);
      if (!in_span) leak += coef * coef;
    }
    const double scale = std::sqrt(all) + std::abs(lambda.real()) * c.norm();
    if (std::sqrt(leak) > 1e-9 * std::max(scale, 1.0)) {
      ++sol.rejected;
      continue;
    }
    std::vector<double> coeffs(c.data(), c.data() + n);
    for (double& x : coeffs)
      if (std::abs(x) < 1e-14) x = 0.0;
    while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
    accepted.push_back({lambda.real(), std::move(coeffs)});
  }
  if (accepted.empty()) {
    throw InconsistentParametersError(
        "qes_solve: no eigenvector of the span closes (QES constraint violated)");
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Pair& x, const Pair& y) { return x.E < y.E; });
  for (auto& a : accepted) {
    sol.energies.push_back(a.E);
    sol.poly_coeffs.push_back(std::move(a.c));
  }
  for (std::size_t i = 0; i < sol.energies.size(); ++i) {
    sol.residuals.push_back(qes_residual(sol, i, g, r_hi));
    sol.nodes.push_back(positive_roots(family, sol.poly_coeffs[i], r_hi));
  }
  return sol;
}

double qes_wavefunction(const QesSolution& s, std::size_t index, double r) {
  const Laurent g = gauge_exponent(s.family, s.a_p, s.b_p);
  return prefactor(s, index, r).f * std::exp(evaluate(g, r));
}

}  // namespace hurwitz
