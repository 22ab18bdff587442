// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/analytic.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/potentials.hpp"
#include "hurwitz/sweep.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

char buf[512];

template <typename... Args>
std::string format(const char* f, Args... args) {
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Grid radial_grid() {
  Grid g;
  g.mapping = GridMapping::Exponential;
  g.scale = 10.0;
  return g;
}

OscillatorModel isotropic(double omega, double Z) {
  return OscillatorModel::from_potentials(Potential8D::sho(omega), Potential8D::sho(omega),
                                          0.5 * Z, 0.5 * Z);
}

Outcome composition_identity() {
  const auto rows = transform_rows(random_pairs(10000, 20240521));
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, r.residual);
  return {worst <= 1e-12, format("max relative deviation %.3e over %zu pairs", worst, rows.size())};
}

Outcome oscillator_spectrum() {
  std::vector<OscBlock> blocks;
  for (double omega : {0.5, 1.0, 2.0})
    for (double c : {0.0, 1.0, 8.0})
      for (int L = 0; L <= 2; ++L) blocks.push_back({omega, c, L, 3});
  Grid g;
  g.n = 4000;
  const auto rows = oscillator_sweep(blocks, g);
  double worst = 0.0;
  int bad_nodes = 0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.rel_deviation);
    bad_nodes += r.nodes != r.N;
  }
  return {worst <= 1e-6 && bad_nodes == 0 && rows.size() == 108,
          format("%zu states, max relative error %.3e, node mismatches %d", rows.size(), worst,
                 bad_nodes)};
}

Outcome qes_cross_check() {
  double worst_dev = 0.0, worst_res = 0.0;
  int energies = 0;
  auto check = [&](Family family, double a_p, int N) {
    QesPrimedParams p;
    p.a_p = a_p;
    p.b_p = 1.0;
    p.N = N;
    p.Dim = 7;
    const QesSolution s = qes_solve(p, family);
    int top = 0;
    double e_top = 0.0;
    for (std::size_t i = 0; i < s.energies.size(); ++i) {
      top = std::max(top, s.nodes[i]);
      e_top = std::max(e_top, s.energies[i]);
    }
    const RadialProblem probe = build_qes_problem(s.potential, p.Dim, 1.0);
    const double hi = wkb_extent(probe, e_top + 0.5 * std::abs(e_top) + 1.0, 25.0);
    const Spectrum fd = fd_eigensolve(build_qes_problem(s.potential, p.Dim, hi), Grid{}, top + 2);
    for (std::size_t i = 0; i < s.energies.size(); ++i) {
      // nearest FD level, independent of the reported node count
      double best = 1e300;
      for (double e : fd.eigenvalues) best = std::min(best, rel(e, s.energies[i]));
      worst_dev = std::max(worst_dev, best);
      worst_res = std::max(worst_res, s.residuals[i]);
      ++energies;
    }
  };
  for (int N = 1; N <= 3; ++N)
    for (double a : {0.01, 0.05}) check(Family::Super2, a, N);
  for (int N = 1; N <= 2; ++N)
    for (double a : {0.0, 0.3, 1.0}) check(Family::Sub2, a, N);
  return {worst_dev <= 1e-5 && worst_res <= 1e-8,
          format("%d energies, max FD deviation %.3e, max residual %.3e", energies, worst_dev,
                 worst_res)};
}

Outcome duality() {
  const double omega = 0.25;
  const double z16 = singular_oscillator_energy({}, omega, 0.0) * 2.0;
  const DualPair d = dual_map(omega, z16);
  MiczParams m;
  m.Z = coulomb_charge_for(z16);
  const OscillatorModel model = isotropic(omega, m.Z);
  const Spectrum s =
      fd_eigensolve(build_coul9_problem(model, m, 0.0, 400.0), radial_grid(), 1);
  const double e = s.eigenvalues[0];
  const bool ok = std::abs(e + 1.0 / 32.0) <= 1e-5 && std::abs(z16 - 8.0 * omega) <= 1e-14 &&
                  std::abs(d.E - e) <= 1e-5 && m.Z == 1.0;
  return {ok, format("FD ground %.12f, dual E %.12f, Z16 %.6g = 8 omega", e, d.E, z16)};
}

Outcome chart_independence() {
  double worst = 0.0;
  std::string detail;
  for (auto [c1, c2] : {std::pair{0.0, 0.0}, std::pair{1.0, 2.0}}) {
    MiczParams m;
    m.c1 = c1;
    m.c2 = c2;
    const OscillatorModel model = isotropic(0.25, 1.0);
    const auto sph = spherical_levels(model, m, radial_grid(), Grid{}, 2);
    ParabolicOptions po;
    po.max_nodes = 1;
    const double e0 = micz_coulomb_energy(0, m);
    const auto par = parabolic_levels(model, m, radial_grid(), {3.0 * e0, 0.3 * e0}, po);
    if (par.size() < 2) return {false, "parabolic chart found fewer than two states"};
    for (int i = 0; i < 2; ++i) worst = std::max(worst, rel(par[i].E, sph[i].E));
    detail += format("(c1,c2)=(%g,%g): %.10f/%.10f vs %.10f/%.10f; ", c1, c2, sph[0].E, sph[1].E,
                     par[0].E, par[1].E);
  }
  return {worst <= 1e-5, detail + format("max relative difference %.3e", worst)};
}

Outcome theta_equation() {
  const Spectrum s = fd_eigensolve(build_theta_problem(MiczParams{}), Grid{}, 3);
  double worst = 0.0;
  for (int l = 0; l < 3; ++l) worst = std::max(worst, std::abs(s.eigenvalues[l] - l * (l + 7.0)));
  return {worst <= 1e-6, format("Lambda = %.9f, %.9f, %.9f; max abs error %.3e", s.eigenvalues[0],
                                s.eigenvalues[1], s.eigenvalues[2], worst)};
}

double theta_variation(const OscillatorModel& m) {
  double lo = 1e300, hi = -1e300, worst = 0.0;
  for (double r : {0.3, 1.0, 4.0}) {
    lo = 1e300;
    hi = -1e300;
    for (int k = 1; k < 64; ++k) {
      const double w = spherical_W(m, r, std::numbers::pi * k / 64.0);
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

Outcome separability_gate() {
  // every combination of the four conditions, coefficients of order one
  int mismatches = 0;
  double on_worst = 0.0, off_best = 1e300;
  for (int mask = 0; mask < 32; ++mask) {
    const bool split = mask & 1;
    const double a1 = (mask & 2) ? 0.7 : 0.0, b1 = (mask & 4) ? 0.9 : 0.0;
    const double a2 = (mask & 8) ? 1.1 : 0.0, b2 = (mask & 16) ? 0.8 : 0.0;
    for (Family f1 : {Family::Sub2, Family::Super2}) {
      for (Family f2 : {Family::Sub2, Family::Super2}) {
        Potential8D p1{f1, 1.0, 0.0, a1, b1};
        Potential8D p2{f2, 1.0, 0.0, a2, b2};
        OscillatorModel m = OscillatorModel::from_potentials(p1, p2, 0.5, 0.5);
        if (split) m.E2 = m.E1 - 1.0;
        const bool expected = !split && a1 == 0 && b1 == 0 && a2 == 0 && b2 == 0;
        mismatches += is_spherically_separable(m) != expected;
        const double v = theta_variation(m);
        if (expected) {
          on_worst = std::max(on_worst, v);
        } else {
          off_best = std::min(off_best, v);
        }
      }
    }
  }
  return {mismatches == 0 && on_worst <= 1e-12 && off_best >= 1e-3,
          format("gate mismatches %d, theta variation on-set %.3e, off-set min %.3e", mismatches,
                 on_worst, off_best)};
}

Outcome anisotropy_identities() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> rr(0.05, 20.0), th(0.0, std::numbers::pi);
  const OscillatorModel harm = OscillatorModel::from_potentials(
      Potential8D::sho(0.3), Potential8D::sho(0.55), 0.4, 0.6);
  const double b = 0.37;
  const OscillatorModel quart = OscillatorModel::from_potentials(
      Potential8D::super2(0.3, 0, 0, b), Potential8D::super2(0.3, 0, 0, -b), 0.4, 0.6);
  const OscillatorModel quart0 = OscillatorModel::from_potentials(
      Potential8D::super2(0.3, 0, 0, 0.0), Potential8D::super2(0.3, 0, 0, 0.0), 0.4, 0.6);
  double err_dipole = 0.0, err_quartic = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = rr(rng), t = th(rng);
    const double lhs = spherical_W(harm, r, t) + harm.Z();
    const double rhs =
        -0.5 * (harm.E1 + harm.E2) - 0.5 * (harm.E1 - harm.E2) * std::cos(t);
    err_dipole = std::max(err_dipole, std::abs(lhs - rhs) / (std::abs(rhs) + 1.0));
    const double quartic = spherical_W(quart, r, t) - spherical_W(quart0, r, t);
    err_quartic = std::max(err_quartic,
                           std::abs(quartic - b * r * std::cos(t)) / (b * r + 1.0));
  }
  return {err_dipole <= 1e-14 && err_quartic <= 1e-14,
          format("dipole identity error %.3e, quartic identity error %.3e", err_dipole,
                 err_quartic)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Hurwitz composition identity", 1.0, composition_identity},
      {2, "singular-oscillator spectrum", 30.0, oscillator_spectrum},
      {3, "QES cross-check", 60.0, qes_cross_check},
      {4, "oscillator-Coulomb duality", 10.0, duality},
      {5, "chart independence", 60.0, chart_independence},
      {6, "theta equation", 0.0, theta_equation},
      {7, "separability gate", 0.0, separability_gate},
      {8, "anisotropy identities", 0.0, anisotropy_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget == 0.0 || secs < c.budget;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s criterion %d (%s): %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs,
                in_time ? "" : format(", over the %.0f s budget", c.budget).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
