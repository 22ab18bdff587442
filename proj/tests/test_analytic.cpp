#include <cmath>

#include "doctest.h"
#include "hurwitz/analytic.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

TEST_CASE("terminating Kummer series") {
  // exact rational value 461/2145
  CHECK(kummer_1f1_terminating(3, 5.5, 2.0) == doctest::Approx(461.0 / 2145.0).epsilon(1e-15));
  CHECK(kummer_1f1_terminating(0, 2.0, 9.0) == 1.0);
  CHECK(kummer_1f1_terminating(1, 4.0, 2.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(kummer_1f1_terminating(3, -1.0, 1.0), DomainError);
}

TEST_CASE("Kummer series against associated Laguerre polynomials") {
  // 1F1(-n; a+1; z) = n! / (a+1)_n  L_n^a(z)
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned a = 0; a <= 5; ++a) {
      double poch = 1.0, fact = 1.0;
      for (unsigned k = 0; k < n; ++k) {
        poch *= a + 1.0 + k;
        fact *= k + 1.0;
      }
      for (double z : {0.3, 1.7, 4.0}) {
        const double ref = fact / poch * std::assoc_laguerre(n, a, z);
        CHECK(kummer_1f1_terminating(static_cast<int>(n), a + 1.0, z) ==
              doctest::Approx(ref).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("effective angular index") {
  CHECK(effective_lprime(2, 0.0) == doctest::Approx(2.0));
  // L'(L'+6) = L(L+6) + 2c
  const double lp = effective_lprime(1, 8.0);
  CHECK(lp * (lp + 6.0) == doctest::Approx(7.0 + 16.0));
}

TEST_CASE("singular oscillator energies") {
  CHECK(singular_oscillator_energy({0, 0, 0, 0.0, 0.0}, 1.0, 0.0) == doctest::Approx(4.0));
  CHECK(singular_oscillator_energy({2, 1, 0, 0.0, 0.0}, 0.5, 0.0) == doctest::Approx(4.5));
  const double lp = effective_lprime(2, 1.0);
  CHECK(singular_oscillator_energy({1, 2, 0, 0.0, 0.0}, 2.0, 1.0) ==
        doctest::Approx(2.0 * (2.0 + lp + 4.0)));
}

TEST_CASE("radial wavefunction solves the radial equation") {
  // -(1/2)(R'' + 7 R'/r) + [(L(L+6) + 2c)/(2 r^2) + w^2 r^2/2] R = Z R
  const double omega = 0.8;
  for (int N : {0, 1, 3}) {
    for (int L : {0, 2}) {
      for (double c : {0.0, 1.5}) {
        const QuantumNumbers q{N, L, 0, 0.0, 0.0};
        const double Z = singular_oscillator_energy(q, omega, c);
        auto R = [&](double r) { return radial_wavefunction(q, omega, c, r); };
        for (double r : {0.4, 1.1, 2.3}) {
          const double h = 1e-4;
          const double d1 = (R(r + h) - R(r - h)) / (2 * h);
          const double d2 = (R(r + h) - 2 * R(r) + R(r - h)) / (h * h);
          const double lhs = -0.5 * (d2 + 7.0 * d1 / r) +
                             ((L * (L + 6.0) + 2.0 * c) / (2 * r * r) + 0.5 * omega * omega * r * r) * R(r);
          const double scale = std::abs(Z * R(r)) + std::abs(d2) + 1e-3;
          CHECK(std::abs(lhs - Z * R(r)) / scale < 1e-5);
        }
      }
    }
  }
}

TEST_CASE("theta separation index and Coulomb levels") {
  CHECK(theta_lambda(2, 0, 0, 0.0, 0.0) == doctest::Approx(2.0));
  CHECK(theta_lambda(0, 1, 1, 0.0, 0.0) == doctest::Approx(1.0));
  MiczParams m;
  CHECK(micz_coulomb_energy(0, m) == doctest::Approx(-1.0 / 32.0));
  CHECK(micz_coulomb_energy(1, m) == doctest::Approx(-1.0 / 50.0));
  MiczParams m2 = m;
  m2.c1 = 1.0;
  CHECK(micz_coulomb_energy(0, m2) > micz_coulomb_energy(0, m));
}

TEST_CASE("duality map") {
  const DualPair d = dual_map(0.25, 2.0);
  CHECK(d.E == doctest::Approx(-1.0 / 32.0));
  CHECK(d.Z == 2.0);
  const DualPair back = dual_map_inverse(d.E, d.Z);
  CHECK(back.omega == doctest::Approx(0.25));
  CHECK_THROWS_AS(dual_map(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(dual_map_inverse(0.0, 1.0), DomainError);
  // 16-D ground eigenvalue 8 omega maps to the charge whose ground level is E
  const double omega = 0.25;
  const double z16 = 2.0 * singular_oscillator_energy({}, omega, 0.0);
  CHECK(z16 == doctest::Approx(8.0 * omega));
  MiczParams m;
  m.Z = coulomb_charge_for(z16);
  CHECK(m.Z == doctest::Approx(1.0));
  CHECK(micz_coulomb_energy(0, m) == doctest::Approx(dual_map(omega, z16).E));
}

TEST_CASE("duality holds in excited sectors with singular terms") {
  // factor angular momenta J, L and strengths 4 c_a on the 16-D side
  const double omega = 0.7;
  for (int J : {0, 2}) {
    for (int L : {0, 1}) {
      for (double c1 : {0.0, 1.0}) {
        const double c2 = 2.0;
        const double z16 = singular_oscillator_energy({0, J, 0, 0, 0}, omega, 4 * c1) +
                           singular_oscillator_energy({0, L, 0, 0, 0}, omega, 4 * c2);
        MiczParams m;
        m.Z = coulomb_charge_for(z16);
        m.J = J;
        m.L = L;
        m.c1 = c1;
        m.c2 = c2;
        CHECK(micz_coulomb_energy(0, m) == doctest::Approx(-0.5 * omega * omega));
      }
    }
  }
}

TEST_CASE("QES parameter validation") {
  QesPrimedParams p;
  CHECK_NOTHROW(p.validate());
  p.N = 0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.N = 1;
  p.d_p = 3.0;
  p.l_p = 2.0;  // d' + 2l' - 1 = 6 != 7
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.d_p = 4.0;
  CHECK_NOTHROW(p.validate());
}
