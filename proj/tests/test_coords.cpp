#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hurwitz/algebra.hpp"
#include "hurwitz/coords.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;
using std::numbers::pi;

namespace {

S7Angles random_angles(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> polar(0.05, pi - 0.05), azimuth(0.0, 2.0 * pi);
  S7Angles phi{};
  phi[0] = azimuth(rng);
  for (int k = 1; k < 7; ++k) phi[k] = polar(rng);
  return phi;
}

}  // namespace

TEST_CASE("s7 chain has the requested radius and inverts") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const S7Angles phi = random_angles(rng);
    const Vec8 x = s7_chain(2.5, phi);
    CHECK(norm_sq(x) == doctest::Approx(6.25).epsilon(1e-14));
    CHECK(x[7] == doctest::Approx(2.5 * std::cos(phi[6])));
    const S7Angles back = s7_angles(x);
    for (int k = 0; k < 7; ++k) CHECK(back[k] == doctest::Approx(phi[k]).epsilon(1e-12));
  }
}

TEST_CASE("degenerate directions get zero angles") {
  Vec8 x{};
  x[7] = 3.0;
  const S7Angles phi = s7_angles(x);
  for (double a : phi) CHECK(a == 0.0);
}

TEST_CASE("8-D hyperspherical chart") {
  Hyperspherical8 c;
  c.r = 1.5;
  c.phi = {0.3, 1.1, 0.4, 2.0, 0.9, 1.7, 0.6};
  const Vec8 x = hyperspherical_to_cartesian8(c);
  CHECK(std::sqrt(norm_sq(x)) == doctest::Approx(1.5));
  CHECK(x[7] == doctest::Approx(1.5 * std::cos(0.6)));
}

TEST_CASE("9-D spherical chart") {
  Spherical9 c;
  c.r = 2.0;
  c.theta = 0.7;
  c.phi = {0.3, 1.1, 0.4, 2.0, 0.9, 1.7, 0.6};
  const Vec9 x = spherical9_to_cartesian(c);
  CHECK(std::sqrt(norm_sq(x)) == doctest::Approx(2.0));
  CHECK(x[8] == doctest::Approx(2.0 * std::cos(0.7)));
}

TEST_CASE("parabolic chart: x9 = (u - v)/2 and r = (u + v)/2") {
  Parabolic9 p;
  p.u = 3.0;
  p.v = 1.0;
  p.phi = {0.3, 1.1, 0.4, 2.0, 0.9, 1.7, 0.6};
  const Vec9 x = parabolic_to_cartesian9(p);
  CHECK(x[8] == doctest::Approx(1.0));
  CHECK(std::sqrt(norm_sq(x)) == doctest::Approx(2.0));
}

TEST_CASE("parabolic round trip") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> uv(0.01, 5.0);
  for (int t = 0; t < 200; ++t) {
    Parabolic9 p;
    p.u = uv(rng);
    p.v = uv(rng);
    p.phi = random_angles(rng);
    const Parabolic9 q = cartesian9_to_parabolic(parabolic_to_cartesian9(p));
    CHECK(q.u == doctest::Approx(p.u).epsilon(1e-12));
    CHECK(q.v == doctest::Approx(p.v).epsilon(1e-12));
    for (int k = 0; k < 7; ++k) CHECK(q.phi[k] == doctest::Approx(p.phi[k]).epsilon(1e-10));
  }
}

TEST_CASE("parabolic inverse keeps relative accuracy near the axis") {
  // x almost along -x9: u is tiny and must not be lost to cancellation
  Vec9 x{};
  x[0] = 1e-6;
  x[8] = -1.0;
  const Parabolic9 p = cartesian9_to_parabolic(x);
  const double r = std::sqrt(1.0 + 1e-12);
  CHECK(p.v == doctest::Approx(r + 1.0).epsilon(1e-15));
  CHECK(p.u == doctest::Approx(1e-12 / (r + 1.0)).epsilon(1e-12));
}

TEST_CASE("parabolic coordinates of a Hurwitz image are u.u and v.v scaled") {
  // |x| + x9 = 2 u.u and |x| - x9 = 2 v.v
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n(0.0, 1.0);
  Vec8 u{}, v{};
  for (double& c : u) c = n(rng);
  for (double& c : v) c = n(rng);
  const Parabolic9 p = cartesian9_to_parabolic(hurwitz_forward(u, v));
  CHECK(p.u == doctest::Approx(2.0 * norm_sq(u)).epsilon(1e-13));
  CHECK(p.v == doctest::Approx(2.0 * norm_sq(v)).epsilon(1e-13));
}

TEST_CASE("zero vector has no parabolic coordinates") {
  CHECK_THROWS_AS(cartesian9_to_parabolic(Vec9{}), DomainError);
}
