#include "hurwitz/coords.hpp"

#include <cmath>
#include <numbers>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Vec8 s7_chain(double radius, const S7Angles& phi) {
  Vec8 x{};
  double running = radius;
  for (int k = 6; k >= 0; --k) {
    x[k + 1] = running * std::cos(phi[k]);
    running *= std::sin(phi[k]);
  }
  x[0] = running;
  return x;
}

S7Angles s7_angles(const Vec8& x) {
  S7Angles phi{};
  double tail_sq = 0.0;
  std::array<double, 8> tail{};  // tail[k] = sqrt(x_0^2 + ... + x_k^2)
  for (std::size_t i = 0; i < 8; ++i) {
    tail_sq += x[i] * x[i];
    tail[i] = std::sqrt(tail_sq);
  }
  for (int k = 6; k >= 1; --k) {
    phi[k] = (tail[k + 1] == 0.0) ? 0.0 : std::atan2(tail[k], x[k + 1]);
  }
  double inner = std::atan2(x[0], x[1]);
  if (inner < 0.0) inner += 2.0 * std::numbers::pi;
  phi[0] = inner;
  return phi;
}

Vec8 hyperspherical_to_cartesian8(const Hyperspherical8& c) {
  return s7_chain(c.r, c.phi);
}

Vec9 spherical9_to_cartesian(const Spherical9& c) {
  const Vec8 ring = s7_chain(c.r * std::sin(c.theta), c.phi);
  Vec9 x{};
  for (std::size_t i = 0; i < 8; ++i) x[i] = ring[i];
  x[8] = c.r * std::cos(c.theta);
  return x;
}

Vec9 parabolic_to_cartesian9(const Parabolic9& c) {
  const Vec8 ring = s7_chain(std::sqrt(c.u * c.v), c.phi);
  Vec9 x{};
  for (std::size_t i = 0; i < 8; ++i) x[i] = ring[i];
  x[8] = 0.5 * (c.u - c.v);
  return x;
}

Parabolic9 cartesian9_to_parabolic(const Vec9& x) {
  const double r = std::sqrt(norm_sq(x));
  if (r == 0.0) {
    throw DomainError("cartesian9_to_parabolic: zero vector has no parabolic angles");
  }
  Parabolic9 c;
  // u v = r^2 - x9^2; take the larger of r +- x9 directly and recover the
  // smaller one from the product to avoid cancellation.
  Vec8 ring{};
  double ring_sq = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    ring[i] = x[i];
    ring_sq += x[i] * x[i];
  }
  if (x[8] >= 0.0) {
    c.u = r + x[8];
    c.v = ring_sq / c.u;
  } else {
    c.v = r - x[8];
    c.u = ring_sq / c.v;
  }
  c.phi = s7_angles(ring);
  return c;
}

}  // namespace hurwitz
