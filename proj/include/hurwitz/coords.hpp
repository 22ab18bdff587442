#pragma once

#include <array>

#include "hurwitz/algebra.hpp"

namespace hurwitz {

/// Angles are stored innermost first: phi[0] is the angle that only enters
/// x_1 and x_2, phi[6] is the outermost one (the cosine in the top component).
using S7Angles = std::array<double, 7>;

/// 8-D hyperspherical chart.  phi[0..6] hold phi_1..phi_7.
///   x_8 = r cos(phi_7), x_7 = r sin(phi_7) cos(phi_6), ...,
///   x_2 = r sin(phi_7)...sin(phi_2) cos(phi_1),
///   x_1 = r sin(phi_7)...sin(phi_2) sin(phi_1)
struct Hyperspherical8 {
  double r = 0.0;
  S7Angles phi{};
};

/// 9-D spherical chart.  phi[0..6] hold phi_0..phi_6.
struct Spherical9 {
  double r = 0.0;
  double theta = 0.0;
  S7Angles phi{};
};

/// 9-D parabolic chart: x_9 = (u - v)/2, r = (u + v)/2, and x_1..x_8 lie on
/// the 7-sphere of radius sqrt(u v).
struct Parabolic9 {
  double u = 0.0;
  double v = 0.0;
  S7Angles phi{};
};

/// Nested-sine chain on S^7 scaled by radius; component 7 is radius*cos(phi[6]).
Vec8 s7_chain(double radius, const S7Angles& phi);

/// Inverse of s7_chain for the angles.  Degenerate directions get angle 0.
S7Angles s7_angles(const Vec8& x);

Vec8 hyperspherical_to_cartesian8(const Hyperspherical8& c);
Vec9 spherical9_to_cartesian(const Spherical9& c);
Vec9 parabolic_to_cartesian9(const Parabolic9& c);

/// Throws DomainError for the zero vector.
Parabolic9 cartesian9_to_parabolic(const Vec9& x);

}  // namespace hurwitz
