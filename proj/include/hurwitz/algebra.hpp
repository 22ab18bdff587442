#pragma once

#include <array>

namespace hurwitz {

using Vec8 = std::array<double, 8>;
using Vec9 = std::array<double, 9>;
using Mat8 = std::array<std::array<double, 8>, 8>;

double dot(const Vec8& a, const Vec8& b);
double norm_sq(const Vec8& a);
double norm_sq(const Vec9& a);

/// Octonion product of two elements in the basis (e0 = 1, e1, ..., e7).
///
/// Built by Cayley-Dickson doubling of the quaternions, which are themselves
/// doubled from the complex numbers.  With x = (p, q) and y = (r, s) split into
/// lower and upper halves:
///
///     (p, q)(r, s) = (p r - conj(s) q,  s p + q conj(r))
///
/// This fixes the multiplication table used throughout; the composition
/// property |x y| = |x| |y| holds for it.
Vec8 octonion_multiply(const Vec8& x, const Vec8& y);
Vec8 octonion_conjugate(const Vec8& x);

/// Left-multiplication matrices of the octonion basis units:
/// (Gamma_k)_{st} = (e_k e_t)_s, so Gamma_k v = e_k * v.
struct GammaSet {
  std::array<Mat8, 8> matrices;

  const Mat8& operator[](std::size_t k) const { return matrices[k]; }
  /// u^T Gamma_k v
  double bilinear(std::size_t k, const Vec8& u, const Vec8& v) const;
};

/// Deterministic; the same matrices on every call.  Gamma_0 is the identity.
const GammaSet& build_gamma_set();

/// Hurwitz map R^16 -> R^9:
///   x_k = 2 (Gamma_k)_{st} u_s v_t  (k = 1..8, stored at index k-1),
///   x_9 = u.u - v.v                  (stored at index 8).
/// |x| = u.u + v.v.
Vec9 hurwitz_forward(const Vec8& u, const Vec8& v);

/// Relative residual of |x|^2 = (u.u + v.v)^2; zero input gives zero.
double composition_residual(const Vec8& u, const Vec8& v, const Vec9& x);

}  // namespace hurwitz
