#include "hurwitz/algebra.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace hurwitz {

namespace {

// Cayley-Dickson product on 2^n components; out must not alias x or y.
void cd_multiply(std::span<const double> x, std::span<const double> y,
                 std::span<double> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  auto p = x.first(h), q = x.last(h);
  auto r = y.first(h), s = y.last(h);

  std::vector<double> conj_r(r.begin(), r.end());
  std::vector<double> conj_s(s.begin(), s.end());
  for (std::size_t i = 1; i < h; ++i) {
    conj_r[i] = -conj_r[i];
    conj_s[i] = -conj_s[i];
  }

  std::vector<double> t1(h), t2(h);
  cd_multiply(p, r, t1);
  cd_multiply(conj_s, q, t2);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

  cd_multiply(s, p, t1);
  cd_multiply(q, conj_r, t2);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

GammaSet make_gamma_set() {
  GammaSet g{};
  for (std::size_t k = 0; k < 8; ++k) {
    Vec8 ek{};
    ek[k] = 1.0;
    for (std::size_t t = 0; t < 8; ++t) {
      Vec8 et{};
      et[t] = 1.0;
      const Vec8 col = octonion_multiply(ek, et);
      for (std::size_t s = 0; s < 8; ++s) g.matrices[k][s][t] = col[s];
    }
  }
  return g;
}

}  // namespace

double dot(const Vec8& a, const Vec8& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 8; ++i) acc += a[i] * b[i];
  return acc;
}

double norm_sq(const Vec8& a) { return dot(a, a); }

double norm_sq(const Vec9& a) {
  double acc = 0.0;
  for (double c : a) acc += c * c;
  return acc;
}

Vec8 octonion_multiply(const Vec8& x, const Vec8& y) {
  Vec8 out{};
  cd_multiply(x, y, out);
  return out;
}

Vec8 octonion_conjugate(const Vec8& x) {
  Vec8 out = x;
  for (std::size_t i = 1; i < 8; ++i) out[i] = -out[i];
  return out;
}

double GammaSet::bilinear(std::size_t k, const Vec8& u, const Vec8& v) const {
  const Mat8& m = matrices[k];
  double acc = 0.0;
  for (std::size_t s = 0; s < 8; ++s) {
    double row = 0.0;
    for (std::size_t t = 0; t < 8; ++t) row += m[s][t] * v[t];
    acc += u[s] * row;
  }
  return acc;
}

const GammaSet& build_gamma_set() {
  static const GammaSet gammas = make_gamma_set();
  return gammas;
}

Vec9 hurwitz_forward(const Vec8& u, const Vec8& v) {
  const GammaSet& g = build_gamma_set();
  Vec9 x{};
  for (std::size_t k = 0; k < 8; ++k) x[k] = 2.0 * g.bilinear(k, u, v);
  x[8] = norm_sq(u) - norm_sq(v);
  return x;
}

double composition_residual(const Vec8& u, const Vec8& v, const Vec9& x) {
  const double r = norm_sq(u) + norm_sq(v);
  const double expected = r * r;
  if (expected == 0.0) return std::abs(norm_sq(x));
  return std::abs(norm_sq(x) - expected) / expected;
}

}  // namespace hurwitz
