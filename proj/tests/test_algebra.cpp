#include <cmath>
#include <random>

#include "doctest.h"
#include "hurwitz/algebra.hpp"

using namespace hurwitz;

namespace {

Vec8 unit(int k) {
  Vec8 e{};
  e[k] = 1.0;
  return e;
}

Vec8 random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec8 v{};
  for (double& c : v) c = n(rng);
  return v;
}

double max_abs_diff(const Vec8& a, const Vec8& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("imaginary units square to -1 and e0 is the identity") {
  for (int k = 0; k < 8; ++k) {
    CHECK(octonion_multiply(unit(0), unit(k)) == unit(k));
    CHECK(octonion_multiply(unit(k), unit(0)) == unit(k));
    if (k > 0) {
      Vec8 minus_one{};
      minus_one[0] = -1.0;
      CHECK(octonion_multiply(unit(k), unit(k)) == minus_one);
    }
  }
}

TEST_CASE("distinct imaginary units anticommute and the product is not associative") {
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const Vec8 ij = octonion_multiply(unit(i), unit(j));
      const Vec8 ji = octonion_multiply(unit(j), unit(i));
      for (int s = 0; s < 8; ++s) CHECK(ij[s] == -ji[s]);
    }
  }
  const Vec8 left = octonion_multiply(octonion_multiply(unit(1), unit(2)), unit(4));
  const Vec8 right = octonion_multiply(unit(1), octonion_multiply(unit(2), unit(4)));
  CHECK(max_abs_diff(left, right) > 1.0);
}

TEST_CASE("norm is multiplicative and the algebra is alternative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Vec8 x = random_vec(rng), y = random_vec(rng);
    const Vec8 xy = octonion_multiply(x, y);
    CHECK(norm_sq(xy) == doctest::Approx(norm_sq(x) * norm_sq(y)).epsilon(1e-13));
    // x(xy) = (xx)y
    const Vec8 a = octonion_multiply(x, xy);
    const Vec8 b = octonion_multiply(octonion_multiply(x, x), y);
    CHECK(max_abs_diff(a, b) < 1e-12 * (1.0 + norm_sq(x) * std::sqrt(norm_sq(y))));
    // x conj(x) = |x|^2
    const Vec8 n = octonion_multiply(x, octonion_conjugate(x));
    CHECK(n[0] == doctest::Approx(norm_sq(x)).epsilon(1e-14));
    for (int s = 1; s < 8; ++s) CHECK(std::abs(n[s]) < 1e-13 * norm_sq(x));
  }
}

TEST_CASE("gamma matrices satisfy the Clifford-type relations") {
  const GammaSet& g = build_gamma_set();
  CHECK(&g == &build_gamma_set());
  for (int s = 0; s < 8; ++s)
    for (int t = 0; t < 8; ++t) CHECK(g[0][s][t] == (s == t ? 1.0 : 0.0));
  // G_i^T G_j + G_j^T G_i = 2 delta_ij
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int s = 0; s < 8; ++s) {
        for (int t = 0; t < 8; ++t) {
          double acc = 0.0;
          for (int r = 0; r < 8; ++r) acc += g[i][r][s] * g[j][r][t] + g[j][r][s] * g[i][r][t];
          CHECK(acc == (i == j && s == t ? 2.0 : 0.0));
        }
      }
    }
  }
  // imaginary units give antisymmetric matrices
  for (int k = 1; k < 8; ++k)
    for (int s = 0; s < 8; ++s)
      for (int t = 0; t < 8; ++t) CHECK(g[k][s][t] == -g[k][t][s]);
}

TEST_CASE("bilinear form is left multiplication paired with u") {
  std::mt19937_64 rng(11);
  const GammaSet& g = build_gamma_set();
  const Vec8 u = random_vec(rng), v = random_vec(rng);
  for (int k = 0; k < 8; ++k) {
    CHECK(g.bilinear(k, u, v) == doctest::Approx(dot(u, octonion_multiply(unit(k), v))));
  }
}

TEST_CASE("forward map: first eight components equal 2 u conj(v)") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Vec8 u = random_vec(rng), v = random_vec(rng);
    const Vec9 x = hurwitz_forward(u, v);
    const Vec8 w = octonion_multiply(u, octonion_conjugate(v));
    for (int k = 0; k < 8; ++k) CHECK(x[k] == doctest::Approx(2.0 * w[k]).epsilon(1e-13));
    CHECK(x[8] == doctest::Approx(norm_sq(u) - norm_sq(v)));
  }
}

TEST_CASE("composition identity") {
  SUBCASE("u = e1, v = 0") {
    const Vec9 x = hurwitz_forward(unit(0), Vec8{});
    CHECK(x[8] == 1.0);
    for (int k = 0; k < 8; ++k) CHECK(x[k] == 0.0);
    CHECK(composition_residual(unit(0), Vec8{}, x) == 0.0);
  }
  SUBCASE("zero input") {
    CHECK(composition_residual(Vec8{}, Vec8{}, hurwitz_forward(Vec8{}, Vec8{})) == 0.0);
  }
  SUBCASE("random pairs") {
    std::mt19937_64 rng(42);
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) {
      const Vec8 u = random_vec(rng), v = random_vec(rng);
      worst = std::max(worst, composition_residual(u, v, hurwitz_forward(u, v)));
    }
    CHECK(worst <= 1e-12);
  }
  SUBCASE("residual detects a perturbed image") {
    std::mt19937_64 rng(5);
    const Vec8 u = random_vec(rng), v = random_vec(rng);
    Vec9 x = hurwitz_forward(u, v);
    x[3] += 1e-3;
    CHECK(composition_residual(u, v, x) > 1e-6);
  }
}
