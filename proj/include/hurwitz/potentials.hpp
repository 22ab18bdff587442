#pragma once

#include <string>
#include <utility>

namespace hurwitz {

enum class Family { Sho, Sub2, Super2 };

std::string to_string(Family f);
Family family_from_string(const std::string& name);  // throws ConfigError

/// Radial potential of one 8-D factor, as a function of the 8-D radius rho:
///   Sho    : w^2 rho^2/2 + c/rho^2
///   Sub2   : Sho + a rho + b/rho
///   Super2 : Sho + b rho^4 + a rho^6
struct Potential8D {
  Family family = Family::Sho;
  double omega = 1.0;
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;

  static Potential8D sho(double omega, double c = 0.0);
  static Potential8D sub2(double omega, double c, double a, double b);
  static Potential8D super2(double omega, double c, double a, double b);

  /// Throws DomainError on omega <= 0, c < 0, or anharmonic terms on Sho.
  void validate() const;
  bool is_harmonic() const { return a == 0.0 && b == 0.0; }
};

/// Throws DomainError for rho <= 0.
double eval_potential(const Potential8D& p, double rho);

/// Sum of two independent 8-D factors (u-space and v-space).  Z_a are the
/// factor eigenvalues, E_a the dual energies.
struct OscillatorModel {
  Potential8D p1;
  Potential8D p2;
  double Z1 = 0.0;
  double Z2 = 0.0;
  double E1 = 0.0;
  double E2 = 0.0;

  /// E_a defaults to -omega_a^2/2.
  static OscillatorModel from_potentials(const Potential8D& p1, const Potential8D& p2,
                                         double Z1, double Z2);
  double Z() const { return Z1 + Z2; }
  /// 1..4 for (Sub2,Sub2), (Sub2,Super2), (Super2,Sub2), (Super2,Super2); Sho
  /// factors count as Sub2 with vanishing anharmonic terms.
  int model_number() const;
};

struct MiczParams {
  double Z = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  int J = 0;
  int L = 0;
  double Qsq = 0.0;

  void validate() const;
};

/// Non-singular part of one factor's potential with the harmonic term traded
/// for the dual energy, as a function of w = x_s x_s:
///   -E w + (b/sqrt(w) + a sqrt(w))   for Sub2
///   -E w + (b w^2 + a w^3)           for Super2
/// The c/w term is not included.
double factor_term(const Potential8D& p, double E, double w);

/// W'(r, theta) = (1/r)[f1(r cos^2(theta/2)) + f2(r sin^2(theta/2))] - Z1 - Z2,
/// with f_a = factor_term.  Throws DomainError when a Sub2 factor with b != 0
/// sits on its singular ray (theta = pi for factor 1, theta = 0 for factor 2).
double spherical_W(const OscillatorModel& model, double r, double theta);

/// True iff E1 == E2 and a and b vanish in both factors.
bool is_spherically_separable(const OscillatorModel& model);

/// Human-readable description of the separability condition.
inline constexpr const char* kSeparabilityCondition = "E1=E2, a1=b1=a2=b2=0";

/// One parabolic source term: W'(w) = f(w/2) - Z_a evaluated at the parabolic
/// coordinate w (u or v).
class FactorW {
 public:
  FactorW(Potential8D p, double E, double Z) : p_(p), E_(E), Z_(Z) {}
  /// Throws DomainError for w <= 0 when a Sub2 factor has b != 0.
  double operator()(double w) const;
  const Potential8D& potential() const { return p_; }
  double energy() const { return E_; }
  double charge() const { return Z_; }

 private:
  Potential8D p_;
  double E_;
  double Z_;
};

struct ParabolicW {
  FactorW Wu;
  FactorW Wv;
};

ParabolicW parabolic_W(const OscillatorModel& model);

/// Centrifugal numerators of the parabolic equations:
///   alpha_u = (J(J+6) + 8 c1)/4,  alpha_v = (L(L+6) + 8 c2)/4.
std::pair<double, double> micz_centrifugal_strengths(const MiczParams& m);

}  // namespace hurwitz
