#include "hurwitz/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string to_string(Family f) {
  switch (f) {
    case Family::Sho: return "sho";
    case Family::Sub2: return "sub2";
    case Family::Super2: return "super2";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "sho") return Family::Sho;
  if (name == "sub2") return Family::Sub2;
  if (name == "super2") return Family::Super2;
  throw ConfigError("unknown potential family '" + name + "' (expected sho, sub2, super2)");
}

Potential8D Potential8D::sho(double omega, double c) {
  return {Family::Sho, omega, c, 0.0, 0.0};
}

Potential8D Potential8D::sub2(double omega, double c, double a, double b) {
  return {Family::Sub2, omega, c, a, b};
}

Potential8D Potential8D::super2(double omega, double c, double a, double b) {
  return {Family::Super2, omega, c, a, b};
}

void Potential8D::validate() const {
  if (!(omega > 0.0)) throw DomainError("potential: omega must be positive");
  if (!(c >= 0.0)) throw DomainError("potential: c must be nonnegative");
  if (family == Family::Sho && (a != 0.0 || b != 0.0)) {
    throw DomainError("potential: Sho factor carries no anharmonic terms");
  }
}

double eval_potential(const Potential8D& p, double rho) {
  if (!(rho > 0.0)) throw DomainError("eval_potential: rho must be positive");
  const double r2 = rho * rho;
  double v = 0.5 * p.omega * p.omega * r2 + p.c / r2;
  switch (p.family) {
    case Family::Sho: break;
    case Family::Sub2: v += p.a * rho + p.b / rho; break;
    case Family::Super2: v += p.b * r2 * r2 + p.a * r2 * r2 * r2; break;
  }
  return v;
}

OscillatorModel OscillatorModel::from_potentials(const Potential8D& p1, const Potential8D& p2,
                                                 double Z1, double Z2) {
  p1.validate();
  p2.validate();
  return {p1, p2, Z1, Z2, -0.5 * p1.omega * p1.omega, -0.5 * p2.omega * p2.omega};
}

int OscillatorModel::model_number() const {
  const bool first_super = p1.family == Family::Super2;
  const bool second_super = p2.family == Family::Super2;
  return 1 + (second_super ? 1 : 0) + (first_super ? 2 : 0);
}

void MiczParams::validate() const {
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) throw DomainError("micz: c1, c2 must be nonnegative");
  if (J < 0 || L < 0) throw DomainError("micz: J, L must be nonnegative");
  if (!(Qsq >= 0.0)) throw DomainError("micz: Q^2 must be nonnegative");
}

double factor_term(const Potential8D& p, double E, double w) {
  double v = -E * w;
  switch (p.family) {
    case Family::Sho: break;
    case Family::Sub2: {
      if (p.b != 0.0) {
        if (!(w > 0.0)) throw DomainError("Sub2 b-term is singular at w = 0");
        v += p.b / std::sqrt(w);
      }
      v += p.a * std::sqrt(w);
      break;
    }
    case Family::Super2: v += p.b * w * w + p.a * w * w * w; break;
  }
  return v;
}

double spherical_W(const OscillatorModel& model, double r, double theta) {
  if (!(r > 0.0)) throw DomainError("spherical_W: r must be positive");
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  // cos(pi/2) rounds to ~6e-17; pin the singular rays to exact zeros
  const double w1 = (theta == std::numbers::pi) ? 0.0 : r * ch * ch;
  const double w2 = (theta == 0.0) ? 0.0 : r * sh * sh;
  return (factor_term(model.p1, model.E1, w1) + factor_term(model.p2, model.E2, w2)) / r -
         model.Z1 - model.Z2;
}

bool is_spherically_separable(const OscillatorModel& model) {
  const double scale = std::max({1.0, std::abs(model.E1), std::abs(model.E2)});
  const bool same_energy = std::abs(model.E1 - model.E2) <= 1e-14 * scale;
  return same_energy && model.p1.is_harmonic() && model.p2.is_harmonic();
}

double FactorW::operator()(double w) const {
  if (p_.family == Family::Sub2 && p_.b != 0.0 && !(w > 0.0)) {
    throw DomainError("parabolic W': Sub2 b-term is singular at w <= 0");
  }
  return factor_term(p_, E_, 0.5 * w) - Z_;
}

ParabolicW parabolic_W(const OscillatorModel& model) {
  return {FactorW(model.p1, model.E1, model.Z1), FactorW(model.p2, model.E2, model.Z2)};
}

std::pair<double, double> micz_centrifugal_strengths(const MiczParams& m) {
  const double au = (m.J * (m.J + 6.0) + 8.0 * m.c1) / 4.0;
  const double av = (m.L * (m.L + 6.0) + 8.0 * m.c2) / 4.0;
  return {au, av};
}

}  // namespace hurwitz
