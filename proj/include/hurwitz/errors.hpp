#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A spherical-chart request on a model whose W' depends on theta.
class SeparabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Primed QES constants that map to a non-oscillator regime.
class QesPreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No QES eigenvector closes on the polynomial span.
class InconsistentParametersError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grid refinement did not settle an eigenvalue to the requested tolerance.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Energy bracket without a sign change of the parabolic mismatch.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or schema-violating run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hurwitz
