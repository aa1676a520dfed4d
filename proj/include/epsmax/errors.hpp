#pragma once

#include <stdexcept>
#include <string>

namespace epsmax {

// Evaluation outside a function's mathematical domain (e.g. r < r0 for the
// shell closed forms, bad radius ordering).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// decompose() fed a hypercomplex value outside the real-field image of
// compose_psi().
struct NonRealDecomposition : std::runtime_error {
  explicit NonRealDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct CflViolation : std::runtime_error {
  explicit CflViolation(const std::string& what) : std::runtime_error(what) {}
};

// Blow-up detection: a state array picked up a NaN or Inf.
struct NonFiniteState : std::runtime_error {
  explicit NonFiniteState(const std::string& what) : std::runtime_error(what) {}
};

// Particle rest mass driven to or below zero; the step is rejected.
struct MassNonPositive : std::runtime_error {
  explicit MassNonPositive(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatch : std::runtime_error {
  explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SchemaMismatch : std::runtime_error {
  explicit SchemaMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace epsmax
