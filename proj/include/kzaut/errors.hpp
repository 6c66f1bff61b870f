#pragma once

#include <stdexcept>
#include <string>

namespace kzaut {

// Base for violations of an operation's mathematical precondition.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDivisibleError : MathError {
  using MathError::MathError;
};

// Quotient ring k[z]/(p) needs deg_z p >= 1.
struct ConstantModulusError : MathError {
  using MathError::MathError;
};

struct NotCoprimeError : MathError {
  using MathError::MathError;
};

// a is not an automorphism image of (k[z]/(p))[x].
struct NotInvertibleError : MathError {
  using MathError::MathError;
};

struct ArityMismatchError : MathError {
  using MathError::MathError;
};

// The supplied a, b are not mutually inverse mod p; witness holds the
// canonical form of the offending remainder b(a(x)) - x mod p.
struct CongruenceFailedError : MathError {
  CongruenceFailedError(const std::string& msg, std::string witness_text)
      : MathError(msg), witness(std::move(witness_text)) {}
  std::string witness;
};

struct NotTameShapeError : MathError {
  using MathError::MathError;
};

// decompose on a wild input; d1 is the degree witness.
struct NotTameError : MathError {
  NotTameError(const std::string& msg, int d1_witness)
      : MathError(msg), d1(d1_witness) {}
  int d1;
};

struct NotAutomorphismError : MathError {
  using MathError::MathError;
};

// Derivation moves z; outside the supported z-constant setting.
struct UnsupportedDerivationError : MathError {
  using MathError::MathError;
};

struct KernelViolationError : MathError {
  using MathError::MathError;
};

struct NotLocallyNilpotentError : MathError {
  using MathError::MathError;
};

struct ConstantInputError : MathError {
  using MathError::MathError;
};

struct HasZVariableError : MathError {
  using MathError::MathError;
};

// Map component count outside {2, 3}; a usage-class error like ParseError.
struct ArityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// S-pair budget exhausted; deliberately not a MathError (maps to its own
// exit code in the CLI).
struct StepLimitExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kzaut
