#pragma once

#include <stdexcept>
#include <string>

namespace hyperlab {

/// Malformed input: dimension mismatches, non-SPD metrics, out-of-range model
/// parameters. Never used to report a failed identity.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A φ-basis seed whose projection onto the remaining complement vanished.
class DegenerateSeedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operation needs data the instance does not carry (e.g. no ∇A provider).
class UnsupportedOperationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scalar formula evaluated outside its domain (division by α = 0 and friends).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The Riccati solution left the finite range before reaching the target radius.
class FocalPointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Catalog closed form and Riccati oracle disagree beyond the oracle tolerance.
class OracleMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A required hypothesis of an operation does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperlab
