#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by all toolkit modules.
 *
 * Every contract violation is reported by throwing one of these types;
 * callers can catch ::toda::Error to handle any of them uniformly.
 */

#include <stdexcept>
#include <string>

namespace toda {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An index, set, or family lies outside the operation's domain.
class DomainError : public Error { public: using Error::Error; };

/// A matrix or algebra was requested with a rank that is too small.
class RankError : public Error { public: using Error::Error; };

/// A matrix that must be inverted is singular.
class SingularError : public Error { public: using Error::Error; };

/// Numeric evaluation was impossible (missing values, symbolic residue).
class EvaluationError : public Error { public: using Error::Error; };

/// A block decomposition violates one of its defining clauses.
class DecompositionError : public Error { public: using Error::Error; };

/// A vector is not a pure mass form (constant or generic terms present).
class NotMassForm : public Error { public: using Error::Error; };

/// An export or input format is unknown or malformed.
class FormatError : public Error { public: using Error::Error; };

/// A vector that must be fold-symmetric is not.
class SymmetryError : public Error { public: using Error::Error; };

}  // namespace toda
