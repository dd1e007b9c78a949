#pragma once

#include <stdexcept>
#include <string>

namespace twodist {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (negative radicand, bad ordering, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands span more than two independent square roots.
class UnsupportedExtension : public Error {
 public:
  using Error::Error;
};

/// A closed-form parameter formula hit a zero denominator.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

/// The idempotent basis cannot be formed (vanishing normalizer).
class DegenerateRepresentation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input structure does not have the shape an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IdentityFailure : public Error {
 public:
  using Error::Error;
};

/// Spectrum collapses to a single distance (gamma == 2).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

}  // namespace twodist
