#pragma once

#include <stdexcept>
#include <string>

namespace sandwich {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different rings.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structure that a lemma guarantees was not found; signals a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace sandwich
