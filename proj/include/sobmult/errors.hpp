#pragma once

#include <stdexcept>
#include <string>

namespace sobmult {

/// Base class for all recoverable errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (fraction/decimal grammar, file headers, JSON).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A space specification violates the admissible exponent ranges.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Ill-formed query (mismatched families or domains).
class QueryError : public Error {
public:
  using Error::Error;
};

/// Derivation requested from endpoints that do not support it.
class DerivationError : public Error {
public:
  using Error::Error;
};

/// Experiment configuration cannot be realized (e.g. grid too small).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Operation invoked in a way its contract forbids.
class UsageError : public Error {
public:
  using Error::Error;
};

/// File input/output failure.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace sobmult
