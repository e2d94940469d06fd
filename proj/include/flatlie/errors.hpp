#ifndef FLATLIE_ERRORS_HPP
#define FLATLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flatlie {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two objects that must live on the same algebra (or have the same
/// dimension) do not.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A matrix fails a structural requirement (not square, not symmetric, ...).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// A matrix required to be invertible is singular.
class SingularError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (rational literals, manifest JSON).
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed input whose content violates a documented constraint.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its mathematical hypotheses and cannot
/// degrade to a warning.
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace flatlie

#endif
