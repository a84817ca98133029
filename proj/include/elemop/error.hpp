#pragma once

#include <stdexcept>
#include <string>

namespace elemop {

/// Operand shapes do not fit the operation.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scalar, matrix or operator text.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations disagreed, or a fact that must hold
/// exactly did not. Always indicates a bug.
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace elemop
