#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plbranch {

enum class ErrorKind {
  NotPrime,
  PDividesN,
  OrderNotAboveN,
  NotPrimitive,
  SmoothCurve,
  NotABranch,
  Syntax,
  UnknownVariable,
  NegativeExponent,
  InvalidGenerators,
  DegenerateDegree,
  Precondition,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Raised for anything the caller supplied wrongly. The CLI maps these to exit
// status 2.
class InputError : public std::runtime_error {
 public:
  InputError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

}  // namespace plbranch
