#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planemod {

/// Failure categories raised by the library. The CLI maps every one of them
/// to exit status 1 and prints the name returned by errc_name().
enum class Errc {
  DivisionByZero,
  BadExponent,
  NotDivisible,
  ConductorOverflow,
  ParseError,
  OrderBoundExceeded,
  NotFixed,
  NonCyclotomicEigenvalue,
  OrderCeilingExceeded,
  NotAMember,
  NotASubgroup,
  PrimeDoesNotDivide,
  NotNormal,
  NotAbelian,
  NotDiagonal,
  Unclassifiable,
  DegreeDivisibleBy3,
  BadCongruence,
  CeilingExceeded,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class MathError : public std::runtime_error {
 public:
  MathError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw MathError(code, what);
}

}  // namespace planemod
