#include "planemod/error.hpp"

namespace planemod {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::BadExponent: return "BadExponent";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::ConductorOverflow: return "ConductorOverflow";
    case Errc::ParseError: return "ParseError";
    case Errc::OrderBoundExceeded: return "OrderBoundExceeded";
    case Errc::NotFixed: return "NotFixed";
    case Errc::NonCyclotomicEigenvalue: return "NonCyclotomicEigenvalue";
    case Errc::OrderCeilingExceeded: return "OrderCeilingExceeded";
    case Errc::NotAMember: return "NotAMember";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::DegreeDivisibleBy3: return "DegreeDivisibleBy3";
    case Errc::BadCongruence: return "BadCongruence";
    case Errc::CeilingExceeded: return "CeilingExceeded";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace planemod
