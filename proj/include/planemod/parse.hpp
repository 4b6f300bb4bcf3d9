#pragma once

#include <string>
#include <string_view>

#include "planemod/linalg.hpp"

namespace planemod {

/// Parse a cyclotomic scalar such as `1 + 2*z(3)^2` or `-(z(12)^5)/3`.
/// Raises ParseError on malformed input.
CycNum parse_scalar(std::string_view text);

/// Parse a row-major matrix literal `[[a,b,c],[d,e,f],[g,h,i]]`.
Mat3 parse_matrix(std::string_view text);

std::string format_matrix(const Mat3& m);

}  // namespace planemod
