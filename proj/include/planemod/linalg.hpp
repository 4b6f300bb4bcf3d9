#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "planemod/cyclo.hpp"

namespace planemod {

using Vec3 = std::array<CycNum, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Exact 3x3 linear algebra over cyclotomic fields.
namespace la {

Mat3 identity();
Mat3 diag(const CycNum& a, const CycNum& b, const CycNum& c);
Mat3 mul(const Mat3& a, const Mat3& b);
Vec3 apply(const Mat3& a, const Vec3& v);
Mat3 scale(const Mat3& a, const CycNum& s);
Mat3 sub_scalar(const Mat3& a, const CycNum& mu);  // a - mu I
Mat3 transpose(const Mat3& a);
CycNum det(const Mat3& a);
Mat3 adjugate(const Mat3& a);
Mat3 galois(const Mat3& a, std::int64_t k);
Vec3 cross(const Vec3& a, const Vec3& b);
CycNum dot(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);
bool is_diagonal(const Mat3& a);
/// lcm of the conductors of all entries.
std::uint32_t conductor(const Mat3& a);
std::uint32_t conductor(const Vec3& v);

/// Basis of the right kernel in reduced echelon form: each basis vector has
/// a 1 at its own free column and 0 at the other free columns.
std::vector<Vec3> nullspace(const Mat3& a);
int rank(const Mat3& a);

/// Scale so the first nonzero entry is 1 and rewrite every entry at its
/// minimal conductor. Canonical for the projective class.
Vec3 normalize_projective(const Vec3& v);
Mat3 normalize_projective(const Mat3& a);

}  // namespace la

/// Polynomials over cyclotomic fields, constant term first, no trailing
/// zeros (the zero polynomial is empty).
namespace poly {
using Poly = std::vector<CycNum>;
Poly trim(Poly p);
CycNum eval(const Poly& p, const CycNum& x);
Poly monic(const Poly& p);
Poly rem(const Poly& a, const Poly& b);
Poly quot(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& p);
/// p(c x)
Poly scale_var(const Poly& p, const CycNum& c);
/// Characteristic polynomial det(x I - a).
Poly charpoly(const Mat3& a);
}  // namespace poly

}  // namespace planemod
