#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "planemod/groups.hpp"

namespace planemod {

inline constexpr std::size_t kDefaultTorsorCeiling = 5000;

/// A normal subgroup G of N and a commuting generating pair of Q = N/G. A
/// continuous homomorphism from Z^2-hat onto Q is a commuting generating
/// pair, so it lifts through N iff the pair has commuting preimages.
struct ExtensionProblem {
  std::string family;
  AbstractGroup n;
  Subset g;
  AbstractGroup q;
  std::vector<int> projection;  // element of N -> coset index in Q
  std::pair<int, int> target{0, 0};
};

/// Parameters are checked against the congruences of each family
/// (BadCongruence) and |N| against `ceiling` (CeilingExceeded).
ExtensionProblem build_family_c1_3n(std::int64_t a, std::int64_t n, std::int64_t d,
                                    std::size_t ceiling = kDefaultTorsorCeiling);
ExtensionProblem build_family_c1_3a(std::int64_t a, std::int64_t n, std::int64_t d,
                                    std::size_t ceiling = kDefaultTorsorCeiling);
ExtensionProblem build_family_c2(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t d,
                                 std::size_t ceiling = kDefaultTorsorCeiling);
/// N = H4, G = H2.
ExtensionProblem build_family_h2();
/// N = Q x G for any pair of groups, Q abelian and 2-generated; the target
/// lifts inside the Q factor.
ExtensionProblem direct_product_control(const AbstractGroup& q, const AbstractGroup& g);
/// Same N with G replaced by N itself (trivial quotient).
ExtensionProblem trivial_quotient(const ExtensionProblem& p);

bool commuting_lift_exists(const ExtensionProblem& p);
/// Some abelian subgroup of N maps onto N/G.
bool abelian_surjection_exists(const ExtensionProblem& p);

/// For the torus families: every element of N0 fixed by the permutation lies
/// in the 3-torsion C_3^3 / Delta.
bool fixed_elements_in_3_torsion(std::int64_t a, std::int64_t n, std::int64_t d);

/// E = (C_3^3 / Delta) : C_3 with the central subgroup A = <(1,2,0)>.
struct ReferenceExtension {
  AbstractGroup e;
  Subset a;
};
ReferenceExtension e_group();
/// E_{+1} or E_{-1} inside C_{2^b}^2 : C_2 (coordinate swap), with A = <(1, +-1, 0)>.
ReferenceExtension e_pm(std::int64_t b, int sign);
/// A subgroup meeting A trivially that maps onto E/A.
bool has_complement(const ReferenceExtension& r);
/// Some abelian subgroup of E maps onto E/A.
bool abelian_surjects(const ReferenceExtension& r);

/// An involutive automorphism of a finite group; sigma[x] is the image of x.
struct InvolutionAction {
  AbstractGroup a;
  std::vector<int> sigma;
};
/// Raises InvalidArgument unless sigma is an automorphism with sigma^2 = id.
void validate(const InvolutionAction& act);
/// Representatives of H^1(C_2, A): cocycles z with z sigma(z) = 1 modulo
/// z ~ b z sigma(b)^-1.
std::vector<int> h1_c2(const InvolutionAction& act);

/// C_2 x C_2 with the coordinate swap, and C_2 with the trivial action.
InvolutionAction klein_swap();
InvolutionAction c2_trivial();

}  // namespace planemod
