#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planemod/groups.hpp"

namespace planemod {

/// What the base field is known to contain.
struct FieldProfile {
  bool has_zeta12 = false;
  std::string label = "Q";

  /// Accepts Q, Q(zeta12), R, C; anything else raises InvalidArgument.
  static FieldProfile parse(const std::string& name);
};

/// Common eigenbasis of an abelian group, or the H1 certificate.
struct Diagonalization {
  bool diagonalizable = false;
  Mat3 basis;  // columns are common eigenvectors when diagonalizable
};

/// Raises NotAbelian. When the group is not diagonalizable it also checks
/// order 9, exponent 3 and the absence of fixed points.
Diagonalization diagonalize_abelian(const ProjGroup& g);
/// Same for a generator list whose elements commute projectively.
Diagonalization diagonalize_generators(const std::vector<ProjMat>& gens);
bool commute_projectively(const std::vector<ProjMat>& gens);

/// A diagonal group as a subgroup of (Z/M)^2: diag(z_M^u, z_M^v, 1).
class DiagonalLattice {
 public:
  /// Raises NotDiagonal for a non-diagonal generator.
  explicit DiagonalLattice(const std::vector<ProjMat>& gens);
  std::int64_t modulus() const noexcept { return m_; }
  std::int64_t order() const noexcept { return order_; }
  bool contains(std::int64_t u, std::int64_t v) const;
  std::vector<std::pair<std::int64_t, std::int64_t>> generators() const { return gens_; }

 private:
  std::int64_t m_ = 1;
  std::int64_t order_ = 1;
  std::vector<char> member_;
  std::vector<std::pair<std::int64_t, std::int64_t>> gens_;
};

/// Group generated by diag(z_a,1,1), diag(1,z_a,1), diag(z_an, z_an^d, 1)
/// with template coordinate i placed at position perm[i].
struct AbelianPresentation {
  std::int64_t a = 1;
  std::int64_t n = 1;
  std::int64_t d = 0;
  std::array<int, 3> perm{0, 1, 2};

  std::vector<ProjMat> generators() const;
  std::string str() const;
  friend bool operator==(const AbelianPresentation&, const AbelianPresentation&) = default;
};

/// Every (a, n, d, perm) matching the group. Raises NotDiagonal.
std::vector<AbelianPresentation> abelian_presentations(const ProjGroup& g);
std::vector<AbelianPresentation> abelian_presentations(const DiagonalLattice& g);
/// Presentations of any conjugate of the group generated by `gens` that is
/// diagonal; empty when the group is not abelian or not diagonalizable.
std::vector<AbelianPresentation> presentations_up_to_conjugacy(const std::vector<ProjMat>& gens);

enum class HessianLabel { H1, H2, H3 };
std::string to_string(HessianLabel h);

std::optional<HessianLabel> recognize_hessian(const ProjGroup& g);

struct MbdType {
  std::string label;   // A, B, C, D, E, abelian-diagonal, H1
  std::string detail;
};

/// Raises Unclassifiable when no structural witness is found.
MbdType mbd_type(const ProjGroup& g);

enum class Criticality { Critical, Lucky, Neither };
std::string to_string(Criticality c);

struct CriticalityVerdict {
  Criticality status = Criticality::Neither;
  std::string rule;
  std::optional<AbelianPresentation> witness;
  std::optional<HessianLabel> hessian;
  /// Status when clause 2 also admits b = 0, recorded only when it differs.
  std::optional<Criticality> status_if_b0;
};

CriticalityVerdict criticality(const ProjGroup& g, const FieldProfile& field);
/// Same decision, materializing the group only when it is not abelian or
/// could be H1.
CriticalityVerdict criticality_of_generators(const std::vector<ProjMat>& gens,
                                             const FieldProfile& field);

/// Clause tests on one presentation.
bool clause1(const AbelianPresentation& p);
bool clause1_template(const AbelianPresentation& p);  // without 3 | an
/// Clause 2 with n = 2^b n', n' odd; `min_b` is 1 (default reading) or 0.
bool clause2(const AbelianPresentation& p, int min_b = 1);

}  // namespace planemod
