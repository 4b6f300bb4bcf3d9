#pragma once

#include <array>
#include <string>
#include <vector>

#include "planemod/groups.hpp"

namespace planemod {

/// The matrices M0..M5 over Q(zeta_3) and the groups H_i = <M0, ..., M_i>.
struct HessianLibrary {
  std::array<ProjMat, 6> m;
  std::array<ProjGroup, 6> h;  // h[0] = <M0>, h[1..5] = H1..H5
};

/// Built once on first use; immutable afterwards.
const HessianLibrary& hessian();

/// Matrix literals of M0..M5 and of the order-7 element diag(1, z7, z7^3).
const std::array<const char*, 6>& hessian_literals();
ProjMat hessian_matrix(int i);
ProjMat m7();

struct IdentityCheck {
  std::string statement;
  bool holds = false;
};

/// The six conjugation identities sigma(M_i) = ... for sigma: z3 -> z3^2.
std::vector<IdentityCheck> galois_identity_check();

/// A triangle of fixed points of one of the four cyclic subgroups of H1.
struct Triangle {
  ProjMat generator;
  std::array<ProjPoint, 3> points;
};

/// The four triangles, ordered so the one of <M0> comes first.
const std::vector<Triangle>& triangles();

/// Index of the triangle containing p, or -1.
int triangle_of(const ProjPoint& p);

/// How g permutes the four triangles. Raises NotNormal if g does not
/// permute them.
std::vector<int> triangle_permutation(const ProjMat& g);

/// Permutation image of a group (normalizing H1) acting on the triangles.
AbstractGroup triangle_action(const ProjGroup& g);

/// Image of H4 in the action on the triangles.
AbstractGroup h4_klein_action();

}  // namespace planemod
