#include "planemod/hessian.hpp"

#include <algorithm>

#include "planemod/parse.hpp"

namespace planemod {

const std::array<const char*, 6>& hessian_literals() {
  static const std::array<const char*, 6> lits = {
      "[[1,0,0],[0,z(3),0],[0,0,z(3)^2]]",
      "[[0,0,1],[1,0,0],[0,1,0]]",
      "[[1,0,0],[0,0,1],[0,1,0]]",
      "[[1,1,1],[1,z(3),z(3)^2],[1,z(3)^2,z(3)]]",
      "[[1,1,z(3)],[1,z(3),1],[z(3)^2,z(3),z(3)]]",
      "[[1,0,0],[0,1,0],[0,0,z(3)]]",
  };
  return lits;
}

ProjMat hessian_matrix(int i) { return ProjMat::parse(hessian_literals().at(i)); }

ProjMat m7() { return ProjMat::diag(1, CycNum::zeta(7), CycNum::zeta(7, 3)); }

const HessianLibrary& hessian() {
  static const HessianLibrary lib = [] {
    HessianLibrary l;
    for (int i = 0; i < 6; ++i) l.m[i] = hessian_matrix(i);
    for (int i = 0; i < 6; ++i) {
      std::vector<ProjMat> gens(l.m.begin(), l.m.begin() + i + 1);
      l.h[i] = ProjGroup::closure(gens);
    }
    return l;
  }();
  return lib;
}

std::vector<IdentityCheck> galois_identity_check() {
  const auto& m = hessian().m;
  std::array<ProjMat, 6> bar;
  for (int i = 0; i < 6; ++i) bar[i] = m[i].galois(2);
  return {
      {"conj(M0) = M0^-1", bar[0] == m[0].inverse()},
      {"conj(M1) = M1", bar[1] == m[1]},
      {"conj(M2) = M2", bar[2] == m[2]},
      {"conj(M3) = M3^-1", bar[3] == m[3].inverse()},
      {"conj(M4) = M4*M3", bar[4] == m[4] * m[3]},
      {"conj(M5) = M5^-1", bar[5] == m[5].inverse()},
  };
}

const std::vector<Triangle>& triangles() {
  static const std::vector<Triangle> tris = [] {
    const ProjGroup& h1 = hessian().h[1];
    std::vector<Triangle> out;
    std::vector<Subset> seen;
    for (std::size_t i = 1; i < h1.order(); ++i) {
      Subset cyc = h1.abstract().generated({static_cast<int>(i)});
      if (std::find(seen.begin(), seen.end(), cyc) != seen.end()) continue;
      seen.push_back(cyc);
      FixedLocus f = fixed_locus(h1.elements()[i]);
      if (f.points.size() != 3) raise(Errc::InvalidArgument, "H1 element without three fixed points");
      std::sort(f.points.begin(), f.points.end());
      out.push_back(Triangle{h1.elements()[i], {f.points[0], f.points[1], f.points[2]}});
    }
    return out;
  }();
  return tris;
}

int triangle_of(const ProjPoint& p) {
  const auto& t = triangles();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (std::find(t[i].points.begin(), t[i].points.end(), p) != t[i].points.end())
      return static_cast<int>(i);
  return -1;
}

std::vector<int> triangle_permutation(const ProjMat& g) {
  const auto& t = triangles();
  std::vector<int> perm(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    int target = -1;
    for (const ProjPoint& p : t[i].points) {
      const int k = triangle_of(apply(g, p));
      if (k < 0 || (target >= 0 && k != target))
        raise(Errc::NotNormal, "element does not permute the triangles");
      target = k;
    }
    perm[i] = target;
  }
  return perm;
}

AbstractGroup triangle_action(const ProjGroup& g) {
  std::vector<std::vector<int>> perms;
  for (const ProjMat& s : g.generators()) perms.push_back(triangle_permutation(s));
  if (perms.empty()) return AbstractGroup();
  return reference::from_permutations(perms);
}

AbstractGroup h4_klein_action() { return triangle_action(hessian().h[4]); }

}  // namespace planemod
