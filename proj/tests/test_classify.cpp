#include <doctest.h>

#include <random>

#include "planemod/classify.hpp"
#include "planemod/hessian.hpp"

using namespace planemod;

namespace {

CycNum z(std::int64_t n, std::int64_t k = 1) { return CycNum::zeta(n, k); }

const FieldProfile kQ = FieldProfile::parse("Q");
const FieldProfile kQ12 = FieldProfile::parse("Q(zeta12)");

ProjGroup diag_group(std::initializer_list<std::array<std::int64_t, 3>> gens) {
  // each entry: {N, u, v} for diag(z_N^u, z_N^v, 1)
  std::vector<ProjMat> ms;
  for (const auto& g : gens) ms.push_back(ProjMat::diag(z(g[0], g[1]), z(g[0], g[2]), 1));
  return ProjGroup::closure(ms);
}

bool has(const std::vector<AbelianPresentation>& ps, std::int64_t a, std::int64_t n, std::int64_t d) {
  for (const auto& p : ps)
    if (p.a == a && p.n == n && p.d == d) return true;
  return false;
}

}  // namespace

TEST_CASE("field profiles") {
  CHECK(!kQ.has_zeta12);
  CHECK(kQ12.has_zeta12);
  CHECK(!FieldProfile::parse("R").has_zeta12);
  CHECK_THROWS_AS(FieldProfile::parse("Q(i)"), MathError);
}

TEST_CASE("diagonalization") {
  const auto& lib = hessian();
  Diagonalization h1 = diagonalize_abelian(lib.h[1]);
  CHECK(!h1.diagonalizable);
  ProjGroup d = diag_group({{6, 1, 2}, {3, 1, 0}});
  Diagonalization dd = diagonalize_abelian(d);
  REQUIRE(dd.diagonalizable);
  CHECK(la::is_diagonal(dd.basis));
  CHECK_THROWS_AS(diagonalize_abelian(lib.h[2]), MathError);
  // conjugate a diagonal group by M3 and recover a diagonalizing basis
  ProjGroup c = d.conjugate(lib.m[3]);
  Diagonalization dc = diagonalize_abelian(c);
  REQUIRE(dc.diagonalizable);
  ProjMat p(dc.basis);
  for (const ProjMat& x : c.elements()) CHECK((p.inverse() * x * p).is_diagonal());
}

TEST_CASE("abelian presentations") {
  auto c2 = abelian_presentations(diag_group({{2, 1, 1}}));
  CHECK(has(c2, 1, 2, 1));
  auto c4 = abelian_presentations(diag_group({{4, 1, 3}}));
  CHECK(has(c4, 1, 4, 3));
  auto triv = abelian_presentations(ProjGroup());
  CHECK(has(triv, 1, 1, 0));
  CHECK_THROWS_AS(abelian_presentations(hessian().h[1]), MathError);
  // every presentation regenerates the group
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    std::int64_t n = std::uniform_int_distribution<int>(2, 24)(rng);
    std::int64_t u1 = rng() % n, v1 = rng() % n, u2 = rng() % n, v2 = rng() % n;
    ProjGroup g = ProjGroup::closure({ProjMat::diag(z(n, u1), z(n, v1), 1), ProjMat::diag(z(n, u2), z(n, v2), 1)});
    auto ps = abelian_presentations(g);
    CHECK(!ps.empty());
    // full matrix closure for the first presentation, lattice order for the rest
    CHECK(ProjGroup::closure(ps.front().generators()).order() == g.order());
    for (const auto& p : ps) {
      CHECK(DiagonalLattice(p.generators()).order() == g.order());
      for (const ProjMat& x : p.generators()) CHECK(g.contains(x));
    }
  }
}

TEST_CASE("Hessian recognition") {
  const auto& lib = hessian();
  CHECK(recognize_hessian(lib.h[1]) == HessianLabel::H1);
  CHECK(recognize_hessian(lib.h[2]) == HessianLabel::H2);
  CHECK(recognize_hessian(lib.h[3]) == HessianLabel::H3);
  CHECK(recognize_hessian(lib.h[3].conjugate(lib.m[4])) == HessianLabel::H3);
  CHECK(recognize_hessian(lib.h[2].conjugate(ProjMat::diag(1, z(7), 2))) == HessianLabel::H2);
  CHECK(!recognize_hessian(diag_group({{3, 1, 0}, {3, 0, 1}})).has_value());
  CHECK(!recognize_hessian(lib.h[4]).has_value());
  // C3^2 : C2 realized diagonally plus a swap is not H2
  ProjGroup other = ProjGroup::closure({ProjMat::diag(z(3), 1, 1), ProjMat::diag(1, z(3), 1),
                                        hessian_matrix(2)});
  CHECK(!recognize_hessian(other).has_value());
}

TEST_CASE("MBD types") {
  const auto& lib = hessian();
  CHECK(mbd_type(lib.h[5]).label == "D");
  CHECK(mbd_type(lib.h[4]).label == "D");
  CHECK(mbd_type(lib.h[3]).label == "D");
  CHECK(mbd_type(lib.h[2]).label == "C");
  CHECK(mbd_type(lib.h[1]).label == "H1");
  CHECK(mbd_type(diag_group({{5, 1, 0}})).label == "abelian-diagonal");
  // S3 permutation group fixes (1:1:1)
  CHECK(mbd_type(ProjGroup::closure({lib.m[1], lib.m[2]})).label == "A");
  // <M7, M1>: diagonal C7 extended by a 3-cycle
  ProjGroup g21 = ProjGroup::closure({m7(), lib.m[1]});
  MbdType t21 = mbd_type(g21);
  CHECK(t21.label == "B");
  // C2^2 of homologies extended by S3: type C
  ProjGroup s4 = ProjGroup::closure({ProjMat::diag(-1, 1, 1), lib.m[1], lib.m[2]});
  CHECK(s4.order() == 24);
  CHECK(mbd_type(s4).label == "C");
  ProjGroup a4 = ProjGroup::closure({ProjMat::diag(-1, 1, 1), lib.m[1]});
  CHECK(mbd_type(a4).label == "B");
  // dihedral group fixing a point
  ProjGroup d5 = ProjGroup::closure({ProjMat::diag(z(5), z(5, 4), 1), ProjMat::parse("[[0,1,0],[1,0,0],[0,0,1]]")});
  CHECK(mbd_type(d5).label == "A");
}

TEST_CASE("criticality examples") {
  const auto& lib = hessian();
  CriticalityVerdict triv = criticality(ProjGroup(), kQ);
  CHECK(triv.status == Criticality::Neither);
  CHECK(triv.status_if_b0 == Criticality::Critical);
  CHECK(criticality(lib.h[1], kQ).status == Criticality::Neither);
  CHECK(criticality(lib.h[1], kQ).rule == "definition-exclusion-H1");
  CHECK(criticality(lib.h[2], kQ).status == Criticality::Critical);
  CHECK(criticality(lib.h[2], kQ).rule == "definition-H2");
  CHECK(criticality(lib.h[3], kQ).status == Criticality::Critical);
  CHECK(criticality(lib.h[3], kQ12).status == Criticality::Lucky);
  CHECK(criticality(lib.h[4], kQ).status == Criticality::Lucky);
  CHECK(criticality(lib.h[5], kQ).status == Criticality::Lucky);
  CriticalityVerdict c2 = criticality(diag_group({{2, 1, 1}}), kQ);
  CHECK(c2.status == Criticality::Critical);
  CHECK(c2.rule == "definition-clause2");
  // C3 = <diag(z3, z3^2, 1)>: d = 2, n = 3, 3 | an -> clause 1
  CHECK(criticality(diag_group({{3, 1, 2}}), kQ).rule == "definition-clause1");
  // C5 with d^2 - d + 1 never 0 mod 5 and no clause 2: lucky
  CHECK(criticality(diag_group({{5, 1, 2}}), kQ).status == Criticality::Lucky);
  // C7 = <diag(z7, z7^3, 1)>: 9 - 3 + 1 = 7, no factor 3: excluded template
  CHECK(criticality(diag_group({{7, 1, 3}}), kQ).status == Criticality::Neither);
}

TEST_CASE("clause predicates") {
  CHECK(clause1({1, 3, 2, {0, 1, 2}}));
  CHECK(!clause1({1, 7, 3, {0, 1, 2}}));
  CHECK(clause1_template({1, 7, 3, {0, 1, 2}}));
  CHECK(clause2({1, 2, 1, {0, 1, 2}}));
  CHECK(clause2({1, 4, 3, {0, 1, 2}}));
  CHECK(!clause2({1, 8, 3, {0, 1, 2}}));
  CHECK(!clause2({1, 1, 0, {0, 1, 2}}));
  CHECK(clause2({1, 1, 0, {0, 1, 2}}, 0));
}

TEST_CASE("criticality is conjugation invariant") {
  std::mt19937 rng(11);
  const auto& h5 = hessian().h[5];
  for (int t = 0; t < 20; ++t) {
    std::int64_t n = std::uniform_int_distribution<int>(2, 20)(rng);
    std::vector<ProjMat> gens = {ProjMat::diag(z(n, rng() % n), z(n, rng() % n), 1),
                                 ProjMat::diag(z(n, rng() % n), z(n, rng() % n), 1)};
    const CriticalityVerdict base = criticality_of_generators(gens, kQ);
    for (int k = 0; k < 3; ++k) {
      const ProjMat h = h5.elements()[rng() % h5.order()] * ProjMat::diag(z(4, rng() % 4), 1, z(5, rng() % 5));
      std::vector<ProjMat> conj;
      for (const ProjMat& g : gens) conj.push_back(h * g * h.inverse());
      const CriticalityVerdict c = criticality_of_generators(conj, kQ);
      CHECK(c.status == base.status);
    }
  }
  for (int i = 1; i <= 5; ++i) {
    const ProjGroup& g = hessian().h[i];
    const ProjMat h = ProjMat::diag(1, z(4), 2) * hessian().m[3];
    CHECK(criticality(g.conjugate(h), kQ).status == criticality(g, kQ).status);
  }
}
