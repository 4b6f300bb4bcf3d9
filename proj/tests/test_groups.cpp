#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "planemod/groups.hpp"
#include "planemod/hessian.hpp"

using namespace planemod;

namespace {

CycNum z(std::int64_t n, std::int64_t k = 1) { return CycNum::zeta(n, k); }

// Relabel the non-identity elements of g by a random permutation.
AbstractGroup relabel(const AbstractGroup& g, std::mt19937& rng) {
  const int n = g.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[perm[i]][perm[j]] = perm[g.mul(i, j)];
  return AbstractGroup::from_table(t);
}

// Brute-force Sylow count: distinct subgroups of order p^k generated by at
// most two elements of p-power order.
std::int64_t brute_sylow(const AbstractGroup& g, int p) {
  int pk = 1;
  while (g.size() % (pk * p) == 0) pk *= p;
  std::vector<int> ppow;
  for (int x = 0; x < g.size(); ++x) {
    int o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) ppow.push_back(x);
  }
  std::vector<Subset> found;
  for (int a : ppow)
    for (int b : ppow) {
      Subset s = g.generated({a, b});
      if (static_cast<int>(s.size()) == pk && std::find(found.begin(), found.end(), s) == found.end())
        found.push_back(s);
    }
  return static_cast<std::int64_t>(found.size());
}

}  // namespace

TEST_CASE("closure basics") {
  CHECK(ProjGroup::closure({ProjMat()}).order() == 1);
  CHECK(ProjGroup().order() == 1);
  CHECK(ProjGroup::closure({ProjMat::diag(1, z(5), 1)}).order() == 5);
  CHECK_THROWS_AS(ProjGroup::closure({ProjMat::diag(1, 2, 1)}), MathError);
  CHECK_THROWS_AS(ProjGroup::closure({ProjMat::diag(1, z(7), 1), ProjMat::diag(1, 1, z(7))}, 40),
                  MathError);
}

TEST_CASE("abstract table validation") {
  CHECK_THROWS_AS(AbstractGroup::from_table({{0, 1}, {1, 1}}), MathError);
  CHECK_THROWS_AS(AbstractGroup::from_table({{1, 0}, {0, 1}}), MathError);
  AbstractGroup c3 = AbstractGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(c3.size() == 3);
  AbstractGroup back = AbstractGroup::from_json(c3.to_json());
  CHECK(back.table() == c3.table());
  CHECK(c3.to_json() == R"({"size":3,"table":[[0,1,2],[1,2,0],[2,0,1]]})");
}

TEST_CASE("order 21 group") {
  ProjGroup g = ProjGroup::closure({m7(), hessian_matrix(1)});
  CHECK(g.order() == 21);
  CHECK(sylow_count(g, 7) == 1);
  CHECK(sylow_count(g, 3) == 7);
  CHECK(brute_sylow(g.abstract(), 7) == 1);
  CHECK(brute_sylow(g.abstract(), 3) == 7);
  ProjGroup c = centralizer(g, m7());
  CHECK(c.order() == 7);
  CHECK(c.contains(m7()));
  CHECK_THROWS_AS(centralizer(g, hessian_matrix(2)), MathError);
  CHECK_THROWS_AS(sylow_count(g, 5), MathError);
}

TEST_CASE("centers and normalizers in the Hessian chain") {
  const auto& h = hessian().h;
  CHECK(is_abelian(h[1]));
  CHECK(!is_abelian(h[2]));
  CHECK(center(h[1]).order() == 9);
  CHECK(normalizer_in(h[5], h[1]).order() == 216);
  ProjGroup n3 = normalizer_in(h[5], h[3]);
  CHECK(n3.order() == 72);
  CHECK(h[5].indices_of(n3) == h[5].indices_of(h[4]));
  CHECK(normalizer_in(h[4], h[4]).order() == 72);
  CHECK(sylow_count(h[4], 3) == 1);
  CHECK(sylow_count(h[1], 3) == 1);
  CHECK(sylow_count(h[5], 2) == brute_sylow(h[5].abstract(), 2));
  CHECK(sylow_count(h[5], 3) == 4);
  CHECK(brute_sylow(h[5].abstract(), 3) == 4);
  CHECK_THROWS_AS(normalizer_in(h[2], h[3]), MathError);
  // the center of H4/H1 = Q8 is H2/H1
  std::vector<int> proj;
  AbstractGroup q = h[4].abstract().quotient(h[4].indices_of(h[1]), &proj);
  Subset zq = q.center();
  CHECK(zq.size() == 2);
  for (int x : h[4].indices_of(h[2])) CHECK(std::binary_search(zq.begin(), zq.end(), proj[x]));
}

TEST_CASE("Lagrange and quotient homomorphism") {
  const auto& h = hessian().h;
  for (int i = 1; i <= 4; ++i) {
    const AbstractGroup& g = h[5].abstract();
    std::vector<int> proj;
    Subset hs = h[5].indices_of(h[i]);
    if (!g.is_normal(hs)) continue;
    AbstractGroup q = g.quotient(hs, &proj);
    CHECK(static_cast<std::size_t>(q.size()) * hs.size() == 216);
    for (int a = 0; a < g.size(); a += 7)
      for (int b = 0; b < g.size(); b += 5) CHECK(proj[g.mul(a, b)] == q.mul(proj[a], proj[b]));
  }
  for (std::size_t i = 0; i < h[5].order(); i += 11)
    CHECK(216 % centralizer(h[5], h[5].elements()[i]).order() == 0);
  CHECK(quotient(h[5], h[5]).size() == 1);
}

TEST_CASE("fingerprints separate the reference groups") {
  std::vector<std::pair<std::string, AbstractGroup>> refs = {
      {"C1", reference::trivial()},         {"C2", reference::cyclic(2)},
      {"C3", reference::cyclic(3)},         {"C4", reference::cyclic(4)},
      {"C6", reference::cyclic(6)},         {"C2xC2", reference::klein()},
      {"C2xC4", reference::abelian({2, 4})}, {"C3xC3", reference::abelian({3, 3})},
      {"S3", reference::symmetric3()},      {"D4", reference::dihedral(4)},
      {"Q8", reference::quaternion()},      {"A4", reference::alternating4()},
      {"SL23", reference::sl2_3()},         {"C3^2:C2", reference::c3sq_c2()},
      {"C3^2:C4", reference::c3sq_c4()},    {"C9", reference::cyclic(9)},
      {"C8", reference::cyclic(8)},         {"D6", reference::dihedral(6)},
      {"C3^2:C4'", reference::c3sq_semidirect({2, 0, 0, 1})},
  };
  CHECK(reference::quaternion().size() == 8);
  CHECK(reference::sl2_3().size() == 24);
  CHECK(reference::c3sq_c4().size() == 36);
  for (std::size_t i = 0; i < refs.size(); ++i)
    for (std::size_t j = i + 1; j < refs.size(); ++j) {
      INFO(refs[i].first << " vs " << refs[j].first);
      CHECK(fingerprint(refs[i].second) != fingerprint(refs[j].second));
    }
  CHECK(fingerprint(reference::abelian({2, 4})).abelian_invariants == std::vector<std::int64_t>{2, 4});
  CHECK(fingerprint(reference::abelian({6, 4})).abelian_invariants == std::vector<std::int64_t>{2, 12});
  CHECK(fingerprint(reference::trivial()).order == 1);
}

TEST_CASE("fingerprints are invariant under relabeling") {
  std::mt19937 rng(99);
  const auto& h = hessian().h;
  for (const AbstractGroup* g : {&h[2].abstract(), &h[3].abstract(), &h[4].abstract()}) {
    for (int t = 0; t < 3; ++t) {
      AbstractGroup r = relabel(*g, rng);
      CHECK(fingerprint(r) == fingerprint(*g));
      CHECK(isomorphic(r, *g));
    }
  }
  CHECK(!isomorphic(reference::dihedral(4), reference::quaternion()));
}

TEST_CASE("orbits and stabilizers") {
  const auto& h = hessian().h;
  ProjPoint p = ProjPoint::of(0, 0, 1);
  CHECK(orbit(h[1], p).size() == 3);
  CHECK(orbit(h[4], p).size() == 12);
  ProjGroup s4 = stabilizer(h[4], p);
  CHECK(s4.order() == 6);
  CHECK(isomorphic(s4.abstract(), reference::symmetric3()));
  CHECK(stabilizer(h[5], p).order() == 18);
  ProjPoint generic = ProjPoint::of(2, 7, 19);
  CHECK(stabilizer(h[5], generic).order() == 1);
  CHECK(orbit(h[5], generic).size() == 216);
  for (const ProjPoint& q : {ProjPoint::of(1, 1, 1), ProjPoint::of(1, 2, 0), generic})
    for (int i = 1; i <= 5; ++i) CHECK(orbit(h[i], q).size() * stabilizer(h[i], q).order() == h[i].order());
  ProjGroup fixer = ProjGroup::closure({ProjMat::diag(1, 1, z(5))});
  CHECK(orbit(fixer, p).size() == 1);
}

TEST_CASE("fixed loci inside H5") {
  const auto& h5 = hessian().h[5];
  for (const ProjMat& g : h5.elements()) {
    FixedLocus f = fixed_locus(g);
    if (g.is_identity()) {
      CHECK(f.whole_plane);
      continue;
    }
    CHECK(f.points.size() <= 3);
    for (const auto& p : f.points) CHECK(apply(g, p) == p);
    for (const auto& l : f.lines) CHECK(apply(g, l) == l);
  }
}

TEST_CASE("group json") {
  ProjGroup g = ProjGroup::from_json(
      R"({"conductor": 3, "generators": ["[[1,0,0],[0,z(3),0],[0,0,z(3)^2]]", [[0,0,1],[1,0,0],[0,1,0]]]})");
  CHECK(g.order() == 9);
  ProjGroup again = ProjGroup::from_json(g.to_json());
  CHECK(again.order() == 9);
  CHECK_THROWS_AS(ProjGroup::from_json("{"), MathError);
  CHECK_THROWS_AS(ProjGroup::from_json(R"({"conductor": 3, "generators": ["[[1,0,0],[0,z(4),0],[0,0,1]]"]})"),
                  MathError);
}
