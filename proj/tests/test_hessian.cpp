#include <doctest.h>

#include <chrono>

#include "planemod/hessian.hpp"

using namespace planemod;

TEST_CASE("Hessian group orders") {
  const auto start = std::chrono::steady_clock::now();
  const auto& lib = hessian();
  const std::size_t expected[] = {3, 9, 18, 36, 72, 216};
  for (int i = 0; i < 6; ++i) CHECK(lib.h[i].order() == expected[i]);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10.0);
  CHECK(lib.m[2].pow(2).is_identity());
}

TEST_CASE("Hessian quotients") {
  const auto& h = hessian().h;
  CHECK(isomorphic(quotient(h[4], h[1]), reference::quaternion()));
  CHECK(isomorphic(quotient(h[5], h[2]), reference::alternating4()));
  CHECK(isomorphic(quotient(h[5], h[1]), reference::sl2_3()));
  CHECK(isomorphic(quotient(h[3], h[1]), reference::cyclic(4)));
  CHECK(isomorphic(quotient(h[2], h[1]), reference::cyclic(2)));
  CHECK(isomorphic(quotient(h[4], h[2]), reference::klein()));
  CHECK(isomorphic(h[1].abstract(), reference::abelian({3, 3})));
  CHECK(isomorphic(h[2].abstract(), reference::c3sq_c2()));
  CHECK(isomorphic(h[3].abstract(), reference::c3sq_c4()));
}

TEST_CASE("normality in the Hessian chain") {
  const auto& h = hessian().h;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) CHECK(is_normal_in(h[j], h[i]) == !(i == 3 && j == 5));
  CHECK_THROWS_AS(quotient(h[5], h[3]), MathError);
}

TEST_CASE("Galois identities") {
  for (const auto& c : galois_identity_check()) {
    INFO(c.statement);
    CHECK(c.holds);
  }
}

TEST_CASE("triangles") {
  const auto& t = triangles();
  REQUIRE(t.size() == 4);
  CHECK(t[0].points[0] == ProjPoint::of(0, 0, 1));
  CHECK(t[0].points[1] == ProjPoint::of(0, 1, 0));
  CHECK(t[0].points[2] == ProjPoint::of(1, 0, 0));
  std::vector<ProjPoint> all;
  for (const auto& tri : t) {
    CHECK(!collinear(tri.points[0], tri.points[1], tri.points[2]));
    all.insert(all.end(), tri.points.begin(), tri.points.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(std::unique(all.begin(), all.end()) == all.end());
  CHECK(all.size() == 12);
}

TEST_CASE("action on triangles") {
  const auto& h = hessian().h;
  CHECK(triangle_action(h[1]).size() == 1);
  CHECK(fingerprint(triangle_action(h[5])) == fingerprint(reference::alternating4()));
  AbstractGroup k = h4_klein_action();
  CHECK(k.size() == 4);
  CHECK(isomorphic(k, reference::klein()));
}
