#include <doctest.h>

#include <complex>
#include <random>

#include "planemod/cyclo.hpp"
#include "planemod/error.hpp"

using planemod::CycNum;
using planemod::Errc;
using planemod::MathError;

namespace {

CycNum z(std::int64_t n, std::int64_t k = 1) { return CycNum::zeta(n, k); }

// Independent floating-point value of zeta_n^k.
std::complex<double> fz(std::int64_t n, std::int64_t k) {
  const double a = 2.0 * 3.14159265358979323846 * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(a), std::sin(a)};
}

struct Sample {
  CycNum exact;
  std::complex<double> approx;
};

// Random small combination of roots of unity of order n, with its float twin.
Sample random_value(std::mt19937& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coef(-3, 3), idx(0, static_cast<int>(n) - 1), terms(1, 4);
  Sample s{CycNum(), {0, 0}};
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    const int c = coef(rng), k = idx(rng);
    s.exact += CycNum(static_cast<long>(c)) * z(n, k);
    s.approx += static_cast<double>(c) * fz(n, k);
  }
  return s;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(planemod::cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(planemod::cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(planemod::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  const auto& p105 = planemod::cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("zeta reduction") {
  CHECK(z(3, 2) == CycNum(-1L) - z(3));
  CHECK(z(3, 2).str() == "-1 - z(3)");
  CHECK(z(6) == CycNum(1L) + z(3));
  CHECK(z(6).conductor() == 3);
  CHECK(z(2) == CycNum(-1L));
  CHECK(z(9, 3) == z(3));
  CHECK(z(3) * z(3, 2) == CycNum(1L));
  CHECK(z(7).inverse() == z(7, 6));
  CHECK(z(3) + z(3, 2) == CycNum(-1L));
  CHECK(z(4) * z(4) == CycNum(-1L));
}

TEST_CASE("galois action") {
  CHECK(z(3).galois(2) == z(3, 2));
  CHECK((CycNum(1L) + CycNum(2L) * z(3)).galois(2) == CycNum(-1L) - CycNum(2L) * z(3));
  CHECK_THROWS_AS(z(3).galois(3), MathError);
  planemod::GaloisElt s(12, 5);
  CHECK(s.apply(z(4)) == z(4, 5));
  CHECK(planemod::GaloisElt(12, 7).apply(z(4)) == z(4, 3));
  CHECK(s.compose(s) == planemod::GaloisElt(12, 1));
}

TEST_CASE("embedding") {
  CHECK(z(3).embed(12) == z(12, 4));
  CHECK(z(4).embed(12) == z(12, 3));
  CHECK_THROWS_AS(z(4).embed(6), MathError);
  CHECK((z(3) + z(4)).conductor() == 12);
  CHECK((z(12, 4) + z(12, 3)).minimized().conductor() == 12);
  CHECK(z(12, 4).minimized().conductor() == 3);
  CHECK((z(36, 12) * CycNum(5L)).minimized() == CycNum(5L) * z(3));
}

TEST_CASE("division by zero") {
  try {
    (void)CycNum().inverse();
    FAIL("expected throw");
  } catch (const MathError& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("conductor ceiling") {
  const auto old = planemod::conductor_ceiling();
  planemod::set_conductor_ceiling(100);
  CHECK_THROWS_AS(z(101) + z(3), MathError);
  CHECK_THROWS_AS(z(7) * z(11) * z(3), MathError);
  planemod::set_conductor_ceiling(old);
}

TEST_CASE("roots of unity and logs") {
  CHECK(planemod::root_of_unity_order(z(12, 5)) == 12);
  CHECK(planemod::root_of_unity_order(-z(3)) == 6);
  CHECK(planemod::root_of_unity_order(CycNum(2L)) == 0);
  CHECK(planemod::root_of_unity_order(CycNum(1L) + z(3)) == 6);
  CHECK(planemod::zeta_log(z(12, 5), 12) == 5);
  CHECK(planemod::zeta_log(z(3), 12) == 4);
  CHECK(planemod::zeta_log(z(4), 3) == -1);
  CHECK(planemod::zeta_log(CycNum(-1L), 6) == 3);
}

TEST_CASE("square roots of rationals") {
  for (long a : {2L, 3L, 5L, 6L, 7L, 12L, 15L}) {
    CycNum r = planemod::sqrt_rational(mpq_class(a));
    CHECK(r * r == CycNum(a));
  }
  CycNum h = planemod::sqrt_rational(mpq_class(3, 4));
  CHECK(h * h == CycNum(mpq_class(3, 4)));
}

TEST_CASE("field axioms against a floating-point oracle") {
  std::mt19937 rng(20261016);
  for (std::int64_t n : {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 21, 24, 36, 45, 63}) {
    for (int trial = 0; trial < 12; ++trial) {
      Sample a = random_value(rng, n), b = random_value(rng, n), c = random_value(rng, n);
      CHECK(close(a.exact.approx(), a.approx));
      CHECK(a.exact + b.exact == b.exact + a.exact);
      CHECK(a.exact * b.exact == b.exact * a.exact);
      CHECK((a.exact * b.exact) * c.exact == a.exact * (b.exact * c.exact));
      CHECK(a.exact * (b.exact + c.exact) == a.exact * b.exact + a.exact * c.exact);
      CHECK(close((a.exact * b.exact).approx(), a.approx * b.approx));
      if (!b.exact.is_zero()) {
        CHECK((a.exact / b.exact) * b.exact == a.exact);
        CHECK(close((a.exact / b.exact).approx(), a.approx / b.approx));
      }
      CHECK(a.exact.minimized() == a.exact);
      CHECK(close(a.exact.conj().approx(), std::conj(a.approx)));
    }
  }
}

TEST_CASE("mixed conductors and string form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Sample a = random_value(rng, 9), b = random_value(rng, 4);
    CHECK(close((a.exact * b.exact).approx(), a.approx * b.approx));
    CHECK(close((a.exact + b.exact).approx(), a.approx + b.approx));
  }
  CHECK(CycNum(mpq_class(1, 2)).str() == "1/2");
  CHECK((CycNum(mpq_class(-1, 2)) * z(5, 2)).str() == "-1/2*z(5)^2");
}
