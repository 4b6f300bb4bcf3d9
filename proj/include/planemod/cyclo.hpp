#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace planemod {

/// Number-theoretic helpers shared across modules.
namespace nt {
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
/// Least non-negative residue of a modulo m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t euler_phi(std::int64_t n);
/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n);
/// Inverse of a modulo m, or 0 if none exists (m > 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
}  // namespace nt

/// Largest conductor any arithmetic may produce. Exceeding it raises
/// ConductorOverflow instead of silently working in a huge field.
std::uint32_t conductor_ceiling() noexcept;
void set_conductor_ceiling(std::uint32_t ceiling) noexcept;
inline constexpr std::uint32_t kDefaultConductorCeiling = 10080;

/// Integer coefficients of the N-th cyclotomic polynomial, constant term
/// first. Cached; thread-safe.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

/// An element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1)
/// reduced modulo Phi_N. Coefficients are kept as integer numerators over a
/// single positive common denominator, fully reduced, so two values of the
/// same conductor are equal iff their stored data are equal.
class CycNum {
 public:
  CycNum();  // zero in Q
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNum(const mpq_class& value);

  /// zeta_n^k, written at the smallest conductor that contains it.
  static CycNum zeta(std::int64_t n, std::int64_t k = 1);
  /// Reduce sum_i c_i zeta_N^i (any length) to canonical form.
  static CycNum from_poly(std::uint32_t conductor,
                          const std::vector<mpq_class>& poly);
  /// Canonical form from coordinates already of length phi(N).
  static CycNum from_coeffs(std::uint32_t conductor,
                            const std::vector<mpq_class>& coeffs);

  std::uint32_t conductor() const noexcept { return n_; }
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_one() const;
  bool is_rational() const noexcept;
  /// Requires is_rational().
  mpq_class rational_value() const;

  CycNum embed(std::uint32_t m) const;
  /// Same value written at the smallest possible conductor.
  CycNum minimized() const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  /// Multiply by zeta_N^k where N is this conductor (cheap shift).
  CycNum times_zeta_power(std::int64_t k) const;
  CycNum inverse() const;
  CycNum pow(std::int64_t e) const;
  /// sigma_k : zeta_N -> zeta_N^k. Raises BadExponent if gcd(k, N) != 1.
  CycNum galois(std::int64_t k) const;
  CycNum conj() const { return galois(-1); }

  /// Value at zeta_N = exp(2 pi i / N). Diagnostics only.
  std::complex<double> approx() const;
  /// Text form in the z(N)^k syntax understood by parse_scalar.
  std::string str() const;
  std::size_t hash() const noexcept;

  /// Equal conductors compare data; otherwise both are embedded first.
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  CycNum(std::uint32_t n, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  static CycNum project_down(const CycNum& x, std::uint32_t p);

  std::uint32_t n_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

/// sigma_k in Gal(Q(zeta_N)/Q), exponent stored reduced mod N.
class GaloisElt {
 public:
  GaloisElt(std::uint32_t conductor, std::int64_t exponent);

  std::uint32_t conductor() const noexcept { return n_; }
  std::int64_t exponent() const noexcept { return k_; }

  /// this o other; conductors must agree.
  GaloisElt compose(const GaloisElt& other) const;
  CycNum apply(const CycNum& x) const;

  friend bool operator==(const GaloisElt&, const GaloisElt&) = default;

 private:
  std::uint32_t n_;
  std::int64_t k_;
};

/// Common conductor of a list of values (lcm), checked against the ceiling.
std::uint32_t common_conductor(std::uint32_t a, std::uint32_t b);

/// Order of x as a root of unity, or 0 if x is not one.
std::int64_t root_of_unity_order(const CycNum& x);

/// Discrete log: k in [0, n) with zeta_n^k == x, or -1.
std::int64_t zeta_log(const CycNum& x, std::int64_t n);

/// A square root of the positive rational q inside a cyclotomic field,
/// built from quadratic Gauss sums.
CycNum sqrt_rational(const mpq_class& q);

struct CycNumHash {
  std::size_t operator()(const CycNum& x) const noexcept { return x.hash(); }
};

}  // namespace planemod
