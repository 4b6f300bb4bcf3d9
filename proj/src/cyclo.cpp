#include "planemod/cyclo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "planemod/error.hpp"

namespace planemod {

// ---------------------------------------------------------------------------
// number theory

namespace nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * b;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factor(n)) r = r / p * (p - 1);
  return r;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) return 0;
  return mod(x, m);
}

}  // namespace nt

// ---------------------------------------------------------------------------
// field data cache

namespace {

std::atomic<std::uint32_t> g_ceiling{kDefaultConductorCeiling};

struct Field {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::int64_t> poly;                          // Phi_n, length phi+1
  std::vector<std::pair<std::uint32_t, std::int64_t>> nz;  // nonzero low terms
};

using ZPoly = std::vector<mpz_class>;

ZPoly poly_mul_xd_minus_1(const ZPoly& a, std::size_t d) {
  // a * (x^d - 1)
  ZPoly out(a.size() + d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i + d] += a[i];
    out[i] -= a[i];
  }
  return out;
}

ZPoly poly_div_xd_minus_1(const ZPoly& a, std::size_t d) {
  // exact division by (x^d - 1): q_i = q_{i-d} - a_i, computed from the top
  std::size_t deg = a.size() - 1;
  ZPoly q(deg - d + 1);
  ZPoly r = a;
  for (std::size_t k = deg + 1; k-- > d;) {
    const mpz_class c = r[k];
    q[k - d] = c;
    r[k] -= c;
    r[k - d] += c;
  }
  return q;
}

int mobius(std::int64_t n) {
  int mu = 1;
  for (auto [p, e] : nt::factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t n) {
  if (n == 1) return {-1, 1};
  std::int64_t rad = 1;
  for (auto [p, e] : nt::factor(n)) rad *= p;
  // Phi_rad as prod_{d | rad} (x^d - 1)^{mu(rad/d)}
  ZPoly acc{1};
  std::vector<std::int64_t> divs = nt::divisors(rad);
  for (std::int64_t d : divs)
    if (mobius(rad / d) == 1) acc = poly_mul_xd_minus_1(acc, d);
  for (std::int64_t d : divs)
    if (mobius(rad / d) == -1) acc = poly_div_xd_minus_1(acc, d);
  // normalise sign so the polynomial is monic
  if (acc.back() < 0)
    for (auto& c : acc) c = -c;
  std::int64_t stretch = n / rad;
  std::vector<std::int64_t> out((acc.size() - 1) * stretch + 1, 0);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!acc[i].fits_slong_p())
      raise(Errc::ConductorOverflow, "cyclotomic coefficient overflow");
    out[i * stretch] = acc[i].get_si();
  }
  return out;
}

std::mutex g_field_mutex;

const Field& field(std::uint32_t n) {
  static std::unordered_map<std::uint32_t, std::unique_ptr<Field>> cache;
  std::lock_guard lock(g_field_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->n = n;
  f->poly = compute_cyclotomic(n);
  f->phi = static_cast<std::uint32_t>(f->poly.size() - 1);
  for (std::uint32_t j = 0; j < f->phi; ++j)
    if (f->poly[j] != 0) f->nz.emplace_back(j, f->poly[j]);
  return *cache.emplace(n, std::move(f)).first->second;
}

void check_ceiling(std::uint64_t n) {
  if (n > g_ceiling.load(std::memory_order_relaxed))
    raise(Errc::ConductorOverflow,
          "conductor " + std::to_string(n) + " exceeds ceiling " +
              std::to_string(g_ceiling.load()));
}

/// Reduce an integer polynomial in zeta_n (any degree) to length phi(n).
std::vector<mpz_class> reduce(const Field& f, std::vector<mpz_class> p) {
  const std::uint32_t n = f.n;
  if (p.size() > n) {
    for (std::size_t i = n; i < p.size(); ++i)
      if (p[i] != 0) p[i % n] += p[i];
    p.resize(n);
  }
  for (std::size_t k = p.size(); k-- > f.phi;) {
    if (p[k] == 0) continue;
    const mpz_class c = p[k];
    const std::size_t shift = k - f.phi;
    for (auto [j, a] : f.nz) {
      if (a == 1)
        p[shift + j] -= c;
      else if (a == -1)
        p[shift + j] += c;
      else
        p[shift + j] -= c * a;
    }
    p[k] = 0;
  }
  p.resize(f.phi);
  return p;
}

/// One step down the tower Q(zeta_m) < Q(zeta_n), removing the prime p.
/// The relative Galois group is {sigma_k : k = 1 mod m}.
struct Descent {
  std::uint32_t n = 1, m = 1, q = 1;
  bool coprime = true;  // gcd(q, m) == 1, so Q(zeta_n) = Q(zeta_m)(zeta_q)
  std::vector<std::int64_t> kernel;
};

Descent descent_step(std::uint32_t n, std::int64_t p) {
  Descent d;
  d.n = n;
  d.m = n / static_cast<std::uint32_t>(p);
  d.q = static_cast<std::uint32_t>(p);
  if (d.m % 4 == 2) {
    d.m /= 2;
    d.q *= 2;
  }
  d.coprime = nt::gcd(d.q, d.m) == 1;
  for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); k += d.m)
    if (nt::gcd(k, n) == 1) d.kernel.push_back(k);
  return d;
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t a) {
  const std::int64_t t = q / nt::gcd(a, q);
  return mobius(t) * (nt::euler_phi(q) / nt::euler_phi(t));
}

}  // namespace

/// Relative trace from conductor n down to m, divided by the relative degree.
/// Returns x itself (rewritten at conductor m) whenever x lies in Q(zeta_m).
CycNum CycNum::project_down(const CycNum& x, std::uint32_t p) {
  const Descent d = descent_step(x.n_, p);
  std::vector<mpz_class> poly(d.m);
  mpz_class den = x.den_;
  if (d.coprime) {
    den *= nt::euler_phi(d.q);
    const std::int64_t inv_m = d.q == 1 ? 0 : nt::inverse_mod(d.m % d.q, d.q);
    const std::int64_t inv_q = d.m == 1 ? 0 : nt::inverse_mod(d.q % d.m, d.m);
    for (std::size_t i = 0; i < x.num_.size(); ++i) {
      if (x.num_[i] == 0) continue;
      const std::int64_t ii = static_cast<std::int64_t>(i);
      const std::int64_t c = ramanujan_sum(d.q, nt::mod(ii * inv_m, d.q));
      if (c == 0) continue;
      const std::size_t b = d.m == 1 ? 0 : static_cast<std::size_t>(nt::mod(ii * inv_q, d.m));
      poly[b] += x.num_[i] * c;
    }
  } else {
    for (std::size_t i = 0; i < x.num_.size(); i += d.q) poly[i / d.q] += x.num_[i];
  }
  return CycNum(d.m, reduce(field(d.m), std::move(poly)), den);
}

namespace {

}  // namespace

std::uint32_t conductor_ceiling() noexcept { return g_ceiling.load(); }
void set_conductor_ceiling(std::uint32_t ceiling) noexcept { g_ceiling.store(ceiling); }

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  return field(n).poly;
}

std::uint32_t common_conductor(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = static_cast<std::uint64_t>(nt::lcm(a, b));
  check_ceiling(l);
  return static_cast<std::uint32_t>(l);
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum() : n_(1), num_(1), den_(1) {}

CycNum::CycNum(long value) : n_(1), num_{mpz_class(value)}, den_(1) {}

CycNum::CycNum(const mpq_class& value)
    : n_(1), num_{value.get_num()}, den_(value.get_den()) {}

CycNum::CycNum(std::uint32_t n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  bool zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycNum CycNum::zeta(std::int64_t n, std::int64_t k) {
  if (n <= 0) raise(Errc::InvalidArgument, "zeta: conductor must be positive");
  k = nt::mod(k, n);
  if (k == 0) return CycNum(1L);
  const std::int64_t g = nt::gcd(k, n);
  n /= g;
  k /= g;
  if (n == 2) return CycNum(-1L);
  if (n % 4 == 2) {
    // zeta_{2m}^k = (-1)^k zeta_m^{k (m+1)/2} for odd m
    const std::int64_t m = n / 2;
    CycNum z = zeta(m, nt::mod(k * ((m + 1) / 2), m));
    return (k % 2 == 0) ? z : -z;
  }
  check_ceiling(static_cast<std::uint64_t>(n));
  const Field& f = field(static_cast<std::uint32_t>(n));
  std::vector<mpz_class> p(static_cast<std::size_t>(k) + 1);
  p[static_cast<std::size_t>(k)] = 1;
  return CycNum(f.n, reduce(f, std::move(p)), 1);
}

CycNum CycNum::from_poly(std::uint32_t conductor, const std::vector<mpq_class>& poly) {
  if (conductor == 0) raise(Errc::InvalidArgument, "conductor must be positive");
  check_ceiling(conductor);
  const Field& f = field(conductor);
  mpz_class den = 1;
  for (const auto& q : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> p(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i)
    p[i] = poly[i].get_num() * (den / poly[i].get_den());
  return CycNum(conductor, reduce(f, std::move(p)), den);
}

CycNum CycNum::from_coeffs(std::uint32_t conductor, const std::vector<mpq_class>& coeffs) {
  if (conductor == 0) raise(Errc::InvalidArgument, "conductor must be positive");
  if (coeffs.size() != static_cast<std::size_t>(nt::euler_phi(conductor)))
    raise(Errc::InvalidArgument, "coefficient vector length must be phi(N)");
  return from_poly(conductor, coeffs);
}

std::vector<mpq_class> CycNum::coeffs() const {
  std::vector<mpq_class> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = mpq_class(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

bool CycNum::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const mpz_class& c) { return c == 0; });
}

bool CycNum::is_one() const { return is_rational() && num_[0] == den_; }

bool CycNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

mpq_class CycNum::rational_value() const {
  if (!is_rational()) raise(Errc::InvalidArgument, "value is not rational");
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycNum CycNum::embed(std::uint32_t m) const {
  if (m == 0 || m % n_ != 0)
    raise(Errc::NotDivisible, "cannot embed conductor " + std::to_string(n_) +
                                  " into " + std::to_string(m));
  if (m == n_) return *this;
  check_ceiling(m);
  const Field& f = field(m);
  if (is_rational()) {
    std::vector<mpz_class> p(f.phi);
    p[0] = num_[0];
    return CycNum(m, std::move(p), den_);
  }
  const std::uint32_t step = m / n_;
  std::vector<mpz_class> p(static_cast<std::size_t>(num_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < num_.size(); ++i) p[i * step] = num_[i];
  return CycNum(m, reduce(f, std::move(p)), den_);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

namespace {

std::pair<CycNum, CycNum> align(const CycNum& a, const CycNum& b) {
  if (a.conductor() == b.conductor()) return {a, b};
  const std::uint32_t m = common_conductor(a.conductor(), b.conductor());
  return {a.embed(m), b.embed(m)};
}

}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    auto [x, y] = align(a, b);
    return x + y;
  }
  std::vector<mpz_class> num(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
    return CycNum(a.n_, std::move(num), a.den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i)
    num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CycNum(a.n_, std::move(num), a.den_ * b.den_);
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    // a rational operand needs no embedding of the other one
    if (a.n_ == 1) return CycNum(b.n_, b.num_, b.den_) * a.embed(b.n_);
    if (b.n_ == 1) return a * b.embed(a.n_);
    auto [x, y] = align(a, b);
    return x * y;
  }
  if (a.is_rational() || b.is_rational()) {
    const CycNum& s = a.is_rational() ? a : b;
    const CycNum& v = a.is_rational() ? b : a;
    std::vector<mpz_class> num(v.num_.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = v.num_[i] * s.num_[0];
    return CycNum(v.n_, std::move(num), v.den_ * s.den_);
  }
  const std::size_t phi = a.num_.size();
  std::vector<mpz_class> p(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(p[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return CycNum(a.n_, reduce(field(a.n_), std::move(p)), a.den_ * b.den_);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::times_zeta_power(std::int64_t k) const {
  k = nt::mod(k, n_);
  if (k == 0 || is_zero()) return *this;
  const Field& f = field(n_);
  std::vector<mpz_class> p(n_);
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) p[(i + static_cast<std::size_t>(k)) % n_] = num_[i];
  return CycNum(n_, reduce(f, std::move(p)), den_);
}

CycNum CycNum::inverse() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) {
    mpq_class q(den_, num_[0]);
    q.canonicalize();
    return CycNum(q).embed(n_);
  }
  std::size_t nonzero = 0, at = 0;
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) {
      ++nonzero;
      at = i;
    }
  if (nonzero == 1) {
    // c * zeta^at
    mpq_class q(den_, num_[at]);
    q.canonicalize();
    return (CycNum(q) * zeta(n_, -static_cast<std::int64_t>(at))).embed(n_);
  }
  // x^-1 = (prod of the other relative conjugates) / (relative norm), where the
  // norm lies in a smaller field; pick the step with the smallest kernel
  std::int64_t best = 0;
  std::size_t best_size = 0;
  for (auto [p, e] : nt::factor(n_)) {
    const std::size_t size = descent_step(n_, p).kernel.size();
    if (best == 0 || size < best_size) {
      best = p;
      best_size = size;
    }
  }
  const Descent d = descent_step(n_, best);
  CycNum others = CycNum(1L).embed(n_);
  for (std::int64_t k : d.kernel)
    if (k != 1) others = others * galois(k);
  const CycNum norm = project_down(*this * others, static_cast<std::uint32_t>(best));
  return (others * norm.inverse()).embed(n_);
}

CycNum CycNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum base = *this;
  CycNum acc = CycNum(1L).embed(n_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

CycNum CycNum::galois(std::int64_t k) const {
  if (nt::gcd(k, n_) != 1)
    raise(Errc::BadExponent, "galois exponent " + std::to_string(k) +
                                 " not coprime to " + std::to_string(n_));
  if (is_rational()) return *this;
  const std::int64_t kk = nt::mod(k, n_);
  const Field& f = field(n_);
  std::vector<mpz_class> p(n_);
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) p[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % n_)] = num_[i];
  return CycNum(n_, reduce(f, std::move(p)), den_);
}

CycNum CycNum::minimized() const {
  if (is_rational()) return CycNum(rational_value());
  CycNum cur = *this;
  bool progress = true;
  while (progress) {
    progress = false;
    const std::uint32_t n = cur.n_;
    for (auto [p, e] : nt::factor(n)) {
      CycNum down = project_down(cur, static_cast<std::uint32_t>(p));
      if (down.embed(n) != cur) continue;
      cur = std::move(down);
      progress = true;
      break;
    }
  }
  if (cur.is_rational()) return CycNum(cur.rational_value());
  return cur;
}

std::complex<double> CycNum::approx() const {
  std::complex<double> acc = 0;
  const double d = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    acc += (num_[i].get_d() / d) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    mpq_class q(num_[i], den_);
    q.canonicalize();
    const bool neg = q < 0;
    if (neg) q = -q;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << q.get_str();
      continue;
    }
    if (q != 1) os << q.get_str() << "*";
    os << "z(" << n_ << ")";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CycNum::hash() const noexcept {
  std::size_t h = std::hash<std::uint32_t>{}(n_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(mpz_get_ui(den_.get_mpz_t()));
  for (const auto& c : num_) {
    mix(mpz_get_ui(c.get_mpz_t()));
    mix(static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1));
  }
  return h;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() && b.is_rational()) return a.num_[0] == b.num_[0] && a.den_ == b.den_;
  auto [x, y] = align(a, b);
  return x == y;
}

// ---------------------------------------------------------------------------
// Galois elements and helpers

GaloisElt::GaloisElt(std::uint32_t conductor, std::int64_t exponent)
    : n_(conductor), k_(nt::mod(exponent, conductor)) {
  if (conductor == 0) raise(Errc::InvalidArgument, "conductor must be positive");
  if (nt::gcd(exponent, conductor) != 1)
    raise(Errc::BadExponent, "sigma_" + std::to_string(exponent) + " undefined mod " +
                                 std::to_string(conductor));
}

GaloisElt GaloisElt::compose(const GaloisElt& other) const {
  if (other.n_ != n_) raise(Errc::InvalidArgument, "composing Galois elements of different conductors");
  return GaloisElt(n_, (k_ * other.k_) % n_);
}

CycNum GaloisElt::apply(const CycNum& x) const {
  if (n_ % x.conductor() != 0) {
    // x may be written at a larger conductor than it needs
    CycNum m = x.minimized();
    if (n_ % m.conductor() != 0)
      raise(Errc::NotDivisible, "value does not lie in Q(zeta_" + std::to_string(n_) + ")");
    return m.embed(n_).galois(k_);
  }
  return x.embed(n_).galois(k_);
}

std::int64_t root_of_unity_order(const CycNum& x) {
  if (x.is_zero()) return 0;
  if (!(x * x.conj()).is_one()) return 0;
  const std::int64_t l = nt::lcm(2, x.conductor());
  if (!x.pow(l).is_one()) return 0;
  std::int64_t order = l;
  for (auto [p, e] : nt::factor(l)) {
    while (order % p == 0 && x.pow(order / p).is_one()) order /= p;
  }
  return order;
}

std::int64_t zeta_log(const CycNum& x, std::int64_t n) {
  if (x.is_zero() || n <= 0) return -1;
  const std::uint32_t c = x.conductor();
  static std::mutex mu;
  static std::unordered_map<std::uint32_t,
                            std::unique_ptr<std::unordered_map<CycNum, std::int64_t, CycNumHash>>>
      tables;
  const std::unordered_map<CycNum, std::int64_t, CycNumHash>* table = nullptr;
  const std::int64_t l2 = nt::lcm(2, c);
  {
    std::lock_guard lock(mu);
    auto it = tables.find(c);
    if (it == tables.end()) {
      auto t = std::make_unique<std::unordered_map<CycNum, std::int64_t, CycNumHash>>();
      for (std::int64_t j = 0; j < l2; ++j) t->emplace(CycNum::zeta(l2, j).embed(c), j);
      it = tables.emplace(c, std::move(t)).first;
    }
    table = it->second.get();
  }
  auto hit = table->find(x);
  if (hit == table->end()) return -1;
  const std::int64_t j = hit->second;
  // zeta_{l2}^j == zeta_n^k  <=>  k = j n / l2
  if ((j * n) % l2 != 0) return -1;
  return nt::mod(j * n / l2, n);
}

namespace {

CycNum sqrt_prime(std::int64_t p) {
  if (p == 2) return CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
  // quadratic Gauss sum, g^2 = (-1)^((p-1)/2) p
  mpz_class pp(p);
  CycNum g;
  for (std::int64_t a = 1; a < p; ++a) {
    mpz_class base(a), r;
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
                pp.get_mpz_t());
    const long legendre = (r == 1) ? 1 : -1;
    g += CycNum(legendre) * CycNum::zeta(p, a);
  }
  if (p % 4 == 1) return g;
  return CycNum::zeta(4, 3) * g;  // -i g
}

}  // namespace

CycNum sqrt_rational(const mpq_class& q) {
  if (q < 0) raise(Errc::InvalidArgument, "sqrt_rational needs q >= 0");
  if (q == 0) return CycNum();
  mpz_class prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p()) raise(Errc::ConductorOverflow, "radicand too large");
  CycNum out(mpq_class(1, q.get_den()));
  std::int64_t sq = 1;
  for (auto [p, e] : nt::factor(prod.get_si())) {
    for (int i = 0; i < e / 2; ++i) sq *= p;
    if (e % 2 == 1) out = out * sqrt_prime(p);
  }
  return out * CycNum(static_cast<long>(sq));
}

}  // namespace planemod
