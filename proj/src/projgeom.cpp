#include "planemod/projgeom.hpp"

#include <algorithm>
#include <optional>

#include "planemod/error.hpp"
#include "planemod/parse.hpp"

namespace planemod {
namespace {

std::size_t hash_entries(const CycNum* first, std::size_t count) {
  std::size_t h = 0x51ed270b27a4c1dULL;
  for (std::size_t i = 0; i < count; ++i)
    h ^= first[i].hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t hash_mat(const Mat3& m) {
  std::size_t h = 0;
  for (const auto& row : m) h = h * 31 + hash_entries(row.data(), 3);
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProjMat

ProjMat::ProjMat() : ProjMat(la::identity(), Canonical{}) {}

ProjMat::ProjMat(const Mat3& lift) {
  if (la::det(lift).is_zero()) raise(Errc::InvalidArgument, "singular matrix is not in PGL_3");
  m_ = la::normalize_projective(lift);
  hash_ = hash_mat(m_);
}

ProjMat::ProjMat(const Mat3& canonical, Canonical) : m_(canonical), hash_(hash_mat(canonical)) {}

ProjMat ProjMat::diag(const CycNum& a, const CycNum& b, const CycNum& c) {
  return ProjMat(la::diag(a, b, c));
}

ProjMat ProjMat::parse(std::string_view literal) { return ProjMat(parse_matrix(literal)); }

ProjMat ProjMat::operator*(const ProjMat& other) const {
  return ProjMat(la::normalize_projective(la::mul(m_, other.m_)), Canonical{});
}

ProjMat ProjMat::inverse() const {
  return ProjMat(la::normalize_projective(la::adjugate(m_)), Canonical{});
}

ProjMat ProjMat::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  ProjMat acc, base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

ProjMat ProjMat::galois(std::int64_t k) const {
  return ProjMat(la::normalize_projective(la::galois(m_, k)), Canonical{});
}

bool ProjMat::is_identity() const {
  if (!la::is_diagonal(m_)) return false;
  return m_[1][1].is_one() && m_[2][2].is_one();
}

std::string ProjMat::str() const { return format_matrix(m_); }

bool proj_eq(const Mat3& a, const Mat3& b) {
  return la::normalize_projective(a) == la::normalize_projective(b);
}

std::int64_t proj_order(const ProjMat& m, std::int64_t bound) {
  ProjMat p = m;
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  raise(Errc::OrderBoundExceeded,
        "no power up to " + std::to_string(bound) + " is scalar");
}

// ---------------------------------------------------------------------------
// points and lines

ProjPoint::ProjPoint(const Vec3& coords)
    : c_(la::normalize_projective(coords)), hash_(hash_entries(c_.data(), 3)) {}

std::string ProjPoint::str() const {
  return "(" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + ")";
}

ProjLine ProjLine::through(const ProjPoint& a, const ProjPoint& b) {
  const Vec3 d = la::cross(a.coords(), b.coords());
  if (la::is_zero(d)) raise(Errc::InvalidArgument, "a line needs two distinct points");
  return ProjLine(d);
}

bool ProjLine::contains(const ProjPoint& q) const {
  return la::dot(coords(), q.coords()).is_zero();
}

ProjPoint apply(const ProjMat& m, const ProjPoint& p) {
  return ProjPoint(la::apply(m.matrix(), p.coords()));
}

ProjLine apply(const ProjMat& m, const ProjLine& l) {
  // points x on l map to Mx; the image line is l M^{-1}
  const Mat3 adj = la::adjugate(m.matrix());
  return ProjLine(la::apply(la::transpose(adj), l.coords()));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return la::dot(la::cross(a.coords(), b.coords()), c.coords()).is_zero();
}

// ---------------------------------------------------------------------------
// eigenvalues

namespace {

/// A cube root of delta when delta = rational * root of unity up to a
/// rational square root; used for spectra of the shape c * {1, w, w^2}.
std::optional<CycNum> cube_root(const CycNum& delta) {
  const CycNum norm = delta * delta.conj();
  if (!norm.is_rational()) return std::nullopt;
  const mpq_class q = norm.rational_value();  // |delta|^2 = |c|^6
  mpz_class num_root, den_root;
  if (!mpz_root(num_root.get_mpz_t(), q.get_num_mpz_t(), 3)) return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), q.get_den_mpz_t(), 3)) return std::nullopt;
  const CycNum abs_c = sqrt_rational(mpq_class(num_root, den_root));  // |c|
  const CycNum u = delta / (abs_c * abs_c * abs_c);
  const std::int64_t o = root_of_unity_order(u);
  if (o == 0) return std::nullopt;
  const std::int64_t k = zeta_log(u, o);
  return abs_c * CycNum::zeta(3 * o, k);
}

CycNum find_one_eigenvalue(const Mat3& a, const poly::Poly& p, std::int64_t m) {
  const poly::Poly rep = poly::gcd(p, poly::derivative(p));
  if (rep.size() == 2) return -rep[0];
  std::vector<poly::Poly> quadratics;
  for (std::int64_t d = 1; d < m; ++d) {
    const poly::Poly g = poly::gcd(p, poly::scale_var(p, CycNum::zeta(m, d)));
    if (g.size() == 2) return -g[0];
    if (g.size() == 3) {
      for (const auto& other : quadratics) {
        const poly::Poly h = poly::gcd(g, other);
        if (h.size() == 2) return -h[0];
      }
      quadratics.push_back(g);
    }
  }
  // all eigenvalue ratios are primitive cube roots: p = x^3 - delta
  if (auto c = cube_root(la::det(a))) return *c;
  raise(Errc::NonCyclotomicEigenvalue, "could not find an eigenvalue in a cyclotomic field");
}

}  // namespace

std::vector<Eigenspace> eigen_decomposition(const ProjMat& m) {
  const Mat3& a = m.matrix();
  const std::int64_t order = proj_order(m);
  if (order == 1) return {Eigenspace{CycNum(1L), {Vec3{CycNum(1L), CycNum(), CycNum()},
                                                 Vec3{CycNum(), CycNum(1L), CycNum()},
                                                 Vec3{CycNum(), CycNum(), CycNum(1L)}}}};
  if (la::is_diagonal(a)) {
    std::vector<Eigenspace> out;
    for (int i = 0; i < 3; ++i) {
      Vec3 e;
      e[i] = CycNum(1L);
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const Eigenspace& s) { return s.value == a[i][i]; });
      if (it == out.end())
        out.push_back(Eigenspace{a[i][i], {e}});
      else
        it->basis.push_back(e);
    }
    return out;
  }
  const poly::Poly p = poly::charpoly(a);
  const CycNum mu0 = find_one_eigenvalue(a, p, order);
  // every eigenvalue is mu0 times an order-th root of unity
  std::vector<CycNum> values;
  for (std::int64_t j = 0; j < order && values.size() < 3; ++j) {
    const CycNum mu = mu0 * CycNum::zeta(order, j);
    if (poly::eval(p, mu).is_zero()) values.push_back(mu);
  }
  std::vector<Eigenspace> out;
  std::size_t dims = 0;
  for (const CycNum& mu : values) {
    Eigenspace s{mu, la::nullspace(la::sub_scalar(a, mu))};
    dims += s.basis.size();
    out.push_back(std::move(s));
  }
  if (dims != 3) raise(Errc::NonCyclotomicEigenvalue, "eigenspaces do not span the plane");
  return out;
}

FixedLocus fixed_locus(const ProjMat& m) {
  FixedLocus out;
  if (m.is_identity()) {
    out.whole_plane = true;
    return out;
  }
  for (const Eigenspace& s : eigen_decomposition(m)) {
    if (s.basis.size() == 1) {
      ProjPoint pt(s.basis[0]);
      if (apply(m, pt) != pt) raise(Errc::NotFixed, "eigenvector check failed");
      out.points.push_back(pt);
    } else if (s.basis.size() == 2) {
      ProjLine line(la::cross(s.basis[0], s.basis[1]));
      if (apply(m, line) != line) raise(Errc::NotFixed, "eigenline check failed");
      out.lines.push_back(line);
    }
  }
  return out;
}

TangentCharacters tangent_characters(const ProjMat& g, const ProjPoint& p) {
  if (apply(g, p) != p) raise(Errc::NotFixed, "point " + p.str() + " is not fixed");
  if (g.is_identity()) return {};
  const std::int64_t m = proj_order(g);
  const Mat3& a = g.matrix();
  const Vec3& v = p.coords();
  const Vec3 av = la::apply(a, v);
  int lead = 0;
  while (v[lead].is_zero()) ++lead;
  const CycNum mu0 = av[lead] / v[lead];

  struct Pair {
    CycNum value;
    Vec3 vec;
  };
  std::vector<Pair> pairs;
  for (const Eigenspace& s : eigen_decomposition(g))
    for (const Vec3& b : s.basis) pairs.push_back({s.value, b});
  auto drop = std::find_if(pairs.begin(), pairs.end(), [&](const Pair& q) {
    return q.value == mu0 && la::is_zero(la::cross(q.vec, v));
  });
  if (drop == pairs.end())
    drop = std::find_if(pairs.begin(), pairs.end(), [&](const Pair& q) { return q.value == mu0; });
  if (drop == pairs.end()) raise(Errc::NotFixed, "fixed point has no matching eigenvalue");
  pairs.erase(drop);
  auto first_nonzero = [](const Vec3& w) {
    int i = 0;
    while (i < 3 && w[i].is_zero()) ++i;
    return i;
  };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
    return first_nonzero(x.vec) < first_nonzero(y.vec);
  });
  TangentCharacters t;
  t.m = m;
  t.i = zeta_log(pairs[0].value / mu0, m);
  t.j = zeta_log(pairs[1].value / mu0, m);
  if (t.i < 0 || t.j < 0) raise(Errc::NonCyclotomicEigenvalue, "tangent weight is not an m-th root of unity");
  return t;
}

}  // namespace planemod
