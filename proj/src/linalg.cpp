#include "planemod/linalg.hpp"

#include <algorithm>
#include <utility>

#include "planemod/error.hpp"

namespace planemod {
namespace la {

Mat3 identity() { return diag(CycNum(1L), CycNum(1L), CycNum(1L)); }

Mat3 diag(const CycNum& a, const CycNum& b, const CycNum& c) {
  Mat3 m;
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CycNum acc;
      for (int k = 0; k < 3; ++k) {
        if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
        acc += a[i][k] * b[k][j];
      }
      r[i][j] = acc;
    }
  return r;
}

Vec3 apply(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    CycNum acc;
    for (int k = 0; k < 3; ++k) {
      if (a[i][k].is_zero() || v[k].is_zero()) continue;
      acc += a[i][k] * v[k];
    }
    r[i] = acc;
  }
  return r;
}

Mat3 scale(const Mat3& a, const CycNum& s) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] * s;
  return r;
}

Mat3 sub_scalar(const Mat3& a, const CycNum& mu) {
  Mat3 r = a;
  for (int i = 0; i < 3; ++i) r[i][i] -= mu;
  return r;
}

Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

CycNum det(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 adjugate(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return r;
}

Mat3 galois(const Mat3& a, std::int64_t k) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = GaloisElt(a[i][j].conductor(), k).apply(a[i][j]);
  return r;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

CycNum dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

bool is_diagonal(const Mat3& a) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !a[i][j].is_zero()) return false;
  return true;
}

std::uint32_t conductor(const Vec3& v) {
  std::uint32_t c = 1;
  for (const auto& x : v) c = common_conductor(c, x.conductor());
  return c;
}

std::uint32_t conductor(const Mat3& a) {
  std::uint32_t c = 1;
  for (const auto& row : a) c = common_conductor(c, conductor(row));
  return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat3& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < 3 && r < 3; ++c) {
    int piv = -1;
    for (int i = r; i < 3; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    const CycNum inv = m[r][c].inverse();
    for (int j = 0; j < 3; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < 3; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const CycNum f = m[i][c];
      for (int j = 0; j < 3; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Vec3> nullspace(const Mat3& a) {
  Mat3 m = a;
  const std::vector<int> pivots = rref(m);
  std::vector<Vec3> basis;
  for (int f = 0; f < 3; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Vec3 v;
    v[f] = CycNum(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(v);
  }
  return basis;
}

int rank(const Mat3& a) {
  Mat3 m = a;
  return static_cast<int>(rref(m).size());
}

Vec3 normalize_projective(const Vec3& v) {
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!v[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) raise(Errc::InvalidArgument, "zero vector has no projective class");
  Vec3 r;
  const CycNum inv = v[lead].inverse();
  for (int i = 0; i < 3; ++i) r[i] = (i == lead) ? CycNum(1L) : (v[i] * inv).minimized();
  return r;
}

Mat3 normalize_projective(const Mat3& a) {
  int li = -1, lj = -1;
  for (int i = 0; i < 3 && li < 0; ++i)
    for (int j = 0; j < 3; ++j)
      if (!a[i][j].is_zero()) {
        li = i;
        lj = j;
        break;
      }
  if (li < 0) raise(Errc::InvalidArgument, "zero matrix has no projective class");
  const CycNum inv = a[li][lj].inverse();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i][j] = (i == li && j == lj) ? CycNum(1L) : (a[i][j] * inv).minimized();
  return r;
}

}  // namespace la

namespace poly {

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

CycNum eval(const Poly& p, const CycNum& x) {
  CycNum acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly monic(const Poly& p) {
  Poly q = trim(p);
  if (q.empty()) return q;
  const CycNum inv = q.back().inverse();
  for (auto& c : q) c = c * inv;
  return q;
}

namespace {

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly r = trim(a);
  const Poly d = trim(b);
  if (d.empty()) raise(Errc::DivisionByZero, "polynomial division by zero");
  if (r.size() < d.size()) return {Poly{}, r};
  Poly q(r.size() - d.size() + 1);
  const CycNum lead_inv = d.back().inverse();
  for (std::size_t k = r.size() - 1;; --k) {
    const CycNum c = r[k] * lead_inv;
    const std::size_t shift = k - (d.size() - 1);
    q[shift] = c;
    if (!c.is_zero())
      for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
    if (k == d.size() - 1) break;
  }
  r.resize(d.size() - 1);
  return {trim(q), trim(r)};
}

}  // namespace

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly quot(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(Poly a, Poly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * CycNum(static_cast<long>(i)));
  return trim(d);
}

Poly scale_var(const Poly& p, const CycNum& c) {
  Poly r(p.size());
  CycNum pw(1L);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i] = p[i] * pw;
    pw = pw * c;
  }
  return trim(r);
}

Poly charpoly(const Mat3& a) {
  const CycNum t = a[0][0] + a[1][1] + a[2][2];
  const CycNum s = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) + (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                   (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  const CycNum d = la::det(a);
  return {-d, s, -t, CycNum(1L)};
}

}  // namespace poly
}  // namespace planemod
