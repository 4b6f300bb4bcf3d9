#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "planemod/linalg.hpp"

namespace planemod {

/// An element of PGL_3. The stored matrix is the canonical lift whose first
/// nonzero entry (row-major) is 1, with every entry at minimal conductor, so
/// projective equality is entrywise equality.
class ProjMat {
 public:
  ProjMat();  // identity
  /// Raises InvalidArgument if the lift is singular.
  explicit ProjMat(const Mat3& lift);
  static ProjMat diag(const CycNum& a, const CycNum& b, const CycNum& c);
  static ProjMat parse(std::string_view literal);

  const Mat3& matrix() const noexcept { return m_; }
  std::uint32_t conductor() const { return la::conductor(m_); }

  ProjMat operator*(const ProjMat& other) const;
  ProjMat inverse() const;
  ProjMat pow(std::int64_t e) const;
  /// Entrywise sigma_k.
  ProjMat galois(std::int64_t k) const;
  bool is_identity() const;
  bool is_diagonal() const { return la::is_diagonal(m_); }

  std::size_t hash() const noexcept { return hash_; }
  std::string str() const;

  friend bool operator==(const ProjMat& a, const ProjMat& b) {
    return a.hash_ == b.hash_ && a.m_ == b.m_;
  }
  friend bool operator!=(const ProjMat& a, const ProjMat& b) { return !(a == b); }

 private:
  struct Canonical {};
  ProjMat(const Mat3& canonical, Canonical);
  Mat3 m_;
  std::size_t hash_ = 0;
};

struct ProjMatHash {
  std::size_t operator()(const ProjMat& m) const noexcept { return m.hash(); }
};

/// True iff the two lifts differ by a nonzero scalar.
bool proj_eq(const Mat3& a, const Mat3& b);
inline bool proj_eq(const ProjMat& a, const ProjMat& b) { return a == b; }

inline constexpr std::int64_t kDefaultOrderBound = 2000;

/// Least m >= 1 with M^m scalar. Raises OrderBoundExceeded past the bound.
std::int64_t proj_order(const ProjMat& m, std::int64_t bound = kDefaultOrderBound);

/// A point of P^2, first nonzero coordinate 1, entries at minimal conductor.
class ProjPoint {
 public:
  explicit ProjPoint(const Vec3& coords);
  static ProjPoint of(long x, long y, long z) { return ProjPoint(Vec3{CycNum(x), CycNum(y), CycNum(z)}); }

  const Vec3& coords() const noexcept { return c_; }
  std::size_t hash() const noexcept { return hash_; }
  std::string str() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.hash_ == b.hash_ && a.c_ == b.c_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.str() < b.str(); }

 private:
  Vec3 c_;
  std::size_t hash_ = 0;
};

/// A line given by dual coordinates, normalized like a point.
class ProjLine {
 public:
  explicit ProjLine(const Vec3& dual) : p_(dual) {}
  static ProjLine through(const ProjPoint& a, const ProjPoint& b);

  const Vec3& coords() const noexcept { return p_.coords(); }
  bool contains(const ProjPoint& q) const;
  std::size_t hash() const noexcept { return p_.hash(); }
  std::string str() const { return p_.str(); }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.p_ == b.p_; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }

 private:
  ProjPoint p_;
};

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const noexcept { return p.hash(); }
};
struct ProjLineHash {
  std::size_t operator()(const ProjLine& l) const noexcept { return l.hash(); }
};

ProjPoint apply(const ProjMat& m, const ProjPoint& p);
ProjLine apply(const ProjMat& m, const ProjLine& l);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// One eigenvalue of the canonical lift with a basis of its eigenspace.
struct Eigenspace {
  CycNum value;
  std::vector<Vec3> basis;
};

/// Exact eigenspace decomposition of the canonical lift of a finite-order
/// element. Raises OrderBoundExceeded, ConductorOverflow or
/// NonCyclotomicEigenvalue.
std::vector<Eigenspace> eigen_decomposition(const ProjMat& m);

struct FixedLocus {
  bool whole_plane = false;  // identity
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
};

FixedLocus fixed_locus(const ProjMat& m);

/// Tangent action at a fixed point as the label 1/m(i, j).
struct TangentCharacters {
  std::int64_t m = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;
};

/// Raises NotFixed if g does not fix p.
TangentCharacters tangent_characters(const ProjMat& g, const ProjPoint& p);

}  // namespace planemod
