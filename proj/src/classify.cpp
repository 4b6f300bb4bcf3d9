#include "planemod/classify.hpp"

#include <algorithm>
#include <sstream>

namespace planemod {

FieldProfile FieldProfile::parse(const std::string& name) {
  if (name == "Q" || name == "R") return {false, name};
  if (name == "Q(zeta12)" || name == "C") return {true, name};
  raise(Errc::InvalidArgument, "unknown field '" + name + "' (expected Q, Q(zeta12), R or C)");
}

// ---------------------------------------------------------------------------
// common eigenvectors

namespace {

using Space = std::vector<Vec3>;

Space intersect(const Space& w, const Space& e) {
  if (w.size() == 3) return e;
  if (e.size() == 3) return w;
  if (w.size() == 1 && e.size() == 1) return la::is_zero(la::cross(w[0], e[0])) ? w : Space{};
  if (w.size() == 1) return la::dot(w[0], la::cross(e[0], e[1])).is_zero() ? w : Space{};
  if (e.size() == 1) return la::dot(e[0], la::cross(w[0], w[1])).is_zero() ? e : Space{};
  const Vec3 nw = la::cross(w[0], w[1]);
  const Vec3 ne = la::cross(e[0], e[1]);
  const Vec3 l = la::cross(nw, ne);
  if (la::is_zero(l)) return w;
  return {l};
}

Space full_space() {
  return {Vec3{CycNum(1L), CycNum(), CycNum()}, Vec3{CycNum(), CycNum(1L), CycNum()},
          Vec3{CycNum(), CycNum(), CycNum(1L)}};
}

/// All nonzero intersections of one eigenspace per generator.
std::vector<Space> common_eigenspaces(const std::vector<ProjMat>& gens) {
  std::vector<Space> spaces{full_space()};
  for (const ProjMat& g : gens) {
    if (g.is_identity()) continue;
    const std::vector<Eigenspace> eig = eigen_decomposition(g);
    std::vector<Space> next;
    for (const Space& w : spaces)
      for (const Eigenspace& e : eig) {
        Space x = intersect(w, e.basis);
        if (!x.empty()) next.push_back(std::move(x));
      }
    spaces = std::move(next);
    if (spaces.empty()) break;
  }
  return spaces;
}

Mat3 columns(const std::vector<Vec3>& vs) {
  Mat3 p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p[i][j] = vs[j][i];
  return p;
}

}  // namespace

bool commute_projectively(const std::vector<ProjMat>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

Diagonalization diagonalize_generators(const std::vector<ProjMat>& gens) {
  Diagonalization out;
  // diagonalizable iff the canonical lifts commute exactly
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (la::mul(gens[i].matrix(), gens[j].matrix()) != la::mul(gens[j].matrix(), gens[i].matrix()))
        return out;
  std::vector<Vec3> basis;
  for (const Space& s : common_eigenspaces(gens)) basis.insert(basis.end(), s.begin(), s.end());
  if (basis.size() != 3) return out;
  out.diagonalizable = true;
  out.basis = columns(basis);
  return out;
}

Diagonalization diagonalize_abelian(const ProjGroup& g) {
  if (!is_abelian(g)) raise(Errc::NotAbelian, "group is not abelian");
  Diagonalization d = diagonalize_generators(g.generators());
  if (d.diagonalizable) return d;
  // the only alternative is H1: order 9, exponent 3, no fixed point
  bool ok = g.order() == 9;
  for (int x = 0; ok && x < static_cast<int>(g.order()); ++x)
    if (g.abstract().element_order(x) > 3) ok = false;
  if (ok && !common_eigenspaces(g.generators()).empty()) ok = false;
  if (!ok) raise(Errc::Unclassifiable, "abelian group is neither diagonalizable nor H1");
  return d;
}

// ---------------------------------------------------------------------------
// diagonal groups as exponent lattices

DiagonalLattice::DiagonalLattice(const std::vector<ProjMat>& gens) {
  std::vector<std::pair<CycNum, CycNum>> ratios;
  for (const ProjMat& g : gens) {
    if (!g.is_diagonal()) raise(Errc::NotDiagonal, "generator " + g.str() + " is not diagonal");
    const Mat3& a = g.matrix();
    const CycNum inv_c = a[2][2].inverse();
    ratios.emplace_back(a[0][0] * inv_c, a[1][1] * inv_c);
  }
  for (const auto& [x, y] : ratios) {
    const std::int64_t ox = root_of_unity_order(x), oy = root_of_unity_order(y);
    if (ox == 0 || oy == 0) raise(Errc::InvalidArgument, "diagonal generator of infinite order");
    m_ = nt::lcm(m_, nt::lcm(ox, oy));
  }
  for (const auto& [x, y] : ratios) gens_.emplace_back(zeta_log(x, m_), zeta_log(y, m_));
  member_.assign(static_cast<std::size_t>(m_ * m_), 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> elems{{0, 0}};
  member_[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [gu, gv] : gens_) {
      const std::int64_t u = (elems[i].first + gu) % m_, v = (elems[i].second + gv) % m_;
      char& slot = member_[static_cast<std::size_t>(u * m_ + v)];
      if (!slot) {
        slot = 1;
        elems.emplace_back(u, v);
      }
    }
  order_ = static_cast<std::int64_t>(elems.size());
}

bool DiagonalLattice::contains(std::int64_t u, std::int64_t v) const {
  return member_[static_cast<std::size_t>(nt::mod(u, m_) * m_ + nt::mod(v, m_))] != 0;
}

std::vector<ProjMat> AbelianPresentation::generators() const {
  const std::int64_t an = a * n;
  std::array<std::array<CycNum, 3>, 3> t = {{{CycNum::zeta(a, 1), 1, 1},
                                             {1, CycNum::zeta(a, 1), 1},
                                             {CycNum::zeta(an, 1), CycNum::zeta(an, d), 1}}};
  std::vector<ProjMat> out;
  for (const auto& g : t) {
    Vec3 e;
    for (int i = 0; i < 3; ++i) e[perm[i]] = g[i];
    out.push_back(ProjMat::diag(e[0], e[1], e[2]));
  }
  return out;
}

std::string AbelianPresentation::str() const {
  std::ostringstream os;
  os << "a=" << a << " n=" << n << " d=" << d << " perm=(" << perm[0] << "," << perm[1] << ","
     << perm[2] << ")";
  return os.str();
}

std::vector<AbelianPresentation> abelian_presentations(const DiagonalLattice& g) {
  std::vector<AbelianPresentation> out;
  const std::int64_t m = g.modulus();
  if (g.order() % m != 0) return out;
  const std::int64_t a = g.order() / m;
  if (m % a != 0) return out;
  const std::int64_t n = m / a;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (std::int64_t d = 0; d < m; ++d) {
      const std::array<std::array<std::int64_t, 3>, 3> t = {{{n, 0, 0}, {0, n, 0}, {1, d, 0}}};
      bool ok = true;
      for (const auto& row : t) {
        std::array<std::int64_t, 3> e{};
        for (int i = 0; i < 3; ++i) e[perm[i]] = row[i];
        if (!g.contains(e[0] - e[2], e[1] - e[2])) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(AbelianPresentation{a, n, d, perm});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AbelianPresentation> abelian_presentations(const ProjGroup& g) {
  return abelian_presentations(DiagonalLattice(g.generators()));
}

std::vector<AbelianPresentation> presentations_up_to_conjugacy(const std::vector<ProjMat>& gens) {
  if (!commute_projectively(gens)) return {};
  const Diagonalization d = diagonalize_generators(gens);
  if (!d.diagonalizable) return {};
  const ProjMat p(d.basis);
  const ProjMat pinv = p.inverse();
  std::vector<ProjMat> diag;
  for (const ProjMat& x : gens) diag.push_back(pinv * x * p);
  return abelian_presentations(DiagonalLattice(diag));
}

// ---------------------------------------------------------------------------
// Hessian recognition

std::string to_string(HessianLabel h) {
  switch (h) {
    case HessianLabel::H1: return "H1";
    case HessianLabel::H2: return "H2";
    case HessianLabel::H3: return "H3";
  }
  return "?";
}

namespace {

bool is_h1_like(const ProjGroup& s) {
  return s.order() == 9 && is_abelian(s) && !diagonalize_generators(s.generators()).diagonalizable;
}

/// A normal subgroup of g isomorphic to H1, as an index subset.
std::optional<Subset> normal_h1(const ProjGroup& g) {
  const AbstractGroup& t = g.abstract();
  std::vector<int> threes;
  for (int x = 0; x < t.size(); ++x)
    if (t.element_order(x) == 3) threes.push_back(x);
  std::vector<Subset> tried;
  for (std::size_t i = 0; i < threes.size(); ++i)
    for (std::size_t j = i + 1; j < threes.size(); ++j) {
      Subset s = t.generated({threes[i], threes[j]});
      if (s.size() != 9 || std::find(tried.begin(), tried.end(), s) != tried.end()) continue;
      tried.push_back(s);
      if (!t.is_normal(s)) continue;
      if (is_h1_like(g.subgroup(s))) return s;
    }
  return std::nullopt;
}

/// Does conjugation by x act on the subgroup s as inversion?
bool acts_as_inversion(const AbstractGroup& t, const Subset& s, int x) {
  for (int y : s)
    if (t.mul(t.mul(x, y), t.inv(x)) != t.inv(y)) return false;
  return true;
}

}  // namespace

std::optional<HessianLabel> recognize_hessian(const ProjGroup& g) {
  if (g.order() == 9) {
    if (is_h1_like(g)) return HessianLabel::H1;
    return std::nullopt;
  }
  if (g.order() != 18 && g.order() != 36) return std::nullopt;
  const AbstractGroup& t = g.abstract();
  // the elements of 3-power order must form the normal C3^2
  Subset s;
  for (int x = 0; x < t.size(); ++x)
    if (3 % t.element_order(x) == 0) s.push_back(x);
  if (s.size() != 9 || !t.is_subgroup(s) || !t.is_normal(s)) return std::nullopt;
  if (!is_h1_like(g.subgroup(s))) return std::nullopt;
  std::vector<int> proj;
  const AbstractGroup q = t.quotient(s, &proj);
  int tau = -1;
  for (int x = 0; x < t.size(); ++x)
    if (q.element_order(proj[x]) == q.size()) {
      tau = x;
      break;
    }
  if (tau < 0) return std::nullopt;  // quotient not cyclic
  if (q.size() == 2) {
    if (acts_as_inversion(t, s, tau)) return HessianLabel::H2;
    return std::nullopt;
  }
  // C4 acting through an element of order 4 in SL(2,3): its square is -1
  if (acts_as_inversion(t, s, t.mul(tau, tau)) && !acts_as_inversion(t, s, tau))
    return HessianLabel::H3;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// MBD types

MbdType mbd_type(const ProjGroup& g) {
  if (is_abelian(g)) {
    if (diagonalize_abelian(g).diagonalizable) return {"abelian-diagonal", "order " + std::to_string(g.order())};
    return {"H1", "order 9"};
  }
  if (!common_eigenspaces(g.generators()).empty())
    return {"A", "common fixed point, order " + std::to_string(g.order())};
  if (auto s = normal_h1(g)) {
    const std::size_t idx = g.order() / 9;
    switch (idx) {
      case 2: return {"C", "H2"};
      case 4: return {"D", "H3"};
      case 8: return {"D", "H4"};
      case 24: return {"D", "H5"};
      default: break;
    }
  }
  // invariant triangle: a size-3 orbit of non-collinear isolated fixed points
  std::vector<ProjPoint> seen;
  for (const ProjMat& x : g.elements()) {
    if (x.is_identity()) continue;
    for (const ProjPoint& p : fixed_locus(x).points) {
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
      seen.push_back(p);
      const std::vector<ProjPoint> orb = orbit(g, p);
      if (orb.size() != 3 || collinear(orb[0], orb[1], orb[2])) continue;
      Subset d;
      for (std::size_t i = 0; i < g.order(); ++i) {
        const ProjMat& y = g.elements()[i];
        if (apply(y, orb[0]) == orb[0] && apply(y, orb[1]) == orb[1] && apply(y, orb[2]) == orb[2])
          d.push_back(static_cast<int>(i));
      }
      const std::size_t image = g.order() / d.size();
      const std::string detail = "D order " + std::to_string(d.size());
      if (image == 3) return {"B", detail};
      if (image == 6) return {"C", detail};
    }
  }
  if ((g.order() == 60 || g.order() == 168 || g.order() == 360) &&
      g.abstract().derived_subgroup().size() == g.order()) {
    const char* name = g.order() == 60 ? "A5" : g.order() == 168 ? "PSL(2,7)" : "A6";
    return {"E", name};
  }
  raise(Errc::Unclassifiable, "no structural witness for a group of order " + std::to_string(g.order()));
}

// ---------------------------------------------------------------------------
// criticality

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::Critical: return "critical";
    case Criticality::Lucky: return "lucky";
    case Criticality::Neither: return "neither";
  }
  return "?";
}

bool clause1_template(const AbelianPresentation& p) {
  return nt::mod(p.d * p.d - p.d + 1, p.n) == 0;
}

bool clause1(const AbelianPresentation& p) { return clause1_template(p) && (p.a * p.n) % 3 == 0; }

bool clause2(const AbelianPresentation& p, int min_b) {
  std::int64_t odd = p.n, two = 1;
  int b = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    two *= 2;
    ++b;
  }
  if (b < min_b) return false;
  if (nt::mod(p.d * p.d - 1, odd) != 0) return false;
  const std::int64_t r = nt::mod(p.d, two);
  return r == nt::mod(1, two) || r == nt::mod(-1, two);
}

namespace {

CriticalityVerdict abelian_verdict(const std::vector<AbelianPresentation>& pres) {
  CriticalityVerdict v;
  auto decide = [&](int min_b, std::string* rule, std::optional<AbelianPresentation>* witness) {
    for (const auto& p : pres)
      if (clause1(p)) {
        *rule = "definition-clause1";
        *witness = p;
        return Criticality::Critical;
      }
    for (const auto& p : pres)
      if (clause2(p, min_b)) {
        *rule = "definition-clause2";
        *witness = p;
        return Criticality::Critical;
      }
    for (const auto& p : pres)
      if (clause1_template(p)) {
        *rule = "definition-exclusion-clause1-template";
        *witness = p;
        return Criticality::Neither;
      }
    *rule = "definition-lucky";
    witness->reset();
    return Criticality::Lucky;
  };
  v.status = decide(1, &v.rule, &v.witness);
  std::string alt_rule;
  std::optional<AbelianPresentation> alt_witness;
  const Criticality alt = decide(0, &alt_rule, &alt_witness);
  if (alt != v.status) v.status_if_b0 = alt;
  return v;
}

CriticalityVerdict nonabelian_verdict(const ProjGroup& g, const FieldProfile& field) {
  CriticalityVerdict v;
  const auto h = recognize_hessian(g);
  v.hessian = h;
  if (h == HessianLabel::H2) {
    v.status = Criticality::Critical;
    v.rule = "definition-H2";
  } else if (h == HessianLabel::H3 && !field.has_zeta12) {
    v.status = Criticality::Critical;
    v.rule = "definition-H3";
  } else if (h == HessianLabel::H3) {
    v.status = Criticality::Lucky;
    v.rule = "definition-lucky-H3-zeta12";
  } else {
    v.status = Criticality::Lucky;
    v.rule = "definition-lucky";
  }
  return v;
}

CriticalityVerdict h1_verdict() {
  CriticalityVerdict v;
  v.status = Criticality::Neither;
  v.rule = "definition-exclusion-H1";
  v.hessian = HessianLabel::H1;
  return v;
}

}  // namespace

CriticalityVerdict criticality(const ProjGroup& g, const FieldProfile& field) {
  if (!is_abelian(g)) return nonabelian_verdict(g, field);
  const Diagonalization d = diagonalize_abelian(g);
  if (!d.diagonalizable) return h1_verdict();
  return criticality_of_generators(g.generators(), field);
}

CriticalityVerdict criticality_of_generators(const std::vector<ProjMat>& gens,
                                             const FieldProfile& field) {
  if (!commute_projectively(gens)) return nonabelian_verdict(ProjGroup::closure(gens), field);
  const Diagonalization d = diagonalize_generators(gens);
  if (!d.diagonalizable) {
    const ProjGroup g = ProjGroup::closure(gens);
    diagonalize_abelian(g);  // certifies the H1 case
    return h1_verdict();
  }
  const ProjMat p(d.basis);
  const ProjMat pinv = p.inverse();
  std::vector<ProjMat> diag;
  for (const ProjMat& x : gens) diag.push_back(pinv * x * p);
  return abelian_verdict(abelian_presentations(DiagonalLattice(diag)));
}

}  // namespace planemod
