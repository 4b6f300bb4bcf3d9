#include "planemod/torsor.hpp"

#include <set>

#include "planemod/hessian.hpp"

namespace planemod {

namespace {

/// An element of (C_m^3 / Delta) : C_k, the torus part stored as (u, v, 0)
/// and the cyclic part acting by a coordinate permutation.
struct TorusElt {
  std::int64_t u = 0, v = 0;
  int s = 0;
  friend bool operator==(const TorusElt&, const TorusElt&) = default;
};

struct TorusEltHash {
  std::size_t operator()(const TorusElt& x) const noexcept {
    return std::hash<std::int64_t>()((x.u * 1000003 + x.v) * 7 + x.s);
  }
};

struct Torus {
  std::int64_t m = 1;
  int k = 1;  // 3: cyclic shift, 2: swap of the first two coordinates

  std::pair<std::int64_t, std::int64_t> act(std::int64_t u, std::int64_t v, int times) const {
    for (int t = 0; t < times; ++t) {
      if (k == 3) {
        // (x0, x1, x2) -> (x2, x0, x1), renormalized so the last entry is 0
        std::tie(u, v) = std::make_pair(nt::mod(-v, m), nt::mod(u - v, m));
      } else if (k == 2) {
        std::swap(u, v);
      }
    }
    return {u, v};
  }

  TorusElt mul(const TorusElt& x, const TorusElt& y) const {
    auto [u, v] = act(y.u, y.v, x.s);
    return {nt::mod(x.u + u, m), nt::mod(x.v + v, m), (x.s + y.s) % k};
  }

  TorusElt torus(std::int64_t x0, std::int64_t x1, std::int64_t x2) const {
    return {nt::mod(x0 - x2, m), nt::mod(x1 - x2, m), 0};
  }
};

struct Built {
  std::vector<TorusElt> elems;
  AbstractGroup group;
  std::unordered_map<TorusElt, int, TorusEltHash> index;
};

Built build(const Torus& t, const std::vector<TorusElt>& gens, std::size_t ceiling) {
  auto [elems, group] = close_under<TorusElt, TorusEltHash>(
      TorusElt{}, gens, [&](const TorusElt& x, const TorusElt& y) { return t.mul(x, y); },
      ceiling);
  Built b{std::move(elems), std::move(group), {}};
  for (std::size_t i = 0; i < b.elems.size(); ++i) b.index.emplace(b.elems[i], static_cast<int>(i));
  return b;
}

Subset generated_by(const Built& b, const std::vector<TorusElt>& gens) {
  std::vector<int> idx;
  for (const TorusElt& g : gens) idx.push_back(b.index.at(g));
  return b.group.generated(idx);
}

void check_ceiling(std::int64_t order, std::size_t ceiling) {
  if (order > static_cast<std::int64_t>(ceiling))
    raise(Errc::CeilingExceeded, "|N| = " + std::to_string(order) + " exceeds ceiling " +
                                     std::to_string(ceiling));
}

/// Quotient data plus a target pair: the images of the two given elements.
ExtensionProblem finish(std::string family, AbstractGroup n, Subset g, int x, int y) {
  ExtensionProblem p;
  p.family = std::move(family);
  if (!n.is_normal(g)) raise(Errc::NotNormal, "G is not normal in N");
  p.q = n.quotient(g, &p.projection);
  p.n = std::move(n);
  p.g = std::move(g);
  p.target = {p.projection[x], p.projection[y]};
  if (p.q.generated({p.target.first, p.target.second}).size() != static_cast<std::size_t>(p.q.size()))
    raise(Errc::InvalidArgument, "target pair does not generate N/G");
  if (p.q.mul(p.target.first, p.target.second) != p.q.mul(p.target.second, p.target.first))
    raise(Errc::InvalidArgument, "target pair does not commute");
  return p;
}

/// First pair of elements generating an abelian group.
std::pair<int, int> generating_pair(const AbstractGroup& q) {
  for (int x = 0; x < q.size(); ++x)
    for (int y = x; y < q.size(); ++y)
      if (q.generated({x, y}).size() == static_cast<std::size_t>(q.size())) return {x, y};
  raise(Errc::InvalidArgument, "quotient is not 2-generated");
}

bool c1_congruence(std::int64_t d, std::int64_t modulus) {
  return nt::mod(d * d - d + 1, modulus) == 0;
}

}  // namespace

ExtensionProblem build_family_c1_3n(std::int64_t a, std::int64_t n, std::int64_t d,
                                    std::size_t ceiling) {
  if (a < 1 || n < 1) raise(Errc::InvalidArgument, "a and n must be positive");
  if (n % 3 != 0) raise(Errc::BadCongruence, "family c1-3n needs 3 | n");
  if (!c1_congruence(d, n)) raise(Errc::BadCongruence, "d^2 - d + 1 is not 0 mod n");
  // the congruence forces 9 not dividing n; re-checked rather than assumed
  if (n % 9 == 0) raise(Errc::BadCongruence, "9 divides n");
  if (nt::mod(d, 3) != 2) raise(Errc::BadCongruence, "d is not 2 mod 3");
  check_ceiling(9 * a * a * n, ceiling);
  const Torus t{a * n, 3};
  const std::vector<TorusElt> g_gens = {t.torus(n, 0, 0), t.torus(0, n, 0), t.torus(1, d, 0)};
  // N0 adds the 3a-torsion; N adds the permutation
  std::vector<TorusElt> n_gens = g_gens;
  n_gens.push_back(t.torus(n / 3, 0, 0));
  n_gens.push_back(t.torus(0, n / 3, 0));
  n_gens.push_back(TorusElt{0, 0, 1});
  Built b = build(t, n_gens, ceiling);
  Subset g = generated_by(b, g_gens);
  return finish("c1-3n", std::move(b.group), std::move(g), b.index.at(t.torus(n / 3, 0, 0)),
                b.index.at(TorusElt{0, 0, 1}));
}

ExtensionProblem build_family_c1_3a(std::int64_t a, std::int64_t n, std::int64_t d,
                                    std::size_t ceiling) {
  if (a < 1 || n < 1) raise(Errc::InvalidArgument, "a and n must be positive");
  if (n % 3 == 0) raise(Errc::BadCongruence, "family c1-3a needs 3 not dividing n");
  if (a % 3 != 0) raise(Errc::BadCongruence, "family c1-3a needs 3 | a");
  if (!c1_congruence(d, 3 * n)) raise(Errc::BadCongruence, "d^2 - d + 1 is not 0 mod 3n");
  check_ceiling(9 * a * a * n, ceiling);
  const std::int64_t m = 3 * a * n;
  const Torus t{m, 3};
  // G = C_a x C_an inside C_3an: diag(z_a,1,1), diag(1,z_a,1), diag(z_an, z_an^d, 1)
  const std::vector<TorusElt> g_gens = {t.torus(3 * n, 0, 0), t.torus(0, 3 * n, 0),
                                        t.torus(3, 3 * d, 0)};
  const std::vector<TorusElt> n_gens = {t.torus(3 * n, 0, 0), t.torus(0, 3 * n, 0),
                                        t.torus(1, d, 0), TorusElt{0, 0, 1}};
  Built b = build(t, n_gens, ceiling);
  Subset g = generated_by(b, g_gens);
  return finish("c1-3a", std::move(b.group), std::move(g), b.index.at(t.torus(1, d, 0)),
                b.index.at(TorusElt{0, 0, 1}));
}

bool fixed_elements_in_3_torsion(std::int64_t a, std::int64_t n, std::int64_t d) {
  const std::int64_t m = 3 * a * n;
  const Torus t{m, 3};
  Built b = build(t, {t.torus(3 * n, 0, 0), t.torus(0, 3 * n, 0), t.torus(1, d, 0)},
                  kDefaultTorsorCeiling);
  for (const TorusElt& x : b.elems) {
    if (t.act(x.u, x.v, 1) != std::make_pair(x.u, x.v)) continue;
    if (x.u % (a * n) != 0 || x.v % (a * n) != 0) return false;
  }
  return true;
}

ExtensionProblem build_family_c2(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t d,
                                 std::size_t ceiling) {
  if (a < 1 || n < 1) raise(Errc::InvalidArgument, "a and n must be positive");
  if (b < 1) raise(Errc::BadCongruence, "family c2 needs b >= 1");
  if (n % 2 == 0) raise(Errc::BadCongruence, "family c2 needs n odd");
  if (nt::mod(d * d - 1, n) != 0) raise(Errc::BadCongruence, "d^2 is not 1 mod n");
  const std::int64_t two = std::int64_t{1} << b;
  if (nt::mod(d - 1, two) != 0 && nt::mod(d + 1, two) != 0)
    raise(Errc::BadCongruence, "d is not +-1 mod 2^b");
  const std::int64_t m = a * two * n;
  check_ceiling(4 * a * m, ceiling);
  const Torus t{m, 2};
  const std::vector<TorusElt> g_gens = {t.torus(two * n, 0, 0), t.torus(0, two * n, 0),
                                        t.torus(1, d, 0)};
  std::vector<TorusElt> n_gens = g_gens;
  const TorusElt half = t.torus(m / (2 * a), 0, 0);  // diag(z_2a, 1, 1)
  n_gens.push_back(half);
  n_gens.push_back(TorusElt{0, 0, 1});
  Built bb = build(t, n_gens, ceiling);
  Subset g = generated_by(bb, g_gens);
  return finish("c2", std::move(bb.group), std::move(g), bb.index.at(half),
                bb.index.at(TorusElt{0, 0, 1}));
}

ExtensionProblem build_family_h2() {
  const auto& lib = hessian();
  const ProjGroup& h4 = lib.h[4];
  Subset g = h4.indices_of(lib.h[2]);
  return finish("h2", h4.abstract(), std::move(g), h4.require_index(lib.m[3]),
                h4.require_index(lib.m[4]));
}

ExtensionProblem direct_product_control(const AbstractGroup& q, const AbstractGroup& g) {
  AbstractGroup n = direct_product(q, g);
  Subset sub(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) sub[static_cast<std::size_t>(i)] = i;
  auto [x, y] = generating_pair(q);
  return finish("direct-product", std::move(n), std::move(sub), x * g.size(), y * g.size());
}

ExtensionProblem trivial_quotient(const ExtensionProblem& p) {
  return finish(p.family + "-trivial-quotient", p.n, p.n.all(), 0, 0);
}

bool commuting_lift_exists(const ExtensionProblem& p) {
  std::vector<int> xs, ys;
  for (int x = 0; x < p.n.size(); ++x) {
    if (p.projection[x] == p.target.first) xs.push_back(x);
    if (p.projection[x] == p.target.second) ys.push_back(x);
  }
  for (int x : xs)
    for (int y : ys)
      if (p.n.mul(x, y) == p.n.mul(y, x)) return true;
  return false;
}

bool abelian_surjection_exists(const ExtensionProblem& p) {
  const std::size_t qn = static_cast<std::size_t>(p.q.size());
  // Q is 2-generated, so an abelian subgroup onto Q contains a commuting pair onto Q
  for (int x = 0; x < p.n.size(); ++x)
    for (int y = x; y < p.n.size(); ++y) {
      if (p.n.mul(x, y) != p.n.mul(y, x)) continue;
      if (p.q.generated({p.projection[x], p.projection[y]}).size() == qn) return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// reference extensions

ReferenceExtension e_group() {
  const Torus t{3, 3};
  Built b = build(t, {t.torus(1, 0, 0), t.torus(0, 1, 0), TorusElt{0, 0, 1}}, kDefaultTorsorCeiling);
  Subset a = generated_by(b, {t.torus(1, 2, 0)});
  return {std::move(b.group), std::move(a)};
}

ReferenceExtension e_pm(std::int64_t b, int sign) {
  if (b < 1) raise(Errc::InvalidArgument, "b must be positive");
  if (sign != 1 && sign != -1) raise(Errc::InvalidArgument, "sign must be +1 or -1");
  const std::int64_t two = std::int64_t{1} << b;
  // C_{2^b}^2 with the swap is the torus C_{2^b}^3/Delta restricted to x2 = 0
  const Torus t{two, 2};
  const TorusElt gen{1, nt::mod(sign, two), 0};
  Built bb = build(t, {gen, TorusElt{two / 2, 0, 0}, TorusElt{0, 0, 1}}, kDefaultTorsorCeiling);
  Subset a = generated_by(bb, {gen});
  return {std::move(bb.group), std::move(a)};
}

bool has_complement(const ReferenceExtension& r) {
  const std::size_t target = static_cast<std::size_t>(r.e.size()) / r.a.size();
  const std::set<int> a(r.a.begin(), r.a.end());
  std::set<Subset> seen;
  for (int x = 0; x < r.e.size(); ++x)
    for (int y = x; y < r.e.size(); ++y) {
      Subset s = r.e.generated({x, y});
      if (s.size() != target || !seen.insert(s).second) continue;
      bool meets = false;
      for (int z : s)
        if (z != 0 && a.count(z)) meets = true;
      if (!meets) return true;
    }
  return false;
}

bool abelian_surjects(const ReferenceExtension& r) {
  std::vector<int> proj;
  const AbstractGroup q = r.e.quotient(r.a, &proj);
  for (int x = 0; x < r.e.size(); ++x)
    for (int y = x; y < r.e.size(); ++y) {
      if (r.e.mul(x, y) != r.e.mul(y, x)) continue;
      if (q.generated({proj[x], proj[y]}).size() == static_cast<std::size_t>(q.size()))
        return true;
    }
  return false;
}

// ---------------------------------------------------------------------------
// nonabelian H^1 of C_2

void validate(const InvolutionAction& act) {
  const int n = act.a.size();
  if (static_cast<int>(act.sigma.size()) != n)
    raise(Errc::InvalidArgument, "sigma must map every element");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    const int s = act.sigma[x];
    if (s < 0 || s >= n) raise(Errc::InvalidArgument, "sigma maps outside the group");
    hit[static_cast<std::size_t>(s)] = 1;
    if (act.sigma[s] != x) raise(Errc::InvalidArgument, "sigma is not an involution");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (act.sigma[act.a.mul(x, y)] != act.a.mul(act.sigma[x], act.sigma[y]))
        raise(Errc::InvalidArgument, "sigma is not a homomorphism");
}

std::vector<int> h1_c2(const InvolutionAction& act) {
  validate(act);
  const AbstractGroup& a = act.a;
  std::vector<int> cocycles;
  for (int z = 0; z < a.size(); ++z)
    if (a.mul(z, act.sigma[z]) == 0) cocycles.push_back(z);
  std::vector<char> done(static_cast<std::size_t>(a.size()), 0);
  std::vector<int> reps;
  for (int z : cocycles) {
    if (done[static_cast<std::size_t>(z)]) continue;
    reps.push_back(z);
    for (int b = 0; b < a.size(); ++b)
      done[static_cast<std::size_t>(a.mul(a.mul(b, z), a.inv(act.sigma[b])))] = 1;
  }
  return reps;
}

InvolutionAction klein_swap() {
  // index x * 2 + y for (x, y)
  return {direct_product(reference::cyclic(2), reference::cyclic(2)), {0, 2, 1, 3}};
}

InvolutionAction c2_trivial() { return {reference::cyclic(2), {0, 1}}; }

}  // namespace planemod
