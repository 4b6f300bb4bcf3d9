#include "planemod/descent.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace planemod {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::DescendsToP2: return "DESCENDS_TO_P2";
    case Outcome::DescendsToBrauerSeveri: return "DESCENDS_TO_BRAUER_SEVERI";
    case Outcome::PossibleObstruction: return "POSSIBLE_OBSTRUCTION";
    case Outcome::OutOfTheoremScope: return "OUT_OF_THEOREM_SCOPE";
  }
  return "?";
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["outcome"] = to_string(outcome);
  j["rule"] = rule;
  j["constraints"] = constraints;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump();
}

namespace {

Verdict make(Outcome o, std::string rule) {
  Verdict v;
  v.outcome = o;
  v.rule = std::move(rule);
  return v;
}

std::string abelian_name(std::vector<std::int64_t> inv) {
  std::erase(inv, 1);
  if (inv.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < inv.size(); ++i) out += (i ? "xC" : "C") + std::to_string(inv[i]);
  return out;
}

/// (a, N) with the group C_a x C_{aN} isomorphic to an abelian group with the
/// given invariant factors.
std::optional<std::pair<std::int64_t, std::int64_t>> template_shape(std::vector<std::int64_t> inv) {
  std::erase(inv, 1);
  if (inv.empty()) return std::pair<std::int64_t, std::int64_t>{1, 1};
  if (inv.size() == 1) return std::pair<std::int64_t, std::int64_t>{1, inv[0]};
  if (inv.size() == 2) return std::pair<std::int64_t, std::int64_t>{inv[0], inv[1] / inv[0]};
  return std::nullopt;
}

std::string divisibility_text(std::int64_t a, std::int64_t big_n, std::int64_t degree) {
  std::ostringstream os;
  if (a != 1)
    os << "2an = " << a * big_n << (degree % (a * big_n) == 0 ? " divides" : " does not divide")
       << " d = " << degree;
  else
    os << "4n = " << 2 * big_n
       << ((degree * (degree - 2)) % (2 * big_n) == 0 ? " divides" : " does not divide")
       << " d(d-2) = " << degree * (degree - 2);
  return os.str();
}

/// Shared tail of the curve verdict once (a, N) has the obstruction form.
Verdict curve_by_shape(std::int64_t a, std::int64_t big_n, std::int64_t degree) {
  std::ostringstream form;
  form << "aut has the form C" << a << " x C" << a * big_n << " (a=" << a << ", n=" << big_n / 2
       << ")";
  Verdict v = obstruction_divisibility(a, big_n, degree)
                  ? make(Outcome::PossibleObstruction, "curve-obstruction-form")
                  : make(Outcome::DescendsToP2, "curve-divisibility-violated");
  v.constraints.push_back(form.str());
  v.constraints.push_back(divisibility_text(a, big_n, degree));
  if (degree == 4 && v.outcome == Outcome::PossibleObstruction && !(a == 1 && big_n == 2))
    v.notes.push_back("not realizable: among these shapes only C2 is the automorphism group of a "
                      "smooth plane quartic (Bars' list)");
  return v;
}

std::vector<std::int64_t> prime_powers(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [p, e] : nt::factor(n)) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    out.push_back(q);
  }
  return out;
}

bool plus_minus_one(std::int64_t e, std::int64_t q) {
  const std::int64_t r = nt::mod(e, q);
  return r == nt::mod(1, q) || r == nt::mod(-1, q);
}

}  // namespace

bool obstruction_form(const AbelianPresentation& p) {
  if (p.n % 2 != 0) return false;
  for (std::int64_t q : prime_powers(p.n))
    if (!plus_minus_one(p.d, q)) return false;
  return true;
}

bool obstruction_divisibility(std::int64_t a, std::int64_t big_n, std::int64_t degree) {
  if (a != 1) return degree % (a * big_n) == 0;
  return (degree * (degree - 2)) % (2 * big_n) == 0;
}

Verdict verdict_curve(const CurveQuery& q) {
  if (q.degree < 3) raise(Errc::InvalidArgument, "curve degree must be at least 3");
  if (q.degree % 3 == 0)
    raise(Errc::DegreeDivisibleBy3, "degree " + std::to_string(q.degree) + " is divisible by 3");
  if (!q.group && !q.fingerprint) raise(Errc::InvalidArgument, "curve query without a group");
  if (nt::gcd(q.degree, 6) == 1) {
    Verdict v = make(Outcome::DescendsToP2, "curve-degree-prime-to-6");
    v.constraints.push_back("gcd(d, 6) = 1");
    return v;
  }
  if (q.group) {
    for (const AbelianPresentation& p : presentations_up_to_conjugacy(q.group->generators()))
      if (obstruction_form(p)) return curve_by_shape(p.a, p.n, q.degree);
  } else if (q.fingerprint->abelian) {
    // any abelian C_a x C_{aN} with N even is realized with e = 1
    if (auto shape = template_shape(q.fingerprint->abelian_invariants);
        shape && shape->second % 2 == 0)
      return curve_by_shape(shape->first, shape->second, q.degree);
  }
  Verdict v = make(Outcome::DescendsToP2, "curve-no-obstruction-form");
  v.constraints.push_back("aut is not of the form C_a x C_2an with e = +-1 mod every q | 2n");
  return v;
}

Verdict verdict_quartic(const GroupFingerprint& aut) {
  if (aut == fingerprint(reference::cyclic(2)))
    return make(Outcome::PossibleObstruction, "quartic-aut-c2");
  return make(Outcome::DescendsToP2, "quartic-aut-not-c2");
}

std::vector<std::pair<std::string, AbstractGroup>> sextic_exceptions() {
  return {{"C2", reference::cyclic(2)},       {"C3", reference::cyclic(3)},
          {"C4", reference::cyclic(4)},       {"C6", reference::cyclic(6)},
          {"C3^2", reference::abelian({3, 3})}, {"C3^2:C2", reference::c3sq_c2()},
          {"C3^2:C4", reference::c3sq_c4()}};
}

Verdict verdict_sextic(const GroupFingerprint& aut, const FieldProfile& field) {
  for (const auto& [name, g] : sextic_exceptions()) {
    if (fingerprint(g) != aut) continue;
    if (name == "C3^2:C4" && field.has_zeta12) {
      Verdict v = make(Outcome::DescendsToP2, "sextic-c3sq-c4-zeta12");
      v.constraints.push_back("sqrt(3), sqrt(-1) in k");
      return v;
    }
    Verdict v = make(Outcome::PossibleObstruction, "sextic-exception-list");
    v.constraints.push_back("aut = " + name);
    return v;
  }
  if (aut.order == 1 || aut == fingerprint(reference::klein()))
    return make(Outcome::DescendsToBrauerSeveri, "sextic-brauer-severi");
  return make(Outcome::DescendsToP2, "sextic-p2");
}

Verdict verdict_cycle(const ProjGroup& g, const FieldProfile& field) {
  const CriticalityVerdict c = criticality(g, field);
  Verdict v;
  switch (c.status) {
    case Criticality::Critical:
      v = make(Outcome::PossibleObstruction, "cycle-critical");
      break;
    case Criticality::Lucky:
      v = make(Outcome::DescendsToP2, "cycle-lucky");
      break;
    case Criticality::Neither:
      v = make(Outcome::DescendsToBrauerSeveri, "cycle-not-critical");
      break;
  }
  v.constraints.push_back("criticality: " + to_string(c.status) + " (" + c.rule + ")");
  if (c.witness) v.constraints.push_back("presentation " + c.witness->str());
  return v;
}

std::vector<std::string> obstruction_groups(std::int64_t degree) {
  std::set<std::string> names;
  for (std::int64_t a = 1; a <= degree; ++a) {
    const std::int64_t max_n = a == 1 ? degree * (degree - 2) / 2 : degree / a;
    for (std::int64_t big_n = 2; big_n <= max_n; big_n += 2) {
      if (!obstruction_divisibility(a, big_n, degree)) continue;
      for (std::int64_t e = 0; e < a * big_n; ++e) {
        const AbelianPresentation p{a, big_n, e, {0, 1, 2}};
        if (!obstruction_form(p)) continue;
        const GroupFingerprint f = fingerprint(ProjGroup::closure(p.generators()));
        names.insert(abelian_name(f.abelian_invariants));
      }
    }
  }
  return {names.begin(), names.end()};
}

// ---------------------------------------------------------------------------
// singularity rules

std::string CyclicSingularity::str() const {
  return "1/" + std::to_string(m) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string to_string(RType r) {
  switch (r) {
    case RType::R: return "R";
    case RType::NotNecessarilyR: return "NotNecessarilyR";
    case RType::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(R2Type r) { return r == R2Type::R2 ? "R2" : "Unknown"; }

RType type_r_cyclic(const CyclicSingularity& s) {
  if (s.m < 1) raise(Errc::InvalidArgument, "singularity order must be positive");
  if (s.m % 2 == 1) return RType::R;  // covers m = 1 and m = 3
  const std::int64_t i = nt::mod(s.i, s.m), j = nt::mod(s.j, s.m);
  std::int64_t d;
  if (nt::gcd(i, s.m) == 1)
    d = nt::mod(j * nt::inverse_mod(i, s.m), s.m);
  else if (nt::gcd(j, s.m) == 1)
    d = nt::mod(i * nt::inverse_mod(j, s.m), s.m);
  else
    return RType::Unknown;
  return nt::mod(d * d, s.m) != 1 ? RType::R : RType::Unknown;
}

namespace {

/// A normal subgroup isomorphic to C_a x C_a with quotient D3.
bool d3_by_square(const AbstractGroup& g) {
  const int n = g.size();
  if (n % 6 != 0) return false;
  std::int64_t a = 1;
  while (6 * (a + 1) * (a + 1) <= n) ++a;
  if (6 * a * a != n) return false;
  const AbstractGroup s3 = reference::symmetric3();
  if (a == 1) return isomorphic(g, s3);
  std::set<Subset> seen;
  for (int x = 0; x < n; ++x) {
    if (g.element_order(x) != a) continue;
    for (int y = 0; y < n; ++y) {
      if (a % g.element_order(y) != 0) continue;
      Subset h = g.generated({x, y});
      if (static_cast<std::int64_t>(h.size()) != a * a || !seen.insert(h).second) continue;
      const AbstractGroup sub = g.subgroup(h);
      if (!sub.is_abelian() || !g.is_normal(h)) continue;
      if (isomorphic(g.quotient(h), s3)) return true;
    }
  }
  return false;
}

}  // namespace

R2Lookup r2_group_lookup(const AbstractGroup& g) {
  const int n = g.size();
  if (n == 7 && isomorphic(g, reference::cyclic(7))) return {R2Type::R2, "cyclic of order 7"};
  if (n >= 6 && n % 2 == 0 && isomorphic(g, reference::dihedral(n / 2)))
    return {R2Type::R2, "dihedral of order " + std::to_string(n)};
  if (n == 18 && isomorphic(g, direct_product(reference::symmetric3(), reference::cyclic(3))))
    return {R2Type::R2, "extension of D3 by C3"};
  if (d3_by_square(g)) return {R2Type::R2, "extension of D3 by C_a x C_a"};
  return {R2Type::Unknown, "not among the asserted types"};
}

ParameterizationReport compare_parameterizations(std::int64_t bound) {
  ParameterizationReport r;
  r.bound = bound;
  for (std::int64_t a = 1; a <= 2 * bound; ++a)
    for (std::int64_t big_n = 1; a * big_n <= 2 * bound; ++big_n) {
      const std::vector<std::int64_t> qs = prime_powers(big_n);
      for (std::int64_t e = 0; e < a * big_n; ++e) {
        bool form = big_n % 2 == 0;
        for (std::size_t k = 0; k < qs.size() && form; ++k) form = plus_minus_one(e, qs[k]);
        const AbelianPresentation p{a, big_n, e, {0, 1, 2}};
        const bool def1 = clause2(p, 1), def0 = clause2(p, 0);
        ++r.triples;
        if (form != def1) {
          ++r.mismatches;
          if (r.examples.size() < 5) r.examples.push_back(p.str());
        }
        if (form != def0) ++r.mismatches_b0;
      }
    }
  return r;
}

}  // namespace planemod
