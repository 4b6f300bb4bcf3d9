#include "planemod/verify.hpp"

#include <json.hpp>
#include <algorithm>
#include <regex>
#include <sstream>

#include "planemod/descent.hpp"
#include "planemod/hessian.hpp"
#include "planemod/torsor.hpp"

namespace planemod {

// ---------------------------------------------------------------------------
// names

namespace {

struct Named {
  std::string name;
  AbstractGroup group;
};

const std::vector<Named>& named_groups() {
  static const std::vector<Named> list = {
      {"S3", reference::symmetric3()},       {"Klein", reference::klein()},
      {"Q8", reference::quaternion()},       {"A4", reference::alternating4()},
      {"SL(2,3)", reference::sl2_3()},       {"C3^2:C2", reference::c3sq_c2()},
      {"C3^2:C4", reference::c3sq_c4()},
  };
  return list;
}

}  // namespace

AbstractGroup group_by_name(const std::string& name) {
  std::smatch m;
  static const std::regex cyclic(R"(C(\d+))"), product(R"(C(\d+)xC(\d+))"), dihedral(R"(D(\d+))");
  auto small = [&](const std::string& s) {
    const long v = std::stol(s);
    if (v < 1 || v > 1000) raise(Errc::InvalidArgument, "group parameter out of range: " + s);
    return static_cast<int>(v);
  };
  if (std::regex_match(name, m, cyclic)) return reference::cyclic(small(m[1]));
  if (std::regex_match(name, m, product)) return reference::abelian({small(m[1]), small(m[2])});
  if (std::regex_match(name, m, dihedral)) {
    const int n = small(m[1]);
    if (n < 2) raise(Errc::InvalidArgument, "dihedral groups need n >= 2");
    return reference::dihedral(n);
  }
  if (name == "C2^2") return reference::klein();
  if (name == "C3^2") return reference::abelian({3, 3});
  if (name == "trivial") return reference::trivial();
  for (const auto& g : named_groups())
    if (g.name == name) return g.group;
  raise(Errc::InvalidArgument, "unknown group name " + name);
}

std::string group_name(const AbstractGroup& g) {
  if (g.size() == 1) return "trivial";
  const GroupFingerprint f = fingerprint(g);
  if (f.abelian) {
    std::string out;
    for (std::int64_t x : f.abelian_invariants) {
      if (x == 1) continue;
      out += (out.empty() ? "C" : "xC") + std::to_string(x);
    }
    return out;
  }
  for (const auto& n : named_groups())
    if (n.group.size() == g.size() && isomorphic(n.group, g)) return n.name;
  if (g.size() % 2 == 0 && g.size() >= 6 && isomorphic(g, reference::dihedral(g.size() / 2)))
    return "D" + std::to_string(g.size() / 2);
  return "order-" + std::to_string(g.size());
}

// ---------------------------------------------------------------------------
// reports

int RunReport::exit_status() const {
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

std::string RunReport::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["results"] = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    j["results"].push_back({{"name", r.name}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
    passed += r.pass ? 1 : 0;
  }
  j["passed"] = passed;
  j["failed"] = results.size() - passed;
  j["exit_status"] = exit_status();
  return j.dump();
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.name << ": " << (r.pass ? "pass" : "FAIL");
    if (!r.pass) os << " (expected " << r.expected << ", got " << r.got << ")";
    os << "\n";
  }
  return os.str();
}

namespace {

class Recorder {
 public:
  explicit Recorder(RunReport& r) : report_(r) {}

  /// Names without an explicit " = " get the expected value appended.
  void equal(const std::string& name, const std::string& expected, const std::string& got) {
    const std::string full = name.find(" = ") == std::string::npos ? name + " = " + expected : name;
    report_.results.push_back({full, expected, got, expected == got});
  }
  void equal(const std::string& name, std::int64_t expected, std::int64_t got) {
    equal(name, std::to_string(expected), std::to_string(got));
  }
  void truth(const std::string& name, bool expected, bool got) {
    equal(name, expected ? "true" : "false", got ? "true" : "false");
  }
  /// Runs `body`; a MathError becomes a failed check.
  template <class F>
  void guard(const std::string& name, F body) {
    try {
      body();
    } catch (const MathError& e) {
      report_.results.push_back({name, "no error", std::string(errc_name(e.code())) + ": " + e.what(), false});
    }
  }

 private:
  RunReport& report_;
};

CycNum z(std::int64_t n, std::int64_t k = 1) { return CycNum::zeta(n, k); }

void hessian_checks(Recorder& r) {
  const auto& lib = hessian();
  const std::array<std::int64_t, 6> orders{3, 9, 18, 36, 72, 216};
  for (int i = 1; i <= 5; ++i)
    r.equal("|H" + std::to_string(i) + "| = " + std::to_string(orders[i]), orders[i],
            static_cast<std::int64_t>(lib.h[i].order()));
  for (const auto& c : galois_identity_check()) r.truth(c.statement, true, c.holds);
  r.truth("H3/H1 = C4", true, isomorphic(quotient(lib.h[3], lib.h[1]), reference::cyclic(4)));
  r.truth("H4/H1 = Q8", true, isomorphic(quotient(lib.h[4], lib.h[1]), reference::quaternion()));
  r.truth("H5/H1 = SL(2,3)", true, isomorphic(quotient(lib.h[5], lib.h[1]), reference::sl2_3()));
  r.truth("H5/H2 = A4", true, isomorphic(quotient(lib.h[5], lib.h[2]), reference::alternating4()));
  r.truth("H4/H2 = C2^2", true, isomorphic(quotient(lib.h[4], lib.h[2]), reference::klein()));
  r.truth("H2 = C3^2:C2", true, isomorphic(lib.h[2].abstract(), reference::c3sq_c2()));
  r.truth("H3 = C3^2:C4", true, isomorphic(lib.h[3].abstract(), reference::c3sq_c4()));
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      r.truth("H" + std::to_string(i) + " normal in H" + std::to_string(j), !(i == 3 && j == 5),
              is_normal_in(lib.h[j], lib.h[i]));
  const auto& tri = triangles();
  std::vector<ProjPoint> pts;
  for (const auto& t : tri) pts.insert(pts.end(), t.points.begin(), t.points.end());
  std::sort(pts.begin(), pts.end());
  r.equal("4 triangles", 4, static_cast<std::int64_t>(tri.size()));
  r.equal("12 distinct triangle points",  12,
          static_cast<std::int64_t>(std::unique(pts.begin(), pts.end()) - pts.begin()));
  bool non_collinear = true;
  for (const auto& t : tri) non_collinear = non_collinear && !collinear(t.points[0], t.points[1], t.points[2]);
  r.truth("no triangle is collinear", true, non_collinear);
  std::int64_t lines = 0, good = 0;
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (std::size_t b = a + 1; b < tri.size(); ++b)
      for (const auto& p : tri[a].points)
        for (const auto& q : tri[b].points) {
          ++lines;
          const ProjLine l = ProjLine::through(p, q);
          bool ok = true;
          for (const auto& t : tri) {
            int hits = 0;
            for (const auto& x : t.points) hits += l.contains(x) ? 1 : 0;
            ok = ok && hits == 1;
          }
          good += ok ? 1 : 0;
        }
  r.equal("cross-triangle lines", 54, lines);
  r.equal("cross-triangle lines meeting every triangle once", 54, good);
  std::int64_t general = 0, configs = 0;
  for (std::size_t a = 0; a < tri.size(); ++a)
    for (std::size_t b = 0; b < tri.size(); ++b) {
      if (a == b) continue;
      for (const auto& p : tri[b].points) {
        ++configs;
        const auto& t = tri[a].points;
        general += (!collinear(t[0], t[1], p) && !collinear(t[0], t[2], p) && !collinear(t[1], t[2], p))
                       ? 1
                       : 0;
      }
    }
  r.equal("triangle plus outside point in general position", configs, general);
  r.truth("H5 acts on the triangles as A4", true,
          isomorphic(triangle_action(lib.h[5]), reference::alternating4()));
  r.truth("H4 acts on the triangles as the Klein group", true,
          isomorphic(h4_klein_action(), reference::klein()));
}

void lemma_checks(Recorder& r) {
  const auto& lib = hessian();
  // centralizers of diag(alpha, beta, 1) inside diagonal C_m^2 : S3
  const std::vector<std::array<std::int64_t, 3>> samples = {
      {3, 1, 2}, {3, 2, 1}, {4, 1, 3}, {5, 1, 2}, {6, 1, 2}, {6, 2, 4}, {4, 1, 2}, {12, 4, 8}};
  for (const auto& [m, i, j] : samples) {
    const ProjGroup amb = ProjGroup::closure(
        {ProjMat::diag(z(m), 1, 1), ProjMat::diag(1, z(m), 1), lib.m[1], lib.m[2]});
    const ProjMat x = ProjMat::diag(z(m, i), z(m, j), 1);
    const ProjGroup c = centralizer(amb, x);
    bool diagonal = true;
    for (const auto& e : c.elements()) diagonal = diagonal && e.is_diagonal();
    const CycNum a = z(m, i), b = z(m, j);
    const bool special = (a == z(3, 1) && b == z(3, 2)) || (a == z(3, 2) && b == z(3, 1));
    const std::string name = "centralizer of diag(z" + std::to_string(m) + "^" + std::to_string(i) +
                             ", z" + std::to_string(m) + "^" + std::to_string(j) + ", 1)";
    r.equal(name + " order", special ? 3 * m * m : m * m, static_cast<std::int64_t>(c.order()));
    r.truth(name + " is diagonal", !special, diagonal);
  }
  r.truth("H1 diagonalizable", false, diagonalize_abelian(lib.h[1]).diagonalizable);
  r.truth("normalizer_in(H5,H1) = H5", true, normalizer_in(lib.h[5], lib.h[1]).order() == 216);
  const ProjGroup n3 = normalizer_in(lib.h[5], lib.h[3]);
  r.truth("normalizer_in(H5,H3) = H4", true,
          n3.order() == 72 && lib.h[4].indices_of(n3).size() == 72);
  const ProjMat m7 = planemod::m7();
  const ProjMat m1 = lib.m[1];
  r.equal("proj_order(M7)", 7, proj_order(m7));
  const ProjGroup g21 = ProjGroup::closure({m7, m1});
  r.equal("|<M7, M1>|", 21, static_cast<std::int64_t>(g21.order()));
  r.equal("Sylow-7 count in <M7, M1>", 1, sylow_count(g21, 7));
  r.equal("centralizer of M7 in <M7, M1>", 7, static_cast<std::int64_t>(centralizer(g21, m7).order()));
  r.truth("M1 M7 M1^-1 = M7^4 projectively", true, m1 * m7 * m1.inverse() == m7.pow(4));
  r.truth("M1^-1 M7 M1 = M7^2", true, m1.inverse() * m7 * m1 == m7.pow(2));
  r.truth("C2 = <diag(-1,-1,1)> has presentation a=1 n=2 d=1", true, [] {
    for (const auto& p : abelian_presentations(ProjGroup::closure({ProjMat::diag(-1, -1, 1)})))
      if (p.a == 1 && p.n == 2 && p.d == 1) return true;
    return false;
  }());
}

void torsor_checks(Recorder& r) {
  const ReferenceExtension e = e_group();
  r.equal("|E| = 27", 27, e.e.size());
  const GroupFingerprint f = fingerprint(e.e);
  r.truth("E abelian", false, f.abelian);
  r.truth("E has exponent 3", true, f.order_histogram.size() == 2 && f.order_histogram.count(3));
  r.equal("|Z(E)| = 3", 3, static_cast<std::int64_t>(f.center_order));
  r.truth("E' = Z(E)", true, e.e.derived_subgroup() == e.e.center());
  r.truth("E splits over A", false, has_complement(e));
  for (std::int64_t b = 1; b <= 3; ++b)
    r.truth("E_{+1} with b=" + std::to_string(b) + " has an abelian subgroup onto C2^2", false,
            abelian_surjects(e_pm(b, 1)));
  r.truth("E_{-1} with b=1 has an abelian subgroup onto C2^2", false, abelian_surjects(e_pm(1, -1)));
  r.truth("c1-3n family (a=1,n=3,d=2) lift_exists = false", false,
          commuting_lift_exists(build_family_c1_3n(1, 3, 2)));
  r.truth("c1-3a family (a=3,n=1,d=2) lift_exists = false", false,
          commuting_lift_exists(build_family_c1_3a(3, 1, 2)));
  r.truth("c1-3a fixed elements lie in C3^3/Delta", true, fixed_elements_in_3_torsion(3, 1, 2));
  r.truth("c1-3a abelian surjection", false,
          abelian_surjection_exists(build_family_c1_3a(3, 1, 2)));
  r.truth("c2 family (a=1,b=1,n=1,d=1) lift_exists = false", false,
          commuting_lift_exists(build_family_c2(1, 1, 1, 1)));
  const ExtensionProblem h2 = build_family_h2();
  r.truth("H2 family lift_exists = false", false, commuting_lift_exists(h2));
  r.truth("direct product C3^2 x C3 lift_exists = true", true,
          commuting_lift_exists(direct_product_control(reference::abelian({3, 3}), reference::cyclic(3))));
  r.truth("H4 over itself lift_exists = true", true, commuting_lift_exists(trivial_quotient(h2)));
  r.equal("h1_c2(Klein, swap)", 1, static_cast<std::int64_t>(h1_c2(klein_swap()).size()));
  r.equal("h1_c2(C2, trivial)", 2, static_cast<std::int64_t>(h1_c2(c2_trivial()).size()));
}

void verdict_checks(Recorder& r) {
  const auto& lib = hessian();
  const FieldProfile q = FieldProfile::parse("Q"), q12 = FieldProfile::parse("Q(zeta12)");
  r.equal("criticality(trivial)", "neither", to_string(criticality(ProjGroup(), q).status));
  r.equal("criticality(H1)", "neither", to_string(criticality(lib.h[1], q).status));
  r.equal("criticality(H2)", "critical", to_string(criticality(lib.h[2], q).status));
  r.equal("criticality(H3) over Q", "critical", to_string(criticality(lib.h[3], q).status));
  r.equal("criticality(H3) with zeta12", "lucky", to_string(criticality(lib.h[3], q12).status));
  r.equal("criticality(H4)", "lucky", to_string(criticality(lib.h[4], q).status));
  r.equal("criticality(H5)", "lucky", to_string(criticality(lib.h[5], q).status));
  r.equal("quartic obstruction shapes", "C2,C2xC4,C4", [] {
    std::string s;
    for (const auto& n : obstruction_groups(4)) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  CurveQuery c5;
  c5.degree = 5;
  c5.group = lib.h[5];
  r.equal("curve d=5", "DESCENDS_TO_P2", to_string(verdict_curve(c5).outcome));
  CurveQuery c4;
  c4.degree = 4;
  c4.group = ProjGroup::closure({ProjMat::diag(-1, -1, 1)});
  r.equal("curve d=4, aut C2", "POSSIBLE_OBSTRUCTION", to_string(verdict_curve(c4).outcome));
  r.equal("quartic aut C2", "POSSIBLE_OBSTRUCTION",
          to_string(verdict_quartic(fingerprint(reference::cyclic(2))).outcome));
  r.equal("quartic aut S3", "DESCENDS_TO_P2",
          to_string(verdict_quartic(fingerprint(reference::symmetric3())).outcome));
  r.equal("sextic aut C6", "POSSIBLE_OBSTRUCTION",
          to_string(verdict_sextic(fingerprint(reference::cyclic(6)), q).outcome));
  r.equal("sextic aut S3", "DESCENDS_TO_P2",
          to_string(verdict_sextic(fingerprint(reference::symmetric3()), q).outcome));
  r.equal("sextic aut C3^2:C4 with zeta12", "DESCENDS_TO_P2",
          to_string(verdict_sextic(fingerprint(reference::c3sq_c4()), q12).outcome));
  r.equal("cycle H2", "POSSIBLE_OBSTRUCTION", to_string(verdict_cycle(lib.h[2], q).outcome));
  r.equal("cycle H5", "DESCENDS_TO_P2", to_string(verdict_cycle(lib.h[5], q).outcome));
  r.equal("cycle H1", "DESCENDS_TO_BRAUER_SEVERI", to_string(verdict_cycle(lib.h[1], q).outcome));
  r.equal("type R 1/7(1,3)", "R", to_string(type_r_cyclic({7, 1, 3})));
  r.equal("type R 1/1(0,0)", "R", to_string(type_r_cyclic({1, 0, 0})));
  r.equal("type R 1/8(1,3)", "Unknown", to_string(type_r_cyclic({8, 1, 3})));
  r.equal("R2 D3", "R2", to_string(r2_group_lookup(reference::symmetric3()).type));
  r.equal("R2 C7", "R2", to_string(r2_group_lookup(reference::cyclic(7)).type));
  r.equal("R2 Q8", "Unknown", to_string(r2_group_lookup(reference::quaternion()).type));
  const ParameterizationReport p = compare_parameterizations(200);
  r.equal("clause 2 parameterization mismatches for an <= 200", 0, p.mismatches);
}

}  // namespace

RunReport run_verify(const std::string& scope) {
  RunReport report;
  report.command = "verify " + scope;
  Recorder r(report);
  const bool all = scope == "all";
  if (!all && scope != "hessian" && scope != "lemmas" && scope != "torsor" && scope != "verdicts")
    raise(Errc::InvalidArgument, "unknown verify scope " + scope);
  if (all || scope == "hessian") r.guard("hessian", [&] { hessian_checks(r); });
  if (all || scope == "lemmas") r.guard("lemmas", [&] { lemma_checks(r); });
  if (all || scope == "torsor") r.guard("torsor", [&] { torsor_checks(r); });
  if (all || scope == "verdicts") r.guard("verdicts", [&] { verdict_checks(r); });
  return report;
}

RunReport run_hessian_verify() {
  RunReport report;
  report.command = "hessian verify";
  Recorder r(report);
  r.guard("hessian", [&] {
    const auto& lib = hessian();
    const std::array<std::int64_t, 6> orders{3, 9, 18, 36, 72, 216};
    for (int i = 1; i <= 5; ++i)
      r.equal("|H" + std::to_string(i) + "| = " + std::to_string(orders[i]), orders[i],
              static_cast<std::int64_t>(lib.h[i].order()));
    for (const auto& c : galois_identity_check()) r.truth(c.statement, true, c.holds);
  });
  return report;
}

}  // namespace planemod
