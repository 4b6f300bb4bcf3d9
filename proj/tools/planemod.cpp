#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planemod/classify.hpp"
#include "planemod/descent.hpp"
#include "planemod/torsor.hpp"
#include "planemod/verify.hpp"

using namespace planemod;
using nlohmann::json;

namespace {

bool g_pretty = false;
std::size_t g_torsor_ceiling = kDefaultTorsorCeiling;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ProjGroup load_group(const std::string& path) { return ProjGroup::from_json(read_file(path)); }

/// Decimal integers only.
std::int64_t decimal(const std::string& s) {
  if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos ||
      s.find('-', 1) != std::string::npos || s.size() > 18)
    raise(Errc::InvalidArgument, "not a decimal integer: " + s);
  return std::stoll(s);
}

std::vector<std::int64_t> decimal_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(decimal(item));
  return out;
}

json criticality_json(const CriticalityVerdict& v) {
  json j{{"status", to_string(v.status)}, {"rule", v.rule}};
  if (v.witness) j["witness"] = v.witness->str();
  if (v.hessian) j["hessian"] = to_string(*v.hessian);
  if (v.status_if_b0) j["status_if_b0"] = to_string(*v.status_if_b0);
  return j;
}

void print_verdict(const Verdict& v) { emit(json::parse(v.to_json())); }

int print_report(const RunReport& r, bool as_json) {
  if (as_json)
    emit(json::parse(r.to_json()));
  else
    std::cout << r.to_text();
  return r.exit_status();
}

GroupFingerprint aut_fingerprint(const std::string& aut, const std::string& group) {
  if (!group.empty()) return fingerprint(load_group(group));
  if (aut.empty()) raise(Errc::InvalidArgument, "give --aut or --group");
  return fingerprint(group_by_name(aut));
}

json counterexample(const std::string& family, const std::string& params) {
  const std::vector<std::int64_t> p = params.empty() ? std::vector<std::int64_t>{} : decimal_list(params);
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      raise(Errc::InvalidArgument, family + " takes " + std::to_string(k) + " parameters");
  };
  ExtensionProblem e;
  if (family == "c1-3n") {
    need(3);
    e = build_family_c1_3n(p[0], p[1], p[2], g_torsor_ceiling);
  } else if (family == "c1-3a") {
    need(3);
    e = build_family_c1_3a(p[0], p[1], p[2], g_torsor_ceiling);
  } else if (family == "c2") {
    need(4);  // a,n,d,b
    e = build_family_c2(p[0], p[3], p[1], p[2], g_torsor_ceiling);
  } else if (family == "h2") {
    need(0);
    e = build_family_h2();
  } else {
    raise(Errc::InvalidArgument, "unknown family " + family);
  }
  return {{"family", e.family},
          {"order_N", e.n.size()},
          {"order_G", e.g.size()},
          {"quotient", group_name(e.q)},
          {"lift_exists", commuting_lift_exists(e)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subgroups of PGL_3, criticality and descent verdicts"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Indent JSON output");

  std::string group_file, field = "Q", aut, family, params, scope = "all";
  std::int64_t degree = 0;
  bool as_json = false;

  auto* classify = app.add_subcommand("classify", "Criticality of a matrix group");
  classify->add_option("--group", group_file, "Group JSON file")->required()->check(CLI::ExistingFile);
  classify->add_option("--field", field, "Q, Q(zeta12), R or C");

  auto* verdict = app.add_subcommand("verdict", "Descent verdicts");
  verdict->require_subcommand(1);
  auto* curve = verdict->add_subcommand("curve", "Plane curve of a given degree");
  curve->add_option("--degree", degree)->required();
  curve->add_option("--group", group_file)->check(CLI::ExistingFile);
  curve->add_option("--aut", aut, "Automorphism group by name");
  curve->add_option("--field", field);
  auto* quartic = verdict->add_subcommand("quartic", "Smooth plane quartic");
  quartic->add_option("--aut", aut);
  quartic->add_option("--group", group_file)->check(CLI::ExistingFile);
  auto* sextic = verdict->add_subcommand("sextic", "Smooth plane sextic");
  sextic->add_option("--aut", aut);
  sextic->add_option("--group", group_file)->check(CLI::ExistingFile);
  sextic->add_option("--field", field);
  auto* cycle = verdict->add_subcommand("cycle", "Cycles on the moduli stack");
  cycle->add_option("--group", group_file)->required()->check(CLI::ExistingFile);
  cycle->add_option("--field", field);
  for (auto* sub : {curve, quartic, sextic, cycle}) sub->add_flag("--pretty", g_pretty);

  auto* ce = app.add_subcommand("counterexample", "Build a torsor family and search for a lift");
  ce->add_option("--family", family, "c1-3n, c1-3a, c2 or h2")->required();
  ce->add_option("--params", params, "a,n,d for c1 families; a,n,d,b for c2");

  auto* hess = app.add_subcommand("hessian", "Hessian group checks");
  hess->require_subcommand(1);
  auto* hess_verify = hess->add_subcommand("verify", "Orders and Galois identities");
  hess_verify->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Replay the registered assertions");
  verify->add_option("scope", scope, "all, hessian, lemmas, torsor or verdicts")
      ->check(CLI::IsMember({"all", "hessian", "lemmas", "torsor", "verdicts"}));
  verify->add_flag("--json", as_json);

  for (auto* sub : {classify, ce, verify, hess_verify}) sub->add_flag("--pretty", g_pretty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("MODULI_CEILING")) {
      const std::int64_t c = decimal(env);
      if (c < 1) raise(Errc::InvalidArgument, "MODULI_CEILING must be positive");
      set_group_order_ceiling(static_cast<std::size_t>(c));
      g_torsor_ceiling = static_cast<std::size_t>(c);
    }
    if (*classify) {
      emit(criticality_json(criticality(load_group(group_file), FieldProfile::parse(field))));
    } else if (*curve) {
      CurveQuery q;
      q.degree = degree;
      q.field = FieldProfile::parse(field);
      if (!group_file.empty()) q.group = load_group(group_file);
      if (!aut.empty()) q.fingerprint = fingerprint(group_by_name(aut));
      print_verdict(verdict_curve(q));
    } else if (*quartic) {
      print_verdict(verdict_quartic(aut_fingerprint(aut, group_file)));
    } else if (*sextic) {
      print_verdict(verdict_sextic(aut_fingerprint(aut, group_file), FieldProfile::parse(field)));
    } else if (*cycle) {
      print_verdict(verdict_cycle(load_group(group_file), FieldProfile::parse(field)));
    } else if (*ce) {
      emit(counterexample(family, params));
    } else if (*hess_verify) {
      return print_report(run_hessian_verify(), as_json);
    } else if (*verify) {
      return print_report(run_verify(scope), as_json);
    }
  } catch (const MathError& e) {
    emit({{"error", std::string(errc_name(e.code()))}, {"message", e.what()}});
    return 1;
  }
  return 0;
}
