#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planemod/classify.hpp"

namespace planemod {

enum class Outcome {
  DescendsToP2,
  DescendsToBrauerSeveri,
  PossibleObstruction,
  OutOfTheoremScope,
};
/// DESCENDS_TO_P2 and so on.
std::string to_string(Outcome o);

/// POSSIBLE_OBSTRUCTION only says the theorem does not rule an obstruction
/// out; it never claims one exists for a specific curve.
struct Verdict {
  Outcome outcome = Outcome::OutOfTheoremScope;
  std::string rule;
  std::vector<std::string> constraints;  // divisibility facts used
  std::vector<std::string> notes;        // annotations such as realizability flags
  std::string to_json() const;
};

/// The automorphism group is given either as a matrix group or only through
/// its fingerprint; exactly one of the two must be set.
struct CurveQuery {
  std::int64_t degree = 4;
  std::optional<ProjGroup> group;
  std::optional<GroupFingerprint> fingerprint;
  FieldProfile field;
};

/// Raises DegreeDivisibleBy3 and InvalidArgument (degree < 3, no group).
Verdict verdict_curve(const CurveQuery& q);
Verdict verdict_quartic(const GroupFingerprint& aut);
Verdict verdict_sextic(const GroupFingerprint& aut, const FieldProfile& field);
Verdict verdict_cycle(const ProjGroup& g, const FieldProfile& field);

/// The obstruction shape C_a x C_{aN}: N even and e = +-1 modulo every prime
/// power dividing N, read off a presentation with n = N and d = e.
bool obstruction_form(const AbelianPresentation& p);
/// aN | degree when a != 1, 2N | degree (degree - 2) when a == 1.
bool obstruction_divisibility(std::int64_t a, std::int64_t big_n, std::int64_t degree);

/// Names of the abelian groups C_a x C_{aN} that have the obstruction form and
/// meet the divisibility constraints at `degree`, found by building every
/// template group and fingerprinting it.
std::vector<std::string> obstruction_groups(std::int64_t degree);

/// Reference groups excluded from the sextic statement, by name.
std::vector<std::pair<std::string, AbstractGroup>> sextic_exceptions();

/// 1/m(i, j).
struct CyclicSingularity {
  std::int64_t m = 1;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::string str() const;
};

/// NotNecessarilyR is part of the vocabulary but none of the encoded rules
/// produces it: anything the rules do not cover is Unknown.
enum class RType { R, NotNecessarilyR, Unknown };
std::string to_string(RType r);
RType type_r_cyclic(const CyclicSingularity& s);

enum class R2Type { R2, Unknown };
std::string to_string(R2Type r);
struct R2Lookup {
  R2Type type = R2Type::Unknown;
  std::string reason;
};
R2Lookup r2_group_lookup(const AbstractGroup& g);

/// Brute-force comparison of the two shapes of clause 2 for all a * n <= bound:
/// e = +-1 mod every prime power dividing 2n on C_a x C_{2an}, against
/// N = 2^b n' with n' odd, d = +-1 mod 2^b and d^2 = 1 mod n'.
struct ParameterizationReport {
  std::int64_t bound = 0;
  std::int64_t triples = 0;     // (a, N, e) checked
  std::int64_t mismatches = 0;  // with b >= 1
  std::int64_t mismatches_b0 = 0;  // when b = 0 is also admitted
  std::vector<std::string> examples;  // first few mismatches
};
ParameterizationReport compare_parameterizations(std::int64_t bound);

}  // namespace planemod
