#pragma once

#include <string>
#include <vector>

#include "planemod/groups.hpp"

namespace planemod {

/// Reference groups by name: C<n>, C<a>xC<b>, D<n> (order 2n), S3, Klein,
/// C2^2, C3^2, Q8, A4, SL(2,3), C3^2:C2, C3^2:C4. Raises InvalidArgument.
AbstractGroup group_by_name(const std::string& name);
/// A readable name: a known reference up to isomorphism, the invariant
/// factors of an abelian group, or "order-<n>".
std::string group_name(const AbstractGroup& g);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> results;

  int exit_status() const;  // 0 iff every check passed
  std::string to_json() const;
  std::string to_text() const;  // one "name: pass|FAIL" line per check
};

/// Scopes: all, hessian, lemmas, torsor, verdicts. Raises InvalidArgument.
RunReport run_verify(const std::string& scope);
/// The Hessian orders and the six Galois identities.
RunReport run_hessian_verify();

}  // namespace planemod
