#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dbac/dynamics.hpp"

namespace dbac {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;
  std::vector<std::string> failures;  // first few, for diagnostics

  void fail(std::string message);
};

struct VerifyOptions {
  int max_side = 6;    // side sizes swept by the brute-force checks
  int max_n = 11;      // brute-force cases with more nodes are skipped
  int star_max_side = 5;
  int equal_sides_max = 6;
  int sequence_max = 18;
  int closed_form_max_p = 40;
  int bound_max_p = 24;
  int special_max_N = 36;
  int table_max = 10;
  int observation_max_N = 24;
  EngineOptions engine{};
};

// Analytic per-period attractor counts equal the brute-force spectrum for
// every sign combination.
CheckResult check_oracle_equivalence(const VerifyOptions& opts);
// counts[1] equals the number of positive sides.
CheckResult check_fixed_points(const VerifyOptions& opts);
// Exact periods p > 1 divide positive sides, miss negative sides, and divide
// l + r when both sides share a sign.
CheckResult check_period_divisibility(const VerifyOptions& opts);
// Disjunctive and conjunctive instances have equal graph fingerprints.
CheckResult check_star_invariance(const VerifyOptions& opts);
// Same-sign D_{l,l} has the spectrum of the isolated circuit of size l.
CheckResult check_equal_sides(const VerifyOptions& opts);
// lucas and perrin match circular-word enumeration.
CheckResult check_sequence_identities(const VerifyOptions& opts);
// Real closed forms match L(p/Delta_p)^Delta_p within relative 1e-9.
CheckResult check_closed_forms(const VerifyOptions& opts);
// bound_check over all admissible (p, Delta_p) and C_{p,p/2} = 3^{p/2}.
CheckResult check_bounds(const VerifyOptions& opts);
// Prime-K simplification agrees with the general doubly negative total.
CheckResult check_negneg_special(const VerifyOptions& opts);
// Column/gcd constancy of the np grid and (N, Delta) constancy of the nn grid.
CheckResult check_table_structure(const VerifyOptions& opts);
// The three empirical maximality observations hold up to the given N.
CheckResult check_maximality(const VerifyOptions& opts);

struct NamedCheck {
  std::string id;
  std::function<CheckResult(const VerifyOptions&)> run;
};

const std::vector<NamedCheck>& all_checks();

}  // namespace dbac
