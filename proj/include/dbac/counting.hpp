#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbac/bigint.hpp"
#include "dbac/core_model.hpp"
#include "dbac/dynamics.hpp"

namespace dbac {

int mobius(long m);
long totient(long m);
std::vector<long> divisors(long m);  // ascending

struct GoldenConstants {
  static constexpr double phi = 1.6180339887498948482;
  static constexpr double phi_bar = 1.0 - phi;
  static constexpr double plastic = 1.3247179572447460260;  // real root of x^3 - x - 1
};

struct PeriodContext {
  int p = 1;
  int l = 0;
  int r = 0;
  Sign left = Sign::negative;
  Sign right = Sign::positive;
  int N = 0;        // l + r
  int d = 0;        // stride
  int k = 0;        // l div p
  int q = 0;        // r div p
  int Delta = 0;    // gcd(l, r)
  int Delta_p = 0;  // gcd(d, p)
  bool admissible = false;
};

PeriodContext period_context(const DbacSpec& spec, int p);

// C_{p,Delta_p} for a negative-positive DBAC: L(p/Delta_p)^Delta_p.
BigInt config_count_negpos(int p, int delta_p);
// C_{p,Delta_p} for a doubly negative DBAC: P(p/Delta_p)^Delta_p.
BigInt config_count_negneg(int p, int delta_p);

// A_{p,Delta_p} for a negative-positive DBAC, Delta_p = gcd(l, p).
BigInt attractor_count_negpos(int p, int delta_p);

// Configurations of exact period p and attractors of period p, by Möbius
// inversion. Both are zero when p is not an attractor period of the
// instance, except the fixed point convention C*_1 = A_1 = number of
// positive sides.
BigInt exact_config_count(int p, const DbacSpec& spec);
BigInt attractor_count(int p, const DbacSpec& spec);

// Totient-weighted total for an instance with at least one negative side.
BigInt total_attractors(const DbacSpec& spec);

// T^=_{N,Delta} of a doubly negative DBAC.
BigInt total_negneg(int N, int Delta);
// The same total when K = N / Delta is prime.
BigInt total_negneg_special(int N, int Delta);

// |phi_bar|^p * ((phi^2)^(p/Delta_p) -+ 1)^Delta_p.
double closed_form_config_count(int p, int delta_p);

// F_p(a) = sum_{d|p} mu(p/d) a^d
double f_poly(double a, int p);
BigInt f_poly(const BigInt& a, int p);

// A_p^+ = F_p(2)/p and T_n^+ = sum_{p|n} A_p^+ for an isolated positive circuit.
BigInt positive_circuit_attractor_count(int p);
BigInt positive_circuit_total(int n);

// C_{p,Delta_p} <= 3^{p/2} and, for p != 2, A_{p,Delta_p} < 2 (sqrt3/2)^p A_p^+;
// for p == 2 requires A_{2,Delta_2} == A_2^+.
bool bound_check(int p, int delta_p);

enum class CountMethod { analytic, brute_force };

struct PeriodCounts {
  int p = 0;
  BigInt C;        // configurations of period p
  BigInt C_exact;  // configurations of exact period p
  BigInt A;        // attractors of period p
};

struct CountReport {
  int l = 0;
  int r = 0;
  std::string signs;
  CountMethod method = CountMethod::analytic;
  std::vector<PeriodCounts> periods;  // ascending p
  BigInt total;

  BigInt attractors_of_period(int p) const;
};

CountReport analytic_report(const DbacSpec& spec);
CountReport brute_force_report(const DbacSpec& spec, const EngineOptions& opts = {});

// Same total and same nonzero A_p for every p.
bool same_counts(const CountReport& a, const CountReport& b);

// {"l","r","signs","method","periods":[{"p","C","C_exact","A"}],"total"}
std::string to_json(const CountReport& report);

struct Counterexample {
  int observation = 0;  // 1, 2 or 3
  std::string detail;
};

struct ObservationReport {
  int N_max = 0;
  std::uint64_t cases_checked = 0;
  std::vector<Counterexample> counterexamples;
};

// Checks, for l, r >= 2 and l + r <= N_max:
//   1. for fixed l, T^=(l, r) over 2 <= r <= l peaks at r = l;
//   2. for N not a multiple of 3, T^=_{N,Delta} peaks at the largest
//      realizable Delta;
//   3. for N a multiple of 3, T^=_{N,Delta} peaks at Delta = N/3.
// Ties count as maximal. Unbounded r is not checked: T^= grows with l + r.
ObservationReport maximality_observations(int N_max);

}  // namespace dbac
