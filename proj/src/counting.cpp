#include "dbac/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

#include "dbac/words.hpp"

namespace dbac {

namespace {

using boost::multiprecision::pow;

void check_positive(long m, const char* what) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, std::string(what) + " needs a positive argument");
}

void check_pair(int p, int delta_p) {
  if (p < 1 || delta_p < 1 || p % delta_p != 0) {
    throw Error(ErrorCode::inadmissible_context,
                "Delta_p = " + std::to_string(delta_p) + " does not divide p = " + std::to_string(p));
  }
}

BigInt exact_quotient(const BigInt& num, long den, const char* what) {
  if (num % den != 0) {
    throw Error(ErrorCode::internal_inconsistency,
                std::string(what) + ": " + num.str() + " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

enum class Combo { pp, np, pn, nn };

Combo combo_of(const DbacSpec& spec) {
  const bool ln = spec.left_sign() == Sign::negative;
  const bool rn = spec.right_sign() == Sign::negative;
  if (ln && rn) return Combo::nn;
  if (ln) return Combo::np;
  if (rn) return Combo::pn;
  return Combo::pp;
}

// Configurations of period q (not necessarily exact). Valid for every q that
// divides an attractor period of the instance.
BigInt periodic_count(const DbacSpec& spec, int q) {
  const int l = spec.l();
  const int r = spec.r();
  switch (combo_of(spec)) {
    case Combo::np: {
      const int g = std::gcd(l, q);
      return pow(lucas(q / g), static_cast<unsigned>(g));
    }
    case Combo::pn: {
      const int g = std::gcd(r, q);
      return pow(lucas(q / g), static_cast<unsigned>(g));
    }
    case Combo::nn: {
      const int g = std::gcd(std::gcd(l, r), q);
      return pow(perrin(q / g), static_cast<unsigned>(g));
    }
    case Combo::pp:
      return pow(BigInt(2), static_cast<unsigned>(std::gcd(std::gcd(l, r), q)));
  }
  return 0;
}

BigInt exact_by_inversion(int p, const auto& count_of_period) {
  BigInt sum = 0;
  for (long q : divisors(p)) {
    const int mu = mobius(p / q);
    if (mu == 0) continue;
    const BigInt c = count_of_period(static_cast<int>(q));
    if (mu > 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(v);
  }
  return v.str();
}

}  // namespace

int mobius(long m) {
  check_positive(m, "mobius");
  int result = 1;
  for (long f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    m /= f;
    if (m % f == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

long totient(long m) {
  check_positive(m, "totient");
  long result = m;
  for (long f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    result -= result / f;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors(long m) {
  check_positive(m, "divisors");
  std::vector<long> small, large;
  for (long f = 1; f * f <= m; ++f) {
    if (m % f != 0) continue;
    small.push_back(f);
    if (f != m / f) large.push_back(m / f);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

PeriodContext period_context(const DbacSpec& spec, int p) {
  if (p < 1) throw Error(ErrorCode::invalid_argument, "period must be positive");
  PeriodContext c;
  c.p = p;
  c.l = spec.l();
  c.r = spec.r();
  c.left = spec.left_sign();
  c.right = spec.right_sign();
  c.N = c.l + c.r;
  c.k = c.l / p;
  c.q = c.r / p;
  c.Delta = std::gcd(c.l, c.r);
  const bool p_divides_l = c.l % p == 0;
  const bool p_divides_r = c.r % p == 0;
  switch (combo_of(spec)) {
    case Combo::np:
      c.d = c.l % p;
      c.admissible = p == 1 || (p_divides_r && !p_divides_l);
      break;
    case Combo::pn:
      c.d = c.r % p;
      c.admissible = p == 1 || (p_divides_l && !p_divides_r);
      break;
    case Combo::nn:
      c.d = std::min(c.l % p, c.r % p);
      c.admissible = c.N % p == 0 && !p_divides_l && !p_divides_r;
      break;
    case Combo::pp:
      c.d = c.l % p;
      c.admissible = p_divides_l && p_divides_r;
      break;
  }
  c.Delta_p = std::gcd(c.d, p);
  return c;
}

BigInt config_count_negpos(int p, int delta_p) {
  check_pair(p, delta_p);
  return pow(lucas(p / delta_p), static_cast<unsigned>(delta_p));
}

BigInt config_count_negneg(int p, int delta_p) {
  check_pair(p, delta_p);
  return pow(perrin(p / delta_p), static_cast<unsigned>(delta_p));
}

BigInt attractor_count_negpos(int p, int delta_p) {
  check_pair(p, delta_p);
  const BigInt exact = exact_by_inversion(p, [delta_p](int q) {
    const int g = std::gcd(delta_p, q);
    return pow(lucas(q / g), static_cast<unsigned>(g));
  });
  return exact_quotient(exact, p, "A_{p,Delta_p}");
}

BigInt exact_config_count(int p, const DbacSpec& spec) {
  const PeriodContext ctx = period_context(spec, p);
  if (!ctx.admissible) return 0;
  return exact_by_inversion(p, [&spec](int q) { return periodic_count(spec, q); });
}

BigInt attractor_count(int p, const DbacSpec& spec) {
  if (combo_of(spec) == Combo::pp) {
    return period_context(spec, p).admissible ? positive_circuit_attractor_count(p) : BigInt(0);
  }
  return exact_quotient(exact_config_count(p, spec), p, "A_p");
}

BigInt total_attractors(const DbacSpec& spec) {
  const Combo combo = combo_of(spec);
  if (combo == Combo::pp) {
    throw Error(ErrorCode::unsupported_sign_combo,
                "doubly positive totals come from positive_circuit_total(gcd(l, r))");
  }
  if (combo == Combo::nn) return total_negneg(spec.l() + spec.r(), std::gcd(spec.l(), spec.r()));

  // The p = 1 term (and every q dividing the negative side) counts the
  // unique fixed point once per divisor, so the sum runs over all q | s.
  const int s = combo == Combo::np ? spec.r() : spec.l();
  BigInt sum = 0;
  for (long q : divisors(s)) sum += totient(s / q) * periodic_count(spec, static_cast<int>(q));
  return exact_quotient(sum, s, "T^{+-}");
}

BigInt total_negneg(int N, int Delta) {
  if (N < 1 || Delta < 1 || N % Delta != 0) {
    throw Error(ErrorCode::invalid_argument, "Delta must divide N");
  }
  BigInt sum = 0;
  for (long p : divisors(N)) {
    const int g = std::gcd(Delta, static_cast<int>(p));
    sum += totient(N / p) * pow(perrin(static_cast<int>(p) / g), static_cast<unsigned>(g));
  }
  return exact_quotient(sum, N, "T^=");
}

BigInt total_negneg_special(int N, int Delta) {
  if (N < 1 || Delta < 1 || N % Delta != 0) {
    throw Error(ErrorCode::invalid_argument, "Delta must divide N");
  }
  const int K = N / Delta;
  if (K < 2 || divisors(K).size() != 2) {
    throw Error(ErrorCode::invalid_argument, "K = N / Delta = " + std::to_string(K) + " is not prime");
  }
  const BigInt base = perrin(K);
  BigInt sum = 0;
  for (long q : divisors(Delta)) {
    if (std::gcd(q, static_cast<long>(K)) != 1) continue;
    sum += totient(q) * pow(base, static_cast<unsigned>(Delta / q));
  }
  return exact_quotient(sum, N, "T^=_{N,Delta}");
}

double closed_form_config_count(int p, int delta_p) {
  check_pair(p, delta_p);
  using real = long double;
  const real phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  const int t = p / delta_p;
  const real sign = t % 2 == 0 ? 1.0L : -1.0L;
  const real inner = std::pow(phi * phi, static_cast<real>(t)) + sign;
  return static_cast<double>(std::pow(phi - 1.0L, static_cast<real>(p)) *
                             std::pow(inner, static_cast<real>(delta_p)));
}

double f_poly(double a, int p) {
  check_positive(p, "f_poly");
  double sum = 0.0;
  for (long d : divisors(p)) sum += mobius(p / d) * std::pow(a, static_cast<double>(d));
  return sum;
}

BigInt f_poly(const BigInt& a, int p) {
  check_positive(p, "f_poly");
  BigInt sum = 0;
  for (long d : divisors(p)) sum += mobius(p / d) * pow(a, static_cast<unsigned>(d));
  return sum;
}

BigInt positive_circuit_attractor_count(int p) {
  return exact_quotient(f_poly(BigInt(2), p), p, "A_p^+");
}

BigInt positive_circuit_total(int n) {
  check_positive(n, "positive_circuit_total");
  BigInt sum = 0;
  for (long p : divisors(n)) sum += positive_circuit_attractor_count(static_cast<int>(p));
  return sum;
}

bool bound_check(int p, int delta_p) {
  check_pair(p, delta_p);
  const BigInt configs = config_count_negpos(p, delta_p);
  const BigInt three_p = pow(BigInt(3), static_cast<unsigned>(p));
  if (configs * configs > three_p) return false;

  const BigInt a = attractor_count_negpos(p, delta_p);
  const BigInt a_plus = positive_circuit_attractor_count(p);
  if (p == 2) return a == a_plus;
  // A < 2 (sqrt3 / 2)^p A+  <=>  (A 2^(p-1))^2 < 3^p (A+)^2
  const BigInt lhs = a * pow(BigInt(2), static_cast<unsigned>(p - 1));
  return lhs * lhs < three_p * a_plus * a_plus;
}

BigInt CountReport::attractors_of_period(int p) const {
  for (const auto& pc : periods) {
    if (pc.p == p) return pc.A;
  }
  return 0;
}

CountReport analytic_report(const DbacSpec& spec) {
  CountReport report;
  report.l = spec.l();
  report.r = spec.r();
  report.signs = spec.signs();
  report.method = CountMethod::analytic;

  const Combo combo = combo_of(spec);
  int span = std::gcd(spec.l(), spec.r());
  if (combo == Combo::np) span = spec.r();
  if (combo == Combo::pn) span = spec.l();
  if (combo == Combo::nn) span = spec.l() + spec.r();
  BigInt sum = 0;
  for (long p : divisors(span)) {
    const int period = static_cast<int>(p);
    if (!period_context(spec, period).admissible) continue;
    PeriodCounts pc;
    pc.p = period;
    pc.C = periodic_count(spec, period);
    pc.C_exact = exact_config_count(period, spec);
    pc.A = attractor_count(period, spec);
    sum += pc.A;
    report.periods.push_back(std::move(pc));
  }
  report.total = combo == Combo::pp ? positive_circuit_total(std::gcd(spec.l(), spec.r()))
                                    : total_attractors(spec);
  if (report.total != sum) {
    throw Error(ErrorCode::internal_inconsistency,
                "totient total " + report.total.str() + " differs from sum of A_p " + sum.str());
  }
  return report;
}

CountReport brute_force_report(const DbacSpec& spec, const EngineOptions& opts) {
  const AttractorSpectrum spectrum = attractor_spectrum(spec, opts);
  CountReport report;
  report.l = spec.l();
  report.r = spec.r();
  report.signs = spec.signs();
  report.method = CountMethod::brute_force;
  for (const auto& [p, count] : spectrum.counts) {
    PeriodCounts pc;
    pc.p = p;
    pc.A = count;
    pc.C_exact = BigInt(count) * p;
    for (const auto& [q, c] : spectrum.counts) {
      if (p % q == 0) pc.C += BigInt(c) * q;
    }
    report.periods.push_back(std::move(pc));
  }
  report.total = spectrum.total();
  return report;
}

bool same_counts(const CountReport& a, const CountReport& b) {
  if (a.total != b.total) return false;
  std::set<int> periods;
  for (const auto& pc : a.periods) periods.insert(pc.p);
  for (const auto& pc : b.periods) periods.insert(pc.p);
  return std::all_of(periods.begin(), periods.end(), [&](int p) {
    return a.attractors_of_period(p) == b.attractors_of_period(p);
  });
}

std::string to_json(const CountReport& report) {
  nlohmann::ordered_json j;
  j["l"] = report.l;
  j["r"] = report.r;
  j["signs"] = report.signs;
  j["method"] = report.method == CountMethod::analytic ? "analytic" : "brute-force";
  j["periods"] = nlohmann::ordered_json::array();
  for (const auto& pc : report.periods) {
    j["periods"].push_back({{"p", pc.p},
                            {"C", big_to_json(pc.C)},
                            {"C_exact", big_to_json(pc.C_exact)},
                            {"A", big_to_json(pc.A)}});
  }
  j["total"] = big_to_json(report.total);
  return j.dump();
}

ObservationReport maximality_observations(int N_max) {
  if (N_max < 4) throw Error(ErrorCode::invalid_argument, "N_max must be at least 4");
  ObservationReport report;
  report.N_max = N_max;
  auto total = [](int l, int r) { return total_negneg(l + r, std::gcd(l, r)); };

  for (int l = 2; 2 * l <= N_max; ++l) {
    const BigInt diagonal = total(l, l);
    for (int r = 2; r <= l; ++r) {
      ++report.cases_checked;
      const BigInt t = total(l, r);
      if (t > diagonal) {
        report.counterexamples.push_back(
            {1, "l=" + std::to_string(l) + ": T(l," + std::to_string(r) + ")=" + t.str() +
                    " > T(l,l)=" + diagonal.str()});
      }
    }
  }

  for (int N = 4; N <= N_max; ++N) {
    std::map<int, BigInt> by_delta;
    for (int l = 2; l <= N - 2; ++l) {
      const int delta = std::gcd(l, N - l);
      by_delta.emplace(delta, total_negneg(N, delta));
    }
    const bool multiple_of_3 = N % 3 == 0;
    const int target = multiple_of_3 ? N / 3 : by_delta.rbegin()->first;
    const auto it = by_delta.find(target);
    if (it == by_delta.end()) continue;
    for (const auto& [delta, t] : by_delta) {
      ++report.cases_checked;
      if (t > it->second) {
        report.counterexamples.push_back(
            {multiple_of_3 ? 3 : 2, "N=" + std::to_string(N) + ": T_{N," + std::to_string(delta) +
                                        "}=" + t.str() + " > T_{N," + std::to_string(target) +
                                        "}=" + it->second.str()});
      }
    }
  }
  return report;
}

}  // namespace dbac
