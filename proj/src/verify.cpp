#include "dbac/verify.hpp"

#include <cmath>
#include <numeric>

#include "dbac/counting.hpp"
#include "dbac/table.hpp"
#include "dbac/words.hpp"

namespace dbac {

namespace {

constexpr std::size_t max_recorded_failures = 10;

const std::pair<Sign, Sign> all_combos[] = {
    {Sign::positive, Sign::positive},
    {Sign::negative, Sign::positive},
    {Sign::positive, Sign::negative},
    {Sign::negative, Sign::negative},
};

std::string instance_name(const DbacSpec& spec) {
  return spec.signs() + " D_{" + std::to_string(spec.l()) + "," + std::to_string(spec.r()) + "}";
}

// Calls fn(spec) for every canonical instance of the brute-force sweep and
// counts instances beyond the node limit as skipped.
template <typename Fn>
void for_each_instance(const VerifyOptions& opts, CheckResult& result, Fn&& fn) {
  for (const auto& [left, right] : all_combos) {
    for (int l = 2; l <= opts.max_side; ++l) {
      for (int r = 2; r <= opts.max_side; ++r) {
        const DbacSpec spec(l, r, left, right, Combiner::disjunction);
        if (spec.n() > opts.max_n || spec.n() > opts.engine.max_nodes) {
          ++result.skipped;
          continue;
        }
        ++result.cases;
        fn(spec);
      }
    }
  }
}

int positive_sides(const DbacSpec& spec) {
  return (spec.left_sign() == Sign::positive) + (spec.right_sign() == Sign::positive);
}

std::uint64_t rotate(std::uint64_t w, int by, int m) {
  by %= m;
  if (by == 0) return w;
  const std::uint64_t mask = low_mask(m);
  return ((w >> by) | (w << (m - by))) & mask;
}

// Circular words avoiding 00 (and 111 when `also_111`), by bit-parallel tests.
std::uint64_t enumerate_circular(int m, bool also_111) {
  const std::uint64_t mask = low_mask(m);
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w <= mask; ++w) {
    const std::uint64_t w1 = rotate(w, 1, m);
    if ((~w & ~w1 & mask) != 0) continue;
    if (also_111 && (w & w1 & rotate(w, 2, m)) != 0) continue;
    ++count;
  }
  return count;
}

}  // namespace

void CheckResult::fail(std::string message) {
  passed = false;
  if (failures.size() < max_recorded_failures) failures.push_back(std::move(message));
}

CheckResult check_oracle_equivalence(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "oracle equivalence (analytic A_p == brute force)";
  for_each_instance(opts, result, [&](const DbacSpec& spec) {
    const CountReport analytic = analytic_report(spec);
    const CountReport brute = brute_force_report(spec, opts.engine);
    if (!same_counts(analytic, brute)) {
      result.fail(instance_name(spec) + ": analytic total " + analytic.total.str() + " vs brute " +
                  brute.total.str() + " (or per-period mismatch)");
      return;
    }
    const AttractorSpectrum spectrum = attractor_spectrum(spec, opts.engine);
    for (const auto& pc : analytic.periods) {
      std::uint64_t periodic = 0;
      for (const auto& [q, count] : spectrum.counts) {
        if (pc.p % q == 0) periodic += static_cast<std::uint64_t>(q) * count;
      }
      if (pc.C != periodic) {
        result.fail(instance_name(spec) + ": C_" + std::to_string(pc.p) + " analytic " + pc.C.str() +
                    " vs brute " + std::to_string(periodic));
      }
    }
  });
  return result;
}

CheckResult check_fixed_points(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "fixed points == number of positive sides";
  for_each_instance(opts, result, [&](const DbacSpec& spec) {
    const auto fixed = attractor_spectrum(spec, opts.engine).at(1);
    if (fixed != static_cast<std::uint64_t>(positive_sides(spec))) {
      result.fail(instance_name(spec) + ": " + std::to_string(fixed) + " fixed points");
    }
  });
  return result;
}

CheckResult check_period_divisibility(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "attractor periods vs side sizes";
  for_each_instance(opts, result, [&](const DbacSpec& spec) {
    const bool same_sign = spec.left_sign() == spec.right_sign();
    for (const auto& [p, count] : attractor_spectrum(spec, opts.engine).counts) {
      if (p == 1) continue;
      const std::pair<int, Sign> sides[] = {{spec.l(), spec.left_sign()}, {spec.r(), spec.right_sign()}};
      for (const auto& [size, sign] : sides) {
        const bool divides = size % p == 0;
        if (divides != (sign == Sign::positive)) {
          result.fail(instance_name(spec) + ": period " + std::to_string(p) + " vs side " +
                      std::to_string(size));
        }
      }
      if (same_sign && (spec.l() + spec.r()) % p != 0) {
        result.fail(instance_name(spec) + ": period " + std::to_string(p) + " does not divide l+r");
      }
    }
  });
  return result;
}

CheckResult check_star_invariance(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "transition graphs independent of the node-0 combiner";
  for (const auto& [left, right] : all_combos) {
    for (int l = 2; l <= opts.star_max_side; ++l) {
      for (int r = 2; r <= opts.star_max_side; ++r) {
        const DbacSpec with_or(l, r, left, right, Combiner::disjunction);
        if (with_or.n() > opts.engine.max_nodes) {
          ++result.skipped;
          continue;
        }
        ++result.cases;
        const DbacSpec with_and(l, r, left, right, Combiner::conjunction);
        if (functional_graph_fingerprint(with_or, opts.engine) !=
            functional_graph_fingerprint(with_and, opts.engine)) {
          result.fail(instance_name(with_or) + ": fingerprints differ");
        }
      }
    }
  }
  return result;
}

CheckResult check_equal_sides(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "same-sign D_{l,l} behaves as an isolated circuit of size l";
  for (Sign sign : {Sign::positive, Sign::negative}) {
    for (int l = 2; l <= opts.equal_sides_max; ++l) {
      const DbacSpec spec(l, l, sign, sign, Combiner::disjunction);
      if (spec.n() > opts.engine.max_nodes) {
        ++result.skipped;
        continue;
      }
      ++result.cases;
      const auto double_circuit = attractor_spectrum(spec, opts.engine);
      const auto single = attractor_spectrum(Network(IsolatedCircuit{l, sign}), opts.engine);
      if (!(double_circuit == single)) result.fail(instance_name(spec) + ": spectra differ");
    }
  }
  return result;
}

CheckResult check_sequence_identities(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "Lucas and Perrin numbers count circular words";
  for (int m = 1; m <= opts.sequence_max; ++m) {
    ++result.cases;
    const auto words = enumerate_circular(m, false);
    if (lucas(m) != words) {
      result.fail("lucas(" + std::to_string(m) + ") = " + lucas(m).str() + ", enumeration " +
                  std::to_string(words));
    }
    if (m < 2) continue;
    const auto words_nn = enumerate_circular(m, true);
    if (perrin(m) != words_nn) {
      result.fail("perrin(" + std::to_string(m) + ") = " + perrin(m).str() + ", enumeration " +
                  std::to_string(words_nn));
    }
  }
  return result;
}

CheckResult check_closed_forms(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "golden-ratio closed forms of C_{p,Delta_p}";
  for (int p = 1; p <= opts.closed_form_max_p; ++p) {
    for (long delta : divisors(p)) {
      ++result.cases;
      const double exact = config_count_negpos(p, static_cast<int>(delta)).convert_to<double>();
      const double closed = closed_form_config_count(p, static_cast<int>(delta));
      if (std::abs(closed - exact) > 1e-9 * exact) {
        result.fail("p=" + std::to_string(p) + ", Delta_p=" + std::to_string(delta) + ": " +
                    std::to_string(closed) + " vs " + std::to_string(exact));
      }
    }
  }
  return result;
}

CheckResult check_bounds(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "upper bounds on C_{p,Delta_p} and A_{p,Delta_p}";
  for (int p = 2; p <= opts.bound_max_p; ++p) {
    for (long delta : divisors(p)) {
      if (delta == p) continue;
      ++result.cases;
      if (!bound_check(p, static_cast<int>(delta))) {
        result.fail("bound fails at p=" + std::to_string(p) + ", Delta_p=" + std::to_string(delta));
      }
    }
    if (p % 2 == 0) {
      ++result.cases;
      const BigInt three = boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(p / 2));
      if (config_count_negpos(p, p / 2) != three) {
        result.fail("C_{" + std::to_string(p) + "," + std::to_string(p / 2) + "} != 3^" +
                    std::to_string(p / 2));
      }
    }
  }
  return result;
}

CheckResult check_negneg_special(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "prime-K doubly negative totals";
  for (int N = 2; N <= opts.special_max_N; ++N) {
    for (long delta : divisors(N)) {
      const long K = N / delta;
      if (K < 2 || divisors(K).size() != 2) continue;
      ++result.cases;
      const int d = static_cast<int>(delta);
      const BigInt special = total_negneg_special(N, d);
      const BigInt general = total_negneg(N, d);
      const std::string where = "N=" + std::to_string(N) + ", Delta=" + std::to_string(d);
      if (special != general) result.fail(where + ": " + special.str() + " vs " + general.str());

      if (K == 2 || K == 3) {
        BigInt sum = 0;
        for (long q : divisors(d)) {
          if (q % K == 0) continue;
          sum += totient(q) * boost::multiprecision::pow(BigInt(K), static_cast<unsigned>(d / q));
        }
        if (sum % N != 0 || sum / N != special) result.fail(where + ": displayed power form differs");
      }

      // Realizations with l, r >= 2 and gcd(l, r) = Delta.
      for (int l = 2; l <= N - 2; ++l) {
        if (std::gcd(l, N - l) != d) continue;
        const DbacSpec spec(l, N - l, Sign::negative, Sign::negative, Combiner::disjunction);
        if (total_attractors(spec) != special) result.fail(instance_name(spec) + ": instance total differs");
      }
    }
  }
  return result;
}

CheckResult check_table_structure(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "table structure (gcd classes)";
  TableOptions table_opts;
  table_opts.brute_limit = opts.max_n;
  table_opts.engine = opts.engine;

  const TableGrid np = build_table(Sign::negative, Sign::positive, opts.table_max, opts.table_max, table_opts);
  const TableGrid nn = build_table(Sign::negative, Sign::negative, opts.table_max, opts.table_max, table_opts);
  result.cases = np.rows.size() * np.rows.front().size() * 2;
  for (const auto& v : column_gcd_violations(np)) result.fail("np " + v);
  for (const auto& v : diagonal_violations(nn)) result.fail("nn " + v);
  for (const auto& v : np.mismatches) result.fail("np brute " + v);
  for (const auto& v : nn.mismatches) result.fail("nn brute " + v);
  return result;
}

CheckResult check_maximality(const VerifyOptions& opts) {
  CheckResult result;
  result.name = "doubly negative maximality observations";
  const ObservationReport report = maximality_observations(opts.observation_max_N);
  result.cases = report.cases_checked;
  for (const auto& c : report.counterexamples) {
    result.fail("observation " + std::to_string(c.observation) + ": " + c.detail);
  }
  return result;
}

const std::vector<NamedCheck>& all_checks() {
  static const std::vector<NamedCheck> checks = {
      {"oracle-equivalence", check_oracle_equivalence},
      {"fixed-points", check_fixed_points},
      {"period-divisibility", check_period_divisibility},
      {"star-invariance", check_star_invariance},
      {"equal-sides", check_equal_sides},
      {"sequence-identities", check_sequence_identities},
      {"closed-forms", check_closed_forms},
      {"bounds", check_bounds},
      {"negneg-special", check_negneg_special},
      {"table-structure", check_table_structure},
      {"maximality-observations", check_maximality},
  };
  return checks;
}

}  // namespace dbac
