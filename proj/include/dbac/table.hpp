#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dbac/bigint.hpp"
#include "dbac/core_model.hpp"
#include "dbac/dynamics.hpp"

namespace dbac {

enum class Provenance { analytic, brute_force, both };

struct TableCell {
  int l = 0;
  int r = 0;
  BigInt total;
  int gcd_class = 0;
  Provenance provenance = Provenance::analytic;
};

// Totals of D_{l,r} for 2 <= l <= max_l, 2 <= r <= max_r.
struct TableGrid {
  Sign left = Sign::negative;
  Sign right = Sign::positive;
  int max_l = 0;
  int max_r = 0;
  std::vector<std::vector<TableCell>> rows;  // rows[l - 2][r - 2]

  // Reference lines: T^+_r of an isolated positive circuit (analytic) and
  // T^-_l of an isolated negative circuit (brute force; absent past the cap).
  std::vector<BigInt> positive_margin;
  std::vector<std::optional<std::uint64_t>> negative_margin;

  // Cells where the brute-force total disagreed with the analytic one.
  std::vector<std::string> mismatches;

  const TableCell& at(int l, int r) const {
    return rows[static_cast<std::size_t>(l - 2)][static_cast<std::size_t>(r - 2)];
  }
};

struct TableOptions {
  bool margins = false;
  // Cells with n <= brute_limit are also brute-forced and compared.
  int brute_limit = 0;
  EngineOptions engine{};
};

TableGrid build_table(Sign left, Sign right, int max_l, int max_r, const TableOptions& opts = {});

std::string to_csv(const TableGrid& grid);
std::string to_markdown(const TableGrid& grid);

// Same-column cells with equal gcd(l, r) must hold equal totals.
std::vector<std::string> column_gcd_violations(const TableGrid& grid);
// Cells with equal l + r and equal gcd(l, r) must hold equal totals.
std::vector<std::string> diagonal_violations(const TableGrid& grid);

}  // namespace dbac
