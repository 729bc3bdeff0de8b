#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dbac/table.hpp"

using namespace dbac;

namespace {

constexpr Sign P = Sign::positive;
constexpr Sign N = Sign::negative;

}  // namespace

TEST_CASE("negative-positive grid") {
  TableOptions opts;
  opts.brute_limit = 11;
  const auto grid = build_table(N, P, 6, 6, opts);
  CHECK(grid.at(2, 3).total == 2);
  CHECK(grid.at(2, 3).gcd_class == 1);
  CHECK(grid.at(6, 6).provenance == Provenance::both);
  CHECK(grid.mismatches.empty());
  CHECK(column_gcd_violations(grid).empty());

  // Frozen from a brute-force sweep of every cell.
  const int expected[5][5] = {
      {1, 2, 3, 3, 4}, {2, 1, 3, 3, 6}, {1, 2, 1, 3, 4}, {2, 2, 3, 1, 5}, {1, 1, 3, 3, 1}};
  for (int l = 2; l <= 6; ++l) {
    for (int r = 2; r <= 6; ++r) CHECK(grid.at(l, r).total == expected[l - 2][r - 2]);
  }
}

TEST_CASE("doubly negative grid") {
  const auto grid = build_table(N, N, 10, 10);
  CHECK(diagonal_violations(grid).empty());
  CHECK(grid.at(2, 2).total == 1);
  CHECK(grid.at(5, 10).total == 17);
  CHECK(grid.at(10, 10).total == 52);
  CHECK(grid.at(3, 3).provenance == Provenance::analytic);
}

TEST_CASE("property checks flag altered cells") {
  auto grid = build_table(N, P, 8, 8);
  grid.rows[2][4].total += 1;  // (4, 6)
  CHECK_FALSE(column_gcd_violations(grid).empty());
  auto nn = build_table(N, N, 8, 8);
  nn.rows[1][3].total += 1;  // (3, 5)
  CHECK_FALSE(diagonal_violations(nn).empty());
}

TEST_CASE("margins") {
  TableOptions opts;
  opts.margins = true;
  const auto grid = build_table(N, P, 6, 6, opts);
  REQUIRE(grid.positive_margin.size() == 5);
  CHECK(grid.positive_margin[0] == 3);   // T^+_2
  CHECK(grid.positive_margin[4] == 14);  // T^+_6
  // Isolated negative circuits (OEIS A000048): 1, 2, 2, 4, 6 for sizes 2..6.
  const std::uint64_t negative[] = {1, 2, 2, 4, 6};
  for (int i = 0; i < 5; ++i) CHECK(grid.negative_margin[static_cast<std::size_t>(i)] == negative[i]);
}

TEST_CASE("csv and markdown output") {
  TableOptions opts;
  opts.margins = true;
  const auto grid = build_table(N, P, 3, 4, opts);
  CHECK(to_csv(grid) == "l\\r,2,3,4,T-_l\n2,1,2,3,1\n3,2,1,3,2\nT+_r,3,4,6,\n");
  const auto md = to_markdown(grid);
  CHECK(md.find("| l\\r | 2 | 3 | 4 | T-_l |") != std::string::npos);
  CHECK(md.find("| 2 | 1 (2) | 2 (1) | 3 (2) | 1 |") != std::string::npos);
  CHECK(to_csv(build_table(N, N, 2, 2)) == "l\\r,2\n2,1\n");
  CHECK_THROWS_AS(build_table(N, P, 1, 4), Error);
}
