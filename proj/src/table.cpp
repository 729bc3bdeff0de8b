#include "dbac/table.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "dbac/counting.hpp"

namespace dbac {

namespace {

BigInt analytic_total(const DbacSpec& spec) {
  if (spec.left_sign() == Sign::positive && spec.right_sign() == Sign::positive) {
    return positive_circuit_total(std::gcd(spec.l(), spec.r()));
  }
  return total_attractors(spec);
}

std::string cell_name(const TableCell& c) {
  return "(" + std::to_string(c.l) + "," + std::to_string(c.r) + ")";
}

}  // namespace

TableGrid build_table(Sign left, Sign right, int max_l, int max_r, const TableOptions& opts) {
  if (max_l < 2 || max_r < 2) throw Error(ErrorCode::invalid_argument, "table bounds must be at least 2");
  TableGrid grid;
  grid.left = left;
  grid.right = right;
  grid.max_l = max_l;
  grid.max_r = max_r;
  for (int l = 2; l <= max_l; ++l) {
    auto& row = grid.rows.emplace_back();
    for (int r = 2; r <= max_r; ++r) {
      const DbacSpec spec(l, r, left, right, Combiner::disjunction);
      TableCell cell;
      cell.l = l;
      cell.r = r;
      cell.gcd_class = std::gcd(l, r);
      cell.total = analytic_total(spec);
      if (spec.n() <= opts.brute_limit && spec.n() <= opts.engine.max_nodes) {
        const auto brute = attractor_spectrum(spec, opts.engine).total();
        cell.provenance = Provenance::both;
        if (cell.total != brute) {
          grid.mismatches.push_back(cell_name(cell) + ": analytic " + cell.total.str() + " vs brute " +
                                    std::to_string(brute));
        }
      }
      row.push_back(std::move(cell));
    }
  }
  if (opts.margins) {
    for (int r = 2; r <= max_r; ++r) grid.positive_margin.push_back(positive_circuit_total(r));
    for (int l = 2; l <= max_l; ++l) {
      if (l > opts.engine.max_nodes) {
        grid.negative_margin.emplace_back();
        continue;
      }
      grid.negative_margin.emplace_back(
          attractor_spectrum(Network(IsolatedCircuit{l, Sign::negative}), opts.engine).total());
    }
  }
  return grid;
}

std::string to_csv(const TableGrid& grid) {
  std::ostringstream out;
  out << "l\\r";
  for (int r = 2; r <= grid.max_r; ++r) out << ',' << r;
  if (!grid.negative_margin.empty()) out << ",T-_l";
  out << '\n';
  for (int l = 2; l <= grid.max_l; ++l) {
    out << l;
    for (int r = 2; r <= grid.max_r; ++r) out << ',' << grid.at(l, r).total;
    if (!grid.negative_margin.empty()) {
      const auto& m = grid.negative_margin[static_cast<std::size_t>(l - 2)];
      out << ',';
      if (m) out << *m;
    }
    out << '\n';
  }
  if (!grid.positive_margin.empty()) {
    out << "T+_r";
    for (const auto& v : grid.positive_margin) out << ',' << v;
    if (!grid.negative_margin.empty()) out << ',';
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const TableGrid& grid) {
  std::ostringstream out;
  out << "Total attractors of " << sign_code(grid.left, grid.right)
      << " D_{l,r}; each cell reads `total (gcd(l,r))`.\n\n";
  out << "| l\\r |";
  for (int r = 2; r <= grid.max_r; ++r) out << ' ' << r << " |";
  if (!grid.negative_margin.empty()) out << " T-_l |";
  out << "\n|---|";
  for (int r = 2; r <= grid.max_r; ++r) out << "---|";
  if (!grid.negative_margin.empty()) out << "---|";
  out << '\n';
  std::size_t checked = 0;
  for (int l = 2; l <= grid.max_l; ++l) {
    out << "| " << l << " |";
    for (int r = 2; r <= grid.max_r; ++r) {
      const auto& cell = grid.at(l, r);
      if (cell.provenance == Provenance::both) ++checked;
      out << ' ' << cell.total << " (" << cell.gcd_class << ") |";
    }
    if (!grid.negative_margin.empty()) {
      const auto& m = grid.negative_margin[static_cast<std::size_t>(l - 2)];
      out << ' ' << (m ? std::to_string(*m) : std::string("-")) << " |";
    }
    out << '\n';
  }
  if (!grid.positive_margin.empty()) {
    out << "| T+_r |";
    for (const auto& v : grid.positive_margin) out << ' ' << v << " |";
    if (!grid.negative_margin.empty()) out << " |";
    out << '\n';
  }
  out << "\nCells: " << grid.rows.size() * grid.rows.front().size() << " analytic, " << checked
      << " also brute-forced.\n";
  return out.str();
}

std::vector<std::string> column_gcd_violations(const TableGrid& grid) {
  std::vector<std::string> out;
  for (int r = 2; r <= grid.max_r; ++r) {
    std::map<int, const TableCell*> first_of_class;
    for (int l = 2; l <= grid.max_l; ++l) {
      const auto& cell = grid.at(l, r);
      auto [it, inserted] = first_of_class.emplace(cell.gcd_class, &cell);
      if (!inserted && it->second->total != cell.total) {
        out.push_back("column r=" + std::to_string(r) + ": " + cell_name(*it->second) + "=" +
                      it->second->total.str() + " but " + cell_name(cell) + "=" + cell.total.str());
      }
    }
  }
  return out;
}

std::vector<std::string> diagonal_violations(const TableGrid& grid) {
  std::vector<std::string> out;
  std::map<std::pair<int, int>, const TableCell*> first;
  for (const auto& row : grid.rows) {
    for (const auto& cell : row) {
      auto [it, inserted] = first.emplace(std::pair{cell.l + cell.r, cell.gcd_class}, &cell);
      if (!inserted && it->second->total != cell.total) {
        out.push_back("N=" + std::to_string(cell.l + cell.r) + ", gcd=" + std::to_string(cell.gcd_class) +
                      ": " + cell_name(*it->second) + "=" + it->second->total.str() + " but " +
                      cell_name(cell) + "=" + cell.total.str());
      }
    }
  }
  return out;
}

}  // namespace dbac
