#pragma once

#include <map>
#include <string>
#include <vector>

#include "tornheim/errors.hpp"
#include "tornheim/exact/rational.hpp"
#include "tornheim/exact/symbolic.hpp"

namespace tornheim {

struct LinearRow {
  std::vector<BigRational> coefficients;  // one per unknown
  SymbolicCombo rhs;
  std::string label;
};

/*
 * Rational linear system sum_j a_ij x_j = rhs_i with symbolic right-hand
 * sides. Column order is the pivot preference: elimination walks the columns
 * left to right, so columns that depend on earlier ones stay free.
 */
struct LinearSystem {
  std::vector<ZetaSymbol> unknowns;
  std::vector<LinearRow> rows;

  std::size_t column(const ZetaSymbol& s) const {
    for (std::size_t j = 0; j < unknowns.size(); ++j)
      if (unknowns[j] == s) return j;
    throw DomainError("unknown " + s.to_string() + " is not part of the system");
  }

  void add_row(std::vector<BigRational> coefficients, SymbolicCombo rhs, std::string label = {}) {
    if (coefficients.size() != unknowns.size()) throw DomainError("row length does not match the unknowns");
    rows.push_back({std::move(coefficients), std::move(rhs), std::move(label)});
  }

  // Row from sparse (unknown, coefficient) pairs.
  void add_row(const std::vector<std::pair<ZetaSymbol, BigRational>>& lhs, SymbolicCombo rhs, std::string label = {}) {
    std::vector<BigRational> c(unknowns.size());
    for (const auto& [s, v] : lhs) c[column(s)] += v;
    add_row(std::move(c), std::move(rhs), std::move(label));
  }
};

struct Solution {
  // Pivot unknowns expressed through the free unknowns (as symbols) and rhs atoms.
  std::map<ZetaSymbol, SymbolicCombo> assignment;
  std::vector<ZetaSymbol> free_unknowns;
  std::size_t rank = 0;
};

// Gauss-Jordan elimination over Q. Throws InconsistentSystem when some
// combination of rows reads 0 = nonzero.
inline Solution solve_exact(const LinearSystem& sys) {
  const std::size_t n = sys.unknowns.size();
  std::vector<std::vector<BigRational>> a;
  std::vector<SymbolicCombo> b;
  std::vector<std::string> labels;
  for (const auto& r : sys.rows) {
    if (r.coefficients.size() != n) throw DomainError("row length does not match the unknowns");
    a.push_back(r.coefficients);
    b.push_back(r.rhs);
    labels.push_back(r.label);
  }
  const std::size_t m = a.size();

  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    std::swap(labels[p], labels[row]);
    BigRational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      BigRational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) {
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
      }
      b[i] -= b[row] * f;
    }
    pivot_col.push_back(col);
    is_pivot[col] = true;
    ++row;
  }

  for (std::size_t i = row; i < m; ++i) {
    if (!b[i].empty()) {
      std::string what = labels[i].empty() ? std::string("a relation") : labels[i];
      throw InconsistentSystem("inconsistent system: " + what + " reduces to 0 = " + b[i].to_text());
    }
  }

  Solution sol;
  sol.rank = row;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) sol.free_unknowns.push_back(sys.unknowns[j]);
  for (std::size_t i = 0; i < row; ++i) {
    SymbolicCombo v = b[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_pivot[j] && a[i][j] != 0) v.add(sys.unknowns[j], -a[i][j]);
    }
    sol.assignment.emplace(sys.unknowns[pivot_col[i]], std::move(v));
  }
  return sol;
}

}  // namespace tornheim
