// Copyright 2026 The mogkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mogkit/simplex.hpp"

#include <cstddef>
#include <optional>
#include <utility>

#include "mogkit/errors.hpp"

namespace mogkit {
namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
          std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  const Rational& rhs(std::size_t r) const { return rhs_[r]; }

  // Maximizes cost · x over columns with allowed[c]. Returns false if unbounded.
  bool Optimize(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
    PriceOut(cost);
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (allowed[c] && sgn(reduced_[c]) > 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (sgn(rows_[r][*entering]) <= 0) continue;
        Rational ratio = rhs_[r] / rows_[r][*entering];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      Pivot(*leaving, *entering);
    }
  }

  Rational Value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < num_rows(); ++r) v += cost[basis_[r]] * rhs_[r];
    return v;
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational pivot = rows_[row][col];
    for (auto& x : rows_[row]) x /= pivot;
    rhs_[row] /= pivot;
    for (std::size_t r = 0; r < num_rows(); ++r) {
      if (r == row || sgn(rows_[r][col]) == 0) continue;
      const Rational factor = rows_[r][col];
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (sgn(rows_[row][c]) != 0) rows_[r][c] -= factor * rows_[row][c];
      }
      rhs_[r] -= factor * rhs_[row];
    }
    if (!reduced_.empty() && sgn(reduced_[col]) != 0) {
      const Rational factor = reduced_[col];
      for (std::size_t c = 0; c < num_cols(); ++c) {
        if (sgn(rows_[row][c]) != 0) reduced_[c] -= factor * rows_[row][c];
      }
    }
    basis_[row] = col;
  }

  void DropRow(std::size_t row) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(row));
    rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  void PriceOut(const std::vector<Rational>& cost) {
    reduced_ = cost;
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < num_cols(); ++c) reduced_[c] -= cb * rows_[r][c];
    }
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.objective.size();
  if (lp.relations.size() != m || lp.rhs.size() != m) {
    throw InvalidArgument("linear program rows, relations and rhs differ in size");
  }
  for (const auto& row : lp.rows) {
    if (row.size() != n) throw InvalidArgument("linear program row has wrong width");
  }

  std::size_t num_slack = 0;
  for (Relation rel : lp.relations) num_slack += rel != Relation::kEqual;
  // Columns: structural | slack | artificial (one per row).
  const std::size_t first_artificial = n + num_slack;
  const std::size_t cols = first_artificial + m;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t slack = n;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = lp.rows[r][c];
    if (lp.relations[r] == Relation::kLessEqual) rows[r][slack++] = 1;
    if (lp.relations[r] == Relation::kGreaterEqual) rows[r][slack++] = -1;
    rhs[r] = lp.rhs[r];
    if (sgn(rhs[r]) < 0) {
      for (auto& x : rows[r]) x = -x;
      rhs[r] = -rhs[r];
    }
    rows[r][first_artificial + r] = 1;
    basis[r] = first_artificial + r;
  }

  Tableau tableau(std::move(rows), std::move(rhs), std::move(basis));
  std::vector<bool> allowed(cols, true);

  // Phase 1: maximize minus the sum of artificials.
  std::vector<Rational> phase1(cols);
  for (std::size_t c = first_artificial; c < cols; ++c) phase1[c] = -1;
  tableau.Optimize(phase1, allowed);
  LpSolution solution;
  if (sgn(tableau.Value(phase1)) < 0) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }

  // Drive zero-valued artificials out of the basis or drop redundant rows.
  for (std::size_t r = tableau.num_rows(); r-- > 0;) {
    if (tableau.basis()[r] < first_artificial) continue;
    std::optional<std::size_t> col;
    for (std::size_t c = 0; c < first_artificial && !col; ++c) {
      if (sgn(tableau.at(r, c)) != 0) col = c;
    }
    if (col) {
      tableau.Pivot(r, *col);
    } else {
      tableau.DropRow(r);
    }
  }

  for (std::size_t c = first_artificial; c < cols; ++c) allowed[c] = false;
  std::vector<Rational> phase2(cols);
  for (std::size_t c = 0; c < n; ++c) phase2[c] = lp.objective[c];
  if (!tableau.Optimize(phase2, allowed)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.value = tableau.Value(phase2);
  solution.x.assign(n, 0);
  for (std::size_t r = 0; r < tableau.num_rows(); ++r) {
    if (tableau.basis()[r] < n) solution.x[tableau.basis()[r]] = tableau.rhs(r);
  }
  return solution;
}

}  // namespace mogkit
