#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "so3cov/multipoly.hpp"
#include "so3cov/rational.hpp"

namespace so3cov {

// Sparse row vector over Q, entries sorted by column index.
struct SparseRow {
  std::vector<std::pair<std::int32_t, Rational>> e;

  void push(std::int32_t col, Rational v) {
    if (!is_zero(v)) e.push_back({col, std::move(v)});
  }
  bool empty() const { return e.empty(); }
};

// Incremental exact echelon form. Rows are scaled to integers and reduced
// fraction-free (cross-multiplication with content stripping), so all
// arithmetic stays in Z and ranks are exact.
class RowEchelon {
 public:
  explicit RowEchelon(bool track_dependencies = false) : track_(track_dependencies) {}

  // Returns true iff the row was independent of the rows inserted so far.
  // In tracking mode a dependent row appends one dependency vector
  // (coefficients over all rows inserted so far, including this one).
  bool insert(const SparseRow& row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }
  const std::vector<std::vector<Rational>>& dependencies() const { return deps_; }

 private:
  struct IRow {
    std::vector<std::pair<std::int32_t, BigInt>> e;    // main part
    std::vector<std::pair<std::int32_t, BigInt>> tag;  // dependency tracking part
  };

  bool track_;
  int inserted_ = 0;
  std::vector<IRow> rows_;                      // echelon rows
  std::vector<std::pair<std::int32_t, int>> pivots_;  // (lead column, row index), sorted
  std::vector<std::vector<Rational>> deps_;

  static void strip_content(IRow& r);
  static void combine(IRow& r, const IRow& p, BigInt plead, BigInt rcoef);
  int pivot_row(std::int32_t col) const;
};

// Rank of the span of the given rows.
int rank_over_Q(const std::vector<SparseRow>& rows);

// Basis of the linear dependencies {c : sum_i c_i row_i = 0}.
std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows);

// One solution of sum_i c_i row_i = target, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_linear(const std::vector<SparseRow>& rows,
                                                  const SparseRow& target);

// Shared monomial basis for a family of polynomials; column order follows the
// canonical term order. Returns the rows and the basis size.
std::pair<std::vector<SparseRow>, int> polys_to_rows(std::span<const MultiPoly> polys);

}  // namespace so3cov
