#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so3cov/freepoly.hpp"
#include "so3cov/permutation.hpp"

namespace so3cov {

// Weakly decreasing positive parts; trailing zeros are trimmed on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based
  int size() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  Partition conjugate() const;
  std::vector<int> column_lengths() const { return conjugate().parts_; }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }
  std::string str() const;  // "(4,2,0)" style with 3 entries minimum

 private:
  std::vector<int> parts_;
};

// all partitions of n with at most max_rows parts, descending lexicographic
std::vector<Partition> partitions_of(int n, int max_rows);

struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  static Tableau of(Partition shape, std::vector<std::vector<int>> rows);
  std::vector<int> content(int max_value) const;
  bool is_semistandard() const;
  bool is_standard() const;
  int entry(int r, int c) const { return rows[r][c]; }  // 0-based
  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& o) const;
  std::string str() const;  // rows "/"-separated: "1 2/5 4/3"
};

// exhaustive, duplicate-free, lexicographic in row-reading order;
// content[v-1] = number of boxes holding v
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content);
long kostka(const Partition& lambda, const std::vector<int>& content);

// fills column j of [lambda] with rho^{-1}(off_j+1), ..., rho^{-1}(off_j+k_j)
Tableau tableau_from_permutation(const Partition& lambda, const Perm& rho);
Perm permutation_from_tableau(const Tableau& t);

// w_lambda = product over columns of standard polynomials
FreePoly hwv_base(const Partition& lambda, int p);
FreePoly hwv_from_permutation(const Partition& lambda, const Perm& rho, int p);
FreePoly hwv_from_tableau(const Tableau& t, int p);

// removes the boxes holding the given values (each must occur exactly once);
// nullopt when the result is not a semistandard tableau of partition shape
std::optional<Tableau> delete_values(const Tableau& t, const std::vector<int>& values);

// row i filled with value i+1
Tableau superstandard(const Partition& shape);

// promotion operators on highest weight vectors
struct HwvState {
  FreePoly poly;
  Tableau tableau;
};
// largest entry sitting in row 1 at a column > lambda_2, if any
std::optional<int> largest_admissible_q(const Tableau& t);
// inserts x_1^2 after position q; requires lambda_1 > lambda_2 and q
// admissible in the tableau
HwvState iota1q(const HwvState& w, int q);
FreePoly iota2(const FreePoly& w);
FreePoly iota3(const FreePoly& w);

// the nine explicit seed families with their tableaux; empty when nu is not
// one of the supported base partitions
struct SeedFamily {
  Partition nu;
  std::vector<Tableau> tableaux;
  std::vector<FreePoly> polys;  // hwv_from_tableau of each
};
std::optional<SeedFamily> seed_family(const Partition& nu);

}  // namespace so3cov
