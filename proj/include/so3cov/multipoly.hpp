#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "so3cov/monomial.hpp"
#include "so3cov/rational.hpp"
#include "so3cov/vartable.hpp"

namespace so3cov {

// Sparse exact multivariate polynomial over a shared VarTable.
// Terms are kept in graded reverse-lexicographic order, leading term first,
// with no zero coefficients; equality is structural.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarTable::Ptr table) : table_(std::move(table)) {}

  static MultiPoly zero(VarTable::Ptr table) { return MultiPoly(std::move(table)); }
  static MultiPoly constant(VarTable::Ptr table, const Rational& c);
  static MultiPoly variable(VarTable::Ptr table, int var, int exp = 1);
  // terms need not be sorted or combined
  static MultiPoly from_terms(VarTable::Ptr table, std::vector<Term> terms);

  const VarTable::Ptr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rational constant_term() const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // max over terms; -1 for the zero polynomial

  Rational coefficient(const Monomial& m) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // ring homomorphism fixing unmapped variables
  MultiPoly substitute(const std::map<int, MultiPoly>& map) const;
  Rational eval(const std::vector<Rational>& point) const;
  MultiPoly derivative(int var) const;

  // per-group total degrees of a monomial / sum of matching terms
  std::vector<int> group_degree(const Monomial& m) const;
  MultiPoly multidegree_component(const std::vector<int>& degrees) const;
  // sorted list of distinct group-degree vectors present
  std::vector<std::vector<int>> group_degrees_present() const;
  bool is_multihomogeneous() const;

  std::string str() const;

 private:
  VarTable::Ptr table_;
  std::vector<Term> terms_;

  void require_same_table(const MultiPoly& o) const;
  static void sort_and_combine(std::vector<Term>& terms);
};

MultiPoly operator*(const Rational& c, const MultiPoly& p);

}  // namespace so3cov
