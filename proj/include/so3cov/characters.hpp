#pragma once

#include <map>
#include <string>
#include <vector>

#include "so3cov/multipoly.hpp"
#include "so3cov/tableaux.hpp"

namespace so3cov {

// Schur polynomial S_lambda(tau_1..tau_3): sum over semistandard tableaux of
// the content monomials. Requires <= 3 rows and a tau table.
MultiPoly schur_poly(const Partition& lambda, const VarTable::Ptr& tau);

// drops terms of total degree > n
MultiPoly truncate_degree(const MultiPoly& p, int n);

// Rational function numerator / prod (1 - m_i) kept in factored form;
// the factors expand as geometric series, so no cancellation is ever needed.
class RationalSeries {
 public:
  RationalSeries(MultiPoly numerator, std::vector<Monomial> denom_factors);

  const MultiPoly& numerator() const { return num_; }
  const std::vector<Monomial>& denominator_factors() const { return denom_; }

  // exact truncated expansion up to total degree N
  MultiPoly expand(int N) const;
  // same factored denominator required
  RationalSeries operator+(const RationalSeries& o) const;
  // specialization tau_i -> tau over a 1-variable table
  RationalSeries univariate(const VarTable::Ptr& tau1) const;

 private:
  MultiPoly num_;
  std::vector<Monomial> denom_;
};

// the three Hilbert series of C = C1 + C2 + C3, common denominator
// prod_{1<=i<=j<=3} (1 - tau_i tau_j)
RationalSeries hilbert_C1(const VarTable::Ptr& tau);
RationalSeries hilbert_C2(const VarTable::Ptr& tau);
RationalSeries hilbert_C3(const VarTable::Ptr& tau);
// univariate (8 tau^3 - 3 tau^5 + 6 tau^2 - tau^6) building blocks
RationalSeries series_C2_univariate(const VarTable::Ptr& tau1);   // (3t+3t^2)/(1-t^2)^6
RationalSeries series_C3_even(const VarTable::Ptr& tau1);         // (6t^2-t^6)/(1-t^2)^6
RationalSeries series_C3_odd(const VarTable::Ptr& tau1);          // (8t^3-3t^5)/(1-t^2)^6

// Greedy Schur decomposition up to total degree N. Throws std::domain_error
// when the input is not symmetric or a negative multiplicity appears.
std::map<Partition, long> schur_decompose(const MultiPoly& sym, int N);

// closed-form multiplicities by the parity case analysis
int multiplicity_E(const Partition& nu);
int multiplicity_F(const Partition& nu);
int center_E(const Partition& nu);
int center_F(const Partition& nu);

// independent combinatorial route: count semistandard candidate tableaux of
// content (nu_1,nu_2,nu_3,1,1) whose {4,5}-deletion is the superstandard
// nu-tableau, over shapes with both row differences even
long multiplicity_by_deletion(const Partition& nu);

struct MultiplicityRow {
  Partition nu;
  int m_E, m_F, center_E, center_F;
};
std::vector<MultiplicityRow> multiplicity_table(int max_degree);
std::string multiplicity_csv(const std::vector<MultiplicityRow>& rows);
std::string multiplicity_json(const std::vector<MultiplicityRow>& rows);

}  // namespace so3cov
