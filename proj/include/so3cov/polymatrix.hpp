#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "so3cov/linalg.hpp"
#include "so3cov/multipoly.hpp"

namespace so3cov {

// 3x3 matrix with MultiPoly entries over a shared VarTable.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(VarTable::Ptr table);

  static PolyMatrix identity(VarTable::Ptr table);
  static PolyMatrix constant(VarTable::Ptr table, const std::array<std::array<Rational, 3>, 3>& m);
  static PolyMatrix constant_int(VarTable::Ptr table, const std::array<std::array<long, 3>, 3>& m);

  const VarTable::Ptr& table() const { return table_; }
  const MultiPoly& at(int i, int j) const { return e_[3 * i + j]; }
  MultiPoly& at(int i, int j) { return e_[3 * i + j]; }

  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix operator-(const PolyMatrix& o) const;
  PolyMatrix operator-() const;
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix& operator+=(const PolyMatrix& o) { return *this = *this + o; }
  PolyMatrix& operator-=(const PolyMatrix& o) { return *this = *this - o; }
  PolyMatrix scaled(const MultiPoly& f) const;
  PolyMatrix scaled(const Rational& c) const;
  PolyMatrix transpose() const;
  MultiPoly trace() const;
  bool operator==(const PolyMatrix& o) const { return e_ == o.e_; }
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  // off-diagonal entries zero, diagonal entries pairwise equal
  bool is_scalar() const;

  PolyMatrix substitute(const std::map<int, MultiPoly>& map) const;
  PolyMatrix pow(int n) const;

  std::string str() const;

 private:
  VarTable::Ptr table_;
  std::array<MultiPoly, 9> e_;
};

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
// trace(a*b) without forming the product
MultiPoly trace_of_product(const PolyMatrix& a, const PolyMatrix& b);

// the generic skew-symmetric matrix t_k over a skew table
PolyMatrix generic_skew(const VarTable::Ptr& table, int k);
// the full generic matrix z (requires z variables)
PolyMatrix generic_full(const VarTable::Ptr& table);
// s: symmetric trace-zero part of z;  u: skew part of z
PolyMatrix sym_traceless_part(const VarTable::Ptr& table);
PolyMatrix skew_part(const VarTable::Ptr& table);

// a1 = E12-E21, a2 = E13-E31, a3 = E23-E32
std::array<PolyMatrix, 3> concrete_basis(const VarTable::Ptr& table);
// adjoint action of the standard sl2 triple (e, f, h) on itself, in the
// ordered basis (e, h, f); returned as (A_e, A_f, A_h)
std::array<PolyMatrix, 3> ad_sl2_basis(const VarTable::Ptr& table);

// whether t_k^3 = 1/2 tr(t_k^2) t_k holds for the matrix m
bool cayley_hamilton_holds(const PolyMatrix& m);

// Cayley transform g = (I-A)(I+A)^{-1} for the skew matrix A built from
// (q1,q2,q3); exact special orthogonal matrix over Q.
PolyMatrix so3_sample(const VarTable::Ptr& table, const Rational& q1, const Rational& q2,
                      const Rational& q3);

// so3 -> K^3 intertwiner fixed by the sign conventions a1 -> e3, a2 -> -e2,
// a3 -> e1; input must be skew-symmetric
std::array<MultiPoly, 3> so3_vector(const PolyMatrix& skew);

// substitution induced by t_k -> g t_k g^T on every skew variable
std::map<int, MultiPoly> conjugation_substitution(const VarTable::Ptr& table,
                                                  const PolyMatrix& g);

// shared coefficient rows for rank computations over families of matrices
std::pair<std::vector<SparseRow>, int> matrices_to_rows(std::span<const PolyMatrix> ms);

}  // namespace so3cov
