#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "so3cov/permutation.hpp"
#include "so3cov/polymatrix.hpp"
#include "so3cov/rational.hpp"

namespace so3cov {

// word in the free monoid on x_1..x_p; empty word is the identity
using Word = std::vector<std::uint8_t>;

// Noncommutative polynomial in K<x_1..x_p>. Terms are kept sorted by
// (length, lexicographic word), no zero coefficients.
class FreePoly {
 public:
  using Term = std::pair<Word, Rational>;

  FreePoly() = default;
  explicit FreePoly(int p) : p_(p) {}

  static FreePoly zero(int p) { return FreePoly(p); }
  static FreePoly one(int p);
  static FreePoly generator(int p, int i);  // x_i, 1-based
  static FreePoly from_terms(int p, std::vector<Term> terms);
  // sum over S_k of sign(sigma) x_{sigma(1)}..x_{sigma(k)}
  static FreePoly standard_poly(int k, int p);

  int alphabet() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator-() const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly& operator+=(const FreePoly& o) { return *this = *this + o; }
  FreePoly& operator-=(const FreePoly& o) { return *this = *this - o; }
  FreePoly scaled(const Rational& c) const;
  FreePoly pow(int n) const;
  bool operator==(const FreePoly&) const = default;

  // per-letter degrees (n_1..n_p) when multihomogeneous
  bool is_multihomogeneous() const;
  std::vector<int> multidegree() const;  // requires multihomogeneous, nonzero
  int total_degree() const;              // max word length, -1 when zero

  // right place-permutation action on a polynomial whose words all have
  // length = tau.size(): position m of the image holds letter tau(m)
  FreePoly place_permute(const Perm& tau) const;

  // replaces one occurrence of x_j by x_i, summed over occurrences
  FreePoly raising(int i, int j) const;
  // multihomogeneous and annihilated by all simple raising operators
  bool is_highest_weight() const;

  // inserts letter^count after position q (0 <= q <= word length) in every word
  FreePoly insert_power_after(int q, int letter, int count) const;

  // the algebra homomorphism x_i -> args[i-1]; the empty word maps to I
  PolyMatrix evaluate(std::span<const PolyMatrix> args) const;

  std::string str() const;  // words as "x1.x2.x1"

 private:
  int p_ = 0;
  std::vector<Term> terms_;

  static void sort_and_combine(std::vector<Term>& terms);
};

FreePoly commutator(const FreePoly& a, const FreePoly& b);
// left-normed [...[f1,f2],f3],...,fk]
FreePoly left_normed_commutator(std::span<const FreePoly> fs);
FreePoly operator*(const Rational& c, const FreePoly& f);

}  // namespace so3cov
