#pragma once

#include <string>
#include <vector>

#include "so3cov/covariants.hpp"
#include "so3cov/freepoly.hpp"
#include "so3cov/tableaux.hpp"

namespace so3cov {

struct IdentityVerdict {
  FreePoly poly;
  bool is_weak_identity = false;
  bool is_weak_central = false;
  std::string witness;  // nonzero entry, or the scalar certificate when central
};

// evaluates f at generic skew-symmetric matrices t_1..t_p; genericity makes
// the zero test exact and complete
IdentityVerdict check_weak(const FreePoly& f, int p);

// substitution x_i -> images[i-1] (the unique algebra endomorphism)
FreePoly free_substitute(const FreePoly& f, const std::vector<FreePoly>& images);

struct SuiteResult {
  std::string id;
  bool ok = false;
  std::string detail;
};

// the three basis identities on generic skew matrices and on generic
// combinations of the ad(sl2) basis
std::vector<SuiteResult> razmyslov_suite();

// ad x2 prod_{i=1}^{q-1} (L_{x2} - (i - (1-q)/2) ad x2) x1
FreePoly art_polynomial(int q);

// the displayed central highest weight vectors for mu1 <= mu1_max,
// mu2 <= mu2_max, lambda3 <= l3_max
std::vector<SuiteResult> central_suite(int mu1_max = 3, int mu2_max = 2, int l3_max = 2);

struct CocharacterCertificate {
  Partition nu;
  std::vector<FreePoly> hwvs;
  int rank = 0;
  int expected = 0;
  bool hwv_ok = false;
  bool ok = false;
  std::string detail;
};
// seed family + promotion pipeline with the largest-admissible-q policy;
// certifies the m_F(nu) highest weight vectors and their independence at
// generic matrices
CocharacterCertificate cocharacter_lower_bound(const Partition& nu);

struct EqualityReport {
  int degree = 0;
  bool ok = false;
  std::string detail;
};
// dim of every multidegree component of the given algebra against
// sum_nu m(nu) K(nu, d)
EqualityReport cocharacter_equality_check(int degree, Algebra alg = Algebra::F3);

// the nine seed families evaluated at (a1, a2, a3): entry-for-entry equality
// with the displayed matrices plus the full-rank certificates
SuiteResult lemma33_tables_check();

}  // namespace so3cov
