#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3cov/freepoly.hpp"
#include "so3cov/polymatrix.hpp"
#include "so3cov/rng.hpp"

using namespace so3cov;

namespace {
MultiPoly det3(const PolyMatrix& m) {
  auto d2 = [&](int r0, int r1, int c0, int c1) {
    return m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
  };
  return m.at(0, 0) * d2(1, 2, 1, 2) - m.at(0, 1) * d2(1, 2, 0, 2) + m.at(0, 2) * d2(1, 2, 0, 1);
}
}  // namespace

TEST_CASE("generic skew matrices") {
  auto tb = VarTable::skew(2, false);
  auto t1 = generic_skew(tb, 1);
  auto t2 = generic_skew(tb, 2);
  CHECK(t1.transpose() == -t1);
  CHECK(t1.trace().is_zero());
  CHECK(t2.at(0, 1) == MultiPoly::variable(tb, tb->skew_var(1, 2, 2)));
  CHECK_THROWS_AS((void)generic_skew(tb, 3).str(), std::out_of_range);
}

TEST_CASE("z decomposition into scalar + symmetric traceless + skew") {
  auto tb = VarTable::skew(1, true);
  auto z = generic_full(tb);
  auto s = sym_traceless_part(tb);
  auto u = skew_part(tb);
  CHECK(s.trace().is_zero());
  CHECK((u + u.transpose()).is_zero());
  CHECK((s - s.transpose()).is_zero());
  auto scalar = PolyMatrix::identity(tb).scaled(z.trace().scaled(rational(1, 3)));
  CHECK(scalar + s + u == z);
  // the three parts live in independent coordinate subspaces
  CHECK(sym_traceless_part(tb).trace().is_zero());
}

TEST_CASE("matrix ops and trace alternation") {
  auto tb = VarTable::skew(3, false);
  auto t1 = generic_skew(tb, 1), t2 = generic_skew(tb, 2), t3 = generic_skew(tb, 3);
  CHECK((trace_of_product(t1 * t2, t3) + trace_of_product(t2 * t1, t3)).is_zero());
  CHECK(PolyMatrix::identity(tb).is_scalar());
  CHECK(commutator(t1, t1).is_zero());
  CHECK(!(t1 * t2 == t2 * t1));
  CHECK(trace_of_product(t1, t2) == (t1 * t2).trace());
  // skew against symmetric traces to zero
  CHECK(trace_of_product(t1, t2 * t3 + t3 * t2).is_zero());
  CHECK(trace_of_product(t1, t2).coefficient(Monomial()) == rational(0));
  CHECK(trace_of_product(t1, t2) == trace_of_product(t2, t1));
}

TEST_CASE("skew matrices pair to zero against s") {
  auto tb = VarTable::skew(2, true);
  auto s = sym_traceless_part(tb);
  CHECK(trace_of_product(generic_skew(tb, 1), s).is_zero());
  CHECK(trace_of_product(commutator(generic_skew(tb, 1), generic_skew(tb, 2)), s).is_zero());
}

TEST_CASE("Cayley-Hamilton in the skew case") {
  auto tb = VarTable::skew(1, true);
  CHECK(cayley_hamilton_holds(generic_skew(tb, 1)));
  CHECK(!cayley_hamilton_holds(generic_full(tb)));
  auto a = concrete_basis(tb);
  CHECK(a[0] * a[0] * a[0] == -a[0]);
  CHECK(cayley_hamilton_holds(a[0]));
}

TEST_CASE("concrete so3 basis") {
  auto tb = VarTable::coeffs(1);
  auto a = concrete_basis(tb);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto pairing = trace_of_product(a[i], a[j]).scaled(rational(-1, 2));
      CHECK(pairing == MultiPoly::constant(tb, rational(i == j ? 1 : 0)));
    }
  CHECK(!(a[0] * a[2] == a[2] * a[0]));
}

TEST_CASE("nine monomials in t1, t2 span M3 over the function field") {
  auto tb = VarTable::coeffs(1);
  auto a = concrete_basis(tb);
  auto I = PolyMatrix::identity(tb);
  auto a1 = a[0], a3 = a[2];
  std::vector<PolyMatrix> ms{I,       a1,      a3,           a1 * a1,     a3 * a3,
                             a1 * a3, a3 * a1, a1 * a1 * a3, a3 * a3 * a1};
  auto [rows, ncols] = matrices_to_rows(ms);
  CHECK(rank_over_Q(rows) == 9);
}

TEST_CASE("Cayley transform sampler") {
  auto tb = VarTable::skew(1, false);
  CHECK(so3_sample(tb, rational(0), rational(0), rational(0)) == PolyMatrix::identity(tb));
  Rng rng(17);
  for (int it = 0; it < 5; ++it) {
    auto g = so3_sample(tb, rng.small_rational(), rng.small_rational(), rng.small_rational());
    CHECK(g * g.transpose() == PolyMatrix::identity(tb));
    CHECK(det3(g) == MultiPoly::constant(tb, rational(1)));
  }
  auto g = so3_sample(tb, rational(1), rational(0), rational(0));
  CHECK(det3(g) == MultiPoly::constant(tb, rational(1)));
}

TEST_CASE("ad(sl2) basis matrices") {
  auto tb = VarTable::coeffs(1);
  auto [A_e, A_f, A_h] = ad_sl2_basis(tb);
  CHECK(A_e.trace().is_zero());
  CHECK(A_f.trace().is_zero());
  CHECK(A_h.trace().is_zero());
  CHECK(commutator(A_h, A_e) == A_e.scaled(rational(2)));
  CHECK(commutator(A_h, A_f) == A_f.scaled(rational(-2)));
  CHECK(commutator(A_e, A_f) == A_h);
  // s3 of the triple commutes with A_e (and in fact with all three)
  std::vector<PolyMatrix> args{A_e, A_f, A_h};
  auto s3 = FreePoly::standard_poly(3, 3).evaluate(args);
  CHECK(commutator(s3, A_e).is_zero());
  CHECK(commutator(s3, A_f).is_zero());
  CHECK(commutator(s3, A_h).is_zero());
}

TEST_CASE("so3 -> K^3 intertwiner") {
  auto tb = VarTable::skew(1, false);
  auto a = concrete_basis(tb);
  // a1 -> e3, a2 -> -e2, a3 -> e1
  auto v1 = so3_vector(a[0]);
  CHECK(v1[2] == MultiPoly::constant(tb, rational(1)));
  CHECK(v1[0].is_zero());
  auto v2 = so3_vector(a[1]);
  CHECK(v2[1] == MultiPoly::constant(tb, rational(-1)));
  auto v3 = so3_vector(a[2]);
  CHECK(v3[0] == MultiPoly::constant(tb, rational(1)));

  // conjugation on so3 matches matrix action on K^3, and the pairing transfers
  Rng rng(99);
  auto t1 = generic_skew(tb, 1);
  for (int it = 0; it < 3; ++it) {
    auto g = so3_sample(tb, rng.small_rational(), rng.small_rational(), rng.small_rational());
    auto lhs = so3_vector(g * t1 * g.transpose());
    auto v = so3_vector(t1);
    for (int i = 0; i < 3; ++i) {
      MultiPoly rhs = MultiPoly::zero(tb);
      for (int j = 0; j < 3; ++j) rhs += g.at(i, j) * v[j];
      CHECK(lhs[i] == rhs);
    }
  }
  auto t1v = so3_vector(t1);
  auto pair11 = t1v[0] * t1v[0] + t1v[1] * t1v[1] + t1v[2] * t1v[2];
  CHECK(pair11 == trace_of_product(t1, t1).scaled(rational(-1, 2)));
}

TEST_CASE("conjugation substitution fixes trace invariants") {
  auto tb = VarTable::skew(3, false);
  auto t1 = generic_skew(tb, 1), t2 = generic_skew(tb, 2), t3 = generic_skew(tb, 3);
  Rng rng(7);
  for (int it = 0; it < 3; ++it) {
    auto g = so3_sample(tb, rng.small_rational(), rng.small_rational(), rng.small_rational());
    auto sub = conjugation_substitution(tb, g);
    CHECK(trace_of_product(t1, t2).substitute(sub) == trace_of_product(t1, t2));
    auto tr123 = trace_of_product(t1 * t2, t3);
    CHECK(tr123.substitute(sub) == tr123);
  }
}

TEST_CASE("matrix rendering") {
  auto tb = VarTable::coeffs(1);
  CHECK(PolyMatrix::identity(tb).str() == "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]");
}
