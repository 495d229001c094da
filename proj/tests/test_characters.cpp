#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3cov/characters.hpp"

using namespace so3cov;

namespace {
MultiPoly tau_mono(const VarTable::Ptr& tb, int a, int b, int c) {
  return MultiPoly::from_terms(
      tb, {{Monomial::var(tb->tau_var(1), a) * Monomial::var(tb->tau_var(2), b) *
                Monomial::var(tb->tau_var(3), c),
            rational(1)}});
}
}  // namespace

TEST_CASE("Schur polynomials in three variables") {
  auto tb = VarTable::tau();
  CHECK(schur_poly(Partition{2, 2, 2}, tb) == tau_mono(tb, 2, 2, 2));
  CHECK(schur_poly(Partition{1, 1}, tb) ==
        tau_mono(tb, 1, 1, 0) + tau_mono(tb, 1, 0, 1) + tau_mono(tb, 0, 1, 1));

  // S_(2,1) = sum_{i != j} tau_i^2 tau_j + 2 tau_1 tau_2 tau_3
  MultiPoly s21 = tau_mono(tb, 1, 1, 1).scaled(rational(2));
  s21 += tau_mono(tb, 2, 1, 0) + tau_mono(tb, 2, 0, 1) + tau_mono(tb, 1, 2, 0) +
         tau_mono(tb, 0, 2, 1) + tau_mono(tb, 1, 0, 2) + tau_mono(tb, 0, 1, 2);
  CHECK(schur_poly(Partition{2, 1}, tb) == s21);

  // coefficient of tau^mu is the Kostka number
  auto s = schur_poly(Partition{3, 1}, tb);
  CHECK(s.coefficient(Monomial::var(0, 2) * Monomial::var(1, 1) * Monomial::var(2, 1)) ==
        rational(kostka(Partition{3, 1}, {2, 1, 1})));
  // dimension = value at (1,1,1) = sum of Kostka numbers
  CHECK(s.eval({rational(1), rational(1), rational(1)}) == rational(15));
}

TEST_CASE("Schur symmetry and the first Pieri case") {
  auto tb = VarTable::tau();
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      auto s = schur_poly(l, tb);
      CHECK_NOTHROW((void)schur_decompose(s, n));  // symmetric by construction
    }
  auto s1 = schur_poly(Partition{1}, tb);
  CHECK(s1 * s1 == schur_poly(Partition{2}, tb) + schur_poly(Partition{1, 1}, tb));
}

TEST_CASE("series expansion") {
  auto t1 = VarTable::tau(1);
  auto x = MultiPoly::variable(t1, 0);
  RationalSeries geo(MultiPoly::constant(t1, rational(1)), {Monomial::var(0)});
  CHECK(geo.expand(3) == MultiPoly::constant(t1, rational(1)) + x + x * x + x * x * x);

  auto tb = VarTable::tau();
  auto h1 = hilbert_C1(tb);
  auto e2 = h1.expand(2);
  MultiPoly want = MultiPoly::constant(tb, rational(1));
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      want += MultiPoly::variable(tb, tb->tau_var(i)) * MultiPoly::variable(tb, tb->tau_var(j));
  CHECK(e2 == want);
  // the degree-3 slice of C1 is one-dimensional
  CHECK(h1.expand(3).coefficient(Monomial::var(0) * Monomial::var(1) * Monomial::var(2)) ==
        rational(1));

  CHECK(hilbert_C2(tb).expand(1).coefficient(Monomial::var(0)) == rational(1));
  CHECK(hilbert_C3(tb).expand(0).is_zero());
}

TEST_CASE("univariate specialization splits by parity") {
  auto tb = VarTable::tau();
  auto t1 = VarTable::tau(1);
  auto spec = hilbert_C3(tb).univariate(t1).expand(14);
  auto even = series_C3_even(t1).expand(14);
  auto odd = series_C3_odd(t1).expand(14);
  CHECK(spec == even + odd);
  for (const auto& t : even.terms()) CHECK(t.first.degree() % 2 == 0);
  for (const auto& t : odd.terms()) CHECK(t.first.degree() % 2 == 1);
  // degree-4 even coefficient: 36
  CHECK(even.coefficient(Monomial::var(0, 4)) == rational(36));
}

TEST_CASE("greedy Schur decomposition") {
  auto tb = VarTable::tau();
  auto d = schur_decompose(schur_poly(Partition{2, 1}, tb), 3);
  REQUIRE(d.size() == 1);
  CHECK(d.at(Partition{2, 1}) == 1);

  auto s2 = schur_poly(Partition{2}, tb);
  auto d2 = schur_decompose(s2, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2.at(Partition{2}) == 1);

  CHECK_THROWS_AS((void)schur_decompose(MultiPoly::variable(tb, 0), 1), std::domain_error);
  CHECK_THROWS_AS((void)schur_decompose(-s2, 2), std::domain_error);
}

TEST_CASE("closed-form multiplicities") {
  CHECK(multiplicity_E(Partition{4, 2}) == 3);
  CHECK(multiplicity_E(Partition{2}) == 2);
  CHECK(multiplicity_F(Partition{2}) == 1);
  CHECK(multiplicity_E(Partition{2, 1}) == 2);
  CHECK(multiplicity_E(Partition{}) == 1);
  CHECK(multiplicity_F(Partition{}) == 1);
  CHECK(multiplicity_E(Partition{1}) == 1);
  CHECK(multiplicity_F(Partition{1}) == 1);
  CHECK(multiplicity_E(Partition{3, 3, 2}) == 1);
  CHECK(multiplicity_F(Partition{3, 3, 2}) == 1);
  CHECK(multiplicity_E(Partition{4, 3, 1}) == 2);
  CHECK(multiplicity_E(Partition{2, 2, 2}) == 1);
  CHECK(center_E(Partition{4, 2}) == 1);
  CHECK(center_F(Partition{4, 2}) == 1);
  CHECK(center_F(Partition{2}) == 0);
  CHECK(center_F(Partition{4, 2, 2}) == 1);
  CHECK(center_E(Partition{2, 1}) == 0);
}

TEST_CASE("Hilbert series decomposition matches the closed form") {
  auto tb = VarTable::tau();
  int N = 6;
  auto total = hilbert_C1(tb) + hilbert_C2(tb) + hilbert_C3(tb);
  auto mult = schur_decompose(total.expand(N), N);
  for (int n = 0; n <= N; ++n)
    for (const auto& nu : partitions_of(n, 3)) {
      long got = mult.count(nu) ? mult.at(nu) : 0;
      CHECK(got == multiplicity_E(nu));
    }
}

TEST_CASE("tableau-deletion route matches the closed form") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& nu : partitions_of(n, 3))
      CHECK(multiplicity_by_deletion(nu) == multiplicity_E(nu));
}

TEST_CASE("invariant ring character is multiplicity-free on even-difference shapes") {
  auto tb = VarTable::tau();
  int N = 8;
  auto mult = schur_decompose(hilbert_C1(tb).expand(N), N);
  for (int n = 0; n <= N; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      long got = mult.count(l) ? mult.at(l) : 0;
      CHECK(got == center_E(l));
    }
}

TEST_CASE("table export") {
  auto rows = multiplicity_table(2);
  auto csv = multiplicity_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) == "nu1,nu2,nu3,m_E,m_F,center_E,center_F");
  CHECK(csv.find("2,0,0,2,1,1,0") != std::string::npos);
  CHECK(csv.find("1,1,0,1,1,0,0") != std::string::npos);
  auto json = multiplicity_json(rows);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
}
