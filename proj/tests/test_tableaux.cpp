#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3cov/rng.hpp"
#include "so3cov/tableaux.hpp"

using namespace so3cov;

namespace {
FreePoly x(int i, int p = 3) { return FreePoly::generator(p, i); }

std::vector<PolyMatrix> basis_matrices(const VarTable::Ptr& tb) {
  auto a = concrete_basis(tb);
  return {a[0], a[1], a[2]};
}
}  // namespace

TEST_CASE("partition basics") {
  Partition l{4, 2, 1};
  CHECK(l.size() == 7);
  CHECK(l.conjugate() == Partition{3, 2, 1, 1});
  CHECK(l.conjugate().conjugate() == l);
  CHECK(l.column_lengths() == std::vector<int>{3, 2, 1, 1});
  CHECK(Partition{}.size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(partitions_of(4, 3).size() == 4);  // (4),(3,1),(2,2),(2,1,1)
}

TEST_CASE("semistandard enumeration and Kostka numbers") {
  CHECK(kostka(Partition{3, 1}, {3, 1, 0}) == 1);
  CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
  // the two standard (2,1)-tableaux, in lexicographic row-reading order
  auto list = enumerate_ssyt(Partition{2, 1}, {1, 1, 1});
  REQUIRE(list.size() == 2);
  CHECK(list[0].str() == "1 2/3");
  CHECK(list[1].str() == "1 3/2");
  for (const auto& t : list) CHECK(t.is_standard());

  // K(lambda, lambda) = 1: the row-constant filling
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      std::vector<int> c(static_cast<std::size_t>(l.rows()));
      for (int i = 0; i < l.rows(); ++i) c[static_cast<std::size_t>(i)] = l.parts()[i];
      CHECK(kostka(l, c) == 1);
    }
}

TEST_CASE("Kostka symmetry under permuting the content") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n, 3))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          int c = n - a - b;
          long base = kostka(l, {a, b, c});
          CHECK(kostka(l, {a, c, b}) == base);
          CHECK(kostka(l, {b, a, c}) == base);
          CHECK(kostka(l, {c, b, a}) == base);
        }
}

TEST_CASE("tableau <-> permutation bijection") {
  CHECK(tableau_from_permutation(Partition{1, 1, 1}, Perm::identity(3)).str() == "1/2/3");

  // worked example: rho^{-1} = [1,5,3,2,4], lambda = (2,2,1)
  Perm rho = Perm({1, 5, 3, 2, 4}).inverse();
  auto t = tableau_from_permutation(Partition{2, 2, 1}, rho);
  CHECK(t.str() == "1 2/5 4/3");
  CHECK(permutation_from_tableau(t) == rho);

  Rng rng(1234);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.range(1, 7));
    auto parts = partitions_of(n, 5);
    const auto& l = parts[rng.next() % parts.size()];
    auto perms = all_perms(n);
    const auto& p = perms[rng.next() % perms.size()];
    CHECK(permutation_from_tableau(tableau_from_permutation(l, p)) == p);
  }
}

TEST_CASE("highest weight vector construction") {
  CHECK(hwv_from_permutation(Partition{4}, Perm::identity(4), 3) == x(1).pow(4));

  // the (2,2) tableau 12/34 gives the four-term polynomial
  auto t22 = Tableau::of(Partition{2, 2}, {{1, 2}, {3, 4}});
  auto w22 = hwv_from_tableau(t22, 3);
  CHECK(w22 == x(1) * x(1) * x(2) * x(2) - x(1) * x(2) * x(2) * x(1) - x(2) * x(1) * x(1) * x(2) +
                   x(2) * x(2) * x(1) * x(1));
  // and it is ([x1,x2]^2)^pi for pi swapping places 2,3
  CHECK(w22 == commutator(x(1), x(2)).pow(2).place_permute(Perm({1, 3, 2, 4})));

  // worked example: the double sum over S3 x S2 with sign products
  Perm rho = Perm({1, 5, 3, 2, 4}).inverse();
  auto w = hwv_from_permutation(Partition{2, 2, 1}, rho, 3);
  FreePoly oracle = FreePoly::zero(3);
  for (const auto& s1 : all_perms(3))
    for (const auto& s2 : all_perms(2)) {
      Word word{static_cast<std::uint8_t>(s1(1)), static_cast<std::uint8_t>(s2(1)),
                static_cast<std::uint8_t>(s1(3)), static_cast<std::uint8_t>(s2(2)),
                static_cast<std::uint8_t>(s1(2))};
      oracle += FreePoly::from_terms(3, {{word, rational(s1.sign() * s2.sign())}});
    }
  CHECK(w == oracle);
  CHECK(w.is_highest_weight());
  CHECK(w.multidegree() == std::vector<int>{2, 2, 1});
}

TEST_CASE("every tableau hwv is annihilated by raising operators") {
  Rng rng(777);
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      auto perms = all_perms(n);
      for (int it = 0; it < 3; ++it) {
        const auto& p = perms[rng.next() % perms.size()];
        auto w = hwv_from_permutation(l, p, 3);
        CHECK(w.is_highest_weight());
        CHECK(w.multidegree() == std::vector<int>{l.part(0), l.part(1), l.part(2)});
      }
    }
}

TEST_CASE("products of hwvs are hwvs with added weights") {
  auto w1 = hwv_from_tableau(Tableau::of(Partition{2, 1}, {{1, 3}, {2}}), 3);
  auto w2 = FreePoly::standard_poly(3, 3);
  auto prod = w1 * w2;
  CHECK(prod.is_highest_weight());
  CHECK(prod.multidegree() == std::vector<int>{3, 2, 1});
}

TEST_CASE("box deletion and the nine placements of {4,5}") {
  // lambda with lambda1-lambda2, lambda2-lambda3, lambda3 all >= 2
  Partition lambda{6, 4, 2};
  std::vector<std::pair<Partition, long>> expected{
      {Partition{4, 4, 2}, 1}, {Partition{6, 2, 2}, 1}, {Partition{6, 4}, 1},
      {Partition{5, 3, 2}, 2}, {Partition{5, 4, 1}, 2}, {Partition{6, 3, 1}, 2}};
  long total = 0;
  for (const auto& [nu, count] : expected) {
    std::vector<int> content{nu.part(0), nu.part(1), nu.part(2), 1, 1};
    long hits = 0;
    for (const auto& t : enumerate_ssyt(lambda, content)) {
      auto d = delete_values(t, {4, 5});
      REQUIRE(d.has_value());
      if (*d == superstandard(nu)) ++hits;
    }
    CHECK(hits == count);
    total += hits;
  }
  CHECK(total == 9);
}

TEST_CASE("deletion multiset multiplicities for small shapes") {
  // multiplicity 2 exactly for the three listed cases, 1 otherwise
  for (int n = 2; n <= 8; ++n)
    for (int delta : {0, 1})
      for (const auto& mu : partitions_of((n - 3 * delta) / 2, 3)) {
        if (2 * mu.size() + 3 * delta != n) continue;
        Partition lambda{2 * mu.part(0) + delta, 2 * mu.part(1) + delta, 2 * mu.part(2) + delta};
        std::vector<std::pair<std::vector<int>, Partition>> candidates;
        auto add = [&](int d0, int d1, int d2) {
          std::vector<int> p{lambda.part(0) - d0, lambda.part(1) - d1, lambda.part(2) - d2};
          if (p[0] >= p[1] && p[1] >= p[2] && p[2] >= 0)
            candidates.push_back({{p[0], p[1], p[2]}, Partition(p)});
        };
        add(2, 0, 0);
        add(0, 2, 0);
        add(0, 0, 2);
        add(1, 1, 0);
        add(1, 0, 1);
        add(0, 1, 1);
        for (const auto& [pv, nu] : candidates) {
          std::vector<int> content{pv[0], pv[1], pv[2], 1, 1};
          long hits = 0;
          for (const auto& t : enumerate_ssyt(lambda, content)) {
            auto d = delete_values(t, {4, 5});
            if (d.has_value() && *d == superstandard(nu)) ++hits;
          }
          std::vector<int> l3{lambda.part(0), lambda.part(1), lambda.part(2)};
          long want = 1;
          if (pv == std::vector<int>{l3[0] - 1, l3[1] - 1, l3[2]} && l3[0] > l3[1])
            want = 2;
          else if (pv == std::vector<int>{l3[0], l3[1] - 1, l3[2] - 1} && l3[1] > l3[2])
            want = 2;
          else if (pv == std::vector<int>{l3[0] - 1, l3[1], l3[2] - 1})
            want = 2;
          CHECK(hits == want);
        }
      }
}

TEST_CASE("iota operators") {
  // iota3 applied to the empty hwv gives s3
  CHECK(iota3(FreePoly::one(3)) == FreePoly::standard_poly(3, 3));

  // iota1q on w = x1 with q = 1 gives x1^3 of weight (3)
  HwvState st{x(1), Tableau::of(Partition{1}, {{1}})};
  auto st2 = iota1q(st, 1);
  CHECK(st2.poly == x(1).pow(3));
  CHECK(st2.poly.multidegree() == std::vector<int>{3, 0, 0});
  CHECK(st2.tableau.str() == "1 2 3");
  CHECK(st2.poly.is_highest_weight());

  // weights after promotion
  auto fam = seed_family(Partition{4, 2});
  REQUIRE(fam.has_value());
  for (std::size_t i = 0; i < fam->polys.size(); ++i) {
    HwvState s{fam->polys[i], fam->tableaux[i]};
    auto q = largest_admissible_q(s.tableau);
    REQUIRE(q.has_value());
    auto up = iota1q(s, *q);
    CHECK(up.poly.is_highest_weight());
    CHECK(up.poly.multidegree() == std::vector<int>{6, 2, 0});
    CHECK(iota2(fam->polys[i]).is_highest_weight());
    CHECK(iota2(fam->polys[i]).multidegree() == std::vector<int>{6, 4, 0});
    CHECK(iota3(fam->polys[i]).is_highest_weight());
    CHECK(iota3(fam->polys[i]).multidegree() == std::vector<int>{5, 3, 1});
  }

  // preconditions
  HwvState bad{commutator(x(1), x(2)), Tableau::of(Partition{1, 1}, {{1}, {2}})};
  CHECK_THROWS_AS(iota1q(bad, 1), std::invalid_argument);
  CHECK_THROWS_AS(iota1q(st, 2), std::invalid_argument);
}

TEST_CASE("iota1q flips the sign of evaluations at the concrete basis") {
  auto tb = VarTable::coeffs(1);
  auto as = basis_matrices(tb);
  for (const auto& nu : {Partition{4, 2}, Partition{3, 1}, Partition{2, 1}, Partition{3, 2}}) {
    auto fam = seed_family(nu);
    REQUIRE(fam.has_value());
    for (std::size_t i = 0; i < fam->polys.size(); ++i) {
      HwvState s{fam->polys[i], fam->tableaux[i]};
      auto q = largest_admissible_q(s.tableau);
      REQUIRE(q.has_value());
      auto up = iota1q(s, *q);
      CHECK(up.poly.evaluate(as) == -fam->polys[i].evaluate(as));
    }
  }
}

TEST_CASE("the nine seed families match their explicit forms and tables") {
  auto tb = VarTable::coeffs(1);
  auto as = basis_matrices(tb);
  auto s3 = FreePoly::standard_poly(3, 3);
  auto c12 = commutator(x(1), x(2));

  FreePoly sigma_split = FreePoly::zero(3);  // sum of sign(s) x_{s1} x_{s2} x1^2 x_{s3}
  for (const auto& s : all_perms(3))
    sigma_split += (x(s(1)) * x(s(2)) * x(1) * x(1) * x(s(3))).scaled(rational(s.sign()));

  struct Case {
    Partition nu;
    std::vector<FreePoly> polys;
    std::vector<std::array<std::array<long, 3>, 3>> tables;
  };
  std::vector<Case> cases{
      {Partition{4, 2},
       {c12.pow(2) * x(1).pow(2), c12 * (x(1).pow(3) * x(2) - x(2) * x(1).pow(3)),
        (x(1).pow(3) * x(2).pow(2) - x(1) * x(2) * x(1) * x(2) * x(1) -
         x(2) * x(1).pow(3) * x(2) + x(2).pow(2) * x(1).pow(3)) *
            x(1)},
       {{{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}},
        {{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
        {{{-1, 0, 0}, {0, -1, 0}, {0, 0, 0}}}}},
      {Partition{2, 2},
       {c12.pow(2), x(1) * x(1) * x(2) * x(2) - x(1) * x(2) * x(2) * x(1) -
                        x(2) * x(1) * x(1) * x(2) + x(2) * x(2) * x(1) * x(1)},
       {{{{0, 0, 0}, {0, -1, 0}, {0, 0, -1}}}, {{{2, 0, 0}, {0, -1, 0}, {0, 0, -1}}}}},
      {Partition{3, 1, 1},
       {s3 * x(1).pow(2), sigma_split},
       {{{{-2, 0, 0}, {0, -2, 0}, {0, 0, 0}}}, {{{-1, 0, 0}, {0, -1, 0}, {0, 0, -2}}}}},
      {Partition{}, {FreePoly::one(3)}, {{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}},
      {Partition{3, 1},
       {c12 * x(1).pow(2), x(1).pow(2) * c12},
       {{{{0, 0, 0}, {0, 0, 0}, {0, -1, 0}}}, {{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}}}},
      {Partition{1, 1}, {c12}, {{{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}}}},
      {Partition{2, 1},
       {c12 * x(1), x(1) * c12},
       {{{{0, 0, 0}, {0, 0, 0}, {-1, 0, 0}}}, {{{0, 0, -1}, {0, 0, 0}, {0, 0, 0}}}}},
      {Partition{3, 2},
       {c12.pow(2) * x(1), x(1) * c12.pow(2)},
       {{{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}}, {{{0, -1, 0}, {0, 0, 0}, {0, 0, 0}}}}},
      {Partition{1}, {x(1)}, {{{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}}}},
  };

  for (const auto& c : cases) {
    auto fam = seed_family(c.nu);
    REQUIRE(fam.has_value());
    REQUIRE(fam->polys.size() == c.polys.size());
    std::vector<PolyMatrix> evals;
    for (std::size_t i = 0; i < c.polys.size(); ++i) {
      CHECK(fam->polys[i] == c.polys[i]);
      auto ev = fam->polys[i].evaluate(as);
      CHECK(ev == PolyMatrix::constant_int(tb, c.tables[i]));
      evals.push_back(ev);
    }
    auto [rows, ncols] = matrices_to_rows(evals);
    CHECK(rank_over_Q(rows) == static_cast<int>(evals.size()));
  }
  CHECK(!seed_family(Partition{5, 5}).has_value());
}
