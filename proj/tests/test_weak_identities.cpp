#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3cov/weak_identities.hpp"

using namespace so3cov;

namespace {
FreePoly x(int i, int p = 3) { return FreePoly::generator(p, i); }
}

TEST_CASE("weak identity verdicts") {
  auto id3 = x(1, 2) * commutator(x(1, 2), x(2, 2)) * x(1, 2);
  auto v = check_weak(id3, 2);
  CHECK(v.is_weak_identity);
  CHECK(v.is_weak_central);

  auto s3 = FreePoly::standard_poly(3, 4);
  auto f = s3 * x(4, 4) - x(4, 4) * s3;
  CHECK(check_weak(f, 4).is_weak_identity);

  auto comm = commutator(x(1, 2), x(2, 2));
  auto vc = check_weak(comm, 2);
  CHECK(!vc.is_weak_identity);
  CHECK(!vc.is_weak_central);
  CHECK(!vc.witness.empty());

  // s3 itself is central but not an identity
  auto vs = check_weak(FreePoly::standard_poly(3, 3), 3);
  CHECK(!vs.is_weak_identity);
  CHECK(vs.is_weak_central);

  CHECK_THROWS_AS((void)check_weak(x(1, 2), 6), std::invalid_argument);
  CHECK_THROWS_AS((void)check_weak(x(4, 4), 3), std::invalid_argument);
}

TEST_CASE("razmyslov suite") {
  for (const auto& r : razmyslov_suite()) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("ART polynomials") {
  auto x1 = x(1, 2), x2 = x(2, 2);

  // q = 3: the factors are L(L - ad), and the result is the third basis
  // identity with the variables swapped
  auto art3 = art_polynomial(3);
  CHECK(art3.total_degree() == 4);
  CHECK(art3 == x2 * x2 * x1 * x2 - x2 * x1 * x2 * x2);
  CHECK(art3 == -(x2 * commutator(x1, x2) * x2));
  CHECK(check_weak(art3, 2).is_weak_identity);

  // q = 2 reduces to 1/2 [x2^2, x1]; not a weak identity of the 3x3 pair
  auto art2 = art_polynomial(2);
  CHECK(art2 == commutator(x2 * x2, x1).scaled(rational(1, 2)));
  CHECK(!check_weak(art2, 2).is_weak_identity);

  CHECK_THROWS_AS((void)art_polynomial(1), std::invalid_argument);
}

TEST_CASE("central suite") {
  auto results = central_suite(3, 2, 2);
  CHECK(!results.empty());
  for (const auto& r : results) {
    INFO(r.id << ": " << r.detail);
    CHECK(r.ok);
  }
  // the explicit base case [x1,x2]^2 - 1/3(...) is central and not an identity
  auto quad = x(1) * x(1) * x(2) * x(2) - x(1) * x(2) * x(2) * x(1) -
              x(2) * x(1) * x(1) * x(2) + x(2) * x(2) * x(1) * x(1);
  auto base = commutator(x(1), x(2)).pow(2) - quad.scaled(rational(1, 3));
  auto v = check_weak(base, 3);
  CHECK(v.is_weak_central);
  CHECK(!v.is_weak_identity);
}

TEST_CASE("w' recursion transfers centrality") {
  // w'_{mu1+1}(a1, b2) = -w'_{mu1}(a1, b2) for concrete a1 and generic b2
  auto tb = VarTable::skew(2, false);
  auto a = concrete_basis(tb);
  std::vector<PolyMatrix> args{a[0], generic_skew(tb, 2)};
  auto c12 = commutator(x(1, 2), x(2, 2));
  auto w_prime = [&](int mu1) {
    return c12 * c12 * x(1, 2).pow(2 * mu1) -
           c12 * (x(1, 2).pow(2 * mu1 + 1) * x(2, 2) - x(2, 2) * x(1, 2).pow(2 * mu1 + 1)) +
           (x(1, 2).pow(3) * x(2, 2).pow(2) - x(1, 2) * x(2, 2) * x(1, 2) * x(2, 2) * x(1, 2) -
            x(2, 2) * x(1, 2).pow(3) * x(2, 2) + x(2, 2).pow(2) * x(1, 2).pow(3)) *
               x(1, 2).pow(2 * mu1 - 1);
  };
  for (int mu1 = 1; mu1 <= 2; ++mu1)
    CHECK(w_prime(mu1 + 1).evaluate(args) == -w_prime(mu1).evaluate(args));
}

TEST_CASE("cocharacter lower bounds across the parity cases") {
  std::vector<Partition> nus{
      Partition{4, 2},    Partition{2, 2},  Partition{6, 2},    Partition{4, 4},
      Partition{3, 1, 1}, Partition{5, 1, 1}, Partition{2, 2, 2}, Partition{4, 2, 2},
      Partition{3, 1},    Partition{3, 3},  Partition{1, 1},    Partition{2, 1},
      Partition{3, 2},    Partition{4, 3},  Partition{1},       Partition{5},
      Partition{4},       Partition{6},     Partition{},        Partition{4, 2, 1},
      Partition{3, 2, 1}, Partition{3, 3, 2}, Partition{4, 4, 2}, Partition{5, 4, 3},
      Partition{12},      Partition{6, 4, 2}};
  for (const auto& nu : nus) {
    auto cert = cocharacter_lower_bound(nu);
    INFO(nu.str() << ": " << cert.detail);
    CHECK(cert.ok);
    CHECK(cert.rank == multiplicity_F(nu));
  }
}

TEST_CASE("independence of seed evaluations survives each promotion") {
  auto tb = VarTable::coeffs(1);
  auto a = concrete_basis(tb);
  std::vector<PolyMatrix> as{a[0], a[1], a[2]};
  for (const auto& nu :
       {Partition{4, 2}, Partition{2, 2}, Partition{3, 1, 1}, Partition{3, 1}, Partition{1, 1},
        Partition{2, 1}, Partition{3, 2}, Partition{1}, Partition{}}) {
    auto fam = seed_family(nu);
    REQUIRE(fam.has_value());
    int m = static_cast<int>(fam->polys.size());
    auto rank_of = [&](const std::vector<FreePoly>& ws) {
      std::vector<PolyMatrix> ev;
      for (const auto& w : ws) ev.push_back(w.evaluate(as));
      auto [rows, nc] = matrices_to_rows(ev);
      return rank_over_Q(rows);
    };
    std::vector<FreePoly> after2, after3, after1;
    bool has_iota1 = true;
    for (std::size_t i = 0; i < fam->polys.size(); ++i) {
      after2.push_back(iota2(fam->polys[i]));
      after3.push_back(iota3(fam->polys[i]));
      auto q = largest_admissible_q(fam->tableaux[i]);
      if (q.has_value() && fam->tableaux[i].shape.part(0) > fam->tableaux[i].shape.part(1))
        after1.push_back(iota1q({fam->polys[i], fam->tableaux[i]}, *q).poly);
      else
        has_iota1 = false;
    }
    CHECK(rank_of(after2) == m);
    CHECK(rank_of(after3) == m);
    if (has_iota1) CHECK(rank_of(after1) == m);
  }
}

TEST_CASE("cocharacter equality at low degree") {
  for (int n = 0; n <= 4; ++n) {
    auto rep = cocharacter_equality_check(n, Algebra::F3);
    INFO(rep.detail);
    CHECK(rep.ok);
  }
  auto repE = cocharacter_equality_check(3, Algebra::E3);
  CHECK(repE.ok);
  auto repC = cocharacter_equality_check(4, Algebra::CenterE);
  CHECK(repC.ok);
  auto repCF = cocharacter_equality_check(4, Algebra::CenterF);
  CHECK(repCF.ok);
}
