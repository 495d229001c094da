#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3cov/covariants.hpp"

using namespace so3cov;

TEST_CASE("trace generators and the sign rule") {
  CovariantLab L(3, true);
  CHECK(L.tr3(2, 1, 3) == -L.tr3(1, 2, 3));
  CHECK(L.tr3(3, 1, 2) == L.tr3(1, 2, 3));
  CHECK(L.tr3(1, 1, 2).is_zero());
  CHECK(L.iota(L.I()) == L.z().trace());
}

TEST_CASE("every displayed relation verifies") {
  for (const auto& [id, location] : relation_catalog()) {
    INFO(id);
    CHECK(verify_relation(id));
  }
  CHECK_THROWS_AS((void)verify_relation("no_such"), std::invalid_argument);
}

TEST_CASE("iota images and C2/C3 highest weight facts") { CHECK(iota_images_check()); }

TEST_CASE("iota preserves independence") {
  CovariantLab L(3, true);
  std::vector<PolyMatrix> ms{L.I(), L.t(1), L.t(2), L.t(1) * L.t(1), L.t(1) * L.t(2),
                             L.t(2) * L.t(1)};
  auto [mrows, mc] = matrices_to_rows(ms);
  std::vector<MultiPoly> images;
  for (const auto& m : ms) images.push_back(L.iota(m));
  auto [irows, ic] = polys_to_rows(images);
  CHECK(rank_over_Q(mrows) == static_cast<int>(ms.size()));
  CHECK(rank_over_Q(irows) == static_cast<int>(ms.size()));
}

TEST_CASE("P-monomial enumeration") {
  CHECK(p_monomial_exponents({0, 0, 0}).size() == 1);
  CHECK(p_monomial_exponents({1, 0, 0}).empty());
  CHECK(p_monomial_exponents({1, 1, 1}).empty());
  CHECK(p_monomial_exponents({2, 0, 0}).size() == 1);
  CHECK(p_monomial_exponents({1, 1, 0}).size() == 1);
  CHECK(p_monomial_exponents({2, 2, 2}).size() == 5);
  // total count at degree 2m equals the number of monomials of degree m in 6 variables
  long total = 0;
  for (int d0 = 0; d0 <= 4; ++d0)
    for (int d1 = 0; d0 + d1 <= 4; ++d1) {
      int d2 = 4 - d0 - d1;
      total += static_cast<long>(p_monomial_exponents({d0, d1, d2}).size());
    }
  CHECK(total == 21);  // C(2+5,5)
}

TEST_CASE("graded dimension oracle against the multiplicity formulas") {
  CHECK(graded_dim_oracle(Algebra::F3, {2, 0, 0}) == 1);
  CHECK(graded_dim_oracle(Algebra::E3, {2, 0, 0}) == 2);
  CHECK(graded_dim_oracle(Algebra::F3, {1, 1, 0}) == 2);
  CHECK(dim_from_multiplicities(Algebra::F3, {1, 1, 0}) == 2);
  // full sweep in low degrees, all algebras
  for (int n = 0; n <= 4; ++n)
    for (int d0 = 0; d0 <= n; ++d0)
      for (int d1 = 0; d0 + d1 <= n; ++d1) {
        std::array<int, 3> d{d0, d1, n - d0 - d1};
        INFO(d[0] << "," << d[1] << "," << d[2]);
        CHECK(graded_dim_oracle(Algebra::F3, d) == dim_from_multiplicities(Algebra::F3, d));
        CHECK(graded_dim_oracle(Algebra::E3, d) == dim_from_multiplicities(Algebra::E3, d));
        if (n >= 1) {
          CHECK(graded_dim_oracle(Algebra::CenterE, d) ==
                dim_from_multiplicities(Algebra::CenterE, d));
          CHECK(graded_dim_oracle(Algebra::CenterF, d) ==
                dim_from_multiplicities(Algebra::CenterF, d));
        }
      }
}

TEST_CASE("resolution checks at reduced degree") {
  auto even = resolution_check(ResolutionKind::C3Even, 8);
  CHECK(even.composite_zero);
  CHECK(even.injective);
  CHECK(even.ok);
  // degree-4 even dimension is 36
  for (const auto& d : even.dims)
    if (d.degree == 4) CHECK(d.dim == 36);

  auto odd = resolution_check(ResolutionKind::C3Odd, 8);
  CHECK(odd.composite_zero);
  CHECK(odd.injective);
  CHECK(odd.ok);
  for (const auto& d : odd.dims)
    if (d.degree == 3) CHECK(d.dim == 8);
}

TEST_CASE("C2 is free of rank 6 at desk scale") {
  auto rep = c2_freeness_check(8);
  CHECK(rep.ok);
  for (const auto& d : rep.dims) {
    if (d.degree == 1) CHECK(d.dim == 3);
    if (d.degree == 2) CHECK(d.dim == 3);
    if (d.degree == 3) CHECK(d.dim == 18);  // 3 * C(1+5,5)
  }
}

TEST_CASE("compressed block ranks agree with symbolic ranks in low degree") {
  // full symbolic elimination of every block as the second route
  for (auto kind : {ResolutionKind::C3Even, ResolutionKind::C3Odd}) {
    auto fast = resolution_check(kind, 7, 1);
    auto slow = resolution_check(kind, 7, 1, true);
    CHECK(slow.ok);
    REQUIRE(fast.dims.size() == slow.dims.size());
    for (std::size_t i = 0; i < fast.dims.size(); ++i) CHECK(fast.dims[i].dim == slow.dims[i].dim);
  }
  auto fast = c2_freeness_check(7, 1);
  auto slow = c2_freeness_check(7, 1, true);
  CHECK(slow.ok);
  for (std::size_t i = 0; i < fast.dims.size(); ++i) CHECK(fast.dims[i].dim == slow.dims[i].dim);

  // seed stability of the evaluation route
  auto a = resolution_check(ResolutionKind::C3Odd, 6, 1);
  auto b = resolution_check(ResolutionKind::C3Odd, 6, 987654321);
  REQUIRE(a.dims.size() == b.dims.size());
  for (std::size_t i = 0; i < a.dims.size(); ++i) CHECK(a.dims[i].dim == b.dims[i].dim);
}

TEST_CASE("Ap-module decomposition of E3") {
  auto rep = ap_decomposition_check(4);
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("equivariance on Cayley samples") { CHECK(equivariance_check(20250808, 3)); }

TEST_CASE("P-algebra facts") {
  CHECK(palgebra_jacobian_independent());
  CHECK(tr123_squared_in_P());
  CHECK(tr123_not_in_P());
}

TEST_CASE("E/F split at (2k,0,0)") { CHECK(ef_split_check(4)); }
