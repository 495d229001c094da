#include "so3cov/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "so3cov/rng.hpp"
#include "so3cov/weak_identities.hpp"

namespace so3cov {

namespace {

struct Check {
  std::string id;
  std::string location;
  std::function<std::pair<bool, std::string>(const VerifyOptions&)> run;
};

std::pair<bool, std::string> from_suite(const std::vector<SuiteResult>& suite,
                                        const std::string& id) {
  for (const auto& r : suite)
    if (r.id == id) return {r.ok, r.detail};
  return {false, "missing suite entry"};
}

// ---- property checks shared with the acceptance suite -----------------------

std::pair<bool, std::string> prop_ring_axioms(std::uint64_t seed) {
  Rng rng(seed);
  auto tb = VarTable::skew(2, true);
  auto random_poly = [&]() {
    std::vector<MultiPoly::Term> terms;
    int n = static_cast<int>(rng.range(0, 5));
    for (int t = 0; t < n; ++t) {
      Monomial m;
      int d = static_cast<int>(rng.range(0, 3));
      for (int i = 0; i < d; ++i) m = m * Monomial::var(static_cast<int>(rng.range(0, tb->size() - 1)));
      terms.push_back({m, rng.small_rational()});
    }
    return MultiPoly::from_terms(tb, std::move(terms));
  };
  for (int it = 0; it < 25; ++it) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    if (!((a * b) * c == a * (b * c))) return {false, "associativity"};
    if (!(a * (b + c) == a * b + a * c)) return {false, "distributivity"};
    std::map<int, MultiPoly> sub{{0, random_poly()}, {4, random_poly()}};
    if (!((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub)))
      return {false, "substitution homomorphism"};
  }
  // evaluation is multiplicative on the free side
  auto t1 = generic_skew(tb, 1), t2 = generic_skew(tb, 2);
  std::vector<PolyMatrix> ts{t1, t2};
  for (int it = 0; it < 5; ++it) {
    std::vector<FreePoly::Term> fa, fb;
    for (int t = 0; t < 3; ++t) {
      Word w(static_cast<std::size_t>(rng.range(0, 3)));
      for (auto& l : w) l = static_cast<std::uint8_t>(rng.range(1, 2));
      fa.push_back({w, rng.small_rational()});
      fb.push_back({w, rng.small_rational()});
    }
    auto f = FreePoly::from_terms(2, fa), g = FreePoly::from_terms(2, fb);
    if (!((f * g).evaluate(ts) == f.evaluate(ts) * g.evaluate(ts)))
      return {false, "evaluation homomorphism"};
  }
  return {true, "ring axioms, substitution and evaluation homomorphisms"};
}

std::pair<bool, std::string> prop_combinatorics() {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n, 3))
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          long base = kostka(l, {a, b, n - a - b});
          if (kostka(l, {b, a, n - a - b}) != base || kostka(l, {n - a - b, b, a}) != base)
            return {false, "Kostka symmetry"};
        }
  auto tau = VarTable::tau();
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      auto s = schur_poly(l, tau);
      try {
        (void)schur_decompose(s, n);  // throws when not symmetric
      } catch (const std::domain_error&) {
        return {false, "Schur symmetry"};
      }
      long total = 0;
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) total += kostka(l, {a, b, n - a - b});
      if (s.eval({rational(1), rational(1), rational(1)}) != rational(total))
        return {false, "Kostka sum vs S(1,1,1)"};
    }
  return {true, "Kostka symmetry and Schur characters"};
}

std::pair<bool, std::string> prop_linalg_two_routes(std::uint64_t seed) {
  Rng rng(seed);
  for (int it = 0; it < 40; ++it) {
    std::vector<std::vector<Rational>> dense(6, std::vector<Rational>(6, rational(0)));
    std::vector<SparseRow> rows(6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        long v = rng.range(-4, 4);
        dense[i][j] = rational(v);
        if (v) rows[static_cast<std::size_t>(i)].e.push_back({j, rational(v)});
      }
    if (it % 4 == 0) {
      dense[5] = dense[1];
      rows[5] = rows[1];
    }
    // second method: plain rational row reduction
    int rank2 = 0;
    {
      auto m = dense;
      for (int c = 0; c < 6; ++c) {
        int pivot = -1;
        for (int r = rank2; r < 6; ++r)
          if (!is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
            pivot = r;
            break;
          }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank2)]);
        for (int r = 0; r < 6; ++r) {
          if (r == rank2 || is_zero(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) continue;
          Rational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                       m[static_cast<std::size_t>(rank2)][static_cast<std::size_t>(c)];
          for (int cc = 0; cc < 6; ++cc)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
                f * m[static_cast<std::size_t>(rank2)][static_cast<std::size_t>(cc)];
        }
        ++rank2;
      }
    }
    if (rank_over_Q(rows) != rank2) return {false, "rank mismatch between methods"};
  }
  return {true, "fraction-free rank agrees with rational row reduction"};
}

std::pair<bool, std::string> check_hwv_worked_example() {
  Perm rho = Perm({1, 5, 3, 2, 4}).inverse();
  auto t = tableau_from_permutation(Partition{2, 2, 1}, rho);
  if (t.str() != "1 2/5 4/3") return {false, "tableau rendering: " + t.str()};
  auto w = hwv_from_permutation(Partition{2, 2, 1}, rho, 3);
  const std::string golden =
      "-x1.x1.x2.x2.x3 + x1.x1.x3.x2.x2 + x1.x2.x2.x1.x3 - x1.x2.x3.x1.x2 + x2.x1.x1.x2.x3 - "
      "x2.x1.x3.x2.x1 - x2.x2.x1.x1.x3 + x2.x2.x3.x1.x1 - x3.x1.x1.x2.x2 + x3.x1.x2.x2.x1 + "
      "x3.x2.x1.x1.x2 - x3.x2.x2.x1.x1";
  if (w.str() != golden) return {false, "polynomial rendering differs"};
  if (!w.is_highest_weight()) return {false, "not a highest weight vector"};
  if (permutation_from_tableau(t) != rho) return {false, "bijection round trip"};
  return {true, "tableau and polynomial reproduce byte-for-byte"};
}

std::pair<bool, std::string> check_tableau_deletion_sweep(int max_size) {
  for (int n = 2; n <= max_size; ++n)
    for (int delta : {0, 1}) {
      if ((n - 3 * delta) % 2 || n < 3 * delta) continue;
      for (const auto& mu : partitions_of((n - 3 * delta) / 2, 3)) {
        std::vector<int> lp{2 * mu.part(0) + delta, 2 * mu.part(1) + delta,
                            2 * mu.part(2) + delta};
        Partition lambda(lp);
        auto consider = [&](int d0, int d1, int d2) -> bool {
          std::vector<int> pv{lp[0] - d0, lp[1] - d1, lp[2] - d2};
          if (pv[0] < pv[1] || pv[1] < pv[2] || pv[2] < 0) return true;
          Partition nu(pv);
          std::vector<int> content{pv[0], pv[1], pv[2], 1, 1};
          long hits = 0;
          for (const auto& t : enumerate_ssyt(lambda, content)) {
            auto d = delete_values(t, {4, 5});
            if (d.has_value() && *d == superstandard(nu)) ++hits;
          }
          long want = 1;
          if (pv == std::vector<int>{lp[0] - 1, lp[1] - 1, lp[2]} && lp[0] > lp[1])
            want = 2;
          else if (pv == std::vector<int>{lp[0], lp[1] - 1, lp[2] - 1} && lp[1] > lp[2])
            want = 2;
          else if (pv == std::vector<int>{lp[0] - 1, lp[1], lp[2] - 1})
            want = 2;
          return hits == want;
        };
        if (!(consider(2, 0, 0) && consider(0, 2, 0) && consider(0, 0, 2) &&
              consider(1, 1, 0) && consider(1, 0, 1) && consider(0, 1, 1)))
          return {false, "multiplicity mismatch at lambda " + lambda.str()};
      }
    }
  return {true, "deletion multiplicities match for all admissible shapes"};
}

std::pair<bool, std::string> check_hilbert_schur(int N) {
  auto tau = VarTable::tau();
  auto total = hilbert_C1(tau) + hilbert_C2(tau) + hilbert_C3(tau);
  auto mult = schur_decompose(total.expand(N), N);
  for (int n = 0; n <= N; ++n)
    for (const auto& nu : partitions_of(n, 3)) {
      long got = mult.count(nu) ? mult.at(nu) : 0;
      if (got != multiplicity_E(nu))
        return {false, "multiplicity differs at " + nu.str()};
    }
  return {true, "Schur decomposition of the Hilbert series matches the closed form"};
}

std::pair<bool, std::string> check_univariate_split() {
  auto tau = VarTable::tau();
  auto t1 = VarTable::tau(1);
  auto specialized = hilbert_C3(tau).univariate(t1).expand(14);
  auto even = series_C3_even(t1).expand(14);
  auto odd = series_C3_odd(t1).expand(14);
  if (!(specialized == even + odd)) return {false, "parity split does not sum to the specialization"};
  auto c2spec = hilbert_C2(tau).univariate(t1).expand(14);
  if (!(c2spec == series_C2_univariate(t1).expand(14)))
    return {false, "C2 univariate series differs"};
  return {true, "univariate specializations agree with the closed forms"};
}

std::pair<bool, std::string> check_invariant_ring_mults(int N) {
  auto tau = VarTable::tau();
  auto mult = schur_decompose(hilbert_C1(tau).expand(N), N);
  for (int n = 0; n <= N; ++n)
    for (const auto& l : partitions_of(n, 3)) {
      long got = mult.count(l) ? mult.at(l) : 0;
      if (got != center_E(l)) return {false, "multiplicity differs at " + l.str()};
    }
  return {true, "multiplicity one exactly on shapes with even row differences"};
}

std::pair<bool, std::string> check_deletion_crosscheck(int N) {
  for (int n = 0; n <= N; ++n)
    for (const auto& nu : partitions_of(n, 3))
      if (multiplicity_by_deletion(nu) != multiplicity_E(nu))
        return {false, "routes disagree at " + nu.str()};
  return {true, "closed form equals the tableau-deletion count"};
}

std::pair<bool, std::string> check_cocharacter_lower(int N) {
  int count = 0;
  for (int n = 0; n <= N; ++n)
    for (const auto& nu : partitions_of(n, 3)) {
      auto cert = cocharacter_lower_bound(nu);
      if (!cert.ok)
        return {false, nu.str() + ": " + cert.detail};
      ++count;
    }
  return {true, std::to_string(count) + " certificates, all of full rank"};
}

std::pair<bool, std::string> check_cayley_hamilton() {
  auto tb = VarTable::skew(1, true);
  if (!cayley_hamilton_holds(generic_skew(tb, 1))) return {false, "fails on t1"};
  if (cayley_hamilton_holds(generic_full(tb))) return {false, "should fail on z"};
  auto a = concrete_basis(tb);
  if (!(a[0] * a[0] * a[0] == -a[0])) return {false, "a1^3 != -a1"};
  return {true, "t1^3 = 1/2 tr(t1^2) t1; fails on z; a1^3 = -a1"};
}

std::pair<bool, std::string> check_z_decomposition() {
  auto tb = VarTable::skew(1, true);
  auto z = generic_full(tb);
  auto s = sym_traceless_part(tb);
  auto u = skew_part(tb);
  bool ok = s.trace().is_zero() && (u + u.transpose()).is_zero() &&
            (PolyMatrix::identity(tb).scaled(z.trace().scaled(rational(1, 3))) + s + u == z);
  return {ok, "z = 1/3 tr(z) I + s + u with tr(s) = 0 and u skew"};
}

std::pair<bool, std::string> check_so3_sampler(std::uint64_t seed) {
  auto tb = VarTable::skew(1, false);
  Rng rng(seed);
  for (int it = 0; it < 5; ++it) {
    auto g = so3_sample(tb, rng.small_rational(), rng.small_rational(), rng.small_rational());
    if (!(g * g.transpose() == PolyMatrix::identity(tb))) return {false, "not orthogonal"};
  }
  if (!(so3_sample(tb, rational(0), rational(0), rational(0)) == PolyMatrix::identity(tb)))
    return {false, "zero sample is not the identity"};
  return {true, "g g^T = I exactly on samples"};
}

std::pair<bool, std::string> check_so3_intertwiner(std::uint64_t seed) {
  auto tb = VarTable::skew(1, false);
  auto t1 = generic_skew(tb, 1);
  Rng rng(seed);
  for (int it = 0; it < 3; ++it) {
    auto g = so3_sample(tb, rng.small_rational(), rng.small_rational(), rng.small_rational());
    auto lhs = so3_vector(g * t1 * g.transpose());
    auto v = so3_vector(t1);
    for (int i = 0; i < 3; ++i) {
      MultiPoly rhs = MultiPoly::zero(tb);
      for (int j = 0; j < 3; ++j) rhs += g.at(i, j) * v[j];
      if (!(lhs[static_cast<std::size_t>(i)] == rhs)) return {false, "equivariance fails"};
    }
  }
  auto v = so3_vector(t1);
  auto pairing = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (!(pairing == trace_of_product(t1, t1).scaled(rational(-1, 2))))
    return {false, "pairing transfer fails"};
  return {true, "a1 -> e3, a2 -> -e2, a3 -> e1 intertwines conjugation and rotation"};
}

std::pair<bool, std::string> check_center_dims(int N) {
  for (int n = 1; n <= N; ++n) {
    auto e = cocharacter_equality_check(n, Algebra::CenterE);
    if (!e.ok) return {false, "center of E3: " + e.detail};
    auto f = cocharacter_equality_check(n, Algebra::CenterF);
    if (!f.ok) return {false, "center of F3: " + f.detail};
  }
  return {true, "scalar subspace dimensions match the center multiplicities"};
}

std::pair<bool, std::string> check_art() {
  auto art3 = art_polynomial(3);
  auto x1 = FreePoly::generator(2, 1), x2 = FreePoly::generator(2, 2);
  bool ok3 = check_weak(art3, 2).is_weak_identity &&
             art3 == -(x2 * commutator(x1, x2) * x2);
  bool ok2 = !check_weak(art_polynomial(2), 2).is_weak_identity &&
             art_polynomial(2) == commutator(x2 * x2, x1).scaled(rational(1, 2));
  if (!ok3) return {false, "ART_3 check failed"};
  if (!ok2) return {false, "ART_2 check failed"};
  return {true, "ART_3 vanishes on the pair; ART_2 reduces to [x2^2,x1]/2 and does not"};
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> v;
    auto add = [&](std::string id, std::string loc,
                   std::function<std::pair<bool, std::string>(const VerifyOptions&)> fn) {
      v.push_back({std::move(id), std::move(loc), std::move(fn)});
    };

    for (const auto& [id, loc] : relation_catalog())
      add(id, loc, [id = id](const VerifyOptions&) -> std::pair<bool, std::string> {
        return {verify_relation(id), "exact polynomial identity"};
      });

    const char* razmyslov_ids[] = {
        "razmyslov_s3_commute",      "razmyslov_alternating_sum",
        "razmyslov_x1_comm_x1",      "razmyslov_coefficient",
        "razmyslov_s3_commute_adsl2", "razmyslov_alternating_sum_adsl2",
        "razmyslov_x1_comm_x1_adsl2", "weak_identity_ideal_property"};
    for (const char* id : razmyslov_ids)
      add(id, "Theorem 2.2", [id](const VerifyOptions&) {
        return from_suite(razmyslov_suite(), id);
      });

    add("art_q", "Razmyslov ART_q, Section 2.1",
        [](const VerifyOptions&) { return check_art(); });

    add("central_suite", "Central cocharacter theorem, Section 4", [](const VerifyOptions&) {
      auto suite = central_suite(3, 2, 2);
      for (const auto& r : suite)
        if (!r.ok) return std::pair<bool, std::string>{false, r.id + ": " + r.detail};
      return std::pair<bool, std::string>{true,
                                          std::to_string(suite.size()) + " central hwvs verified"};
    });

    add("lemma33_tables", "Lemma 3.3", [](const VerifyOptions&) {
      auto r = lemma33_tables_check();
      return std::pair<bool, std::string>{r.ok, r.detail};
    });

    add("hwv_worked_example", "Section 2.3 worked example",
        [](const VerifyOptions&) { return check_hwv_worked_example(); });

    add("tableau_deletion_sweep", "Lemma 3.4", [](const VerifyOptions& o) {
      return check_tableau_deletion_sweep(o.deletion_degree);
    });

    add("multiplicity_deletion_crosscheck", "Lemma 3.5", [](const VerifyOptions&) {
      return check_deletion_crosscheck(10);
    });

    add("cayley_hamilton", "Remark (i) after Theorem 4.2",
        [](const VerifyOptions&) { return check_cayley_hamilton(); });

    add("z_decomposition", "Section 5 decomposition of z",
        [](const VerifyOptions&) { return check_z_decomposition(); });

    add("so3_sampler", "Cayley parametrization of SO3(Q)",
        [](const VerifyOptions& o) { return check_so3_sampler(o.seed); });

    add("so3_intertwiner", "Proposition 2.9",
        [](const VerifyOptions& o) { return check_so3_intertwiner(o.seed); });

    add("equivariance", "Proposition 2.5", [](const VerifyOptions& o) {
      return std::pair<bool, std::string>{equivariance_check(o.seed, 3),
                                          "covariants fixed under simultaneous conjugation"};
    });

    add("iota_images", "Theorem 5.6 / Propositions 5.2-5.3", [](const VerifyOptions&) {
      return std::pair<bool, std::string>{iota_images_check(),
                                          "iota maps the f-generators onto the e-generators"};
    });

    add("c2_freeness", "Proposition 5.4", [](const VerifyOptions& o) {
      auto rep = c2_freeness_check(o.resolution_degree, o.seed);
      return std::pair<bool, std::string>{rep.ok, rep.ok ? "free of rank 6 to degree " +
                                                               std::to_string(o.resolution_degree)
                                                         : rep.detail};
    });

    add("res_c3_even", "Theorem 5.5(ii)", [](const VerifyOptions& o) {
      auto rep = resolution_check(ResolutionKind::C3Even, o.resolution_degree, o.seed);
      return std::pair<bool, std::string>{rep.ok, rep.ok ? "resolution verified to degree " +
                                                               std::to_string(o.resolution_degree)
                                                         : rep.detail};
    });
    add("res_c3_odd", "Theorem 5.5(iii)", [](const VerifyOptions& o) {
      auto rep = resolution_check(ResolutionKind::C3Odd, o.resolution_degree, o.seed);
      return std::pair<bool, std::string>{rep.ok, rep.ok ? "resolution verified to degree " +
                                                               std::to_string(o.resolution_degree)
                                                         : rep.detail};
    });

    add("hilbert_schur_E", "Proposition 5.1 + Theorem 4.2(i)", [](const VerifyOptions& o) {
      return check_hilbert_schur(o.hilbert_degree);
    });
    add("hilbert_univariate_split", "Theorem 5.5 proof",
        [](const VerifyOptions&) { return check_univariate_split(); });
    add("invariant_ring_multiplicity_free", "Corollary 2.15", [](const VerifyOptions&) {
      return check_invariant_ring_mults(10);
    });

    add("cocharacter_lower", "Theorem 3.6 proof", [](const VerifyOptions& o) {
      return check_cocharacter_lower(o.lower_bound_degree);
    });
    add("cocharacter_equality_F3", "Theorem 3.6", [](const VerifyOptions& o) {
      for (int n = 0; n <= o.cocharacter_degree; ++n) {
        auto rep = cocharacter_equality_check(n, Algebra::F3);
        if (!rep.ok) return std::pair<bool, std::string>{false, rep.detail};
      }
      return std::pair<bool, std::string>{
          true, "all multidegrees to total degree " + std::to_string(o.cocharacter_degree)};
    });
    add("cocharacter_equality_E3", "Theorem 4.2(i)", [](const VerifyOptions& o) {
      for (int n = 0; n <= o.secondary_degree; ++n) {
        auto rep = cocharacter_equality_check(n, Algebra::E3);
        if (!rep.ok) return std::pair<bool, std::string>{false, rep.detail};
      }
      return std::pair<bool, std::string>{
          true, "all multidegrees to total degree " + std::to_string(o.secondary_degree)};
    });
    add("center_dims", "Proposition 4.3 / Corollary 4.4",
        [](const VerifyOptions& o) { return check_center_dims(o.secondary_degree); });

    add("ef_split", "Theorem 4.2(ii)", [](const VerifyOptions&) {
      return std::pair<bool, std::string>{ef_split_check(4),
                                          "dim E3 = dim F3 + 1 at (2k,0,0), k <= 4"};
    });

    add("trace_membership", "Corollary 2.11(ii)", [](const VerifyOptions&) {
      return std::pair<bool, std::string>{tr123_squared_in_P() && tr123_not_in_P(),
                                          "tr(t1t2t3)^2 in P; tr(t1t2t3) not in P"};
    });

    add("palgebra_jacobian", "Section 5 P-algebra", [](const VerifyOptions&) {
      return std::pair<bool, std::string>{palgebra_jacobian_independent(),
                                          "Jacobian of the six traces has rank 6"};
    });

    add("ap_decomposition", "Proposition 5.8", [](const VerifyOptions& o) {
      auto rep = ap_decomposition_check(o.ap_bound);
      return std::pair<bool, std::string>{rep.ok, rep.detail};
    });

    add("prop_ring_axioms", "exact kernel properties",
        [](const VerifyOptions& o) { return prop_ring_axioms(o.seed); });
    add("prop_combinatorics", "Kostka and Schur properties",
        [](const VerifyOptions&) { return prop_combinatorics(); });
    add("prop_linalg_two_routes", "rank oracle cross-check",
        [](const VerifyOptions& o) { return prop_linalg_two_routes(o.seed); });

    return v;
  }();
  return checks;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> check_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : registry()) out.push_back({c.id, c.location});
  return out;
}

bool known_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return true;
  return false;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const VerifyOptions& opts) {
  std::vector<const Check*> selected;
  if (ids.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& id : ids) {
      const Check* found = nullptr;
      for (const auto& c : registry())
        if (c.id == id) found = &c;
      if (!found) throw std::invalid_argument("unknown check id: " + id);
      selected.push_back(found);
    }
  }

  std::vector<CheckResult> results(selected.size());
  std::size_t next = 0;
  std::mutex mtx;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (next == selected.size()) return;
        i = next++;
      }
      const Check& c = *selected[i];
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      r.id = c.id;
      r.location = c.location;
      try {
        auto [ok, detail] = c.run(opts);
        r.ok = ok;
        r.detail = detail;
      } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(r);
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json o;
    o["relation_id"] = r.id;
    o["paper_location"] = r.location;
    o["status"] = r.ok ? "pass" : "fail";
    o["elapsed"] = r.elapsed;
    if (!r.detail.empty()) o["detail"] = r.detail;
    arr.push_back(o);
  }
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["report"] = arr;
  return doc.dump(2);
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%8.3fs", r.elapsed);
    out += std::string(r.ok ? "PASS" : "FAIL") + "  " + r.id;
    if (out.size() > 0) {
      std::size_t pad = r.id.size() < 36 ? 36 - r.id.size() : 1;
      out += std::string(pad, ' ');
    }
    out += std::string(buf) + "  " + r.location;
    if (!r.detail.empty() && !r.ok) out += "  [" + r.detail + "]";
    out += "\n";
  }
  return out;
}

}  // namespace so3cov
