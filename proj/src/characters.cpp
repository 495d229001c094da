#include "so3cov/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace so3cov {

MultiPoly schur_poly(const Partition& lambda, const VarTable::Ptr& tau) {
  if (lambda.rows() > 3) throw std::invalid_argument("schur_poly: more than 3 rows");
  int n = lambda.size();
  std::vector<MultiPoly::Term> terms;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      int c = n - a - b;
      long k = kostka(lambda, {a, b, c});
      if (k == 0) continue;
      Monomial m = Monomial::var(tau->tau_var(1), a) * Monomial::var(tau->tau_var(2), b) *
                   Monomial::var(tau->tau_var(3), c);
      terms.push_back({m, rational(k)});
    }
  return MultiPoly::from_terms(tau, std::move(terms));
}

MultiPoly truncate_degree(const MultiPoly& p, int n) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms())
    if (t.first.degree() <= n) terms.push_back(t);
  return MultiPoly::from_terms(p.table(), std::move(terms));
}

RationalSeries::RationalSeries(MultiPoly numerator, std::vector<Monomial> denom_factors)
    : num_(std::move(numerator)), denom_(std::move(denom_factors)) {
  for (const auto& m : denom_)
    if (m.is_one() || m.degree() == 0)
      throw std::invalid_argument("denominator factor must be 1 - (nonconstant monomial)");
  std::sort(denom_.begin(), denom_.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::cmp_grevlex(a, b) > 0; });
}

MultiPoly RationalSeries::expand(int N) const {
  MultiPoly acc = truncate_degree(num_, N);
  for (const auto& m : denom_) {
    // multiply by 1 + m + m^2 + ... up to degree N
    MultiPoly result = acc;
    MultiPoly power = truncate_degree(acc.times_monomial(m, rational(1)), N);
    while (!power.is_zero()) {
      result += power;
      power = truncate_degree(power.times_monomial(m, rational(1)), N);
    }
    acc = std::move(result);
  }
  return acc;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  if (denom_ != o.denom_)
    throw std::invalid_argument("RationalSeries addition needs a common denominator");
  return RationalSeries(num_ + o.num_, denom_);
}

RationalSeries RationalSeries::univariate(const VarTable::Ptr& tau1) const {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : num_.terms())
    terms.push_back({Monomial::var(tau1->tau_var(1), m.degree()), c});
  std::vector<Monomial> denom;
  for (const auto& m : denom_) denom.push_back(Monomial::var(tau1->tau_var(1), m.degree()));
  return RationalSeries(MultiPoly::from_terms(tau1, std::move(terms)), std::move(denom));
}

namespace {
std::vector<Monomial> covariant_denominator(const VarTable::Ptr& tau) {
  std::vector<Monomial> denom;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      denom.push_back(Monomial::var(tau->tau_var(i)) * Monomial::var(tau->tau_var(j)));
  return denom;
}

std::vector<Monomial> univariate_denominator(const VarTable::Ptr& tau1) {
  return std::vector<Monomial>(6, Monomial::var(tau1->tau_var(1), 2));
}

MultiPoly univariate_poly(const VarTable::Ptr& tau1, std::vector<std::pair<int, long>> coeffs) {
  std::vector<MultiPoly::Term> terms;
  for (auto [deg, c] : coeffs)
    terms.push_back({Monomial::var(tau1->tau_var(1), deg), rational(c)});
  return MultiPoly::from_terms(tau1, std::move(terms));
}
}  // namespace

RationalSeries hilbert_C1(const VarTable::Ptr& tau) {
  auto one = MultiPoly::constant(tau, rational(1));
  auto t123 = MultiPoly::variable(tau, tau->tau_var(1)) * MultiPoly::variable(tau, tau->tau_var(2)) *
              MultiPoly::variable(tau, tau->tau_var(3));
  return RationalSeries(one + t123, covariant_denominator(tau));
}

RationalSeries hilbert_C2(const VarTable::Ptr& tau) {
  auto num = schur_poly(Partition{1}, tau) + schur_poly(Partition{1, 1}, tau);
  return RationalSeries(num, covariant_denominator(tau));
}

RationalSeries hilbert_C3(const VarTable::Ptr& tau) {
  auto num = schur_poly(Partition{2}, tau) + schur_poly(Partition{2, 1}, tau) -
             schur_poly(Partition{2, 2, 1}, tau) - schur_poly(Partition{2, 2, 2}, tau);
  return RationalSeries(num, covariant_denominator(tau));
}

RationalSeries series_C2_univariate(const VarTable::Ptr& tau1) {
  return RationalSeries(univariate_poly(tau1, {{1, 3}, {2, 3}}), univariate_denominator(tau1));
}

RationalSeries series_C3_even(const VarTable::Ptr& tau1) {
  return RationalSeries(univariate_poly(tau1, {{2, 6}, {6, -1}}), univariate_denominator(tau1));
}

RationalSeries series_C3_odd(const VarTable::Ptr& tau1) {
  return RationalSeries(univariate_poly(tau1, {{3, 8}, {5, -3}}), univariate_denominator(tau1));
}

std::map<Partition, long> schur_decompose(const MultiPoly& sym, int N) {
  const auto& tau = sym.table();
  // symmetry under the transpositions generating S_3
  auto permuted = [&](const MultiPoly& p, int a, int b) {
    std::vector<MultiPoly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
      Monomial out;
      for (const auto& vp : m.entries()) {
        int v = vp.var;
        if (v == tau->tau_var(a))
          v = tau->tau_var(b);
        else if (v == tau->tau_var(b))
          v = tau->tau_var(a);
        out = out * Monomial::var(v, vp.exp);
      }
      terms.push_back({out, c});
    }
    return MultiPoly::from_terms(tau, std::move(terms));
  };
  if (permuted(sym, 1, 2) != sym || permuted(sym, 2, 3) != sym)
    throw std::domain_error("schur_decompose: input not symmetric");

  std::map<Partition, long> mult;
  MultiPoly rest = truncate_degree(sym, N);
  for (int n = 0; n <= N; ++n) {
    for (const auto& lambda : partitions_of(n, 3)) {
      Monomial m = Monomial::var(tau->tau_var(1), lambda.part(0)) *
                   Monomial::var(tau->tau_var(2), lambda.part(1)) *
                   Monomial::var(tau->tau_var(3), lambda.part(2));
      Rational c = rest.coefficient(m);
      if (is_zero(c)) continue;
      if (sgn(c) < 0 || c.get_den() != 1)
        throw std::domain_error("schur_decompose: not a polynomial character at " + lambda.str());
      long k = c.get_num().get_si();
      mult[lambda] = k;
      rest -= schur_poly(lambda, tau).scaled(c);
    }
    // unitriangularity guarantees the degree-n slice is exhausted
    for (const auto& t : rest.terms())
      if (t.first.degree() == n) throw std::domain_error("schur_decompose: residue at degree " + std::to_string(n));
  }
  return mult;
}

int multiplicity_E(const Partition& nu) {
  if (nu.rows() > 3) return 0;
  int d1 = nu.part(0) - nu.part(1), d2 = nu.part(1) - nu.part(2);
  bool e1 = d1 % 2 == 0, e2 = d2 % 2 == 0;
  if (e1 && e2) {
    if (d1 > 0 && d2 > 0) return 3;
    if (d1 > 0 || d2 > 0) return 2;
    return 1;
  }
  if (e1) return d1 > 0 ? 2 : 1;  // nu1 = nu2 (mod 2), nu3 differs
  if (!e2) return 2;              // nu1 = nu3 (mod 2), nu2 differs
  return d2 > 0 ? 2 : 1;          // nu2 = nu3 (mod 2), nu1 differs
}

int multiplicity_F(const Partition& nu) {
  if (nu.rows() == 1 && nu.part(0) > 0 && nu.part(0) % 2 == 0) return 1;
  return multiplicity_E(nu);
}

int center_E(const Partition& nu) {
  if (nu.rows() > 3) return 0;
  int d1 = nu.part(0) - nu.part(1), d2 = nu.part(1) - nu.part(2);
  return (d1 % 2 == 0 && d2 % 2 == 0) ? 1 : 0;
}

int center_F(const Partition& nu) { return nu.part(1) > 0 ? center_E(nu) : 0; }

long multiplicity_by_deletion(const Partition& nu) {
  if (nu.rows() > 3) return 0;
  long total = 0;
  auto target = superstandard(nu);
  auto consider = [&](int d0, int d1, int d2) {
    std::vector<int> p{nu.part(0) + d0, nu.part(1) + d1, nu.part(2) + d2};
    if (p[0] < p[1] || p[1] < p[2] || p[2] < 0) return;
    if ((p[0] - p[1]) % 2 != 0 || (p[1] - p[2]) % 2 != 0) return;
    Partition lambda(p);
    std::vector<int> content{nu.part(0), nu.part(1), nu.part(2), 1, 1};
    for (const auto& t : enumerate_ssyt(lambda, content)) {
      auto d = delete_values(t, {4, 5});
      if (d.has_value() && *d == target) ++total;
    }
  };
  consider(2, 0, 0);
  consider(0, 2, 0);
  consider(0, 0, 2);
  consider(1, 1, 0);
  consider(1, 0, 1);
  consider(0, 1, 1);
  return total;
}

std::vector<MultiplicityRow> multiplicity_table(int max_degree) {
  std::vector<MultiplicityRow> rows;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& nu : partitions_of(n, 3))
      rows.push_back({nu, multiplicity_E(nu), multiplicity_F(nu), center_E(nu), center_F(nu)});
  return rows;
}

std::string multiplicity_csv(const std::vector<MultiplicityRow>& rows) {
  std::string out = "nu1,nu2,nu3,m_E,m_F,center_E,center_F\n";
  for (const auto& r : rows) {
    out += std::to_string(r.nu.part(0)) + "," + std::to_string(r.nu.part(1)) + "," +
           std::to_string(r.nu.part(2)) + "," + std::to_string(r.m_E) + "," +
           std::to_string(r.m_F) + "," + std::to_string(r.center_E) + "," +
           std::to_string(r.center_F) + "\n";
  }
  return out;
}

std::string multiplicity_json(const std::vector<MultiplicityRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["nu"] = {r.nu.part(0), r.nu.part(1), r.nu.part(2)};
    o["m_E"] = r.m_E;
    o["m_F"] = r.m_F;
    o["center_E"] = r.center_E;
    o["center_F"] = r.center_F;
    arr.push_back(o);
  }
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["multiplicities"] = arr;
  return doc.dump(2);
}

}  // namespace so3cov
