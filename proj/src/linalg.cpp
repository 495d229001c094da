#include "so3cov/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace so3cov {

void RowEchelon::strip_content(IRow& r) {
  BigInt g = 0;
  for (const auto& [c, v] : r.e) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  for (const auto& [c, v] : r.tag) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& [c, v] : r.e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  for (auto& [c, v] : r.tag) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r := plead * r - rcoef * p, on both the main and the tag part.
// Coefficients are taken by value: the callers pass references into r.e,
// which this function replaces.
void RowEchelon::combine(IRow& r, const IRow& p, BigInt plead, BigInt rcoef) {
  auto merge = [](std::vector<std::pair<std::int32_t, BigInt>>& a,
                  const std::vector<std::pair<std::int32_t, BigInt>>& b, const BigInt& ca,
                  const BigInt& cb) {
    std::vector<std::pair<std::int32_t, BigInt>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back({a[i].first, ca * a[i].second});
        ++i;
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.push_back({b[j].first, cb * b[j].second});
        ++j;
      } else {
        BigInt v = ca * a[i].second + cb * b[j].second;
        if (v != 0) out.push_back({a[i].first, std::move(v)});
        ++i, ++j;
      }
    }
    a = std::move(out);
  };
  merge(r.e, p.e, plead, -rcoef);
  merge(r.tag, p.tag, plead, -rcoef);
}

int RowEchelon::pivot_row(std::int32_t col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col,
                             [](const auto& pr, std::int32_t c) { return pr.first < c; });
  if (it != pivots_.end() && it->first == col) return it->second;
  return -1;
}

bool RowEchelon::insert(const SparseRow& row) {
  int my_index = inserted_++;
  IRow r;
  // scale to integers
  BigInt den = 1;
  for (const auto& [c, v] : row.e) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  r.e.reserve(row.e.size());
  for (const auto& [c, v] : row.e) {
    BigInt num = v.get_num() * (den / v.get_den());
    r.e.push_back({c, std::move(num)});
  }
  if (track_) r.tag.push_back({my_index, den});
  strip_content(r);

  while (!r.e.empty()) {
    std::int32_t lead = r.e.front().first;
    int pr = pivot_row(lead);
    if (pr < 0) {
      strip_content(r);
      if (sgn(r.e.front().second) < 0) {
        for (auto& [c, v] : r.e) v = -v;
        for (auto& [c, v] : r.tag) v = -v;
      }
      pivots_.insert(std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                                      [](const auto& p, std::int32_t c) { return p.first < c; }),
                     {lead, static_cast<int>(rows_.size())});
      rows_.push_back(std::move(r));
      return true;
    }
    combine(r, rows_[pr], rows_[pr].e.front().second, r.e.front().second);
    strip_content(r);
  }
  if (track_) {
    // main part vanished: the tag is a dependency among inserted rows
    std::vector<Rational> dep(inserted_, rational(0));
    for (const auto& [idx, v] : r.tag) dep[idx] = Rational(v);
    // normalize: first nonzero coefficient positive
    for (const auto& c : dep)
      if (!is_zero(c)) {
        if (sgn(c) < 0)
          for (auto& x : dep) x = -x;
        break;
      }
    deps_.push_back(std::move(dep));
  }
  return false;
}

int rank_over_Q(const std::vector<SparseRow>& rows) {
  RowEchelon ech;
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const std::vector<SparseRow>& rows) {
  RowEchelon ech(true);
  for (const auto& r : rows) ech.insert(r);
  std::vector<std::vector<Rational>> out;
  for (const auto& d : ech.dependencies()) {
    std::vector<Rational> v = d;
    v.resize(rows.size(), rational(0));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rational>> solve_linear(const std::vector<SparseRow>& rows,
                                                  const SparseRow& target) {
  RowEchelon ech(true);
  for (const auto& r : rows) ech.insert(r);
  std::size_t before = ech.dependencies().size();
  if (ech.insert(target)) return std::nullopt;  // target independent: inconsistent
  const auto& dep = ech.dependencies()[before];
  Rational ct = dep.back();  // coefficient of the target row; nonzero by construction
  std::vector<Rational> sol(rows.size(), rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i < dep.size() - 1) sol[i] = -dep[i] / ct;
  return sol;
}

std::pair<std::vector<SparseRow>, int> polys_to_rows(std::span<const MultiPoly> polys) {
  // union basis, canonical term order
  std::map<Monomial, std::int32_t, GrevlexDesc> basis;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) basis.try_emplace(t.first, 0);
  std::int32_t idx = 0;
  for (auto& kv : basis) kv.second = idx++;
  std::vector<SparseRow> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) {
    SparseRow r;
    r.e.reserve(p.terms().size());
    for (const auto& t : p.terms()) r.e.push_back({basis.at(t.first), t.second});
    std::sort(r.e.begin(), r.e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(r));
  }
  return {std::move(rows), idx};
}

}  // namespace so3cov
