#include "so3cov/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace so3cov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("not a partition");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
      for (int c = 0; c < p; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  std::string out = "(";
  int n = std::max(3, rows());
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += std::to_string(part(i));
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Tableau Tableau::of(Partition shape, std::vector<std::vector<int>> rows) {
  if (static_cast<int>(rows.size()) != shape.rows())
    throw std::invalid_argument("tableau row count mismatch");
  for (int r = 0; r < shape.rows(); ++r)
    if (static_cast<int>(rows[r].size()) != shape.parts()[r])
      throw std::invalid_argument("tableau row length mismatch");
  return Tableau{std::move(shape), std::move(rows)};
}

std::vector<int> Tableau::content(int max_value) const {
  std::vector<int> c(static_cast<std::size_t>(max_value), 0);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > max_value) throw std::out_of_range("tableau entry out of range");
      ++c[static_cast<std::size_t>(v - 1)];
    }
  return c;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
        return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  int n = shape.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& row : rows)
    for (int v : row) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  // strict increase along rows and columns
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size() && rows[r][c] >= rows[r][c + 1]) return false;
      if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] >= rows[r + 1][c])
        return false;
    }
  return true;
}

bool Tableau::operator<(const Tableau& o) const {
  if (!(shape == o.shape)) return shape < o.shape;
  return rows < o.rows;
}

std::string Tableau::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += "/";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) out += " ";
      out += std::to_string(rows[r][c]);
    }
  }
  return out;
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) total += c;
  if (total != shape.size()) throw std::invalid_argument("content size != shape size");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r) rows[static_cast<std::size_t>(r)].resize(shape.parts()[r]);
  std::vector<int> remaining = content;
  int m = static_cast<int>(content.size());

  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == shape.rows()) {
      out.push_back(Tableau{shape, rows});
      return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.parts()[r]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);                       // rows weakly increase
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);                   // columns strictly increase
    for (int v = lo; v <= m; ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      rows[r][c] = v;
      self(self, nr, nc);
      ++remaining[v - 1];
    }
  };
  if (shape.rows() == 0)
    out.push_back(Tableau{shape, rows});
  else
    rec(rec, 0, 0);
  return out;
}

long kostka(const Partition& lambda, const std::vector<int>& content) {
  return static_cast<long>(enumerate_ssyt(lambda, content).size());
}

Tableau tableau_from_permutation(const Partition& lambda, const Perm& rho) {
  int n = lambda.size();
  if (rho.size() != n) throw std::invalid_argument("tableau_from_permutation: size mismatch");
  Perm rinv = rho.inverse();
  auto cols = lambda.column_lengths();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.rows()));
  for (int r = 0; r < lambda.rows(); ++r) rows[static_cast<std::size_t>(r)].resize(lambda.parts()[r]);
  int pos = 0;
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r < cols[j]; ++r) rows[static_cast<std::size_t>(r)][j] = rinv(++pos);
  return Tableau{lambda, std::move(rows)};
}

Perm permutation_from_tableau(const Tableau& t) {
  auto cols = t.shape.column_lengths();
  std::vector<int> rinv;
  rinv.reserve(static_cast<std::size_t>(t.shape.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int r = 0; r < cols[j]; ++r) rinv.push_back(t.rows[static_cast<std::size_t>(r)][j]);
  return Perm(std::move(rinv)).inverse();
}

FreePoly hwv_base(const Partition& lambda, int p) {
  if (lambda.rows() > p) throw std::invalid_argument("hwv_base: too many rows");
  FreePoly w = FreePoly::one(p);
  for (int k : lambda.column_lengths()) w = w * FreePoly::standard_poly(k, p);
  return w;
}

FreePoly hwv_from_permutation(const Partition& lambda, const Perm& rho, int p) {
  if (lambda.empty()) return FreePoly::one(p);
  return hwv_base(lambda, p).place_permute(rho);
}

FreePoly hwv_from_tableau(const Tableau& t, int p) {
  if (t.shape.empty()) return FreePoly::one(p);
  return hwv_from_permutation(t.shape, permutation_from_tableau(t), p);
}

std::optional<Tableau> delete_values(const Tableau& t, const std::vector<int>& values) {
  std::vector<std::vector<int>> rows = t.rows;
  for (int v : values) {
    bool found = false;
    for (auto& row : rows) {
      auto it = std::find(row.begin(), row.end(), v);
      if (it != row.end()) {
        if (found) return std::nullopt;
        row.erase(it);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  while (!parts.empty() && parts.back() == 0) {
    parts.pop_back();
    rows.pop_back();
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return std::nullopt;
  Tableau out{Partition(parts), rows};
  if (!out.is_semistandard()) return std::nullopt;
  return out;
}

Tableau superstandard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.rows(); ++r)
    rows.push_back(std::vector<int>(static_cast<std::size_t>(shape.parts()[r]), r + 1));
  return Tableau{shape, std::move(rows)};
}

std::optional<int> largest_admissible_q(const Tableau& t) {
  if (t.shape.rows() == 0) return std::nullopt;
  int l2 = t.shape.part(1);
  std::optional<int> best;
  for (int c = l2; c < t.shape.part(0); ++c) {
    int v = t.rows[0][static_cast<std::size_t>(c)];
    if (!best || v > *best) best = v;
  }
  return best;
}

HwvState iota1q(const HwvState& w, int q) {
  const auto& t = w.tableau;
  if (t.shape.part(0) <= t.shape.part(1))
    throw std::invalid_argument("iota1q: requires lambda_1 > lambda_2");
  bool admissible = false;
  for (int c = t.shape.part(1); c < t.shape.part(0); ++c)
    if (t.rows[0][static_cast<std::size_t>(c)] == q) admissible = true;
  if (!admissible) throw std::invalid_argument("iota1q: q not admissible in the tableau");
  // every word carries x_1 at position q there
  for (const auto& [word, c] : w.poly.terms())
    if (word[static_cast<std::size_t>(q - 1)] != 1)
      throw std::logic_error("iota1q: position q does not hold x1");

  HwvState out;
  out.poly = w.poly.insert_power_after(q, 1, 2);
  // entries above q shift by 2; q+1, q+2 fill the two new boxes in row 1
  std::vector<std::vector<int>> rows = t.rows;
  for (auto& row : rows)
    for (auto& v : row)
      if (v > q) v += 2;
  rows[0].push_back(q + 1);
  rows[0].push_back(q + 2);
  std::vector<int> parts = t.shape.parts();
  parts[0] += 2;
  out.tableau = Tableau{Partition(parts), std::move(rows)};
  return out;
}

FreePoly iota2(const FreePoly& w) {
  int p = w.alphabet();
  auto x1 = FreePoly::generator(p, 1), x2 = FreePoly::generator(p, 2);
  auto w22 = x1 * x1 * x2 * x2 - x1 * x2 * x2 * x1 - x2 * x1 * x1 * x2 + x2 * x2 * x1 * x1;
  return w * w22;
}

FreePoly iota3(const FreePoly& w) { return w * FreePoly::standard_poly(3, w.alphabet()); }

std::optional<SeedFamily> seed_family(const Partition& nu) {
  auto T = [](Partition shape, std::vector<std::vector<int>> rows) {
    return Tableau::of(std::move(shape), std::move(rows));
  };
  std::vector<Tableau> tabs;
  if (nu == Partition{4, 2})
    tabs = {T({4, 2}, {{1, 3, 5, 6}, {2, 4}}), T({4, 2}, {{1, 3, 4, 5}, {2, 6}}),
            T({4, 2}, {{1, 2, 3, 6}, {4, 5}})};
  else if (nu == Partition{2, 2})
    tabs = {T({2, 2}, {{1, 3}, {2, 4}}), T({2, 2}, {{1, 2}, {3, 4}})};
  else if (nu == Partition{3, 1, 1})
    tabs = {T({3, 1, 1}, {{1, 4, 5}, {2}, {3}}), T({3, 1, 1}, {{1, 3, 4}, {2}, {5}})};
  else if (nu == Partition{})
    tabs = {T({}, {})};
  else if (nu == Partition{3, 1})
    tabs = {T({3, 1}, {{1, 3, 4}, {2}}), T({3, 1}, {{3, 1, 2}, {4}})};
  else if (nu == Partition{1, 1})
    tabs = {T({1, 1}, {{1}, {2}})};
  else if (nu == Partition{2, 1})
    tabs = {T({2, 1}, {{1, 3}, {2}}), T({2, 1}, {{2, 1}, {3}})};
  else if (nu == Partition{3, 2})
    tabs = {T({3, 2}, {{1, 3, 5}, {2, 4}}), T({3, 2}, {{2, 4, 1}, {3, 5}})};
  else if (nu == Partition{1})
    tabs = {T({1}, {{1}})};
  else
    return std::nullopt;
  SeedFamily fam{nu, tabs, {}};
  for (const auto& t : tabs) fam.polys.push_back(hwv_from_tableau(t, 3));
  return fam;
}

}  // namespace so3cov
