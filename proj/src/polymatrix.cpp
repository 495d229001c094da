#include "so3cov/polymatrix.hpp"

#include <stdexcept>

namespace so3cov {

PolyMatrix::PolyMatrix(VarTable::Ptr table) : table_(std::move(table)) {
  for (auto& p : e_) p = MultiPoly::zero(table_);
}

PolyMatrix PolyMatrix::identity(VarTable::Ptr table) {
  PolyMatrix m(table);
  for (int i = 0; i < 3; ++i) m.at(i, i) = MultiPoly::constant(table, rational(1));
  return m;
}

PolyMatrix PolyMatrix::constant(VarTable::Ptr table,
                                const std::array<std::array<Rational, 3>, 3>& c) {
  PolyMatrix m(table);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = MultiPoly::constant(table, c[i][j]);
  return m;
}

PolyMatrix PolyMatrix::constant_int(VarTable::Ptr table,
                                    const std::array<std::array<long, 3>, 3>& c) {
  PolyMatrix m(table);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = MultiPoly::constant(table, rational(c[i][j]));
  return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = -e_[i];
  return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MultiPoly acc = MultiPoly::zero(table_);
      for (int k = 0; k < 3; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = std::move(acc);
    }
  return r;
}

PolyMatrix PolyMatrix::scaled(const MultiPoly& f) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i] * f;
  return r;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i].scaled(c);
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(table_);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
  return r;
}

MultiPoly PolyMatrix::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

bool PolyMatrix::is_zero() const {
  for (const auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_scalar() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return at(0, 0) == at(1, 1) && at(1, 1) == at(2, 2);
}

PolyMatrix PolyMatrix::substitute(const std::map<int, MultiPoly>& map) const {
  PolyMatrix r(table_);
  for (int i = 0; i < 9; ++i) r.e_[i] = e_[i].substitute(map);
  return r;
}

PolyMatrix PolyMatrix::pow(int n) const {
  PolyMatrix r = identity(table_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string PolyMatrix::str() const {
  std::string out = "[";
  for (int i = 0; i < 3; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < 3; ++j) {
      if (j) out += ", ";
      out += at(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

MultiPoly trace_of_product(const PolyMatrix& a, const PolyMatrix& b) {
  MultiPoly acc = MultiPoly::zero(a.table());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += a.at(i, j) * b.at(j, i);
  return acc;
}

PolyMatrix generic_skew(const VarTable::Ptr& table, int k) {
  PolyMatrix m(table);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      auto v = MultiPoly::variable(table, table->skew_var(i, j, k));
      m.at(i - 1, j - 1) = v;
      m.at(j - 1, i - 1) = -v;
    }
  return m;
}

PolyMatrix generic_full(const VarTable::Ptr& table) {
  if (!table->has_z()) throw std::invalid_argument("generic_full: z variables not enabled");
  PolyMatrix m(table);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      m.at(i - 1, j - 1) = MultiPoly::variable(table, table->z_var(i, j));
  return m;
}

PolyMatrix sym_traceless_part(const VarTable::Ptr& table) {
  auto z = generic_full(table);
  auto sym = (z + z.transpose()).scaled(rational(1, 2));
  auto tr = z.trace().scaled(rational(1, 3));
  for (int i = 0; i < 3; ++i) sym.at(i, i) -= tr;
  return sym;
}

PolyMatrix skew_part(const VarTable::Ptr& table) {
  auto z = generic_full(table);
  return (z - z.transpose()).scaled(rational(1, 2));
}

std::array<PolyMatrix, 3> concrete_basis(const VarTable::Ptr& table) {
  return {PolyMatrix::constant_int(table, {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}}),
          PolyMatrix::constant_int(table, {{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}}),
          PolyMatrix::constant_int(table, {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}})};
}

std::array<PolyMatrix, 3> ad_sl2_basis(const VarTable::Ptr& table) {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h; columns are images of (e, h, f)
  auto A_e = PolyMatrix::constant_int(table, {{{0, -2, 0}, {0, 0, 1}, {0, 0, 0}}});
  auto A_f = PolyMatrix::constant_int(table, {{{0, 0, 0}, {-1, 0, 0}, {0, 2, 0}}});
  auto A_h = PolyMatrix::constant_int(table, {{{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}});
  return {A_e, A_f, A_h};
}

bool cayley_hamilton_holds(const PolyMatrix& m) {
  auto m2 = m * m;
  auto lhs = m2 * m - m.scaled(m2.trace().scaled(rational(1, 2)));
  return lhs.is_zero();
}

PolyMatrix so3_sample(const VarTable::Ptr& table, const Rational& q1, const Rational& q2,
                      const Rational& q3) {
  using Row = std::array<Rational, 3>;
  std::array<Row, 3> a{Row{rational(0), q1, q2}, Row{-q1, rational(0), q3},
                       Row{-q2, -q3, rational(0)}};
  std::array<Row, 3> ip, im;  // I + A, I - A
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ip[i][j] = (i == j ? rational(1) : rational(0)) + a[i][j];
      im[i][j] = (i == j ? rational(1) : rational(0)) - a[i][j];
    }
  auto det2 = [&](int r0, int r1, int c0, int c1) -> Rational {
    return ip[r0][c0] * ip[r1][c1] - ip[r0][c1] * ip[r1][c0];
  };
  Rational det = ip[0][0] * det2(1, 2, 1, 2) - ip[0][1] * det2(1, 2, 0, 2) +
                 ip[0][2] * det2(1, 2, 0, 1);
  if (is_zero(det)) throw std::domain_error("so3_sample: I + A singular");
  std::array<Row, 3> inv;
  int idx[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational cof = det2(idx[j][0], idx[j][1], idx[i][0], idx[i][1]);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = cof / det;
    }
  std::array<Row, 3> g{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g[i][j] = rational(0);
      for (int k = 0; k < 3; ++k) g[i][j] += im[i][k] * inv[k][j];
    }
  return PolyMatrix::constant(table, g);
}

std::array<MultiPoly, 3> so3_vector(const PolyMatrix& skew) {
  if (!(skew + skew.transpose()).is_zero())
    throw std::invalid_argument("so3_vector: matrix is not skew-symmetric");
  return {skew.at(1, 2), -skew.at(0, 2), skew.at(0, 1)};
}

std::map<int, MultiPoly> conjugation_substitution(const VarTable::Ptr& table,
                                                  const PolyMatrix& g) {
  std::map<int, MultiPoly> sub;
  for (int k = 1; k <= table->p(); ++k) {
    auto conj = g * generic_skew(table, k) * g.transpose();
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) sub[table->skew_var(i, j, k)] = conj.at(i - 1, j - 1);
  }
  return sub;
}

std::pair<std::vector<SparseRow>, int> matrices_to_rows(std::span<const PolyMatrix> ms) {
  std::map<Monomial, std::int32_t, GrevlexDesc> basis;
  for (const auto& m : ms)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& t : m.at(i, j).terms()) basis.try_emplace(t.first, 0);
  std::int32_t idx = 0;
  for (auto& kv : basis) kv.second = idx++;
  std::vector<SparseRow> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) {
    SparseRow r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& t : m.at(i, j).terms())
          r.e.push_back({(3 * i + j) * idx + basis.at(t.first), t.second});
    std::sort(r.e.begin(), r.e.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(std::move(r));
  }
  return {std::move(rows), 9 * idx};
}

}  // namespace so3cov
