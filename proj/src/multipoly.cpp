#include "so3cov/multipoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace so3cov {

void MultiPoly::require_same_table(const MultiPoly& o) const {
  if (table_ != o.table_) throw std::invalid_argument("polynomials over different VarTables");
}

void MultiPoly::sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::cmp_grevlex(a.first, b.first) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
    if (!out.empty() && so3cov::is_zero(out.back().second)) out.pop_back();
  }
  terms = std::move(out);
}

MultiPoly MultiPoly::constant(VarTable::Ptr table, const Rational& c) {
  MultiPoly p(std::move(table));
  if (!so3cov::is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

MultiPoly MultiPoly::variable(VarTable::Ptr table, int var, int exp) {
  if (var < 0 || var >= table->size()) throw std::out_of_range("variable index out of range");
  MultiPoly p(std::move(table));
  if (exp != 0)
    p.terms_.push_back({Monomial::var(var, exp), rational(1)});
  else
    p.terms_.push_back({Monomial(), rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(VarTable::Ptr table, std::vector<Term> terms) {
  MultiPoly p(std::move(table));
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return rational(0);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& mm) {
    return Monomial::cmp_grevlex(t.first, mm) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return rational(0);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_table(o);
  MultiPoly r(table_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    int cmp;
    if (a == terms_.size())
      cmp = -1;
    else if (b == o.terms_.size())
      cmp = 1;
    else
      cmp = Monomial::cmp_grevlex(terms_[a].first, o.terms_[b].first);
    if (cmp > 0)
      r.terms_.push_back(terms_[a++]);
    else if (cmp < 0)
      r.terms_.push_back(o.terms_[b++]);
    else {
      Rational c = terms_[a].second + o.terms_[b].second;
      if (!so3cov::is_zero(c)) r.terms_.push_back({terms_[a].first, std::move(c)});
      ++a, ++b;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(table_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (so3cov::is_zero(c)) return MultiPoly(table_);
  MultiPoly r(table_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, c * t.second});
  return r;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (so3cov::is_zero(c)) return MultiPoly(table_);
  MultiPoly r(table_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first * m, c * t.second});
  // multiplying by a fixed monomial preserves grevlex order
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_table(o);
  if (is_zero() || o.is_zero()) return MultiPoly(table_);
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.times_monomial(terms_[0].first, terms_[0].second);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * 2);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.first * b.first, rational(0));
      it->second += a.second * b.second;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& kv : acc)
    if (!so3cov::is_zero(kv.second)) terms.push_back({kv.first, std::move(kv.second)});
  sort_and_combine(terms);
  MultiPoly r(table_);
  r.terms_ = std::move(terms);
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& map) const {
  for (const auto& [v, img] : map) {
    if (v < 0 || v >= table_->size()) throw std::invalid_argument("substitute: variable not in table");
    require_same_table(img);
  }
  MultiPoly result(table_);
  // power cache per mapped variable
  std::map<int, std::vector<MultiPoly>> powers;
  auto power = [&](int v, int e) -> const MultiPoly& {
    auto& vec = powers[v];
    if (vec.empty()) vec.push_back(MultiPoly::constant(table_, rational(1)));
    while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * map.at(v));
    return vec[e];
  };
  for (const auto& [mono, coeff] : terms_) {
    Monomial fixed;
    MultiPoly factor = MultiPoly::constant(table_, coeff);
    for (const auto& vp : mono.entries()) {
      if (map.count(vp.var))
        factor = factor * power(vp.var, vp.exp);
      else
        fixed = fixed * Monomial::var(vp.var, vp.exp);
    }
    result += factor.times_monomial(fixed, rational(1));
  }
  return result;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != table_->size())
    throw std::invalid_argument("eval: point dimension mismatch");
  Rational acc = rational(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational v = coeff;
    for (const auto& vp : mono.entries())
      for (int e = 0; e < vp.exp; ++e) v *= point[vp.var];
    acc += v;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& [mono, coeff] : terms_) {
    int e = mono.exponent(var);
    if (e == 0) continue;
    Monomial m;
    for (const auto& vp : mono.entries()) {
      if (vp.var == var) {
        if (vp.exp > 1) m = m * Monomial::var(vp.var, vp.exp - 1);
      } else {
        m = m * Monomial::var(vp.var, vp.exp);
      }
    }
    out.push_back({m, coeff * rational(e)});
  }
  return from_terms(table_, std::move(out));
}

std::vector<int> MultiPoly::group_degree(const Monomial& m) const {
  std::vector<int> deg(table_->group_count(), 0);
  for (const auto& vp : m.entries()) deg[table_->group_of(vp.var)] += vp.exp;
  return deg;
}

MultiPoly MultiPoly::multidegree_component(const std::vector<int>& degrees) const {
  if (static_cast<int>(degrees.size()) != table_->group_count())
    throw std::invalid_argument("multidegree_component: wrong number of groups");
  MultiPoly r(table_);
  for (const auto& t : terms_)
    if (group_degree(t.first) == degrees) r.terms_.push_back(t);
  return r;
}

std::vector<std::vector<int>> MultiPoly::group_degrees_present() const {
  std::set<std::vector<int>> s;
  for (const auto& t : terms_) s.insert(group_degree(t.first));
  return {s.begin(), s.end()};
}

bool MultiPoly::is_multihomogeneous() const {
  return group_degrees_present().size() <= 1;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational c = coeff;
    if (first) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    std::string cs = to_string(c);
    if (mono.is_one()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      bool firstv = true;
      for (const auto& vp : mono.entries()) {
        if (!firstv) out += "*";
        firstv = false;
        out += table_->name(vp.var);
        if (vp.exp > 1) out += "^" + std::to_string(vp.exp);
      }
    }
  }
  return out;
}

}  // namespace so3cov
