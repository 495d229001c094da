#include "so3cov/freepoly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace so3cov {

namespace {
bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}
}  // namespace

void FreePoly::sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return word_less(a.first, b.first); });
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

FreePoly FreePoly::one(int p) {
  FreePoly f(p);
  f.terms_.push_back({Word{}, rational(1)});
  return f;
}

FreePoly FreePoly::generator(int p, int i) {
  if (i < 1 || i > p) throw std::out_of_range("generator index out of range");
  FreePoly f(p);
  f.terms_.push_back({Word{static_cast<std::uint8_t>(i)}, rational(1)});
  return f;
}

FreePoly FreePoly::from_terms(int p, std::vector<Term> terms) {
  for (const auto& t : terms)
    for (auto l : t.first)
      if (l < 1 || l > p) throw std::out_of_range("letter out of range");
  sort_and_combine(terms);
  FreePoly f(p);
  f.terms_ = std::move(terms);
  return f;
}

FreePoly FreePoly::standard_poly(int k, int p) {
  if (k < 1 || k > p) throw std::out_of_range("standard_poly: k out of range");
  std::vector<Term> terms;
  for (const auto& sigma : all_perms(k)) {
    Word w(k);
    for (int m = 1; m <= k; ++m) w[m - 1] = static_cast<std::uint8_t>(sigma(m));
    terms.push_back({std::move(w), rational(sigma.sign())});
  }
  return from_terms(p, std::move(terms));
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("free polynomials over different alphabets");
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  sort_and_combine(terms);
  FreePoly f(p_);
  f.terms_ = std::move(terms);
  return f;
}

FreePoly FreePoly::operator-() const {
  FreePoly f(p_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.first, -t.second});
  return f;
}

FreePoly FreePoly::operator-(const FreePoly& o) const { return *this + (-o); }

FreePoly FreePoly::scaled(const Rational& c) const {
  if (so3cov::is_zero(c)) return FreePoly(p_);
  FreePoly f(p_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.first, c * t.second});
  return f;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
  if (p_ != o.p_) throw std::invalid_argument("free polynomials over different alphabets");
  std::vector<Term> terms;
  terms.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Word w = a.first;
      w.insert(w.end(), b.first.begin(), b.first.end());
      terms.push_back({std::move(w), a.second * b.second});
    }
  sort_and_combine(terms);
  FreePoly f(p_);
  f.terms_ = std::move(terms);
  return f;
}

FreePoly FreePoly::pow(int n) const {
  FreePoly r = one(p_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

FreePoly operator*(const Rational& c, const FreePoly& f) { return f.scaled(c); }

FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

FreePoly left_normed_commutator(std::span<const FreePoly> fs) {
  if (fs.empty()) throw std::invalid_argument("left_normed_commutator: empty");
  FreePoly acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = commutator(acc, fs[i]);
  return acc;
}

bool FreePoly::is_multihomogeneous() const {
  if (terms_.empty()) return true;
  std::vector<int> deg0;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    std::vector<int> d(p_, 0);
    for (auto l : terms_[t].first) ++d[l - 1];
    if (t == 0)
      deg0 = d;
    else if (d != deg0)
      return false;
  }
  return true;
}

std::vector<int> FreePoly::multidegree() const {
  if (terms_.empty() || !is_multihomogeneous())
    throw std::logic_error("multidegree: not multihomogeneous");
  std::vector<int> d(p_, 0);
  for (auto l : terms_[0].first) ++d[l - 1];
  return d;
}

int FreePoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.size()));
  return d;
}

FreePoly FreePoly::place_permute(const Perm& tau) const {
  std::size_t n = static_cast<std::size_t>(tau.size());
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [w, c] : terms_) {
    if (w.size() != n) throw std::invalid_argument("place_permute: word length mismatch");
    Word out(n);
    for (std::size_t m = 1; m <= n; ++m) out[m - 1] = w[tau(static_cast<int>(m)) - 1];
    terms.push_back({std::move(out), c});
  }
  sort_and_combine(terms);
  FreePoly f(p_);
  f.terms_ = std::move(terms);
  return f;
}

FreePoly FreePoly::raising(int i, int j) const {
  std::vector<Term> terms;
  for (const auto& [w, c] : terms_)
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      if (w[pos] == j) {
        Word out = w;
        out[pos] = static_cast<std::uint8_t>(i);
        terms.push_back({std::move(out), c});
      }
  sort_and_combine(terms);
  FreePoly f(p_);
  f.terms_ = std::move(terms);
  return f;
}

bool FreePoly::is_highest_weight() const {
  if (terms_.empty() || !is_multihomogeneous()) return false;
  for (int i = 1; i < p_; ++i)
    if (!raising(i, i + 1).is_zero()) return false;
  return true;
}

FreePoly FreePoly::insert_power_after(int q, int letter, int count) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [w, c] : terms_) {
    if (q < 0 || q > static_cast<int>(w.size()))
      throw std::invalid_argument("insert_power_after: position out of range");
    Word out;
    out.reserve(w.size() + count);
    out.insert(out.end(), w.begin(), w.begin() + q);
    out.insert(out.end(), count, static_cast<std::uint8_t>(letter));
    out.insert(out.end(), w.begin() + q, w.end());
    terms.push_back({std::move(out), c});
  }
  sort_and_combine(terms);
  FreePoly f(p_);
  f.terms_ = std::move(terms);
  return f;
}

PolyMatrix FreePoly::evaluate(std::span<const PolyMatrix> args) const {
  for (const auto& t : terms_)
    for (auto l : t.first)
      if (l > args.size()) throw std::invalid_argument("evaluate: arity exceeds arguments");
  if (args.empty()) throw std::invalid_argument("evaluate: no arguments");
  const auto& table = args[0].table();
  PolyMatrix acc(table);
  // terms are sorted, so consecutive words share prefixes; reuse the partial
  // products along the common prefix
  std::vector<PolyMatrix> partial{PolyMatrix::identity(table)};
  Word prev;
  for (const auto& [w, c] : terms_) {
    std::size_t common = 0;
    while (common < prev.size() && common < w.size() && prev[common] == w[common]) ++common;
    partial.resize(common + 1);
    for (std::size_t m = common; m < w.size(); ++m)
      partial.push_back(partial.back() * args[w[m] - 1]);
    acc += partial.back().scaled(c);
    prev = w;
  }
  return acc;
}

std::string FreePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, coeff] : terms_) {
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
    if (w.empty()) {
      out += cs;
      continue;
    }
    if (cs != "1") out += cs + "*";
    for (std::size_t m = 0; m < w.size(); ++m) {
      if (m) out += ".";
      out += "x" + std::to_string(static_cast<int>(w[m]));
    }
  }
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Perm> out;
  do out.push_back(Perm(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace so3cov
