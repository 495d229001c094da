#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace so3cov {

// Sparse exponent vector. Entries sorted by variable index, no zero exponents.
class Monomial {
 public:
  struct VarPow {
    std::int32_t var;
    std::int32_t exp;
    bool operator==(const VarPow&) const = default;
  };

  Monomial() = default;
  static Monomial var(int v, int exp = 1) {
    Monomial m;
    if (exp != 0) m.e_.push_back({v, exp});
    return m;
  }

  bool is_one() const { return e_.empty(); }
  int degree() const {
    int d = 0;
    for (const auto& vp : e_) d += vp.exp;
    return d;
  }
  int exponent(int v) const {
    for (const auto& vp : e_)
      if (vp.var == v) return vp.exp;
    return 0;
  }
  const std::vector<VarPow>& entries() const { return e_; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t a = 0, b = 0;
    while (a < e_.size() || b < o.e_.size()) {
      if (b == o.e_.size() || (a < e_.size() && e_[a].var < o.e_[b].var))
        r.e_.push_back(e_[a++]);
      else if (a == e_.size() || o.e_[b].var < e_[a].var)
        r.e_.push_back(o.e_[b++]);
      else {
        r.e_.push_back({e_[a].var, e_[a].exp + o.e_[b].exp});
        ++a, ++b;
      }
    }
    return r;
  }

  bool operator==(const Monomial&) const = default;

  // Graded reverse-lexicographic order over the table's variable order
  // (lower variable index = earlier variable). Returns <0, 0, >0.
  static int cmp_grevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.e_.rbegin(), ib = b.e_.rbegin();
    while (ia != a.e_.rend() || ib != b.e_.rend()) {
      std::int32_t va = ia != a.e_.rend() ? ia->var : -1;
      std::int32_t vb = ib != b.e_.rend() ? ib->var : -1;
      if (va > vb) return -1;  // a-b positive at the latest differing variable
      if (vb > va) return 1;
      if (ia->exp != ib->exp) return ia->exp < ib->exp ? 1 : -1;
      ++ia, ++ib;
    }
    return 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& vp : e_) {
      h = (h ^ static_cast<std::uint64_t>(vp.var)) * 1099511628211ULL;
      h = (h ^ static_cast<std::uint64_t>(vp.exp)) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::vector<VarPow> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// leading-term-first order used for canonical term storage
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grevlex(a, b) > 0;
  }
};

}  // namespace so3cov
