#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace so3cov {

// Exact arithmetic over Q. Invariants (gcd(num,den)=1, den>0, 0 = 0/1) are
// maintained by mpq canonicalization.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Renders "n" or "n/d".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace so3cov
