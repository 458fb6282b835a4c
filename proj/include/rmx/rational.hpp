#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <stdexcept>

namespace rmx {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }
inline Rat inv(const Rat& r) { return Rat(1) / r; }

// generic fallbacks so the field-templated code works with any of the
// project's coefficient types
template <class T>
inline bool is_zero(const T& t) { return t.is_zero(); }
template <class T>
inline T inv(const T& t) { return t.inv(); }

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat base = e > 0 ? b : Rat(1) / b;
  unsigned long n = e > 0 ? (unsigned long)e : (unsigned long)(-e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// Splits n > 0 as s * f^2 with s square-free (small primes stripped, then
// perfect powers; a huge square factor of a residual composite is kept as-is,
// which only weakens simplification, never equality of equal inputs).
inline void squarefree_split(const Int& n, Int& s, Int& f) {
  if (n <= 0) throw std::domain_error("squarefree_split: need positive");
  s = n;
  f = 1;
  for (unsigned long p = 2; p <= 9973; p = (p == 2 ? 3 : p + 2)) {
    Int p2 = Int((long)p) * (long)p;
    while (mpz_divisible_p(s.get_mpz_t(), p2.get_mpz_t())) {
      s /= p2;
      f *= (long)p;
    }
    if (s < p2) break;
  }
  if (mpz_perfect_square_p(s.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    f *= r;
    s = 1;
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace rmx
