#pragma once

#include "rmx/laurent.hpp"

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace rmx {

// Registry of the square-root extensions used by the coefficient field.
// Radicands are fixed Laurent polynomials in h that are polynomial in q
// (even h-powers only) and bar-symmetric, e.g. [2], [3], [2]_4, kappa_60.
// Products of radicals are never merged into radicals of products; a radical
// monomial is just a set of registered ids.
class RadRegistry {
public:
  static RadRegistry& instance();

  // registers (or finds) a radicand; returns its id (bit position)
  int add(const Laurent& radicand, const std::string& name);
  int find(const Laurent& radicand) const; // -1 if absent
  const Laurent& radicand(int id) const;
  const std::string& name(int id) const;
  int count() const;

private:
  RadRegistry() = default;
  mutable std::mutex mu_;
  std::vector<Laurent> rads_;
  std::vector<std::string> names_;
};

// Fraction of Laurent polynomials in h. Kept lazily: gcd cancellation runs
// only when the denominator grows past a threshold (or on demand through
// reduce_full), so long chains of ring operations never stack gcd costs.
// Equality is decided by cross-multiplication.
struct FracH {
  Laurent num, den;

  FracH() : num(), den(Rat(1)) {}
  explicit FracH(const Laurent& n) : num(n), den(Rat(1)) {}
  FracH(const Laurent& n, const Laurent& d) : num(n), den(d) { reduce(); }

  void reduce();      // cheap normal-form steps, full gcd only past a threshold
  void reduce_full(); // gcd-reduced, denominator monic with lowest exponent 0
  bool is_zero() const { return num.is_zero(); }

  friend FracH operator+(const FracH& a, const FracH& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return FracH(a.num + b.num, a.den);
    return FracH(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend FracH operator-(const FracH& a, const FracH& b) {
    if (b.is_zero()) return a;
    if (a.den == b.den) return FracH(a.num - b.num, a.den);
    return FracH(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend FracH operator*(const FracH& a, const FracH& b) {
    return FracH(a.num * b.num, a.den * b.den);
  }
  friend FracH operator/(const FracH& a, const FracH& b) {
    return FracH(a.num * b.den, a.den * b.num);
  }
  FracH operator-() const {
    FracH r = *this;
    r.num = -r.num;
    return r;
  }
  friend bool operator==(const FracH& a, const FracH& b) {
    if (a.den == b.den) return a.num == b.num;
    return a.num * b.den == b.num * a.den;
  }

  FracH bar() const { return FracH(num.bar(), den.bar()); }
  std::string str() const;
};

class RadQ;   // exact rationals with constant square roots (see below)
class MpReal; // high precision floats (numeric.hpp)

// Element of Q(h) extended by the registered square roots: a sum of
// radical monomials (bitmask of ids) with FracH coefficients.
class Scalar {
public:
  using Term = std::pair<uint64_t, FracH>;

  Scalar() = default;
  Scalar(const Rat& c) { // implicit by design: rationals embed
    if (!rmx::is_zero(c)) t_.push_back({0, FracH(Laurent(c))});
  }
  Scalar(long c) : Scalar(Rat(c)) {}
  explicit Scalar(const Laurent& l) {
    if (!l.is_zero()) t_.push_back({0, FracH(l)});
  }
  explicit Scalar(const FracH& f) {
    if (!f.is_zero()) t_.push_back({0, f});
  }
  static Scalar frac(const Laurent& n, const Laurent& d) { return Scalar(FracH(n, d)); }
  static Scalar h_pow(int e) { return Scalar(Laurent::h_pow(e)); }
  static Scalar q_pow(int e) { return Scalar(Laurent::q_pow(e)); }
  // sqrt of a registered radicand (registers it if new)
  static Scalar sqrt_of(const Laurent& radicand, const std::string& name = "");
  static Scalar radical(uint64_t mask, const FracH& c);

  bool is_zero() const { return t_.empty(); }
  bool is_rational_part_only() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  const std::vector<Term>& terms() const { return t_; }
  // the coefficient at the trivial radical monomial
  FracH rational_part() const {
    for (auto& t : t_)
      if (t.first == 0) return t.second;
    return FracH();
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inv() const;
  Scalar bar() const; // h -> h^{-1}

  // exact value at q = q0 (h = sqrt(q0) handled via constant radicals)
  RadQ eval_radq(const Rat& q0) const;
  // numeric value at given h0 > 0
  MpReal eval_real(const MpReal& h0) const;
  // exact q -> 1 limit; cancels powers of (h - 1) symbolically, radicals
  // become constant square roots. Throws on a genuine pole.
  RadQ limit_q1() const;

  std::string str() const;

private:
  std::vector<Term> t_; // sorted by mask, no zero coefficients
  void normalize();
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar inv(const Scalar& s) { return s.inv(); }

// ---- exact rationals with constant radicals:  sum_m c_m sqrt(m) ----
// m runs over square-free positive integers (m = 1 is the rational part).
class RadQ {
public:
  using Term = std::pair<Int, Rat>;

  RadQ() = default;
  RadQ(const Rat& c) {
    if (!rmx::is_zero(c)) t_.push_back({Int(1), c});
  }
  RadQ(long c) : RadQ(Rat(c)) {}
  // c * sqrt(n) for n > 0 rational: sqrt(p/r) = sqrt(p r)/r
  static RadQ sqrt_of(const Rat& n, const Rat& c = Rat(1));

  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  Rat rational_part() const {
    for (auto& t : t_)
      if (t.first == 1) return t.second;
    return Rat(0);
  }

  friend RadQ operator+(const RadQ& a, const RadQ& b);
  friend RadQ operator-(const RadQ& a, const RadQ& b);
  friend RadQ operator*(const RadQ& a, const RadQ& b);
  friend RadQ operator/(const RadQ& a, const RadQ& b) { return a * b.inv(); }
  RadQ operator-() const;
  RadQ& operator+=(const RadQ& o) { return *this = *this + o; }
  RadQ& operator-=(const RadQ& o) { return *this = *this - o; }
  RadQ& operator*=(const RadQ& o) { return *this = *this * o; }
  friend bool operator==(const RadQ& a, const RadQ& b) { return a.t_ == b.t_; }
  friend bool operator!=(const RadQ& a, const RadQ& b) { return !(a == b); }

  RadQ inv() const;
  MpReal to_real() const;
  double to_double() const;
  std::string str() const;

private:
  std::vector<Term> t_;
  void normalize();
};

inline bool is_zero(const RadQ& s) { return s.is_zero(); }
inline RadQ inv(const RadQ& s) { return s.inv(); }

// convenience: quantum numbers as Scalars
inline Scalar s_qnum(int n, int two_k = 2) { return Scalar(qnum(n, two_k)); }
inline Scalar s_qnum_i(int n, int two_k = 2) { return Scalar(qnum_i(n, two_k)); }
inline Scalar s_kappa(int n) { return Scalar(kappa_sym_laurent(n)); }

} // namespace rmx
