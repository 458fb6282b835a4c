#pragma once

#include "rmx/scalar.hpp"

#include <vector>
#include <string>

namespace rmx {

// Dense polynomial in one variable (z or u) over a field K.
template <class K>
class Poly {
public:
  Poly() = default;
  explicit Poly(const K& c) {
    c_.push_back(c);
    trim();
  }
  static Poly var(int e = 1, const K& c = K(1)) {
    Poly p;
    p.c_.assign(e + 1, K(0));
    p.c_[e] = c;
    p.trim();
    return p;
  }
  static Poly from_coeffs(std::vector<K> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int deg() const { return (int)c_.size() - 1; } // -1 for zero
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : K(0); }
  const K& lead() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (rmx::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (rmx::is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const K& s, const Poly& p) {
    Poly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  K eval(const K& z0) const {
    K s(0);
    for (int i = deg(); i >= 0; --i) s = s * z0 + c_[i];
    return s;
  }
  template <class F, class K2>
  Poly<K2> map(F f) const {
    std::vector<K2> c;
    c.reserve(c_.size());
    for (auto& x : c_) c.push_back(f(x));
    return Poly<K2>::from_coeffs(std::move(c));
  }
  // substitute z -> c z (c in K)
  Poly scale_var(const K& c) const {
    Poly r = *this;
    K f(1);
    for (size_t i = 0; i < r.c_.size(); ++i) {
      r.c_[i] = r.c_[i] * f;
      f = f * c;
    }
    r.trim();
    return r;
  }
  // substitute z -> z^{-1} and clear denominators: returns z^{deg} p(1/z)
  Poly reverse() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

  void trim() {
    while (!c_.empty() && rmx::is_zero(c_.back())) c_.pop_back();
  }

private:
  std::vector<K> c_;
};

template <class K>
void poly_divmod(Poly<K> a, const Poly<K>& b, Poly<K>& quo, Poly<K>& rem) {
  if (b.is_zero()) throw std::domain_error("poly division by zero");
  std::vector<K> q(std::max(0, a.deg() - b.deg() + 1), K(0));
  K binv = rmx::inv(b.lead());
  while (a.deg() >= b.deg()) {
    int d = a.deg() - b.deg();
    K f = a.lead() * binv;
    std::vector<K> t = a.coeffs();
    for (int i = 0; i <= b.deg(); ++i) t[d + i] = t[d + i] - f * b.coeff(i);
    q[d] = f;
    int old = a.deg();
    a = Poly<K>::from_coeffs(std::move(t));
    if (a.deg() == old) throw std::logic_error("poly_divmod: no progress");
  }
  quo = Poly<K>::from_coeffs(std::move(q));
  rem = a;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  K linv = rmx::inv(a.lead());
  return linv * a;
}

// Rational function in one variable over K, held as an unreduced fraction.
// Common factors are cancelled only on demand (normalized()); equality is
// decided by cross-multiplication, so chained products never pay for gcds.
template <class K>
class RatFunc {
public:
  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(const K& c) : num_(c), den_(K(1)) {}
  RatFunc(long c) : num_(K(c)), den_(K(1)) {}
  explicit RatFunc(const Poly<K>& n) : num_(n), den_(K(1)) {}
  RatFunc(const Poly<K>& n, const Poly<K>& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) den_ = Poly<K>(K(1));
  }
  static RatFunc var() { return RatFunc(Poly<K>::var()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inv() const { return RatFunc(den_, num_); }

  // fully reduced with a monic denominator (for serialization and pole data)
  RatFunc normalized() const {
    if (num_.is_zero()) return RatFunc();
    Poly<K> n = num_, d = den_;
    Poly<K> g = poly_gcd(n, d);
    if (g.deg() > 0) {
      Poly<K> q, r;
      poly_divmod(n, g, q, r);
      n = q;
      poly_divmod(d, g, q, r);
      d = q;
    }
    K linv = rmx::inv(d.lead());
    return RatFunc(linv * n, linv * d);
  }

  // value at z = z0; throws if the denominator vanishes there
  K eval(const K& z0) const {
    K d = den_.eval(z0);
    if (rmx::is_zero(d)) {
      RatFunc r = normalized();
      d = r.den_.eval(z0);
      if (rmx::is_zero(d)) throw std::domain_error("RatFunc: pole at evaluation point");
      return r.num_.eval(z0) * rmx::inv(d);
    }
    return num_.eval(z0) * rmx::inv(d);
  }
  RatFunc subst_scale(const K& c) const { // z -> c z
    return RatFunc(num_.scale_var(c), den_.scale_var(c));
  }
  RatFunc subst_invz() const { // z -> 1/z
    int dn = num_.deg(), dd = den_.deg();
    Poly<K> n = num_.reverse(), d = den_.reverse();
    int e = dn - dd;
    if (e > 0)
      d = d * Poly<K>::var(e);
    else if (e < 0)
      n = n * Poly<K>::var(-e);
    return RatFunc(n, d);
  }
  template <class F, class K2>
  RatFunc<K2> map(F f) const {
    return RatFunc<K2>(num_.template map<F, K2>(f), den_.template map<F, K2>(f));
  }

private:
  Poly<K> num_, den_;
};

template <class K>
inline bool is_zero(const RatFunc<K>& f) { return f.is_zero(); }
template <class K>
inline RatFunc<K> inv(const RatFunc<K>& f) { return f.inv(); }

using PolyZ = Poly<Scalar>;
using RatZ = RatFunc<Scalar>;

// 1 - q^k z  as a polynomial over Scalar
inline PolyZ one_minus_qz(int k) {
  return PolyZ::from_coeffs({Scalar(1), -Scalar::q_pow(k)});
}

} // namespace rmx
