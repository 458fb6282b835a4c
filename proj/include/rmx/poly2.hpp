#pragma once

#include "rmx/ratfunc.hpp"

#include <map>

namespace rmx {

// Sparse bivariate polynomial in (z, w) over a field K. Used to verify the
// two-parameter Yang-Baxter identity after clearing denominators.
template <class K>
class Poly2 {
public:
  using Key = std::pair<int, int>; // (deg z, deg w)

  Poly2() = default;
  explicit Poly2(const K& c) {
    if (!rmx::is_zero(c)) t_[{0, 0}] = c;
  }
  static Poly2 mono(int dz, int dw, const K& c) {
    Poly2 p;
    if (!rmx::is_zero(c)) p.t_[{dz, dw}] = c;
    return p;
  }
  // lift of a univariate polynomial under z -> z^az w^aw
  static Poly2 lift(const Poly<K>& p, int az, int aw) {
    Poly2 r;
    for (int i = 0; i <= p.deg(); ++i)
      if (!rmx::is_zero(p.coeff(i))) r.t_[{az * i, aw * i}] = p.coeff(i);
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, K>& terms() const { return t_; }

  Poly2& operator+=(const Poly2& o) {
    for (auto& [k, c] : o.t_) {
      auto it = t_.find(k);
      if (it == t_.end())
        t_[k] = c;
      else {
        it->second += c;
        if (rmx::is_zero(it->second)) t_.erase(it);
      }
    }
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { a += b; return a; }
  Poly2 operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { a += (-b); return a; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (auto& [ka, ca] : a.t_)
      for (auto& [kb, cb] : b.t_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        auto it = r.t_.find(k);
        if (it == r.t_.end())
          r.t_[k] = ca * cb;
        else {
          it->second += ca * cb;
          if (rmx::is_zero(it->second)) r.t_.erase(it);
        }
      }
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

private:
  std::map<Key, K> t_;
};

} // namespace rmx
