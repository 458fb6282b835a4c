#pragma once

#include "rmx/rational.hpp"

#include <vector>
#include <utility>
#include <algorithm>
#include <string>

namespace rmx {

// Laurent polynomial in h = q^{1/2} with rational coefficients.
// Terms sorted by descending exponent, no zero coefficients stored.
class Laurent {
public:
  using Term = std::pair<int, Rat>; // (exponent of h, coefficient)

  Laurent() = default;
  explicit Laurent(const Rat& c) {
    if (!rmx::is_zero(c)) t_.push_back({0, c});
  }
  Laurent(long num, long den = 1) : Laurent(Rat(num, den)) {}

  static Laurent h_pow(int e, const Rat& c = Rat(1)) {
    Laurent p;
    if (!rmx::is_zero(c)) p.t_.push_back({e, c});
    return p;
  }
  // q^e = h^{2e}
  static Laurent q_pow(int e, const Rat& c = Rat(1)) { return h_pow(2 * e, c); }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  bool is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1; }
  const std::vector<Term>& terms() const { return t_; }

  int deg_hi() const { return t_.empty() ? 0 : t_.front().first; }
  int deg_lo() const { return t_.empty() ? 0 : t_.back().first; }

  Rat coeff(int e) const {
    for (auto& tm : t_)
      if (tm.first == e) return tm.second;
    return Rat(0);
  }
  const Rat& lead() const {
    static const Rat z(0);
    return t_.empty() ? z : t_.front().second;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& tm : r.t_) tm.second = -tm.second;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first > b.t_[j].first))
        r.t_.push_back(a.t_[i++]);
      else if (i == a.t_.size() || b.t_[j].first > a.t_[i].first)
        r.t_.push_back(b.t_[j++]);
      else {
        Rat c = a.t_[i].second + b.t_[j].second;
        if (!rmx::is_zero(c)) r.t_.push_back({a.t_[i].first, c});
        ++i;
        ++j;
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    // dense accumulation over the exponent range
    int lo = a.deg_lo() + b.deg_lo(), hi = a.deg_hi() + b.deg_hi();
    std::vector<Rat> acc(hi - lo + 1, Rat(0));
    for (auto& x : a.t_)
      for (auto& y : b.t_) acc[x.first + y.first - lo] += x.second * y.second;
    Laurent r;
    for (int e = hi; e >= lo; --e)
      if (!rmx::is_zero(acc[e - lo])) r.t_.push_back({e, acc[e - lo]});
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
    for (size_t i = 0; i < a.t_.size(); ++i) {
      if (a.t_[i].first != b.t_[i].first) return a.t_[i].first < b.t_[i].first;
      int c = cmp(a.t_[i].second, b.t_[i].second);
      if (c) return c < 0;
    }
    return false;
  }

  // substitution h -> h^{-1}
  Laurent bar() const {
    Laurent r;
    r.t_.assign(t_.rbegin(), t_.rend());
    for (auto& tm : r.t_) tm.first = -tm.first;
    return r;
  }
  bool bar_symmetric() const { return *this == bar(); }

  // multiply by h^e
  Laurent shifted(int e) const {
    Laurent r = *this;
    for (auto& tm : r.t_) tm.first += e;
    return r;
  }

  Rat eval1() const { // value at h = 1
    Rat s(0);
    for (auto& tm : t_) s += tm.second;
    return s;
  }
  // value at h = h0 (rational)
  Rat eval(const Rat& h0) const {
    Rat s(0);
    for (auto& tm : t_) s += tm.second * rat_pow(h0, tm.first);
    return s;
  }

  std::string str(const char* var = "q") const; // renders in q^{e/2} style

  size_t hash() const {
    size_t h = 1469598103u;
    for (auto& tm : t_) {
      h = h * 1099511628211ull + (size_t)(tm.first * 2654435761u);
      h = h * 1099511628211ull + std::hash<std::string>()(tm.second.get_str());
    }
    return h;
  }

private:
  std::vector<Term> t_;
};

// ---- division helpers (as polynomials in h after shifting) ----

// exact division a / b, throws if not exact
Laurent lau_divexact(const Laurent& a, const Laurent& b);
// gcd, normalized monic in the top term with deg_lo = 0
Laurent lau_gcd(const Laurent& a, const Laurent& b);
// divide by (h - 1) exactly (for q->1 limits); throws if remainder nonzero
Laurent lau_div_h_minus_1(const Laurent& a);

// quantum numbers, as Laurent polynomials in h
Laurent qnum(int n, int two_k = 2);    // [n]_k with two_k = 2k
Laurent qnum_i(int n, int two_k = 2);  // [n]_k^i
Laurent kappa_sym_laurent(int n);      // symmetric cyclotomic kappa_n

} // namespace rmx
