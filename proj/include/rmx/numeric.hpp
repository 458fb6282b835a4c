#pragma once

#include "rmx/rational.hpp"
#include "rmx/laurent.hpp"

#include <mpfr.h>
#include <string>

namespace rmx {

// Fixed-precision real built on mpfr. Default 256 bits (~77 digits), enough
// for the 1e-40 tolerances with headroom.
class MpReal {
public:
  static mpfr_prec_t default_prec;

  MpReal() { mpfr_init2(x_, default_prec); mpfr_set_zero(x_, 1); }
  MpReal(int v) { mpfr_init2(x_, default_prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  MpReal(long v) { mpfr_init2(x_, default_prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  MpReal(double v) { mpfr_init2(x_, default_prec); mpfr_set_d(x_, v, MPFR_RNDN); }
  MpReal(const Rat& v) {
    mpfr_init2(x_, default_prec);
    mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
  }
  MpReal(const MpReal& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(x_, default_prec);
    mpfr_swap(x_, o.x_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~MpReal() { mpfr_clear(x_); }

  MpReal& operator+=(const MpReal& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
  MpReal& operator-=(const MpReal& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
  MpReal& operator*=(const MpReal& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
  MpReal& operator/=(const MpReal& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

  friend MpReal operator+(MpReal a, const MpReal& b) { a += b; return a; }
  friend MpReal operator-(MpReal a, const MpReal& b) { a -= b; return a; }
  friend MpReal operator*(MpReal a, const MpReal& b) { a *= b; return a; }
  friend MpReal operator/(MpReal a, const MpReal& b) { a /= b; return a; }
  MpReal operator-() const {
    MpReal r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
  }

  // *this += a * b, no temporary
  void addmul(const MpReal& a, const MpReal& b) { mpfr_fma(x_, a.x_, b.x_, x_, MPFR_RNDN); }

  MpReal sqrt() const {
    MpReal r(*this);
    mpfr_sqrt(r.x_, r.x_, MPFR_RNDN);
    return r;
  }
  MpReal abs() const {
    MpReal r(*this);
    mpfr_abs(r.x_, r.x_, MPFR_RNDN);
    return r;
  }
  MpReal pow_si(long e) const {
    MpReal r;
    mpfr_pow_si(r.x_, x_, e, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(x_); }
  int sign() const { return mpfr_sgn(x_); }
  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
  friend bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  std::string str(int digits = 30) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, x_);
    return std::string(buf);
  }

  MpReal inv() const { return MpReal(1l) / *this; }

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

private:
  mpfr_t x_;
};

inline bool is_zero(const MpReal& v) { return v.is_zero(); }
inline MpReal inv(const MpReal& v) { return v.inv(); }

inline MpReal eval_laurent_real(const Laurent& l, const MpReal& h0) {
  MpReal s(0l);
  for (auto& tm : l.terms()) s.addmul(MpReal(tm.second), h0.pow_si(tm.first));
  return s;
}

inline MpReal pow10(long e) { return MpReal(10l).pow_si(e); }

} // namespace rmx
