#include "rmx/scalar.hpp"
#include "rmx/numeric.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rmx {

mpfr_prec_t MpReal::default_prec = 256;

RadRegistry& RadRegistry::instance() {
  static RadRegistry r;
  return r;
}

int RadRegistry::add(const Laurent& radicand, const std::string& name) {
  if (radicand.is_zero()) throw std::domain_error("radicand must be nonzero");
  for (auto& tm : radicand.terms())
    if (tm.first % 2 != 0) throw std::domain_error("radicand must be a polynomial in q");
  if (!radicand.bar_symmetric()) throw std::domain_error("radicand must be bar-symmetric");
  std::lock_guard<std::mutex> lk(mu_);
  for (size_t i = 0; i < rads_.size(); ++i)
    if (rads_[i] == radicand) return (int)i;
  if (rads_.size() >= 64) throw std::runtime_error("radicand registry full");
  rads_.push_back(radicand);
  names_.push_back(name.empty() ? ("r" + std::to_string(rads_.size() - 1)) : name);
  return (int)rads_.size() - 1;
}

int RadRegistry::find(const Laurent& radicand) const {
  std::lock_guard<std::mutex> lk(mu_);
  for (size_t i = 0; i < rads_.size(); ++i)
    if (rads_[i] == radicand) return (int)i;
  return -1;
}

const Laurent& RadRegistry::radicand(int id) const {
  std::lock_guard<std::mutex> lk(mu_);
  return rads_.at(id);
}

const std::string& RadRegistry::name(int id) const {
  std::lock_guard<std::mutex> lk(mu_);
  return names_.at(id);
}

int RadRegistry::count() const {
  std::lock_guard<std::mutex> lk(mu_);
  return (int)rads_.size();
}

void FracH::reduce() {
  if (den.is_zero()) throw std::domain_error("FracH: zero denominator");
  if (num.is_zero()) {
    den = Laurent(Rat(1));
    return;
  }
  // single-term denominators divide out without a gcd
  if (den.terms().size() == 1) {
    auto [e, c] = den.terms()[0];
    if (e != 0 || c != 1) {
      Laurent n2;
      for (auto& tm : num.terms()) n2 += Laurent::h_pow(tm.first - e, tm.second / c);
      num = n2;
      den = Laurent(Rat(1));
    }
    return;
  }
  if (den.deg_hi() - den.deg_lo() > 48) reduce_full();
}

void FracH::reduce_full() {
  if (den.is_zero()) throw std::domain_error("FracH: zero denominator");
  if (num.is_zero()) {
    den = Laurent(Rat(1));
    return;
  }
  Laurent g = lau_gcd(num, den);
  if (!g.is_one()) {
    num = lau_divexact(num, g);
    den = lau_divexact(den, g);
  }
  int lo = den.deg_lo();
  num = num.shifted(-lo);
  den = den.shifted(-lo);
  if (den.is_one()) return;
  if (den.terms().size() == 1) {
    FracH tmp(num, den);
    *this = tmp;
    return;
  }
  Rat lc = den.lead();
  if (lc != 1) {
    Laurent n2, d2;
    for (auto& tm : num.terms()) n2 += Laurent::h_pow(tm.first, tm.second / lc);
    for (auto& tm : den.terms()) d2 += Laurent::h_pow(tm.first, tm.second / lc);
    num = n2;
    den = d2;
  }
}

std::string FracH::str() const {
  if (den.is_one()) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

Scalar Scalar::sqrt_of(const Laurent& radicand, const std::string& name) {
  if (radicand.is_one()) return Scalar(1);
  int id = RadRegistry::instance().add(radicand, name);
  Scalar s;
  s.t_.push_back({uint64_t(1) << id, FracH(Laurent(Rat(1)))});
  return s;
}

Scalar Scalar::radical(uint64_t mask, const FracH& c) {
  Scalar s;
  if (!c.is_zero()) s.t_.push_back({mask, c});
  return s;
}

void Scalar::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = out.back().second + t.second;
    else
      out.push_back(t);
  }
  t_.clear();
  for (auto& t : out)
    if (!t.second.is_zero()) t_.push_back(t);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.t_ = a.t_;
  r.t_.insert(r.t_.end(), b.t_.begin(), b.t_.end());
  r.normalize();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  auto& reg = RadRegistry::instance();
  for (auto& x : a.t_)
    for (auto& y : b.t_) {
      uint64_t common = x.first & y.first;
      FracH c = x.second * y.second;
      while (common) {
        int id = __builtin_ctzll(common);
        common &= common - 1;
        c = c * FracH(reg.radicand(id));
      }
      r.t_.push_back({x.first ^ y.first, c});
    }
  r.normalize();
  return r;
}

Scalar Scalar::inv() const {
  if (t_.empty()) throw std::domain_error("Scalar: division by zero");
  if (t_.size() == 1) {
    // (sqrt(m) f)^{-1} = sqrt(m) / (f * prod radicands in m)
    auto& reg = RadRegistry::instance();
    FracH c = FracH(Laurent(Rat(1))) / t_[0].second;
    uint64_t m = t_[0].first;
    uint64_t mm = m;
    while (mm) {
      int id = __builtin_ctzll(mm);
      mm &= mm - 1;
      c = c / FracH(reg.radicand(id));
    }
    Scalar r;
    r.t_.push_back({m, c});
    return r;
  }
  // pick a radical id present in some term; conjugate it away
  int id = -1;
  for (auto& t : t_)
    if (t.first) {
      id = __builtin_ctzll(t.first);
      break;
    }
  if (id < 0) throw std::logic_error("Scalar::inv: unexpected structure");
  uint64_t bit = uint64_t(1) << id;
  Scalar a, b; // x = a + sqrt(p) b with a, b free of the chosen radical
  for (auto& t : t_) {
    if (t.first & bit)
      b.t_.push_back({t.first ^ bit, t.second});
    else
      a.t_.push_back(t);
  }
  Scalar p = Scalar(RadRegistry::instance().radicand(id));
  Scalar denom = a * a - p * b * b; // free of the radical
  Scalar num = a - Scalar::radical(bit, FracH(Laurent(Rat(1)))) * b;
  return num * denom.inv();
}

Scalar Scalar::bar() const {
  Scalar r;
  for (auto& t : t_) r.t_.push_back({t.first, t.second.bar()});
  r.normalize();
  return r;
}

RadQ RadQ::sqrt_of(const Rat& n, const Rat& c) {
  if (sgn(n) <= 0) throw std::domain_error("RadQ::sqrt_of: need positive");
  Int pr = n.get_num() * n.get_den();
  Int s, f;
  squarefree_split(pr, s, f);
  // sqrt(p/r) = sqrt(p r)/r = f sqrt(s) / r
  RadQ x;
  Rat coef = c * Rat(f) / Rat(n.get_den());
  if (!rmx::is_zero(coef)) x.t_.push_back({s, coef});
  return x;
}

void RadQ::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  t_.clear();
  for (auto& t : out)
    if (!rmx::is_zero(t.second)) t_.push_back(t);
}

RadQ operator+(const RadQ& a, const RadQ& b) {
  RadQ r;
  r.t_ = a.t_;
  r.t_.insert(r.t_.end(), b.t_.begin(), b.t_.end());
  r.normalize();
  return r;
}

RadQ operator-(const RadQ& a, const RadQ& b) { return a + (-b); }

RadQ RadQ::operator-() const {
  RadQ r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

RadQ operator*(const RadQ& a, const RadQ& b) {
  RadQ r;
  for (auto& x : a.t_)
    for (auto& y : b.t_) {
      // sqrt(s1) sqrt(s2) = g sqrt((s1/g)(s2/g)), g = gcd(s1, s2)
      Int g;
      mpz_gcd(g.get_mpz_t(), x.first.get_mpz_t(), y.first.get_mpz_t());
      Int m = (x.first / g) * (y.first / g);
      r.t_.push_back({m, x.second * y.second * Rat(g)});
    }
  r.normalize();
  return r;
}

namespace {
Int smallest_prime_factor(const Int& n) {
  if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return Int(2);
  for (unsigned long p = 3;; p += 2) {
    if (Int((long)p) * (long)p > n) return n;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Int((long)p);
  }
}
} // namespace

RadQ RadQ::inv() const {
  if (t_.empty()) throw std::domain_error("RadQ: division by zero");
  if (t_.size() == 1) {
    RadQ r;
    r.t_.push_back({t_[0].first, Rat(1) / (t_[0].second * Rat(t_[0].first))});
    return r;
  }
  // conjugate over a prime dividing some radicand
  Int p(1);
  for (auto& t : t_)
    if (t.first != 1) {
      p = smallest_prime_factor(t.first);
      break;
    }
  if (p == 1) throw std::logic_error("RadQ::inv: unexpected structure");
  RadQ a, b; // x = a + b where b collects radicands divisible by p, conj = a - b
  for (auto& t : t_) {
    if (mpz_divisible_p(t.first.get_mpz_t(), p.get_mpz_t()))
      b.t_.push_back(t);
    else
      a.t_.push_back(t);
  }
  RadQ conj = a - b;
  RadQ denom = (*this) * conj; // free of sqrt(p)
  return conj * denom.inv();
}

std::string RadQ::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    Rat c = t.second;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    if (t.first == 1)
      os << c.get_str();
    else {
      if (c != 1) os << c.get_str() << "*";
      os << "sqrt(" << t.first.get_str() << ")";
    }
  }
  return os.str();
}

MpReal RadQ::to_real() const {
  MpReal s(0);
  for (auto& t : t_) {
    MpReal term(t.second);
    if (t.first != 1) term *= MpReal(Rat(t.first)).sqrt();
    s += term;
  }
  return s;
}

double RadQ::to_double() const { return to_real().to_double(); }

namespace {
// evaluate a Laurent at h = sqrt(q0) exactly
RadQ eval_laurent_radq(const Laurent& l, const Rat& q0) {
  RadQ even(Rat(0)), odd(Rat(0));
  for (auto& tm : l.terms()) {
    int e = tm.first;
    if (e % 2 == 0)
      even += RadQ(tm.second * rat_pow(q0, e / 2));
    else {
      int k = (e - 1) / 2; // h^e = q^k * h
      odd += RadQ(tm.second * rat_pow(q0, k));
    }
  }
  return even + odd * RadQ::sqrt_of(q0);
}
} // namespace

RadQ Scalar::eval_radq(const Rat& q0) const {
  if (sgn(q0) <= 0) throw std::domain_error("eval_radq: q0 must be positive");
  auto& reg = RadRegistry::instance();
  RadQ s(Rat(0));
  for (auto& tt : t_) {
    auto t = tt;
    if (eval_laurent_radq(t.second.den, q0).is_zero()) t.second.reduce_full();
    RadQ c = eval_laurent_radq(t.second.num, q0) * eval_laurent_radq(t.second.den, q0).inv();
    uint64_t m = t.first;
    while (m) {
      int id = __builtin_ctzll(m);
      m &= m - 1;
      // radicand is a polynomial in q, hence rational here
      RadQ rv = eval_laurent_radq(reg.radicand(id), q0);
      if (!rv.terms().empty() && rv.terms().size() == 1 && rv.terms()[0].first == 1) {
        Rat v = rv.rational_part();
        if (sgn(v) <= 0) throw std::domain_error("radicand not positive at q0");
        c = c * RadQ::sqrt_of(v);
      } else
        throw std::logic_error("radicand did not evaluate to a rational");
    }
    s += c;
  }
  return s;
}

MpReal Scalar::eval_real(const MpReal& h0) const {
  auto& reg = RadRegistry::instance();
  MpReal s(0);
  for (auto& tt : t_) {
    auto t = tt;
    t.second.reduce_full();
    MpReal c = eval_laurent_real(t.second.num, h0) / eval_laurent_real(t.second.den, h0);
    uint64_t m = t.first;
    while (m) {
      int id = __builtin_ctzll(m);
      m &= m - 1;
      c *= eval_laurent_real(reg.radicand(id), h0).sqrt();
    }
    s += c;
  }
  return s;
}

RadQ Scalar::limit_q1() const {
  auto& reg = RadRegistry::instance();
  RadQ s(Rat(0));
  for (auto& t : t_) {
    Laurent num = t.second.num, den = t.second.den;
    // cancel powers of (h - 1)
    while (rmx::is_zero(den.eval1())) {
      if (!rmx::is_zero(num.eval1())) throw std::domain_error("limit_q1: pole at q = 1");
      num = lau_div_h_minus_1(num);
      den = lau_div_h_minus_1(den);
    }
    RadQ c(num.eval1() / den.eval1());
    uint64_t m = t.first;
    while (m) {
      int id = __builtin_ctzll(m);
      m &= m - 1;
      Rat v = reg.radicand(id).eval1();
      if (sgn(v) <= 0) throw std::domain_error("radicand not positive at q = 1");
      c = c * RadQ::sqrt_of(v);
    }
    s += c;
  }
  return s;
}

std::string Scalar::str() const {
  if (t_.empty()) return "0";
  auto& reg = RadRegistry::instance();
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    std::string c = t.second.str();
    if (t.first == 0) {
      os << c;
      continue;
    }
    if (t.second == FracH(Laurent(Rat(1))))
      ;
    else
      os << "(" << c << ")*";
    uint64_t m = t.first;
    bool f2 = true;
    while (m) {
      int id = __builtin_ctzll(m);
      m &= m - 1;
      if (!f2) os << "*";
      f2 = false;
      os << "sqrt(" << reg.name(id) << ")";
    }
  }
  return os.str();
}

} // namespace rmx
