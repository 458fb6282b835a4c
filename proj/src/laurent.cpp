#include "rmx/laurent.hpp"

#include <map>
#include <sstream>

namespace rmx {

// long division of dense polynomial vectors (index = degree), exact or with remainder
namespace {

struct Poly {
  std::vector<Rat> c; // c[i] coeff of x^i
  int deg() const {
    int d = (int)c.size() - 1;
    while (d >= 0 && rmx::is_zero(c[d])) --d;
    return d;
  }
  void trim() { c.resize(deg() + 1); }
};

Poly to_poly(const Laurent& a, int shift) {
  Poly p;
  p.c.assign(a.deg_hi() - a.deg_lo() + 1 + (shift - a.deg_lo() < 0 ? 0 : 0), Rat(0));
  p.c.assign(a.deg_hi() + shift + 1, Rat(0));
  for (auto& tm : a.terms()) p.c[tm.first + shift] = tm.second;
  return p;
}

Laurent from_poly(const Poly& p, int shift) {
  Laurent r;
  for (int i = (int)p.c.size() - 1; i >= 0; --i)
    if (!rmx::is_zero(p.c[i])) r += Laurent::h_pow(i - shift, p.c[i]);
  return r;
}

// a mod b and a div b over Q[x]
void divmod(Poly a, const Poly& b, Poly& quo, Poly& rem) {
  int db = b.deg();
  if (db < 0) throw std::domain_error("poly division by zero");
  quo.c.assign(std::max(0, a.deg() - db + 1), Rat(0));
  while (a.deg() >= db) {
    int da = a.deg();
    Rat f = a.c[da] / b.c[db];
    quo.c[da - db] = f;
    for (int i = 0; i <= db; ++i) a.c[da - db + i] -= f * b.c[i];
    a.trim();
    if (a.deg() < 0) break;
  }
  rem = a;
}

} // namespace

Laurent lau_divexact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("laurent division by zero");
  if (a.is_zero()) return Laurent();
  Poly pa = to_poly(a, -a.deg_lo());
  Poly pb = to_poly(b, -b.deg_lo());
  Poly q, r;
  divmod(pa, pb, q, r);
  if (r.deg() >= 0) throw std::domain_error("laurent division not exact");
  return from_poly(q, -(a.deg_lo() - b.deg_lo()));
}

namespace {

// integer polynomial, index = degree
using ZPoly = std::vector<Int>;

int zdeg(const ZPoly& p) {
  int d = (int)p.size() - 1;
  while (d >= 0 && sgn(p[d]) == 0) --d;
  return d;
}

void zprimitive(ZPoly& p) {
  Int g(0);
  for (auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) return;
  int d = zdeg(p);
  if (d >= 0 && sgn(p[d]) < 0) g = -g;
  for (auto& c : p) c /= g;
  p.resize(d + 1);
}

// pseudo-remainder lc(b)^{da-db+1} a mod b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = zdeg(b);
  Int lb = b[db];
  int da = zdeg(a);
  while (da >= db) {
    Int f = a[da];
    for (int i = 0; i <= da; ++i) a[i] *= lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    a.resize(da); // the top coefficient cancelled
    da = zdeg(a);
    a.resize(std::max(da + 1, 0));
  }
  return a;
}

ZPoly to_zpoly(const Laurent& a) {
  // scale to integer coefficients (primitive part)
  Int lcm(1);
  for (auto& tm : a.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), tm.second.get_den().get_mpz_t());
  int lo = a.deg_lo();
  ZPoly p(a.deg_hi() - lo + 1, Int(0));
  for (auto& tm : a.terms()) {
    Rat c = tm.second * Rat(lcm);
    p[tm.first - lo] = c.get_num();
  }
  zprimitive(p);
  return p;
}

} // namespace

Laurent lau_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b.is_zero() ? Laurent() : b.shifted(-b.deg_lo());
  if (b.is_zero()) return a.shifted(-a.deg_lo());
  // primitive pseudo-remainder sequence over Z
  ZPoly pa = to_zpoly(a), pb = to_zpoly(b);
  if (zdeg(pa) < zdeg(pb)) std::swap(pa, pb);
  while (zdeg(pb) >= 0) {
    ZPoly r = zprem(pa, pb);
    zprimitive(r);
    pa = std::move(pb);
    pb = std::move(r);
  }
  int d = zdeg(pa);
  Laurent res;
  Rat lc(pa[d]);
  for (int i = d; i >= 0; --i)
    if (sgn(pa[i]) != 0) res += Laurent::h_pow(i, Rat(pa[i]) / lc);
  return res;
}

Laurent lau_div_h_minus_1(const Laurent& a) {
  Laurent hm1 = Laurent::h_pow(1) - Laurent(1);
  return lau_divexact(a, hm1);
}

Laurent qnum(int n, int two_k) {
  if (two_k == 0) throw std::domain_error("qint: k = 0");
  // [n]_k = (q^{kn} - q^{-kn}) / (q^k - q^{-k}); h-exponents: q^k = h^{2k} = h^{two_k}
  Laurent num = Laurent::h_pow(two_k * n) - Laurent::h_pow(-two_k * n);
  Laurent den = Laurent::h_pow(two_k) - Laurent::h_pow(-two_k);
  if (n == 0) return Laurent();
  return lau_divexact(num, den);
}

Laurent qnum_i(int n, int two_k) {
  if (two_k == 0) throw std::domain_error("qint_i: k = 0");
  // [n]_k^i = (q^{kn} + (-1)^{n-1} q^{-kn}) / (q^k + q^{-k})
  Rat sign = (n % 2 == 0) ? Rat(-1) : Rat(1);
  Laurent num = Laurent::h_pow(two_k * n) + Laurent::h_pow(-two_k * n, sign);
  Laurent den = Laurent::h_pow(two_k) + Laurent::h_pow(-two_k);
  return lau_divexact(num, den);
}

namespace {
// Phi_n(x) over Q by iterated division: x^n - 1 = prod_{d | n} Phi_d(x)
Poly cyclotomic(int n) {
  Poly p;
  p.c.assign(n + 1, Rat(0));
  p.c[0] = -1;
  p.c[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly cd = cyclotomic(d);
    Poly q, r;
    divmod(p, cd, q, r);
    if (r.deg() >= 0) throw std::logic_error("cyclotomic division not exact");
    p = q;
  }
  return p;
}

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}
} // namespace

Laurent kappa_sym_laurent(int n) {
  if (n < 1) throw std::domain_error("kappa_sym: n >= 1");
  Poly phi = cyclotomic(n);
  // symmetric form q^{-phi(n)/2} Phi_n(q); in h: h^{-phi(n)} Phi_n(h^2).
  // Normalization pinned by kappa_60 = [2]_8 + [2]_6 - [3] and
  // kappa_6 = q - 1 + q^{-1}.
  Laurent r;
  int e = euler_phi(n);
  for (int i = 0; i <= phi.deg(); ++i)
    if (!rmx::is_zero(phi.c[i])) r += Laurent::h_pow(2 * i - e, phi.c[i]);
  return r;
}

std::string Laurent::str(const char* var) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& tm : t_) {
    Rat c = tm.second;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool unit = (c == 1) && tm.first != 0;
    if (!unit) os << c.get_str();
    if (tm.first != 0) {
      if (!unit) os << "*";
      os << var << "^";
      if (tm.first % 2 == 0)
        os << (tm.first / 2);
      else
        os << "(" << tm.first << "/2)";
    }
  }
  return os.str();
}

} // namespace rmx
