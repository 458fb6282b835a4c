#include "rmx/rmatrix.hpp"
#include "rmx/tables.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace rmx {

namespace {
Scalar qq(int k) { return Scalar::q_pow(k); }
Scalar qh(int k) { return Scalar::h_pow(k); }
PolyZ zpoly(std::vector<Scalar> c) { return PolyZ::from_coeffs(std::move(c)); }
} // namespace

RatZ FScalar::to_ratz() const {
  int tot = 0;
  PolyZ num(Scalar(1)), den(Scalar(1));
  for (int a : poles) {
    tot += a;
    num = num * zpoly({Scalar(1), -qq(a)});
    den = den * zpoly({Scalar(1), -qq(-a)});
  }
  return RatZ(Scalar(sign) * qq(-tot)) * RatZ(num, den);
}

Scalar FScalar::at_zero() const {
  int tot = 0;
  for (int a : poles) tot += a;
  return Scalar(sign) * qq(-tot);
}

RatFunc<RadQ> FScalar::rational(int usub) const {
  RatFunc<RadQ> r(RadQ(Rat(sign * (poles.size() % 2 ? -1 : 1))));
  for (int a : poles) {
    Poly<RadQ> num = Poly<RadQ>::from_coeffs({RadQ(Rat(a)), RadQ(Rat(usub))});
    Poly<RadQ> den = Poly<RadQ>::from_coeffs({RadQ(Rat(a)), RadQ(Rat(-usub))});
    r = r * RatFunc<RadQ>(num, den);
  }
  return r;
}

int rational_usub(Series s) { return s == Series::B ? 4 : 2; }

std::vector<BlockSpec> block_table(Series s, int rank) {
  auto om = [&](int i) {
    Weight w(rank, 0);
    if (i > 0) w[i - 1] = 1;
    return w;
  };
  auto om2 = [&](int i) {
    Weight w(rank, 0);
    w[i - 1] = 2;
    return w;
  };
  switch (s) {
    case Series::A:
      return {{om2(1), {1, {}}, 1}, {rank == 1 ? om(0) : om(2), {-1, {2}}, -1}};
    case Series::B:
      return {{om2(1), {1, {}}, 1},
              {rank == 2 ? om2(2) : om(2), {-1, {4}}, -1},
              {om(0), {1, {4, 4 * rank - 2}}, 1}};
    case Series::C:
      return {{om2(1), {1, {}}, 1}, {om(2), {-1, {2}}, -1}, {om(0), {-1, {2 * rank + 2}}, -1}};
    case Series::D:
      return {{om2(1), {1, {}}, 1}, {om(2), {-1, {2}}, -1}, {om(0), {1, {2, 2 * rank - 2}}, 1}};
    case Series::E:
      if (rank == 6)
        return {{om2(1), {1, {}}, 1}, {om(2), {-1, {2}}, -1}, {om(5), {1, {2, 8}}, 1}};
      if (rank == 7)
        return {{om2(1), {1, {}}, 1},
                {om(2), {-1, {2}}, -1},
                {om(6), {1, {2, 10}}, 1},
                {om(0), {-1, {2, 10, 18}}, -1}};
      // E8: the two multiplicity blocks live in E8Data
      return {{om2(1), {1, {}}, 1}, {om(2), {-1, {2}}, -1}, {om(7), {1, {2, 12}}, 1}};
    case Series::F:
      return {{om2(1), {1, {}}, 1},
              {om(2), {-1, {2}}, -1},
              {om(4), {-1, {8}}, -1},
              {om(1), {1, {2, 12}}, 1},
              {om(0), {1, {8, 18}}, 1}};
    case Series::G:
      return {{om2(1), {1, {}}, 1},
              {om(2), {-1, {2}}, -1},
              {om(1), {-1, {8}}, -1},
              {om(0), {1, {2, 12}}, 1}};
  }
  throw std::domain_error("block_table");
}

// ---- matrix units ----

namespace {

int pidx(int d, int i, int j) { return (i - 1) * d + (j - 1); } // 1-based pairs

// the sl_d trigonometric R-matrix with q |-> q^m
SpMat<RatZ> rqa_units(int d, int m) {
  SpMat<RatZ> R(d * d, d * d);
  RatZ den(zpoly({qq(m), -qq(-m)}));
  RatZ clt = RatZ(zpoly({Scalar(0), qq(m) - qq(-m)})) / den;
  RatZ cgt = RatZ(qq(m) - qq(-m)) / den;
  RatZ csw = RatZ(zpoly({Scalar(1), Scalar(-1)})) / den;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      if (i == j)
        R.add_to(pidx(d, i, i), pidx(d, i, i), RatZ(1));
      else {
        R.add_to(pidx(d, i, j), pidx(d, i, j), i < j ? clt : cgt);
        R.add_to(pidx(d, i, j), pidx(d, j, i), csw);
      }
    }
  R.compact();
  return R;
}

using GSet = UnitVectorSet;

GSet expand_mirror(const std::vector<std::pair<int, int>>& half,
                   const std::vector<Scalar>& chalf, int mirror_sign) {
  GSet g;
  int n = (int)half.size();
  g.pairs = half;
  g.coeff = chalf;
  for (int p = n - 1; p >= 0; --p) {
    g.pairs.push_back({half[p].second, half[p].first});
    g.coeff.push_back(Scalar(mirror_sign) * chalf[p].bar());
  }
  return g;
}

using EqClass = std::function<int(const std::pair<int, int>&, const std::pair<int, int>&)>;

void add_g_template(SpMat<RatZ>& R, int d, const std::vector<GSet>& sets, const RatZ& am,
                    const RatZ& ap, const RatZ& a01, const RatZ& a02, const EqClass& eqc,
                    const RatZ& prefactor) {
  for (auto& g : sets) {
    int n = (int)g.pairs.size();
    for (int p = 0; p < n; ++p) {
      if (g.coeff[p].is_zero()) continue;
      for (int q = 0; q < n; ++q) {
        if (g.coeff[q].is_zero()) continue;
        const RatZ* a;
        if (p + q + 2 < n + 1)
          a = &am;
        else if (p + q + 2 > n + 1)
          a = &ap;
        else {
          int cls = eqc(g.pairs[p], g.pairs[q]);
          if (cls < 0) continue;
          a = cls == 0 ? &a01 : &a02;
        }
        if (a->is_zero()) continue;
        auto [i, k] = g.pairs[p];
        auto [j, l] = g.pairs[q];
        // E_ij (x) E_kl maps v_j (x) v_l to v_i (x) v_k
        R.add_to(pidx(d, i, k), pidx(d, j, l), prefactor * RatZ(g.coeff[p] * g.coeff[q]) * (*a));
      }
    }
  }
}

// (q - q^{-1})(1 - z) / ((q - q^{-1} z)(q^k - q^{-k} z))
RatZ pref2(int k) {
  PolyZ num = zpoly({qq(1) - qq(-1)}) * zpoly({Scalar(1), Scalar(-1)});
  PolyZ den = zpoly({qq(1), -qq(-1)}) * zpoly({qq(k), -qq(-k)});
  return RatZ(num, den);
}

SpMat<RatZ> units_bcd(Series s, int r) {
  int d = (s == Series::B) ? 2 * r + 1 : 2 * r;
  SpMat<RatZ> R = rqa_units(d, s == Series::B ? 2 : 1);
  std::vector<Scalar> eps(d + 1);
  auto bar = [&](int i) { return d + 1 - i; };
  if (s == Series::B) {
    for (int i = 1; i <= r; ++i) {
      int sg = ((r + 1 - i) % 2 == 0) ? 1 : -1;
      eps[i] = Scalar(sg) * qq(2 * r - 2 * i + 1);
      eps[bar(i)] = eps[i].bar();
    }
    eps[r + 1] = Scalar(1);
  } else if (s == Series::C) {
    for (int i = 1; i <= r; ++i) {
      int e = r + 1 - i;
      eps[i] = (e % 2 ? Scalar(-1) : Scalar(1)) * qq(e);
      eps[bar(i)] = -eps[i].bar();
    }
  } else {
    for (int i = 1; i <= r; ++i) {
      int e = r - i;
      eps[i] = (e % 2 ? Scalar(-1) : Scalar(1)) * qq(e);
      eps[bar(i)] = eps[i].bar();
    }
  }
  int kk = (s == Series::B) ? 2 * r - 1 : (s == Series::C ? r + 1 : r - 1);
  SpMat<RatZ> Q(d * d, d * d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      RatZ c;
      if (i + j < d + 1)
        c = RatZ(zpoly({Scalar(0), eps[i] * eps[j] * qq(-kk)}));
      else if (i + j > d + 1)
        c = RatZ(eps[i] * eps[j] * qq(kk));
      else if (s == Series::B)
        c = (i == r + 1) ? RatZ(zpoly({qq(2 * r), qq(-2 * r)})) / RatZ(qq(1) + qq(-1))
                         : RatZ(zpoly({qq(2 * r - 2), qq(-2 * r + 2)})) / RatZ(qq(1) + qq(-1));
      else if (s == Series::C)
        c = -(RatZ(zpoly({qh(2 * r + 1), qh(-2 * r - 1)})) / RatZ(qh(1) + qh(-1)));
      else
        c = RatZ(zpoly({qh(2 * r - 3), qh(-2 * r + 3)})) / RatZ(qh(1) + qh(-1));
      if (!c.is_zero()) Q.add_to(pidx(d, i, bar(i)), pidx(d, j, bar(j)), c);
    }
  Q.compact();
  if (s == Series::B) {
    PolyZ num = zpoly({qq(2) - qq(-2)}) * zpoly({Scalar(1), Scalar(-1)});
    PolyZ den = zpoly({qq(2), -qq(-2)}) * zpoly({qq(2 * r - 1), -qq(-2 * r + 1)});
    return R - RatZ(num, den) * Q;
  }
  if (s == Series::C) return R + pref2(kk) * Q;
  return R - pref2(kk) * Q;
}

// epsilon values (-q)^{base-p} (plus an overall sign) for positions p = 1..n
std::vector<Scalar> power_coeffs(int n, int base, int overall) {
  std::vector<Scalar> c;
  for (int p = 1; p <= n; ++p) {
    int e = base - p;
    Scalar v = (e % 2 ? Scalar(-1) : Scalar(1)) * qq(e);
    c.push_back(Scalar(overall) * v);
  }
  return c;
}

int f4_bar(int x) { return (x == 13 || x == 14) ? x : 27 - x; }
int e7_bar(int x) { return 57 - x; }

// extends a half list of sets by the bar-mirrored tail: set s_new comes from
// set (total + 1 - s_new) with every pair (i, j) -> (bar j, bar i)
std::vector<GSet> mirror_tail(std::vector<GSet> out, int total, int (*barf)(int)) {
  for (int snew = (int)out.size() + 1; snew <= total; ++snew) {
    auto& src = out[total - snew];
    GSet g;
    for (size_t p = 0; p < src.pairs.size(); ++p) {
      auto [i, j] = src.pairs[p];
      g.pairs.push_back({barf(j), barf(i)});
      g.coeff.push_back(src.coeff[p]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GSet> e6_sets() {
  std::vector<GSet> out;
  for (auto& half : tables::e6_omega5_sets())
    out.push_back(expand_mirror(half, power_coeffs(5, 5, 1), 1));
  return out;
}

std::vector<GSet> e7_sets() {
  std::vector<GSet> out;
  auto eps6 = power_coeffs(6, 6, -1); // -(-q)^{6-p}
  auto& e6 = tables::e6_omega5_sets();
  for (int s = 0; s < 27; ++s) {
    std::vector<std::pair<int, int>> half{{1, s + 29}};
    for (auto& [i, j] : e6[s]) half.push_back({i + 1, j + 1});
    out.push_back(expand_mirror(half, eps6, 1));
  }
  for (auto& half : tables::e7_omega6_sets_middle())
    out.push_back(expand_mirror(half, eps6, 1));
  for (auto& row : tables::e7_omega6_zero_rows()) {
    GSet g;
    for (int i = 1; i <= 56; ++i) {
      g.pairs.push_back({i, 57 - i});
      g.coeff.push_back(i <= 28 ? row[i - 1] : row[56 - i].bar());
    }
    out.push_back(std::move(g));
  }
  out = mirror_tail(std::move(out), 133, e7_bar);
  if (out.size() != 133) throw std::logic_error("e7_sets: count");
  return out;
}

GSet f4_zero_set(std::vector<Scalar> vals15, int mirror_sign) {
  GSet g;
  for (int i = 1; i <= 13; ++i) {
    g.pairs.push_back({i, 27 - i});
    g.coeff.push_back(vals15[i - 1]);
  }
  g.pairs.push_back({13, 13});
  g.coeff.push_back(vals15[13]);
  g.pairs.push_back({14, 14});
  g.coeff.push_back(vals15[14]);
  for (int i = 13; i >= 1; --i) {
    g.pairs.push_back({27 - i, i});
    g.coeff.push_back(Scalar(mirror_sign) * vals15[i - 1].bar());
  }
  return g;
}

std::vector<GSet> f4_omega1_full() {
  std::vector<GSet> out;
  auto& sets = tables::f4_omega1_sets();
  auto& coords = tables::f4_omega1_coords();
  for (int s = 0; s < 12; ++s) out.push_back(expand_mirror(sets[s], coords[s], 1));
  for (auto& row : tables::f4_omega1_zero_rows()) out.push_back(f4_zero_set(row, 1));
  return mirror_tail(std::move(out), 26, f4_bar);
}

std::vector<GSet> f4_omega4_full() {
  std::vector<GSet> out;
  auto& sets4 = tables::f4_omega4_sets();
  auto c3 = power_coeffs(3, 4, -1); // -(-q)^{4-p}
  for (int s = 0; s < 12; ++s) out.push_back(expand_mirror(sets4[s], c3, -1));
  auto& sets1 = tables::f4_omega1_sets();
  auto& midc = tables::f4_omega4_mid_coords();
  for (int s = 0; s < 12; ++s) out.push_back(expand_mirror(sets1[s], midc[s], -1));
  for (auto& row : tables::f4_omega4_zero_rows()) out.push_back(f4_zero_set(row, -1));
  return mirror_tail(std::move(out), 52, f4_bar);
}

std::vector<GSet> g2_omega1_full() {
  std::vector<GSet> out;
  auto& sets = tables::g2_omega1_sets();
  auto& coords = tables::g2_omega1_coords();
  for (int s = 0; s < 7; ++s) {
    if (s == 3) {
      GSet g;
      for (int i = 1; i <= 7; ++i) g.pairs.push_back({i, 8 - i});
      g.coeff = {coords[3][0],         coords[3][1],         coords[3][2],        coords[3][3],
                 -coords[3][2].bar(), -coords[3][1].bar(), -coords[3][0].bar()};
      out.push_back(std::move(g));
    } else
      out.push_back(expand_mirror(sets[s], coords[s], -1));
  }
  return out;
}

SpMat<RatZ> units_e6() {
  SpMat<RatZ> R = rqa_units(27, 1);
  RatZ a0 = RatZ(zpoly({qh(7), qh(-7)})) / RatZ(qh(1) + qh(-1));
  add_g_template(R, 27, e6_sets(), RatZ(zpoly({Scalar(0), qq(-4)})), RatZ(qq(4)), RatZ(0),
                 a0, [](auto&, auto&) { return 1; }, -pref2(4));
  R.compact();
  return R;
}

SpMat<RatZ> units_e7() {
  SpMat<RatZ> R = rqa_units(56, 1);
  auto sets = e7_sets();
  RatZ a0 = RatZ(zpoly({qh(9), qh(-9)})) / RatZ(qh(1) + qh(-1));
  RatZ am(zpoly({Scalar(0), qq(-5)})), ap((Scalar)qq(5));
  std::vector<GSet> plain(sets.begin(), sets.begin() + 63);
  std::vector<GSet> zero(sets.begin() + 63, sets.begin() + 70);
  std::vector<GSet> rest(sets.begin() + 70, sets.end());
  add_g_template(R, 56, plain, am, ap, RatZ(0), a0, [](auto&, auto&) { return 1; }, -pref2(5));
  add_g_template(R, 56, zero, am, ap, RatZ(0), RatZ(0), [](auto&, auto&) { return -1; },
                 -pref2(5));
  add_g_template(R, 56, rest, am, ap, RatZ(0), a0, [](auto&, auto&) { return 1; }, -pref2(5));
  // singlet block
  GSet pset;
  {
    auto& p = tables::e7_p_vector();
    for (int i = 1; i <= 56; ++i) {
      pset.pairs.push_back({i, 57 - i});
      pset.coeff.push_back(i <= 28 ? p[i - 1] : -p[56 - i].bar());
    }
  }
  Scalar k36 = Scalar(qnum_i(3, 6)), k60 = Scalar(kappa_sym_laurent(60));
  Scalar cpre = Scalar(1) / (s_qnum(2) * Scalar(k36));
  RatZ ap0 = RatZ(cpre * qq(14)) * RatZ(zpoly({Scalar(k60), -qq(-5) * (qq(3) + qq(1) - qq(-3))}));
  RatZ am0 = RatZ(cpre * qq(-14)) *
             RatZ(zpoly({Scalar(0), qq(5) * (qq(-3) + qq(-1) - qq(3)), -Scalar(k60)}));
  RatZ a00(zpoly({qq(13), Scalar(0), -qq(-13)}));
  PolyZ num = zpoly({qq(1) - qq(-1)}) * zpoly({Scalar(1), Scalar(-1)});
  PolyZ den = zpoly({qq(1), -qq(-1)}) * zpoly({qq(5), -qq(-5)}) * zpoly({qq(9), -qq(-9)});
  add_g_template(R, 56, {pset}, am0, ap0, RatZ(0), a00, [](auto&, auto&) { return 1; },
                 RatZ(num, den));
  R.compact();
  return R;
}

SpMat<RatZ> units_f4() {
  const RepModule& V = fundamental_rep(Series::F, 4);
  auto zero_wt = [](int i) { return i == 13 || i == 14; };
  Weight zero(4, 0);
  auto pair_zero = [&](int i, int k) {
    Weight w = V.weights[i - 1];
    for (int t = 0; t < 4; ++t) w[t] += V.weights[k - 1][t];
    return w == zero;
  };
  SpMat<RatZ> R = rqa_units(26, 1);
  { // T: omega_4
    RatZ t_a0 = RatZ(zpoly({qh(7), qh(-7)})) / RatZ(qh(1) + qh(-1));
    auto sets = f4_omega4_full();
    std::vector<GSet> plain, zsets;
    for (int s = 0; s < 52; ++s) (s >= 24 && s <= 27 ? zsets : plain).push_back(sets[s]);
    add_g_template(R, 26, plain, RatZ(zpoly({Scalar(0), qq(-4)})), RatZ((Scalar)qq(4)),
                   RatZ(0), t_a0, [](auto&, auto&) { return 1; }, pref2(4));
    add_g_template(R, 26, zsets, RatZ(zpoly({Scalar(0), qq(-4)})), RatZ((Scalar)qq(4)),
                   RatZ(0), RatZ(0), [](auto&, auto&) { return -1; }, pref2(4));
  }
  { // S: omega_1
    RatZ s_a01 = RatZ(zpoly({qh(11), qh(-11)})) / RatZ(qh(1) + qh(-1));
    RatZ s_a02 = RatZ(zpoly({qh(13) + qh(9) + qh(7), qh(-7) + qh(-9) + qh(-13)})) /
                 RatZ((qq(2) + Scalar(1) + qq(-2)) * (qh(1) + qh(-1)));
    EqClass eq = [&](const std::pair<int, int>& a, const std::pair<int, int>&) {
      return (zero_wt(a.first) || zero_wt(a.second) || pair_zero(a.first, a.second)) ? 0 : 1;
    };
    add_g_template(R, 26, f4_omega1_full(), RatZ(zpoly({Scalar(0), qq(-6)})),
                   RatZ((Scalar)qq(6)), s_a01, s_a02, eq, -pref2(6));
  }
  { // Q: omega_0
    auto vals = tables::f4_p_vector();
    vals.push_back(Scalar(1));
    vals.push_back(Scalar(1));
    GSet pset = f4_zero_set(vals, 1);
    Scalar k36 = Scalar(qnum_i(3, 6));
    Scalar b24 = Scalar(qnum_i(2, 8)); // [2]_4^i
    RatZ a_p = RatZ(Scalar(1) / k36) *
               RatZ(zpoly({qq(9) - qq(-3) * b24, -(qq(-9) + qq(-3) * b24)}));
    RatZ a_m = RatZ(Scalar(1) / k36) *
               RatZ(zpoly({qq(9) - qq(3) * b24, -(qq(-9) + qq(3) * b24)}));
    RatZ am0 = RatZ(zpoly({Scalar(0), qq(-12)})) * a_m;
    RatZ ap0 = RatZ((Scalar)qq(12)) * a_p;
    Scalar c30 = s_qnum_i(3) / Scalar(qnum(2, 1)); // [3]^i / [2]_{1/2}
    RatZ a01 = RatZ(c30) *
               RatZ(zpoly({qh(25), -Scalar(qnum_i(2, 7)) * Scalar(qnum(3, 1)), -qh(-25)}));
    RatZ a02 = RatZ(zpoly({qq(5), -qq(-5)})) * RatZ(zpoly({qq(6), qq(-6)}));
    EqClass eq = [&](const std::pair<int, int>& a, const std::pair<int, int>&) {
      bool bz = zero_wt(a.first) && zero_wt(a.second);
      bool nz = !zero_wt(a.first) && !zero_wt(a.second);
      return bz ? 0 : (nz ? 1 : -1);
    };
    PolyZ num = zpoly({qq(1) - qq(-1)}) * zpoly({Scalar(1), Scalar(-1)});
    PolyZ den = zpoly({qq(1), -qq(-1)}) * zpoly({qq(4), -qq(-4)}) * zpoly({qq(9), -qq(-9)});
    add_g_template(R, 26, {pset}, am0, ap0, a01, a02, eq, -RatZ(num, den));
  }
  { // explicit zero-weight diagonal correction
    RatZ c(zpoly({qq(1) - qq(-1)}) * zpoly({Scalar(1), Scalar(-1)}),
           zpoly({qq(1), -qq(-1)}));
    R.add_to(pidx(26, 13, 13), pidx(26, 13, 13), -c);
    R.add_to(pidx(26, 14, 14), pidx(26, 14, 14), c);
  }
  R.compact();
  return R;
}

SpMat<RatZ> units_g2() {
  const RepModule& V = fundamental_rep(Series::G, 2);
  auto zero_wt = [](int i) { return i == 4; };
  Weight zero(2, 0);
  auto pair_zero = [&](int i, int k) {
    Weight w = V.weights[i - 1];
    for (int t = 0; t < 2; ++t) w[t] += V.weights[k - 1][t];
    return w == zero;
  };
  SpMat<RatZ> R = rqa_units(7, 1);
  { // S: omega_1
    RatZ a01 = RatZ(zpoly({qh(7), qh(-7)})) / RatZ(qh(1) + qh(-1));
    RatZ a02 = RatZ(zpoly({qq(3), qq(-3)})) / RatZ(qq(1) + qq(-1));
    EqClass eq = [&](const std::pair<int, int>& a, const std::pair<int, int>&) {
      return (zero_wt(a.first) || zero_wt(a.second) || pair_zero(a.first, a.second)) ? 0 : 1;
    };
    add_g_template(R, 7, g2_omega1_full(), RatZ(zpoly({Scalar(0), qq(-4)})),
                   RatZ((Scalar)qq(4)), a01, a02, eq, pref2(4));
  }
  { // Q: omega_0
    GSet pset;
    for (int i = 1; i <= 7; ++i) {
      pset.pairs.push_back({i, 8 - i});
      pset.coeff.push_back(tables::g2_p_vector()[i - 1]);
    }
    RatZ a01 = RatZ(zpoly({qq(7) - qq(5) + qq(4), qq(-4) - qq(-5) + qq(-7)})) /
               RatZ(qq(2) + qq(-2));
    RatZ a02 = RatZ(zpoly({qq(4), qq(-4)})) / RatZ(qq(2) + qq(-2));
    EqClass eq = [&](const std::pair<int, int>& a, const std::pair<int, int>&) {
      bool bz = zero_wt(a.first) && zero_wt(a.second);
      bool nz = !zero_wt(a.first) && !zero_wt(a.second);
      return bz ? 0 : (nz ? 1 : -1);
    };
    PolyZ num = zpoly({(qq(1) - qq(-1)) * (qq(2) + qq(-2))}) * zpoly({Scalar(1), Scalar(-1)});
    PolyZ den = zpoly({qq(1), -qq(-1)}) * zpoly({qq(6), -qq(-6)});
    add_g_template(R, 7, {pset}, RatZ(zpoly({Scalar(0), qq(-6)})), RatZ((Scalar)qq(6)), a01,
                   a02, eq, -RatZ(num, den));
  }
  R.compact();
  return R;
}

} // namespace

std::vector<UnitVectorSet> unit_basis_sets(Series s, int rank, const Weight& lambda) {
  Weight om0(rank, 0);
  auto om = [&](int i) {
    Weight w(rank, 0);
    w[i - 1] = 1;
    return w;
  };
  if (s == Series::E && rank == 6 && lambda == om(5)) return e6_sets();
  if (s == Series::E && rank == 7 && lambda == om(6)) return e7_sets();
  if (s == Series::F && rank == 4 && lambda == om(1)) return f4_omega1_full();
  if (s == Series::F && rank == 4 && lambda == om(4)) return f4_omega4_full();
  if (s == Series::G && rank == 2 && lambda == om(1)) return g2_omega1_full();
  if (s == Series::E && rank == 7 && lambda == om0) {
    GSet pset;
    auto& p = tables::e7_p_vector();
    for (int i = 1; i <= 56; ++i) {
      pset.pairs.push_back({i, 57 - i});
      pset.coeff.push_back(i <= 28 ? p[i - 1] : -p[56 - i].bar());
    }
    return {pset};
  }
  if (s == Series::F && rank == 4 && lambda == om0) {
    auto vals = tables::f4_p_vector();
    vals.push_back(Scalar(1));
    vals.push_back(Scalar(1));
    return {f4_zero_set(vals, 1)};
  }
  if (s == Series::G && rank == 2 && lambda == om0) {
    GSet pset;
    for (int i = 1; i <= 7; ++i) {
      pset.pairs.push_back({i, 8 - i});
      pset.coeff.push_back(tables::g2_p_vector()[i - 1]);
    }
    return {pset};
  }
  if (s == Series::E && rank == 8 && lambda == om(7)) {
    GSet g;
    for (auto& [i, j] : tables::e8_omega7_pairs()) {
      g.pairs.push_back({i, j});
      int e = 7 - std::min(i, j);
      g.coeff.push_back((e % 2 ? Scalar(-1) : Scalar(1)) * qq(e));
    }
    return {g};
  }
  throw std::domain_error("unit_basis_sets: no table for this block");
}

SpMat<RatZ> build_matrix_units(Series s, int rank) {
  switch (s) {
    case Series::A: return rqa_units(rank + 1, 1);
    case Series::B:
    case Series::C:
    case Series::D: return units_bcd(s, rank);
    case Series::E:
      if (rank == 6) return units_e6();
      if (rank == 7) return units_e7();
      throw std::domain_error("no matrix-unit form is shipped for E8");
    case Series::F: return units_f4();
    case Series::G: return units_g2();
  }
  throw std::domain_error("build_matrix_units");
}

// ---- projector form ----

ProjectorForm build_projector_form(Series s, int rank) {
  ProjectorForm pf;
  pf.V = &fundamental_rep(s, rank);
  pf.blocks = block_table(s, rank);
  auto ctx = tensor_square_scalar(*pf.V, Scalar(1), Scalar(1));
  for (auto& b : pf.blocks) {
    auto sing = singular_vectors(ctx, b.lambda);
    if (sing.size() != 1)
      throw std::runtime_error("projector form: multiplicity != 1 in " + pf.V->cd->name());
    auto basis = generate_submodule(ctx, sing[0]);
    pf.P.push_back(projector(basis, ctx.dim()));
    pf.bases.push_back(std::move(basis));
  }
  return pf;
}

SpMat<RatZ> ProjectorForm::assemble() const {
  int d2 = V->dim * V->dim;
  SpMat<RatZ> R(d2, d2);
  for (size_t k = 0; k < blocks.size(); ++k) {
    RatZ f = blocks[k].f.to_ratz();
    R = R + f * P[k].map([](const Scalar& s) { return RatZ(s); });
  }
  R.compact();
  return R;
}

RationalForm build_rational(Series s, int rank) {
  RationalForm rf;
  const RepModule& V = fundamental_rep(s, rank);
  rf.dim = V.dim * V.dim;
  rf.blocks = block_table(s, rank);
  TensorCtx<RadQ> ctx;
  ctx.V = ctx.W = &V;
  ctx.a1 = ctx.a2 = RadQ(Rat(1));
  ctx.emb = [](const Scalar& x) { return x.limit_q1(); };
  int usub = rational_usub(s);
  for (auto& b : rf.blocks) {
    auto sing = singular_vectors(ctx, b.lambda);
    if (sing.size() != 1) throw std::runtime_error("build_rational: multiplicity != 1");
    auto basis = generate_submodule(ctx, sing[0]);
    rf.P.push_back(projector(basis, ctx.dim()));
    rf.f.push_back(b.f.rational(usub));
  }
  return rf;
}

SpMat<RatFunc<RadQ>> RationalForm::assemble() const {
  SpMat<RatFunc<RadQ>> R(dim, dim);
  for (size_t k = 0; k < blocks.size(); ++k)
    R = R + f[k] * P[k].map([](const RadQ& c) { return RatFunc<RadQ>(c); });
  R.compact();
  return R;
}

// ---- intertwiner solver ----

namespace {

struct PointSolution {
  Scalar z;
  std::map<std::pair<int, int>, Scalar> entries; // (row, col) -> value
};

PointSolution solve_at_point(const RepModule& V, const RepModule& W, const Scalar& z0) {
  TensorCtx<Scalar> A; // V(z) (x) W
  A.V = &V;
  A.W = &W;
  A.a1 = z0;
  A.a2 = Scalar(1);
  A.emb = [](const Scalar& s) { return s; };
  TensorCtx<Scalar> B; // W (x) V(z)
  B.V = &W;
  B.W = &V;
  B.a1 = Scalar(1);
  B.a2 = z0;
  B.emb = [](const Scalar& s) { return s; };

  // unknowns: weight-matched pairs (rowB, colA)
  std::map<Weight, std::vector<int>, WeightLess> wA, wB;
  for (int t = 0; t < A.dim(); ++t) wA[A.weight(t)].push_back(t);
  for (int t = 0; t < B.dim(); ++t) wB[B.weight(t)].push_back(t);
  std::vector<std::pair<int, int>> unknowns;
  std::map<std::pair<int, int>, int> uid;
  for (auto& [w, colsA] : wA) {
    auto it = wB.find(w);
    if (it == wB.end()) continue;
    for (int rb : it->second)
      for (int ca : colsA) {
        uid[{rb, ca}] = (int)unknowns.size();
        unknowns.push_back({rb, ca});
      }
  }
  // equations for each generator: X MA(g) - MB(g) X = 0;
  // [X MA]_{r,t} = sum_s X_{r,s} MA_{s,t};  [MB X]_{r,t} = sum_s MB_{r,s} X_{s,t}
  std::vector<SpVec<Scalar>> rows;
  for (int c = 0; c <= V.rank(); ++c)
    for (bool lower : {false, true}) {
      SpMat<Scalar> MA = A.delta_matrix(c, lower);
      SpMat<Scalar> MB = B.delta_matrix(c, lower);
      std::map<std::pair<int, int>, SpVec<Scalar>> eq; // keyed by (rowB, colA)
      for (int t = 0; t < A.dim(); ++t)
        for (auto& [sidx, v] : MA.col(t).entries()) {
          // unknown (r, sidx) with coefficient v lands in equation (r, t)
          Weight w = A.weight(sidx);
          auto itB = wB.find(w);
          if (itB == wB.end()) continue;
          for (int r : itB->second) eq[{r, t}].add_to(uid[{r, sidx}], v);
        }
      for (int sidx = 0; sidx < B.dim(); ++sidx)
        for (auto& [r, v] : MB.col(sidx).entries()) {
          Weight w = B.weight(sidx);
          auto itA = wA.find(w);
          if (itA == wA.end()) continue;
          for (int t : itA->second) eq[{r, t}].add_to(uid[{sidx, t}], -v);
        }
      for (auto& [k, row] : eq) {
        row.compact();
        if (!row.is_zero()) rows.push_back(std::move(row));
      }
    }
  auto null = nullspace_rows(std::move(rows), (int)unknowns.size());
  if (null.size() != 1)
    throw std::runtime_error("solve_intertwiner: solution space dimension " +
                             std::to_string(null.size()));
  // normalize on top (x) top
  int topu = uid.at({0, 0});
  Scalar tc = null[0].get(topu);
  if (tc.is_zero()) throw std::runtime_error("solve_intertwiner: vanishing top coefficient");
  Scalar tinv = tc.inv();
  PointSolution ps;
  ps.z = z0;
  for (auto& [id2, val] : null[0].entries()) ps.entries[unknowns[id2]] = tinv * val;
  return ps;
}

// rational reconstruction of one entry from point values
RatZ reconstruct(const std::vector<Scalar>& zs, const std::vector<Scalar>& ys, int dmax) {
  int m = (int)zs.size();
  for (int d = 0; d <= dmax; ++d) {
    int unknowns = 2 * d + 1;
    if (unknowns > m) break;
    // p(z) - y q(z) = 0 with q monic of degree d
    std::vector<std::vector<Scalar>> M(unknowns, std::vector<Scalar>(unknowns, Scalar(0)));
    std::vector<Scalar> rhs(unknowns, Scalar(0));
    for (int t = 0; t < unknowns; ++t) {
      Scalar zp(1);
      for (int k = 0; k <= d; ++k) {
        M[t][k] = zp;
        if (k < d)
          M[t][d + 1 + k] = -(ys[t] * zp);
        else
          rhs[t] = ys[t] * zp; // y z^d from the monic denominator term
        zp = zp * zs[t];
      }
    }
    std::vector<Scalar> sol;
    try {
      sol = solve_dense(M, rhs);
    } catch (const std::domain_error&) {
      continue;
    }
    std::vector<Scalar> pc(sol.begin(), sol.begin() + d + 1);
    std::vector<Scalar> qc(sol.begin() + d + 1, sol.end());
    qc.push_back(Scalar(1));
    RatZ cand(PolyZ::from_coeffs(pc), PolyZ::from_coeffs(qc));
    bool ok = true;
    for (int t = 0; t < m && ok; ++t) {
      try {
        ok = (cand.eval(zs[t]) == ys[t]);
      } catch (const std::domain_error&) {
        ok = false;
      }
    }
    if (ok) return cand;
  }
  throw std::runtime_error("solve_intertwiner: rational reconstruction degree exceeded");
}

} // namespace

SpMat<RatZ> solve_intertwiner(const RepModule& V, const RepModule& W, int deg_hint) {
  int dmax = 4 * std::max(1, deg_hint);
  const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                         61, 67, 71, 73, 79, 83, 89, 97};
  int m = 2 * dmax + 2;
  if (m > (int)(sizeof(primes) / sizeof(long)))
    throw std::domain_error("solve_intertwiner: degree hint too large");
  std::vector<PointSolution> sols;
  std::vector<Scalar> zs;
  for (int t = 0; t < m; ++t) {
    sols.push_back(solve_at_point(V, W, Scalar(Rat(primes[t]))));
    zs.push_back(Scalar(Rat(primes[t])));
  }
  // union of supports
  std::set<std::pair<int, int>> support;
  for (auto& ps : sols)
    for (auto& [rc, v] : ps.entries)
      if (!v.is_zero()) support.insert(rc);
  SpMat<RatZ> X(W.dim * V.dim, V.dim * W.dim);
  for (auto& rc : support) {
    std::vector<Scalar> ys;
    for (auto& ps : sols) {
      auto it = ps.entries.find(rc);
      ys.push_back(it == ps.entries.end() ? Scalar(0) : it->second);
    }
    X.add_to(rc.first, rc.second, reconstruct(zs, ys, dmax));
  }
  X.compact();
  // symbolic residual check on the denominator-cleared matrix
  PolyZ DX;
  SpMat<RatZ> N = clear_denominator(X, nullptr, &DX).map([](const PolyZ& p) { return RatZ(p); });
  TensorCtx<RatZ> A{&V, &W, RatZ::var(), RatZ(1), [](const Scalar& s) { return RatZ(s); }};
  TensorCtx<RatZ> B{&W, &V, RatZ(1), RatZ::var(), [](const Scalar& s) { return RatZ(s); }};
  RatZ zz = RatZ::var();
  for (int c = 0; c <= V.rank(); ++c)
    for (bool lower : {false, true}) {
      // scale the affine generators by z so everything stays polynomial
      RatZ sc = (c == 0) ? zz : RatZ(1);
      SpMat<RatZ> MA = sc * A.delta_matrix(c, lower), MB = sc * B.delta_matrix(c, lower);
      if (!((N * MA) == (MB * N)))
        throw std::runtime_error("solve_intertwiner: residual check failed");
    }
  return X;
}

// ---- f(0) checks ----

R0Report check_r0(Series s, int rank) {
  R0Report rep;
  const CartanData& cd = cartan_cache(s, rank);
  Weight top(rank, 0);
  top[0] = 2;
  Rat c_top = cd.casimir(top);
  std::ostringstream os;
  for (auto& b : block_table(s, rank)) {
    Rat e2 = cd.casimir(b.lambda) - c_top; // 2 * h-exponent of q^{(C(l)-C(2w1))/2}
    if (e2.get_den() != 1) {
      rep.ok = false;
      os << cd.name() << ": non-integer exponent; ";
      continue;
    }
    long e = e2.get_num().get_si();
    if (!(b.f.at_zero() == Scalar(b.flip_sign) * Scalar::h_pow((int)e))) {
      rep.ok = false;
      os << cd.name() << ": f(0) mismatch; ";
    }
    long sum = 0;
    for (int a : b.f.poles) sum += a;
    if (2 * sum != -e) {
      rep.ok = false;
      os << cd.name() << ": Casimir pole-sum rule fails; ";
    }
  }
  rep.detail = os.str();
  return rep;
}

// ---- E8 ----

E8Data e8_data(bool flip_beta_gamma, bool flip_eta_rho) {
  E8Data d;
  Scalar k60 = Scalar(kappa_sym_laurent(60));
  auto bi = [](int n, int two_k = 2) { return Scalar(qnum_i(n, two_k)); };
  auto br = [](int n, int two_k = 2) { return Scalar(qnum(n, two_k)); };
  d.alpha = (bi(2, 38) - br(2, 34) - bi(2, 26) - Scalar(2) * qq(15) + qq(11) + qq(9) - qq(-1)) / k60;
  d.beta = bi(2, 4) * bi(2, 6) / k60;
  d.gamma = bi(2, 4) * bi(2, 10) * br(2, 32) * bi(3, 6) * br(15) / k60;
  d.a = bi(2, 4) * bi(2, 6) * bi(2, 10) / k60;
  d.b = br(2) * (br(2, 24) - bi(7)) / k60;
  d.xi = br(2, 64) - br(2, 60) + br(2, 36) + br(2, 20) + Scalar(2);
  d.zeta = br(2) * br(2, 32) * bi(3, 6) / k60;
  d.eta = bi(2, 4) * bi(2, 6) * bi(2, 10) / k60;
  d.rho = bi(2, 4) * bi(2, 6) * bi(2, 10) * br(2, 12) * br(2, 20) * br(2, 24) * br(31) / k60;
  if (flip_beta_gamma) {
    d.beta = -d.beta;
    d.gamma = -d.gamma;
  }
  if (flip_eta_rho) {
    d.eta = -d.eta;
    d.rho = -d.rho;
  }
  Scalar ab = d.alpha.bar();
  PolyZ f11 = zpoly({-qq(-15), -qq(-6) * ab, qq(6) * d.alpha, qq(15)});
  PolyZ bz1z = zpoly({Scalar(0), d.beta, -d.beta});
  PolyZ gz1z = zpoly({Scalar(0), d.gamma, -d.gamma});
  PolyZ az = zpoly({Scalar(0), d.a * qq(15), d.a * qq(-15)});
  PolyZ offd = zpoly({Scalar(1), Scalar(-1)}) * zpoly({qq(15), -d.b, qq(-15)});
  d.f_omega1 = {{f11, bz1z, bz1z}, {gz1z, az, offd}, {gz1z, offd, az}};
  PolyZ g11 = zpoly({qq(-30), -qq(-15) * d.zeta, d.xi, -qq(15) * d.zeta, qq(30)});
  PolyZ g22 = zpoly({qq(30), -qq(15) * d.zeta, d.xi, -qq(-15) * d.zeta, qq(-30)});
  PolyZ ez = zpoly({Scalar(0), d.eta, Scalar(0), -d.eta});
  PolyZ rz = zpoly({Scalar(0), d.rho, Scalar(0), -d.rho});
  d.f_omega0 = {{g11, ez}, {rz, g22}};
  return d;
}

namespace {
RatZ e8_den1() {
  PolyZ den = zpoly({Scalar(1), -qq(-2)}) * zpoly({Scalar(1), -qq(-12)}) *
              zpoly({Scalar(1), -qq(-20)});
  return RatZ(PolyZ(Scalar(1)), den);
}
RatZ e8_den2() {
  PolyZ den = zpoly({Scalar(1), -qq(-2)}) * zpoly({Scalar(1), -qq(-12)}) *
              zpoly({Scalar(1), -qq(-20)}) * zpoly({Scalar(1), -qq(-30)});
  return RatZ(PolyZ(Scalar(1)), den);
}
} // namespace

std::vector<std::vector<RatZ>> E8Data::g1() const {
  RatZ pre = RatZ(qq(-17)) * e8_den1();
  std::vector<std::vector<RatZ>> g(3, std::vector<RatZ>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = pre * RatZ(f_omega1[i][j]);
  return g;
}

std::vector<std::vector<RatZ>> E8Data::g2() const {
  RatZ pre = RatZ(qq(-32)) * e8_den2();
  std::vector<std::vector<RatZ>> g(2, std::vector<RatZ>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i][j] = pre * RatZ(f_omega0[i][j]);
  return g;
}

namespace {
RatFunc<RadQ> upoly(std::vector<long> c) {
  std::vector<RadQ> v;
  for (long x : c) v.push_back(RadQ(Rat(x)));
  return RatFunc<RadQ>(Poly<RadQ>::from_coeffs(v));
}
RatFunc<RadQ> uden(std::vector<long> roots) { // prod (r - u)
  RatFunc<RadQ> d(RadQ(Rat(1)));
  for (long r : roots)
    d = d * RatFunc<RadQ>(Poly<RadQ>::from_coeffs({RadQ(Rat(r)), RadQ(Rat(-1))}));
  return d;
}
} // namespace

std::vector<std::vector<RatFunc<RadQ>>> E8Data::g1_rational() const {
  auto den = uden({1, 6, 10});
  std::vector<std::vector<RatFunc<RadQ>>> f = {
      {upoly({60, 44, 15, 1}), upoly({0, -6}), upoly({0, -6})},
      {upoly({0, -300}), upoly({60}), upoly({0, -44, 15, -1})},
      {upoly({0, -300}), upoly({0, -44, 15, -1}), upoly({60})}};
  // -u(4-u)(11-u) = -44u + 15u^2 - u^3
  for (auto& row : f)
    for (auto& e : row) e = e / den;
  return f;
}

std::vector<std::vector<RatFunc<RadQ>>> E8Data::g2_rational() const {
  auto den = uden({1, 6, 10, 15});
  std::vector<std::vector<RatFunc<RadQ>>> f = {
      {upoly({900, 660, 269, 30, 1}), upoly({0, -60})},
      {upoly({0, -14880}), upoly({900, -660, 269, -30, 1})}};
  for (auto& row : f)
    for (auto& e : row) e = e / den;
  return f;
}

std::vector<std::vector<RatZ>> mat_mul(const std::vector<std::vector<RatZ>>& A,
                                       const std::vector<std::vector<RatZ>>& B) {
  size_t n = A.size(), m = B[0].size(), k = B.size();
  std::vector<std::vector<RatZ>> C(n, std::vector<RatZ>(m, RatZ(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t t = 0; t < k; ++t) C[i][j] += A[i][t] * B[t][j];
  return C;
}

std::vector<std::vector<RatZ>> mat_subst_invz(const std::vector<std::vector<RatZ>>& A) {
  auto B = A;
  for (auto& row : B)
    for (auto& e : row) e = e.subst_invz();
  return B;
}

PolyZ units_common_den(Series s, int rank) {
  std::set<int> poles;
  for (auto& b : block_table(s, rank))
    for (int a : b.f.poles) poles.insert(a);
  PolyZ d(Scalar(1));
  for (int a : poles) d = d * zpoly({Scalar(1), -qq(-a)});
  return d;
}

SpMat<PolyZ> clear_denominator(const SpMat<RatZ>& R, const PolyZ* D, PolyZ* den_out) {
  PolyZ common;
  std::vector<PolyZ> dens;
  if (D)
    common = *D;
  else {
    common = PolyZ(Scalar(1));
    for (int j = 0; j < R.cols(); ++j)
      for (auto& [i, v] : R.col(j).entries()) {
        (void)i;
        RatZ n = v.normalized();
        bool seen = false;
        for (auto& dd : dens)
          if (dd == n.den()) {
            seen = true;
            break;
          }
        if (!seen && n.den().deg() > 0) {
          dens.push_back(n.den());
          common = common * n.den();
        }
      }
  }
  SpMat<PolyZ> N(R.rows(), R.cols());
  for (int j = 0; j < R.cols(); ++j)
    for (auto& [i, v] : R.col(j).entries()) {
      PolyZ q, r;
      poly_divmod(v.num() * common, v.den(), q, r);
      if (!r.is_zero()) throw std::logic_error("clear_denominator: entry does not divide");
      N.add_to(i, j, q);
    }
  N.compact();
  if (den_out) *den_out = common;
  return N;
}

const E8Singulars& e8_singular_vectors() {
  static E8Singulars* S = [] {
    auto* s = new E8Singulars;
    const RepModule& V = fundamental_rep(Series::E, 8);
    auto ctx = tensor_square_scalar(V, Scalar(1), Scalar(1));
    // weight omega_1 = theta
    Weight th(8, 0);
    th[0] = 1;
    auto sing1 = singular_vectors(ctx, th);
    if (sing1.size() != 3) throw std::logic_error("E8: expected 3 singular vectors at omega_1");
    int iu2 = ctx.idx(0, 248), iu3 = ctx.idx(248, 0);
    // u1: the combination supported away from v_249 slots
    SpVec<Scalar> u1;
    for (auto& cand : sing1) {
      SpVec<Scalar> w = cand;
      w.axpy(-w.get(iu2), SpVec<Scalar>::unit(iu2));
      w.axpy(-w.get(iu3), SpVec<Scalar>::unit(iu3));
      w.compact();
      if (!w.is_zero()) {
        u1 = w;
        break;
      }
    }
    if (u1.is_zero()) throw std::logic_error("E8: u1 not found");
    // normalize the v_1 (x) v_125 coordinate to q^{15}
    Scalar c = u1.get(ctx.idx(0, 124));
    if (c.is_zero()) throw std::logic_error("E8: u1 has no v1 (x) v125 coordinate");
    u1 = (Scalar::q_pow(15) / c) * u1;
    // weight 0
    Weight zero(8, 0);
    auto sing0 = singular_vectors(ctx, zero);
    if (sing0.size() != 2) throw std::logic_error("E8: expected 2 singular vectors at omega_0");
    int iw2 = ctx.idx(248, 248);
    SpVec<Scalar> w1;
    for (auto& cand : sing0) {
      SpVec<Scalar> w = cand;
      w.axpy(-w.get(iw2), SpVec<Scalar>::unit(iw2));
      w.compact();
      if (!w.is_zero()) {
        w1 = w;
        break;
      }
    }
    // make sure w1 has no v249 components at all (it lies in L_{w1} (x) L_{w1})
    for (auto& [t, v] : w1.entries()) {
      auto [i, j] = ctx.unidx(t);
      if (i == 248 || j == 248) throw std::logic_error("E8: w1 touches the trivial summand");
      (void)v;
    }
    Scalar cw = w1.get(ctx.idx(0, 247));
    if (cw.is_zero()) throw std::logic_error("E8: w1 has no v1 (x) v248 coordinate");
    w1 = (Scalar::q_pow(29) / cw) * w1;
    s->u1 = u1;
    s->w1 = w1;
    s->u1_norm = dot(u1, u1);
    s->w1_norm = dot(w1, w1);
    return s;
  }();
  return *S;
}

E8SignReport e8_sign_fix() {
  E8SignReport rep;
  const RepModule& V = fundamental_rep(Series::E, 8);
  auto& sing = e8_singular_vectors();
  TensorCtx<RatZ> ctx{&V, &V, RatZ::var(), RatZ(1), [](const Scalar& s) { return RatZ(s); }};
  TensorCtx<RatZ> ctxS{&V, &V, RatZ(1), RatZ::var(), [](const Scalar& s) { return RatZ(s); }};
  auto u1z = sing.u1.map([](const Scalar& s) { return RatZ(s); });

  auto beta_test = [&](bool flip) {
    E8Data d = e8_data(flip, false);
    auto g1 = d.g1();
    // y = Delta E_0(z, 1)(v1 (x) v1)
    SpVec<RatZ> y = ctx.apply_delta(0, false, SpVec<RatZ>::unit(ctx.idx(0, 0)));
    // lhs coefficient of v1 (x) v249 in R(z) y
    RatZ u2y = y.get(ctx.idx(0, 248));
    RatZ u3y = y.get(ctx.idx(248, 0));
    RatZ u1y = dot(u1z, y);
    RatZ lhs = g1[1][0] * u1y / RatZ(sing.u1_norm) + g1[1][1] * u2y + g1[1][2] * u3y;
    // rhs = [Delta E_0(1, z)(v1 (x) v1)]_{(1,249)}
    SpVec<RatZ> ys = ctxS.apply_delta(0, false, SpVec<RatZ>::unit(ctx.idx(0, 0)));
    RatZ rhs = ys.get(ctx.idx(0, 248));
    return lhs == rhs;
  };
  auto eta_test = [&](bool flip) {
    E8Data d = e8_data(false, flip);
    auto g1 = d.g1();
    auto g2 = d.g2();
    auto w1z = sing.w1.map([](const Scalar& s) { return RatZ(s); });
    // y' = Delta E_0(z, 1)(v1 (x) v249)
    SpVec<RatZ> y = ctx.apply_delta(0, false, SpVec<RatZ>::unit(ctx.idx(0, 248)));
    RatZ w2y = y.get(ctx.idx(248, 248));
    RatZ w1y = dot(w1z, y);
    RatZ lhs = g2[1][0] * w1y / RatZ(sing.w1_norm) + g2[1][1] * w2y;
    // rhs: [Delta E_0(1,z) R(z)(v1 (x) v249)]_{(249,249)}
    // R(z) u2 = g1[0][1] u1 + g1[1][1] u2 + g1[2][1] u3
    SpVec<RatZ> t1 = ctxS.apply_delta(0, false, u1z);
    SpVec<RatZ> t2 = ctxS.apply_delta(0, false, SpVec<RatZ>::unit(ctx.idx(0, 248)));
    SpVec<RatZ> t3 = ctxS.apply_delta(0, false, SpVec<RatZ>::unit(ctx.idx(248, 0)));
    RatZ rhs = g1[0][1] * t1.get(ctx.idx(248, 248)) + g1[1][1] * t2.get(ctx.idx(248, 248)) +
               g1[2][1] * t3.get(ctx.idx(248, 248));
    return lhs == rhs;
  };

  rep.printed_beta_ok = beta_test(false);
  rep.flipped_beta_fails = !beta_test(true);
  rep.printed_eta_ok = eta_test(false);
  rep.flipped_eta_fails = !eta_test(true);
  return rep;
}

} // namespace rmx

namespace rmx {

PolyZ poly_reverse(const PolyZ& p, int M) {
  std::vector<Scalar> c(M + 1, Scalar(0));
  for (int k = 0; k <= p.deg(); ++k) c[M - k] = p.coeff(k);
  return PolyZ::from_coeffs(std::move(c));
}

SpMat<PolyZ> mat_reverse(const SpMat<PolyZ>& N, int M) {
  return N.map([&](const PolyZ& p) { return poly_reverse(p, M); });
}

bool cleared_unitary(const SpMat<RatZ>& R, const PolyZ& D) {
  SpMat<PolyZ> N = clear_denominator(R, &D);
  int M = D.deg();
  for (int j = 0; j < N.cols(); ++j)
    for (auto& [i, v] : N.col(j).entries()) {
      (void)i;
      M = std::max(M, v.deg());
    }
  SpMat<PolyZ> Nr = mat_reverse(N, M);
  PolyZ rhs = D * poly_reverse(D, M);
  SpMat<PolyZ> prod = N * Nr;
  for (int j = 0; j < prod.cols(); ++j) {
    for (auto& [i, v] : prod.col(j).entries())
      if (i == j ? !(v == rhs) : !v.is_zero()) return false;
    if (prod.col(j).get(j).is_zero() && !rhs.is_zero()) return false;
  }
  return true;
}

} // namespace rmx
