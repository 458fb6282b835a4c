#include "rmx/tables.hpp"

#include <stdexcept>

namespace rmx::tables {

namespace {

// shorthand builders for the coefficient tables
Scalar qq(int k) { return Scalar::q_pow(k); }        // q^k
Scalar qh(int k) { return Scalar::h_pow(k); }        // q^{k/2}
Scalar br(int n) { return s_qnum(n); }               // [n]
Scalar brk(int n, int two_k) { return s_qnum(n, two_k); }
Scalar bri(int n, int two_k = 2) { return s_qnum_i(n, two_k); }

Scalar sq(const Laurent& rad, const std::string& name) { return Scalar::sqrt_of(rad, name); }
Scalar sq2() { return sq(qnum(2), "[2]"); }
Scalar sq3() { return sq(qnum(3), "[3]"); }
Scalar sq4() { return sq(qnum(4), "[4]"); }
Scalar sq5() { return sq(qnum(5), "[5]"); }
Scalar sq24() { return sq(qnum(2, 8), "[2]_4"); }          // [2]_4 = kappa_16
Scalar sqk36() { return sq(qnum_i(3, 6), "[3]_3^i"); }     // kappa_36
Scalar sqk60() { return sq(kappa_sym_laurent(60), "k60"); }

} // namespace

// ---------- E6 ----------

const std::vector<std::vector<Pair>>& e6_omega5_sets() {
  static const std::vector<std::vector<Pair>> sets = {
      {{1, 15}, {2, 12}, {3, 10}, {4, 7}, {5, 6}},
      {{1, 16}, {2, 14}, {3, 11}, {4, 9}, {5, 8}},
      {{1, 18}, {2, 17}, {3, 13}, {6, 9}, {7, 8}},
      {{1, 21}, {2, 19}, {4, 13}, {6, 11}, {8, 10}},
      {{1, 22}, {2, 20}, {5, 13}, {7, 11}, {9, 10}},
      {{1, 23}, {3, 19}, {4, 17}, {6, 14}, {8, 12}},
      {{1, 24}, {3, 20}, {5, 17}, {7, 14}, {9, 12}},
      {{2, 23}, {3, 21}, {4, 18}, {6, 16}, {8, 15}},
      {{2, 24}, {3, 22}, {5, 18}, {7, 16}, {9, 15}},
      {{1, 25}, {4, 20}, {5, 19}, {10, 14}, {11, 12}},
      {{2, 25}, {4, 22}, {5, 21}, {10, 16}, {11, 15}},
      {{1, 26}, {6, 20}, {7, 19}, {10, 17}, {12, 13}},
      {{3, 25}, {4, 24}, {5, 23}, {12, 16}, {14, 15}},
      {{2, 26}, {6, 22}, {7, 21}, {10, 18}, {13, 15}},
      {{1, 27}, {8, 20}, {9, 19}, {11, 17}, {13, 14}},
      {{2, 27}, {8, 22}, {9, 21}, {11, 18}, {13, 16}},
      {{3, 26}, {6, 24}, {7, 23}, {12, 18}, {15, 17}},
      {{3, 27}, {8, 24}, {9, 23}, {14, 18}, {16, 17}},
      {{4, 26}, {6, 25}, {10, 23}, {12, 21}, {15, 19}},
      {{5, 26}, {7, 25}, {10, 24}, {12, 22}, {15, 20}},
      {{4, 27}, {8, 25}, {11, 23}, {14, 21}, {16, 19}},
      {{5, 27}, {9, 25}, {11, 24}, {14, 22}, {16, 20}},
      {{6, 27}, {8, 26}, {13, 23}, {17, 21}, {18, 19}},
      {{7, 27}, {9, 26}, {13, 24}, {17, 22}, {18, 20}},
      {{10, 27}, {11, 26}, {13, 25}, {19, 22}, {20, 21}},
      {{12, 27}, {14, 26}, {17, 25}, {19, 24}, {20, 23}},
      {{15, 27}, {16, 26}, {18, 25}, {21, 24}, {22, 23}}};
  return sets;
}

// ---------- E7 ----------

const std::vector<std::vector<Pair>>& e7_omega6_sets_middle() {
  static const std::vector<std::vector<Pair>> sets = {
      {{2, 36}, {3, 34}, {4, 32}, {5, 31}, {7, 30}, {9, 29}},
      {{2, 37}, {3, 35}, {4, 33}, {6, 31}, {8, 30}, {10, 29}},
      {{2, 39}, {3, 38}, {5, 33}, {6, 32}, {11, 30}, {12, 29}},
      {{2, 43}, {4, 38}, {5, 35}, {6, 34}, {13, 30}, {15, 29}},
      {{2, 42}, {3, 40}, {7, 33}, {8, 32}, {11, 31}, {14, 29}},
      {{3, 43}, {4, 39}, {5, 37}, {6, 36}, {16, 30}, {17, 29}},
      {{2, 45}, {4, 40}, {7, 35}, {8, 34}, {13, 31}, {18, 29}},
      {{2, 44}, {3, 41}, {9, 33}, {10, 32}, {12, 31}, {14, 30}},
      {{3, 45}, {4, 42}, {7, 37}, {8, 36}, {16, 31}, {19, 29}},
      {{2, 47}, {5, 40}, {7, 38}, {11, 34}, {13, 32}, {20, 29}},
      {{2, 46}, {4, 41}, {9, 35}, {10, 34}, {15, 31}, {18, 30}},
      {{3, 47}, {5, 42}, {7, 39}, {11, 36}, {16, 32}, {22, 29}},
      {{3, 46}, {4, 44}, {9, 37}, {10, 36}, {17, 31}, {19, 30}},
      {{2, 49}, {5, 41}, {9, 38}, {12, 34}, {15, 32}, {20, 30}},
      {{2, 48}, {6, 40}, {8, 38}, {11, 35}, {13, 33}, {21, 29}},
      {{4, 47}, {5, 45}, {7, 43}, {13, 36}, {16, 34}, {24, 29}},
      {{3, 49}, {5, 44}, {9, 39}, {12, 36}, {17, 32}, {22, 30}},
      {{3, 48}, {6, 42}, {8, 39}, {11, 37}, {16, 33}, {23, 29}},
      {{2, 51}, {7, 41}, {9, 40}, {14, 34}, {18, 32}, {20, 31}},
      {{2, 50}, {6, 41}, {10, 38}, {12, 35}, {15, 33}, {21, 30}},
      {{4, 49}, {5, 46}, {9, 43}, {15, 36}, {17, 34}, {24, 30}},
      {{4, 48}, {6, 45}, {8, 43}, {13, 37}, {16, 35}, {25, 29}},
      {{3, 51}, {7, 44}, {9, 42}, {14, 36}, {19, 32}, {22, 31}},
      {{3, 50}, {6, 44}, {10, 39}, {12, 37}, {17, 33}, {23, 30}},
      {{2, 52}, {8, 41}, {10, 40}, {14, 35}, {18, 33}, {21, 31}},
      {{4, 51}, {7, 46}, {9, 45}, {18, 36}, {19, 34}, {24, 31}},
      {{4, 50}, {6, 46}, {10, 43}, {15, 37}, {17, 35}, {25, 30}},
      {{5, 48}, {6, 47}, {11, 43}, {13, 39}, {16, 38}, {26, 29}},
      {{3, 52}, {8, 44}, {10, 42}, {14, 37}, {19, 33}, {23, 31}},
      {{2, 53}, {11, 41}, {12, 40}, {14, 38}, {20, 33}, {21, 32}},
      {{5, 51}, {7, 49}, {9, 47}, {20, 36}, {22, 34}, {24, 32}},
      {{7, 48}, {8, 47}, {11, 45}, {13, 42}, {16, 40}, {27, 29}},
      {{5, 50}, {6, 49}, {12, 43}, {15, 39}, {17, 38}, {26, 30}},
      {{4, 52}, {8, 46}, {10, 45}, {18, 37}, {19, 35}, {25, 31}},
      {{3, 53}, {11, 44}, {12, 42}, {14, 39}, {22, 33}, {23, 32}},
      {{2, 54}, {13, 41}, {15, 40}, {18, 38}, {20, 35}, {21, 34}}};
  return sets;
}

const std::vector<std::vector<Scalar>>& e7_omega6_zero_rows() {
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar z(0);
    Scalar c3 = qq(-3) + qq(-1) - qq(3);
    Scalar c5p = qq(5) + qq(3) + qq(1) - qq(-3) - qq(-5);
    Scalar c5m = qq(-5) + qq(-3) + qq(-1) - qq(3) - qq(5);
    Scalar b2 = br(2), b3 = br(3), b22 = brk(2, 4), b2i = bri(2);
    auto rep = [](std::vector<Scalar>& v, const Scalar& x, int n) {
      for (int i = 0; i < n; ++i) v.push_back(x);
    };
    // s = 64, prefactor q^{1/2}/sqrt([2])
    {
      Scalar pf = qh(1) / sq2();
      std::vector<Scalar> v{qq(4), qq(5)};
      rep(v, z, 13);
      for (auto& x : {-qq(3), qq(2), z, -qq(1)}) v.push_back(x);
      rep(v, z, 2);
      for (auto& x : {qq(0), -qq(-1), -qq(-1), qq(-2), -qq(-3), qq(-4), -qq(-5)}) v.push_back(x);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 65, prefactor q^{1/2}/sqrt([2][3])
    {
      Scalar pf = qh(1) / (sq2() * sq3());
      std::vector<Scalar> v{-qq(4), qq(3), qq(5) * b2};
      rep(v, z, 9);
      for (auto& x : {-qq(3) * b2, z, qq(2) * b2, -qq(5), qq(4), -qq(1) * b2, -qq(3), b2,
                      -qq(-1) * b2, qq(2), -qq(1), qq(-1), -qq(-2), qq(-3), -qq(-4), qq(-5)})
        v.push_back(x);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 66, prefactor q^{1/2}/sqrt([3][4])
    {
      Scalar pf = qh(1) / (sq3() * sq4());
      std::vector<Scalar> v{qq(4), -qq(3), qq(2), qq(5) * b3};
      rep(v, z, 6);
      for (auto& x : {-qq(3) * b3, qq(2) * b3, -qq(6), -qq(1) * b3}) v.push_back(x);
      rep(v, qq(5), 2);
      rep(v, -qq(4), 2);
      v.push_back(qq(3));
      v.push_back(-b2);
      rep(v, qq(-1) * b2, 2);
      for (auto& x : {-qq(-2) * b2, qq(2) * b2, -qq(1) * b2, -qq(-3), qq(-4), -qq(-5)})
        v.push_back(x);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 67, prefactor q^{1/2}/sqrt([3][4][3]_3^i)
    {
      Scalar pf = qh(1) / (sq3() * sq4() * sqk36());
      std::vector<Scalar> v{-qq(4) * b3, qq(3) * b3, -qq(2) * b3, qq(1) * b3,
                            -qq(5) * c3 * b22};
      rep(v, qq(4) * c3 * b22, 2);
      rep(v, -qq(3) * c3 * b22, 2);
      v.push_back(qq(2) * c3 * b22);
      v.push_back(qq(4) * c5m);
      rep(v, -qq(3) * c5m, 2);
      rep(v, qq(2) * c5m, 3);
      rep(v, -qq(1) * c5m, 2);
      v.push_back(c5m);
      v.push_back(-qq(2) * b2i * b3 * b3);
      rep(v, qq(1) * b2i * b3 * b3, 2);
      rep(v, -b2i * b3 * b3, 2);
      v.push_back(qq(-1) * b2i * b3 * b3);
      v.push_back(-c5p);
      v.push_back(qq(-1) * c5p);
      v.push_back(-qq(-2) * c5p);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 68, prefactor q^{1/2}/sqrt([2][3])
    {
      Scalar pf = qh(1) / (sq2() * sq3());
      std::vector<Scalar> v;
      rep(v, z, 4);
      for (auto& x : {qq(4) * b2, -qq(3) * b2, qq(6)}) v.push_back(x);
      rep(v, -qq(5), 2);
      for (auto& x : {qq(4), -qq(2)}) v.push_back(x);
      rep(v, qq(1), 2);
      v.push_back(qq(3) * b2);
      rep(v, -qq(0), 2);
      for (auto& x : {qq(-1), -qq(2) * b2, qq(1) * b2}) v.push_back(x);
      rep(v, z, 6);
      for (auto& x : {-qq(-1) * b2, -qq(1), qq(0)}) v.push_back(x);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 69, prefactor q^{1/2}/sqrt([2])
    {
      Scalar pf = qh(1) / sq2();
      std::vector<Scalar> v;
      rep(v, z, 6);
      for (auto& x : {qq(4), -qq(3), qq(5), -qq(4), qq(2), qq(3), -qq(1), z, -qq(2), qq(0), qq(1)})
        v.push_back(x);
      rep(v, z, 9);
      v.push_back(-qq(-1));
      v.push_back(-qq(0));
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    // s = 70, prefactor q^{1/2}/sqrt([2])
    {
      Scalar pf = qh(1) / sq2();
      std::vector<Scalar> v;
      rep(v, z, 4);
      for (auto& x : {qq(4), qq(5), -qq(3), -qq(4), qq(2), qq(3)}) v.push_back(x);
      rep(v, z, 9);
      for (auto& x : {-qq(1), -qq(2), qq(0), qq(1), -qq(-1), -qq(0)}) v.push_back(x);
      rep(v, z, 3);
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    for (auto& row : *r)
      if (row.size() != 28) throw std::logic_error("e7 zero row length");
    return r;
  }();
  return *rows;
}

const std::vector<Scalar>& e7_p_vector() {
  static const std::vector<Scalar>* p = [] {
    auto* v = new std::vector<Scalar>;
    const int e[28] = {27, -25, 23, -21, 19, -17, -17, 15, 15, -13, -13, 11, 11, -9,
                       -9, -9, 7, 7, -5, -5, 3, 3, -1, -1, 1, -3, 5, -7};
    // sign convention: value is sgn * q^{|e|/2} with the sign carried by e's
    // position in the printed list
    const int sgn[28] = {1, -1, 1, -1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1,
                         -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, -1, 1, -1};
    const int ex[28] = {27, 25, 23, 21, 19, 17, 17, 15, 15, 13, 13, 11, 11, 9,
                        9, 9, 7, 7, 5, 5, 3, 3, 1, 1, -1, -3, -5, -7};
    (void)e;
    for (int i = 0; i < 28; ++i) v->push_back(Scalar(Rat(sgn[i])) * qh(ex[i]));
    return v;
  }();
  return *p;
}

// ---------- F4 ----------

const std::vector<std::vector<Pair>>& f4_omega1_sets() {
  static const std::vector<std::vector<Pair>> sets = {
      {{1, 13}, {1, 14}, {2, 12}, {3, 10}, {4, 8}, {5, 6}},
      {{1, 15}, {2, 13}, {2, 14}, {3, 11}, {4, 9}, {5, 7}},
      {{1, 17}, {2, 16}, {3, 13}, {3, 14}, {6, 9}, {7, 8}},
      {{1, 19}, {2, 18}, {4, 13}, {4, 14}, {6, 11}, {7, 10}},
      {{1, 21}, {2, 20}, {5, 13}, {5, 14}, {8, 11}, {9, 10}},
      {{1, 22}, {3, 18}, {4, 16}, {6, 13}, {6, 14}, {7, 12}},
      {{1, 23}, {3, 20}, {5, 16}, {8, 13}, {8, 14}, {9, 12}},
      {{1, 24}, {4, 20}, {5, 18}, {10, 13}, {10, 14}, {11, 12}},
      {{2, 22}, {3, 19}, {4, 17}, {6, 15}, {7, 13}, {7, 14}},
      {{2, 23}, {3, 21}, {5, 17}, {8, 15}, {9, 13}, {9, 14}},
      {{2, 24}, {4, 21}, {5, 19}, {10, 15}, {11, 13}, {11, 14}},
      {{1, 25}, {6, 20}, {8, 18}, {10, 16}, {12, 13}, {12, 14}}};
  return sets;
}

const std::vector<std::vector<Scalar>>& f4_omega1_coords() {
  // printed values are q^{-1/2} sqrt([2]) mu / sqrt([3]); mu = val * q^{1/2} sqrt([3])/sqrt([2])
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar pf = qh(1) * sq3() / sq2();
    Scalar z(0);
    auto row = [&](std::vector<Scalar> v) {
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    };
    std::vector<Scalar> s1{z, qh(11) * sq2() / sq3(), -qq(4), qq(3), -qq(1), qq(-1)};
    std::vector<Scalar> s2{qq(5), -qh(9) / sq2(), -qh(5) / (sq2() * sq3()), qq(3), -qq(1), qq(-1)};
    std::vector<Scalar> s35{qq(5), -qq(4), qh(5) / sq2(), -qh(5) / (sq2() * sq3()), -qq(1), qq(0)};
    std::vector<Scalar> s68{qq(5), -qq(4), qq(2), -qh(1) / sq2(), -qh(5) / (sq2() * sq3()), qq(0)};
    std::vector<Scalar> s911{qq(5), -qq(4), qq(2), -qq(1), z, qh(-1) * sq2() / sq3()};
    std::vector<Scalar> s12{qq(5), -qq(4), qq(2), -qq(0), qh(-3) / sq2(), -qh(5) / (sq2() * sq3())};
    row(s1);
    row(s2);
    for (int i = 0; i < 3; ++i) row(s35);
    for (int i = 0; i < 3; ++i) row(s68);
    for (int i = 0; i < 3; ++i) row(s911);
    row(s12);
    return r;
  }();
  return *rows;
}

const std::vector<std::vector<Scalar>>& f4_omega1_zero_rows() {
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar z(0);
    Scalar b2 = br(2), b23 = brk(2, 6); // [2]_3 = q^3 + q^{-3}
    // prefactors carry the same sqrt([3])/sqrt([2]) scale as the nonzero
    // rows (all w_s have equal Shapovalov length)
    {
      Scalar pf = sq3() / (sq2() * sq2());
      std::vector<Scalar> v{z, qq(5), qq(6), -qq(4), qq(2), -qq(5), z, qq(3), z, -qq(1), z,
                            -qq(2), b2 / sq3(), z, z};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    {
      Scalar pf = Scalar(1) / (sq2() * sq2());
      std::vector<Scalar> v{qq(5) * b2, qq(7), -qq(6), qq(4), -qq(2), -qq(3), -qq(5) * b2,
                            qq(1), qq(3) * b2, -qq(-1), -qq(1) * b2, qq(-2), z, b2, -b23};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    return r;
  }();
  return *rows;
}

const std::vector<std::vector<Pair>>& f4_omega4_sets() {
  static const std::vector<std::vector<Pair>> sets = {
      {{1, 7}, {2, 6}, {3, 4}},   {{1, 9}, {2, 8}, {3, 5}},   {{1, 11}, {2, 10}, {4, 5}},
      {{1, 16}, {3, 12}, {6, 8}}, {{1, 18}, {4, 12}, {6, 10}}, {{1, 20}, {5, 12}, {8, 10}},
      {{2, 17}, {3, 15}, {7, 9}}, {{2, 19}, {4, 15}, {7, 11}}, {{2, 21}, {5, 15}, {9, 11}},
      {{3, 22}, {6, 17}, {7, 16}}, {{3, 23}, {8, 17}, {9, 16}}, {{4, 22}, {6, 19}, {7, 18}}};
  return sets;
}

const std::vector<std::vector<Scalar>>& f4_omega4_mid_coords() {
  // printed values are q^{-1/2} sqrt([2]) eps; eps = val * q^{1/2}/sqrt([2])
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar pf = qh(1) / sq2();
    Scalar z(0);
    auto row = [&](std::vector<Scalar> v) {
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    };
    std::vector<Scalar> s13{qh(5) * sq2(), z, -qq(1), -qq(2), qq(0), -qq(-2)};
    std::vector<Scalar> s14{qq(2), qh(7) / sq2(), -qh(3) * sq3() / sq2(), -qq(2), qq(0), -qq(-2)};
    std::vector<Scalar> s1517{qq(2), qq(3), -qh(3) / sq2(), -qh(3) * sq3() / sq2(), qq(0), qq(1)};
    std::vector<Scalar> s1820{qq(2), qq(3), -qq(1), qh(-1) / sq2(), -qh(3) * sq3() / sq2(), qq(1)};
    std::vector<Scalar> s2123{qq(2), qq(3), -qq(1), -qq(2), qh(1) * sq2(), z};
    std::vector<Scalar> s24{qq(2), qq(3), -qq(1), qq(-1), -qh(-5) / sq2(), -qh(3) * sq3() / sq2()};
    row(s13);
    row(s14);
    for (int i = 0; i < 3; ++i) row(s1517);
    for (int i = 0; i < 3; ++i) row(s1820);
    for (int i = 0; i < 3; ++i) row(s2123);
    row(s24);
    return r;
  }();
  return *rows;
}

const std::vector<std::vector<Scalar>>& f4_omega4_zero_rows() {
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar z(0);
    Scalar b2 = br(2), b3 = br(3);
    Scalar b23i = bri(2, 6); // [2]_3^i = q^3 - q^{-3}
    Scalar b22 = brk(2, 4);  // [2]_2 = q^2 + q^{-2}
    Scalar b2i = bri(2);     // [2]^i = q - q^{-1}
    {
      Scalar pf = Scalar(1) / (sq24() * sqk36());
      std::vector<Scalar> v{-qq(2), qq(1), -qq(0), qq(-2), qq(5) * b23i, -qq(-3), qq(-4),
                            -qq(4) * b23i, qq(3) * b23i, qq(2) * b23i, -qq(1) * b23i,
                            -qq(1) * b23i, z, b23i, b23i};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    {
      Scalar pf = Scalar(1) / (sq24() * sq3());
      std::vector<Scalar> v{qq(2), -qq(1), qq(0), qq(6), qq(1) * b2, -qq(5), qq(4), -b2,
                            qq(-1) * b2, -qq(2) * b23i, qq(1) * b23i, qq(1) * b23i, z,
                            -b23i, -b23i};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    {
      Scalar pf = Scalar(1) / (br(2) * sq3());
      std::vector<Scalar> v{-qq(2), qq(1), qq(3) * b2, qq(3) * b2, -qq(1) * b2, qq(5), -qq(4),
                            -qq(3), qq(2), -qq(1) * b3, b3, -qq(1) * b23i, z, b23i, b23i};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    {
      Scalar pf = Scalar(1) / br(2);
      std::vector<Scalar> v{qq(2), qq(3), z, z, z, qq(3), qq(4), -qq(1), -qq(2), qq(-1),
                            qq(0), -b22, z, b2i, -b23i};
      for (auto& x : v) x = pf * x;
      r->push_back(v);
    }
    return r;
  }();
  return *rows;
}

const std::vector<Scalar>& f4_p_vector() {
  static const std::vector<Scalar>* p = [] {
    auto* v = new std::vector<Scalar>{qq(11), -qq(10), qq(9),  -qq(7), qq(5), qq(6), -qq(5),
                                      -qq(4), qq(3),   qq(2),  -qq(1), -qq(1), Scalar(0)};
    return v;
  }();
  return *p;
}

// ---------- G2 ----------

const std::vector<std::vector<Pair>>& g2_omega1_sets() {
  // s = 1..7; s = 4 is the zero-weight set {(i, 8-i)}
  static const std::vector<std::vector<Pair>> sets = {
      {{1, 4}, {2, 3}}, {{1, 5}, {2, 4}}, {{1, 6}, {3, 4}},
      {{1, 7}, {2, 6}, {3, 5}, {4, 4}},
      {{2, 7}, {4, 5}}, {{3, 7}, {4, 6}}, {{4, 7}, {5, 6}}};
  return sets;
}

const std::vector<std::vector<Scalar>>& g2_omega1_coords() {
  static const std::vector<std::vector<Scalar>>* rows = [] {
    auto* r = new std::vector<std::vector<Scalar>>;
    Scalar s2 = sq2();
    r->push_back({qq(3), -qh(3) * s2});
    r->push_back({qh(5) * s2, -qq(1)});
    r->push_back({qh(5) * s2, -qq(1)});
    r->push_back({qq(2), qq(3), -qq(0), -bri(2)}); // (1,7),(2,6),(3,5) and mu_{4,4}
    r->push_back({qh(5) * s2, -qq(1)});
    r->push_back({qh(5) * s2, -qq(1)});
    r->push_back({qq(3), -qh(3) * s2});
    return r;
  }();
  return *rows;
}

const std::vector<Scalar>& g2_p_vector() {
  static const std::vector<Scalar>* p = [] {
    return new std::vector<Scalar>{qq(5), -qq(4), qq(1), -qq(0), qq(-1), -qq(-4), qq(-5)};
  }();
  return *p;
}

// ---------- E8 ----------

const std::vector<Pair>& e8_omega7_pairs() {
  static const std::vector<Pair> pairs = {{1, 58}, {2, 30}, {3, 17}, {4, 14}, {5, 12},
                                          {6, 9},  {7, 8},  {8, 7},  {9, 6},  {12, 5},
                                          {14, 4}, {17, 3}, {30, 2}, {58, 1}};
  return pairs;
}

const std::vector<Arrow>& e8_zero_block_arrows() {
  static const std::vector<Arrow>* arrows = [] {
    auto* v = new std::vector<Arrow>;
    auto a = [&](int i) { return sq(qnum(i), "[" + std::to_string(i) + "]") *
                                 sq(qnum(i + 1), "[" + std::to_string(i + 1) + "]") /
                                 br(i + 1); };       // sqrt([i]/[i+1])
    auto ainv = [&](int i) { return sq(qnum(i), "[" + std::to_string(i) + "]") *
                                    sq(qnum(i + 1), "[" + std::to_string(i + 1) + "]") /
                                    br(i); };        // sqrt([i+1]/[i])
    Scalar c = sq2() * sq3() * sq5() * sqk60() / (br(2) * br(3) * br(5));
    int b57 = 192, b84 = 165, b115 = 134, b116 = 133, b117 = 132, b118 = 131, b119 = 130,
        b120 = 129;
    // top band into the zero-weight band
    v->push_back({1, 57, 121, ainv(1)});
    v->push_back({2, 84, 122, ainv(2)});
    v->push_back({2, 84, 121, a(1)});
    v->push_back({3, 115, 122, a(2)});
    v->push_back({3, 115, 123, ainv(3)});
    v->push_back({4, 116, 124, ainv(4)});
    v->push_back({4, 116, 123, a(3)});
    v->push_back({5, 117, 125, c});
    v->push_back({5, 117, 128, a(1)});
    v->push_back({5, 117, 126, a(2)});
    v->push_back({5, 117, 124, a(4)});
    v->push_back({6, 118, 126, ainv(2)});
    v->push_back({6, 118, 127, a(1)});
    v->push_back({7, 119, 127, ainv(1)});
    v->push_back({8, 120, 128, ainv(1)});
    // zero-weight band down
    v->push_back({1, 121, b57, ainv(1)});
    v->push_back({2, 121, b84, a(1)});
    v->push_back({2, 122, b84, ainv(2)});
    v->push_back({3, 122, b115, a(2)});
    v->push_back({3, 123, b115, ainv(3)});
    v->push_back({4, 123, b116, a(3)});
    v->push_back({4, 124, b116, ainv(4)});
    v->push_back({5, 124, b117, a(4)});
    v->push_back({5, 125, b117, c});
    v->push_back({6, 126, b118, ainv(2)});
    v->push_back({5, 126, b117, a(2)});
    v->push_back({7, 127, b119, ainv(1)});
    v->push_back({6, 127, b118, a(1)});
    v->push_back({8, 128, b120, ainv(1)});
    v->push_back({5, 128, b117, a(1)});
    return v;
  }();
  return *arrows;
}

const std::vector<std::pair<int, Scalar>>& e8_e0_column() {
  static const std::vector<std::pair<int, Scalar>>* col = [] {
    auto* v = new std::vector<std::pair<int, Scalar>>;
    auto s = [&](int i) { return sq(qnum(i), "[" + std::to_string(i) + "]"); };
    v->push_back({121, Scalar(1) / s(2)});                                  // 1/sqrt([1][2])
    v->push_back({122, -(Scalar(1) / (s(2) * s(3))) });                     // -1/sqrt([2][3])
    v->push_back({123, Scalar(1) / (s(3) * s(4))});
    v->push_back({124, -(Scalar(1) / (s(4) * s(5)))});
    v->push_back({125, s(2) * s(3) / (s(5) * sqk60())});                    // sqrt([2][3]/([5]k60))
    v->push_back({249, bri(2) * s(2) * s(3) * s(5) / sqk60()});             // [2]^i sqrt([2][3][5]/k60)
    return v;
  }();
  return *col;
}

// ---------- printed module diagrams ----------

const std::vector<Arrow>& f4_module_arrows() {
  static const std::vector<Arrow>* arrows = [] {
    auto* v = new std::vector<Arrow>;
    Scalar one(1), s2 = sq2(), s3 = sq3();
    auto add = [&](int c, int f, int t, const Scalar& co) { v->push_back({c, f, t, co}); };
    add(1, 1, 2, one);  add(2, 2, 3, one);  add(3, 3, 4, one);
    add(4, 4, 5, one);  add(2, 4, 6, one);  add(2, 5, 8, one);
    add(4, 6, 8, one);  add(1, 6, 7, one);  add(3, 8, 10, one); add(1, 8, 9, one);
    add(2, 10, 12, one); add(1, 10, 11, one);
    add(1, 12, 14, s3 / s2); add(1, 12, 13, Scalar(1) / s2);
    add(1, 14, 15, s3 / s2);
    add(4, 7, 9, one);  add(3, 9, 11, one); add(2, 11, 13, s2);
    add(1, 13, 15, Scalar(1) / s2); add(2, 13, 16, s2);
    add(2, 15, 17, one); add(1, 16, 17, one); add(3, 16, 18, one); add(3, 17, 19, one);
    add(1, 18, 19, one); add(4, 18, 20, one); add(2, 19, 22, one); add(4, 19, 21, one);
    add(4, 22, 23, one);
    add(1, 20, 21, one); add(2, 21, 23, one); add(3, 23, 24, one);
    add(2, 24, 25, one); add(1, 25, 26, one);
    return v;
  }();
  return *arrows;
}

const std::vector<Arrow>& g2_module_arrows() {
  static const std::vector<Arrow>* arrows = [] {
    auto* v = new std::vector<Arrow>;
    Scalar one(1), s2 = sq2();
    v->push_back({1, 1, 2, one});
    v->push_back({2, 2, 3, one});
    v->push_back({1, 3, 4, s2});
    v->push_back({1, 4, 5, s2});
    v->push_back({2, 5, 6, one});
    v->push_back({1, 6, 7, one});
    return v;
  }();
  return *arrows;
}

} // namespace rmx::tables
