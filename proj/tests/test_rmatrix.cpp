#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rmx/rmatrix.hpp"

using namespace rmx;

namespace {
SpMat<RatZ> ratz_id(int n) {
  SpMat<RatZ> m(n, n);
  for (int i = 0; i < n; ++i) m.add_to(i, i, RatZ(1));
  m.compact();
  return m;
}
SpMat<RatZ> subst_invz(const SpMat<RatZ>& m) {
  return m.map([](const RatZ& f) { return f.subst_invz(); });
}
SpMat<RatZ> eval_at_one(const SpMat<RatZ>& m) {
  return m.map([](const RatZ& f) { return RatZ(f.eval(Scalar(1))); });
}
} // namespace

TEST_CASE("f(0) matches the flip sign and the Casimir rule for every type") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{
           {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2},
           {Series::B, 3}, {Series::C, 2}, {Series::C, 3}, {Series::D, 4}, {Series::E, 6},
           {Series::E, 7}, {Series::E, 8}, {Series::F, 4}, {Series::G, 2}}) {
    auto rep = check_r0(s, r);
    CAPTURE(rep.detail);
    CHECK(rep.ok);
  }
}

TEST_CASE("A1 matrix units against the closed form") {
  auto R = build_matrix_units(Series::A, 1);
  // on v1 (x) v2: coefficient of v1 (x) v2 is z(q-q^{-1})/(q-q^{-1}z)
  RatZ e01 = R.get(1, 1);
  PolyZ num = PolyZ::from_coeffs({Scalar(0), Scalar(Laurent::q_pow(1)) - Scalar(Laurent::q_pow(-1))});
  PolyZ den = PolyZ::from_coeffs({Scalar(Laurent::q_pow(1)), -Scalar(Laurent::q_pow(-1))});
  CHECK(e01 == RatZ(num, den));
  PolyZ num2 = PolyZ::from_coeffs({Scalar(1), Scalar(-1)});
  CHECK(R.get(2, 1) == RatZ(num2, den));
}

TEST_CASE("units: R(1) = Id, unitarity, self-adjointness (light types)") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 1},
                                                         {Series::A, 2},
                                                         {Series::B, 2},
                                                         {Series::C, 2},
                                                         {Series::G, 2}}) {
    auto R = build_matrix_units(s, r);
    CAPTURE((int)s); CAPTURE(r);
    CHECK(eval_at_one(R) == ratz_id(R.rows()));
    CHECK(cleared_unitary(R, units_common_den(s, r)));
    CHECK(R.transpose() == R);
  }
}

TEST_CASE("units intertwine the coproduct (light types, all generators)") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 2}, {Series::B, 2},
                                                         {Series::G, 2}}) {
    const RepModule& V = fundamental_rep(s, r);
    PolyZ D = units_common_den(s, r);
    auto N = clear_denominator(build_matrix_units(s, r), &D)
                 .map([](const PolyZ& p) { return RatZ(p); });
    TensorCtx<RatZ> A{&V, &V, RatZ::var(), RatZ(1), [](const Scalar& x) { return RatZ(x); }};
    TensorCtx<RatZ> B{&V, &V, RatZ(1), RatZ::var(), [](const Scalar& x) { return RatZ(x); }};
    RatZ zz = RatZ::var();
    for (int c = 0; c <= V.rank(); ++c)
      for (bool lower : {false, true}) {
        CAPTURE((int)s); CAPTURE(r); CAPTURE(c); CAPTURE(lower);
        RatZ sc = (c == 0) ? zz : RatZ(1);
        CHECK(N * (sc * A.delta_matrix(c, lower)) == (sc * B.delta_matrix(c, lower)) * N);
      }
  }
}

TEST_CASE("cross-construction: units equal the projector form (light types)") {
  for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 1},
                                                         {Series::A, 2},
                                                         {Series::B, 2},
                                                         {Series::C, 2},
                                                         {Series::G, 2}}) {
    CAPTURE((int)s); CAPTURE(r);
    auto pf = build_projector_form(s, r);
    // projector sanity: sum P = Id, P idempotent, mutually annihilating
    int d2 = pf.V->dim * pf.V->dim;
    SpMat<Scalar> sum(d2, d2);
    for (auto& P : pf.P) {
      CHECK(P * P == P);
      sum = sum + P;
    }
    CHECK(sum == SpMat<Scalar>::identity(d2));
    CHECK(pf.assemble() == build_matrix_units(s, r));
  }
}

TEST_CASE("G2 projector dimensions and Q normalization at q -> 1") {
  auto rf = build_rational(Series::G, 2);
  // dims 27, 14, 7, 1 and Q = 7 P_{omega_0}
  std::vector<long> dims;
  for (auto& P : rf.P) {
    RadQ tr(Rat(0));
    for (int i = 0; i < rf.dim; ++i) tr += P.get(i, i);
    dims.push_back(tr.rational_part().get_num().get_si());
  }
  CHECK(dims == std::vector<long>({27, 14, 7, 1}));
}

TEST_CASE("solver reproduces the A1 units") {
  const RepModule& V = fundamental_rep(Series::A, 1);
  auto X = solve_intertwiner(V, V, 1);
  CHECK(X == build_matrix_units(Series::A, 1));
}
