#include "rmx/rep.hpp"
#include "rmx/tables.hpp"

#include <mutex>
#include <set>
#include <sstream>

namespace rmx {

namespace {

struct ArrowSpec {
  int color, from, to; // 1-based
  Scalar coeff;
};

// monomial labels along explicit arrows: the target label is the source
// label lowered at the top of its color string
std::vector<LMonomial> labels_from_arrows(const CartanData& cd, int dim,
                                          const std::vector<ArrowSpec>& arrows) {
  std::vector<LMonomial> mono(dim + 1);
  std::vector<bool> have(dim + 1, false);
  mono[1] = LMonomial::y(1, 0);
  have[1] = true;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& a : arrows) {
      if (!have[a.from] || have[a.to]) continue;
      auto part = mono[a.from].part(a.color);
      int top = -100000;
      for (auto& [sh, p] : part)
        if (p > 0) top = std::max(top, sh);
      if (top == -100000) throw std::logic_error("labels_from_arrows: no positive power");
      mono[a.to] = mono[a.from] * a_root(a.color, top + cd.sym(a.color), cd).inverse();
      have[a.to] = true;
      progress = true;
    }
  }
  for (int i = 1; i <= dim; ++i)
    if (!have[i]) throw std::logic_error("labels_from_arrows: disconnected basis vector");
  return {mono.begin() + 1, mono.end()};
}

RepModule assemble(const CartanData& cd, std::vector<LMonomial> monos,
                   const std::vector<ArrowSpec>& arrows,
                   const std::vector<std::pair<std::pair<int, int>, Scalar>>& e0_entries) {
  RepModule m;
  m.cd = &cd;
  m.dim = (int)monos.size();
  m.lweights = std::move(monos);
  int r = cd.rank();
  m.weights.resize(m.dim);
  for (int v = 0; v < m.dim; ++v) m.weights[v] = m.lweights[v].weight(cd);
  m.F.assign(r + 1, SpMat<Scalar>(m.dim, m.dim));
  for (auto& a : arrows) m.F[a.color].add_to(a.to - 1, a.from - 1, a.coeff);
  // affine pair: F_0 is the transpose of the E_0 base
  for (auto& [rc, c] : e0_entries) {
    m.F[0].add_to(rc.second - 1, rc.first - 1, c); // F_0 = E_0^T
  }
  for (auto& f : m.F) f.compact();
  m.E.resize(r + 1);
  for (int i = 0; i <= r; ++i) m.E[i] = m.F[i].transpose();
  // K exponents
  m.kexp.assign(r + 1, std::vector<int>(m.dim, 0));
  for (int v = 0; v < m.dim; ++v) {
    for (int i = 1; i <= r; ++i) m.kexp[i][v] = 2 * cd.sym(i) * m.weights[v][i - 1];
    int k0 = 0;
    for (int i = 1; i <= r; ++i) k0 -= cd.marks()[i] * 2 * cd.sym(i) * m.weights[v][i - 1];
    m.kexp[0][v] = k0;
  }
  return m;
}

std::vector<LMonomial> printed_labels(const std::string& key) {
  auto list = parse_character_ordered(tables::printed_character(key));
  std::vector<LMonomial> out;
  for (auto& [m, c] : list) out.push_back(m); // multiplicities handled by callers
  return out;
}

// identifies a simple l-root: returns (color, center shift) if m = A_{i, q^c}
std::pair<int, int> as_a_root(const LMonomial& m, const CartanData& cd) {
  for (int i = 1; i <= cd.rank(); ++i) {
    auto part = m.part(i);
    if (part.size() != 2 || part[0].second != 1 || part[1].second != 1) continue;
    int d = cd.sym(i);
    if (part[1].first - part[0].first != 2 * d) continue;
    int c = part[0].first + d;
    if (m == a_root(i, c, cd)) return {i, c};
  }
  return {0, 0};
}

// arrows between monomial labels differing by a simple l-root (coefficient 1);
// pairs touching `excluded` positions (1-based) are skipped
std::vector<ArrowSpec> adjacency_arrows(const CartanData& cd,
                                        const std::vector<LMonomial>& monos,
                                        const std::set<int>& excluded = {}) {
  std::vector<ArrowSpec> arrows;
  int n = (int)monos.size();
  for (int x = 1; x <= n; ++x) {
    if (excluded.count(x)) continue;
    for (int y = 1; y <= n; ++y) {
      if (y == x || excluded.count(y)) continue;
      auto [i, c] = as_a_root(monos[x - 1] * monos[y - 1].inverse(), cd);
      (void)c;
      if (i > 0) arrows.push_back({i, x, y, Scalar(1)});
    }
  }
  return arrows;
}

std::vector<std::pair<std::pair<int, int>, Scalar>> simple_e0(std::vector<std::pair<int, int>> rc) {
  std::vector<std::pair<std::pair<int, int>, Scalar>> out;
  for (auto& p : rc) out.push_back({p, Scalar(1)});
  return out;
}

RepModule build_abcd(Series s, int r) {
  const CartanData& cd = cartan_cache(s, r);
  std::vector<ArrowSpec> arrows;
  Scalar one(1);
  int dim = 0;
  std::vector<std::pair<std::pair<int, int>, Scalar>> e0;
  if (s == Series::A) {
    dim = r + 1;
    for (int i = 1; i <= r; ++i) arrows.push_back({i, i, i + 1, one});
    e0 = simple_e0({{r + 1, 1}});
  } else if (s == Series::B) {
    dim = 2 * r + 1;
    auto bar = [&](int i) { return 2 * r + 2 - i; };
    Scalar s2 = Scalar::sqrt_of(qnum(2), "[2]");
    for (int i = 1; i < r; ++i) {
      arrows.push_back({i, i, i + 1, one});
      arrows.push_back({i, bar(i + 1), bar(i), one});
    }
    arrows.push_back({r, r, r + 1, s2});
    arrows.push_back({r, r + 1, r + 2, s2});
    e0 = simple_e0({{2 * r, 1}, {2 * r + 1, 2}});
  } else if (s == Series::C) {
    dim = 2 * r;
    auto bar = [&](int i) { return 2 * r + 1 - i; };
    for (int i = 1; i <= r; ++i) {
      arrows.push_back({i, i, i + 1, one});
      if (i < r) arrows.push_back({i, bar(i + 1), bar(i), one});
    }
    e0 = simple_e0({{2 * r, 1}});
  } else { // D
    dim = 2 * r;
    auto bar = [&](int i) { return 2 * r + 1 - i; };
    for (int i = 1; i < r; ++i) {
      arrows.push_back({i, i, i + 1, one});
      arrows.push_back({i, bar(i + 1), bar(i), one});
    }
    arrows.push_back({r, r - 1, r + 1, one});
    arrows.push_back({r, r, r + 2, one}); // F_r v_{bar(r+1)} = v_{bar(r-1)}
    e0 = simple_e0({{2 * r - 1, 1}, {2 * r, 2}});
  }
  auto monos = labels_from_arrows(cd, dim, arrows);
  return assemble(cd, std::move(monos), arrows, e0);
}

RepModule build_e6() {
  const CartanData& cd = cartan_cache(Series::E, 6);
  auto monos = printed_labels("E6");
  auto arrows = adjacency_arrows(cd, monos);
  return assemble(cd, std::move(monos),arrows,
                  simple_e0({{20, 1}, {22, 2}, {24, 3}, {25, 4}, {26, 6}, {27, 8}}));
}

RepModule build_e7() {
  const CartanData& cd = cartan_cache(Series::E, 7);
  auto monos = printed_labels("E7");
  auto arrows = adjacency_arrows(cd, monos);
  // primes: 1'..6' = 29, 16, 13, 11, 8, 7; bar i = 57 - i
  const int pr[7] = {0, 29, 16, 13, 11, 8, 7};
  std::vector<std::pair<int, int>> rc;
  for (int i = 1; i <= 6; ++i) {
    rc.push_back({57 - pr[i], i});
    rc.push_back({57 - i, pr[i]});
  }
  return assemble(cd, std::move(monos), arrows, simple_e0(rc));
}

RepModule build_f4() {
  const CartanData& cd = cartan_cache(Series::F, 4);
  auto monos = printed_labels("F4");
  std::vector<ArrowSpec> arrows;
  for (auto& a : tables::f4_module_arrows()) arrows.push_back({a.color, a.from, a.to, a.coeff});
  return assemble(cd, std::move(monos), arrows,
                  simple_e0({{20, 1}, {21, 2}, {23, 3}, {24, 4}, {25, 6}, {26, 7}}));
}

RepModule build_g2() {
  const CartanData& cd = cartan_cache(Series::G, 2);
  auto monos = printed_labels("G2");
  std::vector<ArrowSpec> arrows;
  // E_0 pairs v_1 -> v_6, v_2 -> v_7 (the -theta shifts; the bars in the
  // printed formula are swapped, cf. the B_r pattern E_{2r,1} + E_{2r+1,2})
  for (auto& a : tables::g2_module_arrows()) arrows.push_back({a.color, a.from, a.to, a.coeff});
  return assemble(cd, std::move(monos), arrows, simple_e0({{6, 1}, {7, 2}}));
}

RepModule build_e8() {
  const CartanData& cd = cartan_cache(Series::E, 8);
  auto monos = printed_labels("E8"); // 248 entries, listing order
  if ((int)monos.size() != 248) throw std::logic_error("E8 listing should have 248 monomials");
  // zero-weight block positions and the trivial summand v_249
  std::set<int> zero_pos;
  Weight zero(8, 0);
  for (int i = 1; i <= 248; ++i)
    if (monos[i - 1].weight(cd) == zero) zero_pos.insert(i);
  if (zero_pos != std::set<int>{121, 122, 123, 124, 125, 126, 127, 128})
    throw std::logic_error("E8 zero-weight monomials not at positions 121..128");
  monos.push_back(monos[124]); // v_249 carries the doubled l-weight
  std::set<int> excluded = zero_pos;
  excluded.insert(249);
  auto arrows = adjacency_arrows(cd, monos, excluded);
  for (auto& a : tables::e8_zero_block_arrows()) arrows.push_back({a.color, a.from, a.to, a.coeff});
  std::vector<std::pair<std::pair<int, int>, Scalar>> e0;
  for (auto& [row, c] : tables::e8_e0_column()) {
    e0.push_back({{row, 1}, c});
    e0.push_back({{248, row}, c});
  }
  for (int i = 2; i <= 57; ++i) e0.push_back({{190 + i, i}, Scalar(1)});
  return assemble(cd, std::move(monos), arrows, e0);
}

RepModule build_a2_l2() {
  const CartanData& cd = cartan_cache(Series::A, 2);
  std::vector<LMonomial> monos = {LMonomial::y(2, 0),
                                  LMonomial::y(2, 2, -1) * LMonomial::y(1, 1),
                                  LMonomial::y(1, 3, -1)};
  std::vector<ArrowSpec> arrows = {{2, 1, 2, Scalar(1)}, {1, 2, 3, Scalar(1)}};
  return assemble(cd, std::move(monos), arrows, simple_e0({{3, 1}}));
}

} // namespace

const RepModule& fundamental_rep(Series s, int rank) {
  static std::map<std::pair<int, int>, RepModule*> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair((int)s, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  RepModule* m = new RepModule;
  switch (s) {
    case Series::A:
    case Series::B:
    case Series::C:
    case Series::D: *m = build_abcd(s, rank); break;
    case Series::E:
      if (rank == 6) *m = build_e6();
      else if (rank == 7) *m = build_e7();
      else *m = build_e8();
      break;
    case Series::F: *m = build_f4(); break;
    case Series::G: *m = build_g2(); break;
  }
  cache[key] = m;
  return *m;
}

const RepModule& a2_second_fundamental() {
  static RepModule* m = [] { return new RepModule(build_a2_l2()); }();
  return *m;
}

std::vector<int> RepModule::bar_map() const {
  std::vector<int> bar(dim, -1);
  Weight zero(cd->rank(), 0);
  for (int i = 0; i < dim; ++i) {
    if (weights[i] == zero) {
      bar[i] = i;
      continue;
    }
    // v_bar = v_{dim' + 1 - i} by weight negation within the nonzero block
    Weight neg = weights[i];
    for (auto& c : neg) c = -c;
    int cnt = 0, hit = -1;
    for (int j = 0; j < dim; ++j)
      if (weights[j] == neg) {
        ++cnt;
        hit = j;
      }
    if (cnt != 1) throw std::logic_error("bar_map: weight multiplicity > 1");
    bar[i] = hit;
  }
  return bar;
}

void verify_algebra_relations(const RepModule& V) {
  const CartanData& cd = *V.cd;
  int r = cd.rank();
  auto fail = [&](const std::string& what) {
    throw std::runtime_error(cd.name() + " relations: " + what);
  };
  // E^T = F
  for (int i = 0; i <= r; ++i)
    if (!(V.E[i].transpose() == V.F[i])) fail("E^T != F at color " + std::to_string(i));
  // K_i E_j K_i^{-1} = q^{B~_ij} E_j entrywise
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      for (int col = 0; col < V.dim; ++col)
        for (auto& [row, val] : V.E[j].col(col).entries()) {
          (void)val;
          int lhs = V.kexp[i][row] - V.kexp[i][col];
          if (lhs != 2 * cd.b_aff(i, j))
            fail("K E K^{-1} exponent at colors " + std::to_string(i) + "," + std::to_string(j));
        }
    }
  // [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1})
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j) {
      SpMat<Scalar> lhs = V.E[i] * V.F[j] - V.F[j] * V.E[i];
      SpMat<Scalar> rhs(V.dim, V.dim);
      if (i == j) {
        int d = cd.sym_aff(i);
        Laurent den = Laurent::h_pow(2 * d) - Laurent::h_pow(-2 * d);
        for (int v = 0; v < V.dim; ++v) {
          Laurent num = Laurent::h_pow(V.kexp[i][v]) - Laurent::h_pow(-V.kexp[i][v]);
          if (!num.is_zero()) rhs.add_to(v, v, Scalar::frac(num, den));
        }
        rhs.compact();
      }
      if (!(lhs == rhs))
        fail("[E, F] at colors " + std::to_string(i) + "," + std::to_string(j));
    }
  // weights consistent with the l-weight labels
  for (int v = 0; v < V.dim; ++v)
    if (!(V.lweights[v].weight(cd) == V.weights[v])) fail("weight labels");
}

TensorCtx<RatZ> tensor_square_z(const RepModule& V) {
  TensorCtx<RatZ> ctx;
  ctx.V = ctx.W = &V;
  ctx.a1 = RatZ::var();
  ctx.a2 = RatZ(1);
  ctx.emb = [](const Scalar& s) { return RatZ(s); };
  return ctx;
}

TensorCtx<Scalar> tensor_square_scalar(const RepModule& V, const Scalar& a1, const Scalar& a2) {
  TensorCtx<Scalar> ctx;
  ctx.V = ctx.W = &V;
  ctx.a1 = a1;
  ctx.a2 = a2;
  ctx.emb = [](const Scalar& s) { return s; };
  return ctx;
}

} // namespace rmx
