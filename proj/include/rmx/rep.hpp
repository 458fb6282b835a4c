#pragma once

#include "rmx/cartan.hpp"
#include "rmx/linalg.hpp"
#include "rmx/qchar.hpp"
#include "rmx/ratfunc.hpp"
#include "rmx/scalar.hpp"

#include <functional>
#include <map>

namespace rmx {

// Finite-dimensional module with sparse generator actions in a weighted
// orthonormal basis (E_i^T = F_i for i in I). Index 0 is the affine pair
// E_0/F_0 stored at spectral parameter 1; a module at parameter `a` scales
// E_0 by a and F_0 by 1/a.
struct RepModule {
  const CartanData* cd = nullptr;
  int dim = 0;
  std::vector<LMonomial> lweights;       // basis labels, printed order
  std::vector<Weight> weights;
  std::vector<SpMat<Scalar>> F;          // F[0..r]
  std::vector<SpMat<Scalar>> E;          // E[0..r]
  std::vector<std::vector<int>> kexp;    // kexp[i][v]: K_i v = h^{kexp[i][v]} v

  int rank() const { return cd->rank(); }
  // the bar involution v_i -> v_{bar i} (identity on zero weights); computed
  // from weights; only defined for the self-dual bases (not A, not E6)
  std::vector<int> bar_map() const;
};

// First fundamental modules in the bases fixed by the reference listings.
const RepModule& fundamental_rep(Series s, int rank);
// Second fundamental of A2 (3-dimensional), used by the adjoint fusion.
const RepModule& a2_second_fundamental();

// verifies all Drinfeld-Jimbo relations that the construction relies on
// (K E K^{-1}, [E_i, F_j], E^T = F, weight consistency, printed K_0);
// throws with a description on the first failure
void verify_algebra_relations(const RepModule& V);

// ---- tensor-square machinery over a generic coefficient field ----

// context for V(a1) (x) W(a2) with entries mapped into K by `emb`
template <class K>
struct TensorCtx {
  const RepModule* V;
  const RepModule* W;
  K a1, a2;                               // spectral parameters of the slots
  std::function<K(const Scalar&)> emb;

  int dim() const { return V->dim * W->dim; }
  int idx(int i, int j) const { return i * W->dim + j; }
  std::pair<int, int> unidx(int t) const { return {t / W->dim, t % W->dim}; }

  Weight weight(int t) const {
    auto [i, j] = unidx(t);
    Weight w = V->weights[i];
    for (int k = 0; k < (int)w.size(); ++k) w[k] += W->weights[j][k];
    return w;
  }

  // Delta X_c(a1, a2) = X_c(a1) (x) K_c^{1/2} + K_c^{-1/2} (x) X_c(a2),
  // applied to a sparse vector; lower = true applies F, false applies E.
  // For c = 0 the parameter factors are a (for E) and 1/a (for F).
  SpVec<K> apply_delta(int c, bool lower, const SpVec<K>& x) const;

  // the full matrix of apply_delta (column by column)
  SpMat<K> delta_matrix(int c, bool lower) const;
};

TensorCtx<RatZ> tensor_square_z(const RepModule& V);      // V(z) (x) V(1)
TensorCtx<Scalar> tensor_square_scalar(const RepModule& V, const Scalar& a1,
                                       const Scalar& a2);

// weight-graded positions of the tensor square
template <class K>
std::vector<int> weight_positions(const TensorCtx<K>& ctx, const Weight& w) {
  std::vector<int> pos;
  for (int t = 0; t < ctx.dim(); ++t)
    if (ctx.weight(t) == w) pos.push_back(t);
  return pos;
}

// classical singular vectors of a given weight: kernel of all Delta E_i,
// i in I, restricted to the weight block
template <class K>
std::vector<SpVec<K>> singular_vectors(const TensorCtx<K>& ctx, const Weight& lambda);

// closure of a singular seed under the Delta F_i (i in I unless with_affine),
// orthogonalized per weight; returns basis with norms
template <class K>
struct SubmoduleBasis {
  std::vector<SpVec<K>> vecs;
  std::vector<K> norms;
  // generation log: (color, source index) per vector after the seed
  std::vector<std::pair<int, int>> word;
};

template <class K>
SubmoduleBasis<K> generate_submodule(const TensorCtx<K>& ctx, const SpVec<K>& seed,
                                     bool with_affine = false, int dim_cap = -1);

// replays the generation word of `ref` from another seed (parallel copy)
template <class K>
SubmoduleBasis<K> generate_parallel(const TensorCtx<K>& ctx, const SubmoduleBasis<K>& ref,
                                    const SpVec<K>& seed);

// orthogonal projector onto the submodule: P = sum_w w w^T / (w, w)
template <class K>
SpMat<K> projector(const SubmoduleBasis<K>& basis, int dim);

// intertwiner copy map Theta_{ij}: k-th basis vector of `from` to k-th of `to`
template <class K>
SpMat<K> copy_map(const SubmoduleBasis<K>& to, const SubmoduleBasis<K>& from, int dim);

// ---- template implementations ----

template <class K>
SpVec<K> TensorCtx<K>::apply_delta(int c, bool lower, const SpVec<K>& x) const {
  const SpMat<Scalar>& XV = lower ? V->F[c] : V->E[c];
  const SpMat<Scalar>& XW = lower ? W->F[c] : W->E[c];
  K p1 = (c == 0) ? (lower ? inv(a1) : a1) : K(1);
  K p2 = (c == 0) ? (lower ? inv(a2) : a2) : K(1);
  SpVec<K> y;
  for (auto& [t, v] : x.entries()) {
    auto [i, j] = unidx(t);
    K kh = v * p1 * emb(Scalar::h_pow(W->kexp[c][j] / 2));
    for (auto& [i2, e] : XV.col(i).entries()) y.add_to(idx(i2, j), kh * emb(e));
    K kh2 = v * p2 * emb(Scalar::h_pow(-V->kexp[c][i] / 2));
    for (auto& [j2, e] : XW.col(j).entries()) y.add_to(idx(i, j2), kh2 * emb(e));
  }
  y.compact();
  return y;
}

template <class K>
SpMat<K> TensorCtx<K>::delta_matrix(int c, bool lower) const {
  SpMat<K> m(dim(), dim());
  for (int t = 0; t < dim(); ++t) m.set_col(t, apply_delta(c, lower, SpVec<K>::unit(t)));
  return m;
}

template <class K>
std::vector<SpVec<K>> singular_vectors(const TensorCtx<K>& ctx, const Weight& lambda) {
  auto pos = weight_positions(ctx, lambda);
  if (pos.empty()) return {};
  std::vector<SpVec<K>> rows;
  for (int i = 1; i <= ctx.V->rank(); ++i) {
    std::map<int, SpVec<K>> rowmap; // target index -> row over unknown columns
    for (int c = 0; c < (int)pos.size(); ++c) {
      SpVec<K> y = ctx.apply_delta(i, false, SpVec<K>::unit(pos[c]));
      for (auto& [t, v] : y.entries()) rowmap[t].add_to(c, v);
    }
    for (auto& [t, row] : rowmap) {
      row.compact();
      rows.push_back(std::move(row));
    }
  }
  auto null = nullspace_rows(std::move(rows), (int)pos.size());
  std::vector<SpVec<K>> out;
  for (auto& v : null) {
    SpVec<K> w;
    for (auto& [c, val] : v.entries()) w.add_to(pos[c], val);
    w.compact();
    out.push_back(std::move(w));
  }
  return out;
}

template <class K>
SubmoduleBasis<K> generate_submodule(const TensorCtx<K>& ctx, const SpVec<K>& seed,
                                     bool with_affine, int dim_cap) {
  SubmoduleBasis<K> basis;
  std::vector<K> inv_norms;
  std::map<Weight, std::vector<int>, WeightLess> by_weight;
  auto weight_of = [&](const SpVec<K>& v) { return ctx.weight(v.entries().front().first); };
  auto try_add = [&](SpVec<K> w, int color, int src) -> bool {
    if (w.is_zero()) return false;
    Weight wt = weight_of(w);
    for (int b : by_weight[wt]) {
      K c = dot(w, basis.vecs[b]);
      if (!rmx::is_zero(c)) w.axpy(-(c * inv_norms[b]), basis.vecs[b]);
    }
    if (w.is_zero()) return false;
    K n = dot(w, w);
    if (rmx::is_zero(n)) throw std::domain_error("generate_submodule: degenerate form");
    by_weight[wt].push_back((int)basis.vecs.size());
    basis.vecs.push_back(std::move(w));
    inv_norms.push_back(inv(n));
    basis.norms.push_back(std::move(n));
    if (src >= 0) basis.word.push_back({color, src});
    return true;
  };
  try_add(seed, 0, -1);
  int lo = with_affine ? 0 : 1;
  for (size_t k = 0; k < basis.vecs.size(); ++k) {
    for (int i = ctx.V->rank(); i >= lo; --i) {
      SpVec<K> w = ctx.apply_delta(i, true, basis.vecs[k]);
      try_add(std::move(w), i, (int)k);
      if (dim_cap > 0 && (int)basis.vecs.size() > dim_cap)
        throw std::runtime_error("generate_submodule: dimension cap exceeded");
    }
  }
  return basis;
}

template <class K>
SubmoduleBasis<K> generate_parallel(const TensorCtx<K>& ctx, const SubmoduleBasis<K>& ref,
                                    const SpVec<K>& seed) {
  SubmoduleBasis<K> basis;
  std::vector<K> inv_norms;
  std::map<Weight, std::vector<int>, WeightLess> by_weight;
  auto weight_of = [&](const SpVec<K>& v) { return ctx.weight(v.entries().front().first); };
  auto add = [&](SpVec<K> w) {
    if (w.is_zero()) throw std::domain_error("generate_parallel: copy degenerated");
    Weight wt = weight_of(w);
    for (int b : by_weight[wt]) {
      K c = dot(w, basis.vecs[b]);
      if (!rmx::is_zero(c)) w.axpy(-(c * inv_norms[b]), basis.vecs[b]);
    }
    if (w.is_zero()) throw std::domain_error("generate_parallel: copy degenerated");
    K n = dot(w, w);
    by_weight[wt].push_back((int)basis.vecs.size());
    basis.vecs.push_back(std::move(w));
    inv_norms.push_back(inv(n));
    basis.norms.push_back(std::move(n));
  };
  add(seed);
  for (auto& [color, src] : ref.word) add(ctx.apply_delta(color, true, basis.vecs[src]));
  basis.word = ref.word;
  return basis;
}

template <class K>
SpMat<K> projector(const SubmoduleBasis<K>& basis, int dim) {
  SpMat<K> p(dim, dim);
  for (size_t k = 0; k < basis.vecs.size(); ++k) {
    K ninv = inv(basis.norms[k]);
    for (auto& [j, vj] : basis.vecs[k].entries()) {
      K f = vj * ninv;
      for (auto& [i, vi] : basis.vecs[k].entries()) p.add_to(i, j, vi * f);
    }
  }
  p.compact();
  return p;
}

template <class K>
SpMat<K> copy_map(const SubmoduleBasis<K>& to, const SubmoduleBasis<K>& from, int dim) {
  if (to.vecs.size() != from.vecs.size()) throw std::logic_error("copy_map: size mismatch");
  SpMat<K> p(dim, dim);
  for (size_t k = 0; k < from.vecs.size(); ++k) {
    K ninv = inv(from.norms[k]);
    for (auto& [j, vj] : from.vecs[k].entries()) {
      K f = vj * ninv;
      for (auto& [i, vi] : to.vecs[k].entries()) p.add_to(i, j, vi * f);
    }
  }
  p.compact();
  return p;
}

} // namespace rmx
