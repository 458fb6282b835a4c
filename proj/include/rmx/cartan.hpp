#pragma once

#include "rmx/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace rmx {

// Weight in the fundamental-weight basis (index 0 = omega_1 coefficient).
using Weight = std::vector<int>;

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return a < b; }
};

enum class Series { A, B, C, D, E, F, G };

std::string series_name(Series s);
Series series_from_char(char c);

// Cartan data for one finite type, plus its untwisted affine extension.
// Node numbering follows the conventions used throughout this project:
//   A_r, B_r, C_r, D_r: standard chains (D_r: node r attached to r-2);
//   E6: chain 1-2-3-4-5 with 6 on node 3;
//   E7: chain 6-5-4-3-2-1 with 7 on node 4 (affine node attaches to 6);
//   E8: chain 1-2-3-4-5-6-7 with 8 on node 5;
//   F4: chain 4-3-2-1, nodes 3,4 long, 2,1 short (affine node on 4);
//   G2: node 1 short, node 2 long (affine node on 2).
class CartanData {
public:
  CartanData(Series s, int rank);

  Series series() const { return series_; }
  int rank() const { return r_; }
  std::string name() const { return series_name(series_) + std::to_string(r_); }

  int cartan(int i, int j) const { return C_[i][j]; }             // 1-based
  int sym(int i) const { return d_[i]; }                          // d_i, 1-based
  int b(int i, int j) const { return d_[i] * C_[i][j]; }          // (alpha_i, alpha_j)
  int max_d() const;

  // affine data, 0-based over nodes 0..r
  int cartan_aff(int i, int j) const { return Caff_[i][j]; }
  int sym_aff(int i) const { return daff_[i]; }
  int b_aff(int i, int j) const { return daff_[i] * Caff_[i][j]; }
  const std::vector<int>& marks() const { return marks_; }        // a_0..a_r

  // roots in simple-root coordinates (1-based colors stored 0-based inside)
  const std::vector<std::vector<int>>& positive_roots() const { return pos_roots_; }
  const std::vector<int>& highest_root_alpha() const { return theta_alpha_; }
  Weight highest_root() const; // omega-coords
  Weight fundamental(int i) const;   // omega_i
  Weight rho() const;
  Weight root_weight(const std::vector<int>& alpha_coords) const;

  // bilinear form with (alpha_i, alpha_j) = B_ij; arguments in omega-coords
  Rat inner(const Weight& a, const Weight& b) const;
  Rat casimir(const Weight& w) const; // (w, w + 2 rho)

  bool is_dominant(const Weight& w) const;
  Weight reflect(const Weight& w, int i) const; // s_i, i 1-based
  Weight dominantize(const Weight& w) const;
  int height2(const Weight& w) const; // 2*(height of w in the root lattice), integer

  Rat weyl_dim(const Weight& lambda) const;

  // multiplicities of the dominant weights of L_lambda (Freudenthal)
  std::map<Weight, long, WeightLess> dominant_multiplicities(const Weight& lambda) const;

  // decomposes a Weyl-invariant weight multiset, given by its dominant part,
  // into irreducibles; returns highest weight -> multiplicity
  std::map<Weight, long, WeightLess> decompose_dominant_part(
      std::map<Weight, long, WeightLess> dom) const;

private:
  Series series_;
  int r_;
  std::vector<std::vector<int>> C_, Caff_;
  std::vector<int> d_, daff_, marks_;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<int> theta_alpha_;
  std::vector<std::vector<Rat>> Cinv_; // C^{-1}

  void build_finite();
  void build_roots();
  void build_affine();
};

const CartanData& cartan_cache(Series s, int rank);

} // namespace rmx
