#pragma once

#include "rmx/scalar.hpp"

#include <string>
#include <vector>

namespace rmx::tables {

// Reference character listings in the project notation, keyed by
// "A1".."A4", "B2", "B3", "C2", "C3", "D4", "E6", "E7", "E8", "F4", "G2",
// "G2fun2" (second fundamental of G2), "A2ad" (adjoint of A2).
// The listing order fixes the basis order of the modules.
const std::string& printed_character(const std::string& key);

// ---- singular-vector index sets and coordinates (appendix data) ----

using Pair = std::pair<int, int>; // 1-based basis indices

// E6, L_{omega_5} in the tensor square: 27 sets, the 5 pairs with i < j;
// the mirror (j, i) sits at position 11 - pos.
const std::vector<std::vector<Pair>>& e6_omega5_sets();

// E7, L_{omega_6}: sets 28..63 (6 pairs each, i < j; mirrors at 13 - pos).
const std::vector<std::vector<Pair>>& e7_omega6_sets_middle();
// E7 zero-weight coordinates: rows s = 64..70, the 28 values eps_{i, 57-i};
// the remaining 28 follow from eps_{ji} = bar(eps_{ij}).
const std::vector<std::vector<Scalar>>& e7_omega6_zero_rows();
// E7 singlet coordinates p_i^q, i = 1..28 (p_i = -bar(p_{57-i}) beyond).
const std::vector<Scalar>& e7_p_vector();

// F4, L_{omega_1}: sets s = 1..12 (6 pairs i < j, mirrored at 13 - pos) and
// the matching coordinates mu_{ij}; zero-weight rows s = 13..14 are handled
// separately (28-term sets).
const std::vector<std::vector<Pair>>& f4_omega1_sets();
const std::vector<std::vector<Scalar>>& f4_omega1_coords();
// the two zero-weight rows: 15 values for pairs (1,26)..(13,14),(13,13),(14,14)
const std::vector<std::vector<Scalar>>& f4_omega1_zero_rows();
// F4, L_{omega_4}: sets s = 1..12 (3 pairs i < j, mirrored at 7 - pos)
const std::vector<std::vector<Pair>>& f4_omega4_sets();
// coordinates for s = 13..24 on the sets I^{omega_1}_{s-12}
const std::vector<std::vector<Scalar>>& f4_omega4_mid_coords();
// zero-weight rows s = 25..28 (15 values each, same pair layout as omega_1)
const std::vector<std::vector<Scalar>>& f4_omega4_zero_rows();
// F4 singlet: 13 values p_{i, 27-i}, i = 1..13 (then p_{13,13} = p_{14,14} = 1,
// p_{ji} = bar(p_{ij}))
const std::vector<Scalar>& f4_p_vector();

// G2, L_{omega_1}: sets s = 1..7 except s = 4 (2 pairs i < j, mirror at 5 - pos)
const std::vector<std::vector<Pair>>& g2_omega1_sets();
const std::vector<std::vector<Scalar>>& g2_omega1_coords();
// G2 singlet values p_1..p_7
const std::vector<Scalar>& g2_p_vector();

// E8: the omega_7 singular vector: pairs (i, j) with coefficient (-q)^{7 - min(i,j)}
const std::vector<Pair>& e8_omega7_pairs();

// E8 zero-weight band arrows: (color, from, to, coefficient), 1-based indices
struct Arrow {
  int color, from, to;
  Scalar coeff;
};
const std::vector<Arrow>& e8_zero_block_arrows();

// F4 printed module diagram arrows (the full 26-dim module)
const std::vector<Arrow>& f4_module_arrows();
// G2 printed module chain
const std::vector<Arrow>& g2_module_arrows();

// E8 affine lowering column: F_0 v_1-side coefficients; entries (row, coeff)
// of E_0(1) columns are derived in rep.cpp from this list
const std::vector<std::pair<int, Scalar>>& e8_e0_column();

} // namespace rmx::tables
