#pragma once

#include "rmx/cartan.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace rmx {

// Monomial in the variables Y_{i, q^a}: sorted (key, power) pairs with
// key = (color << 16) | (a + 0x8000). Spectral parameters are integer
// powers of q throughout.
class LMonomial {
public:
  using Term = std::pair<int32_t, int32_t>;

  LMonomial() = default;
  static LMonomial y(int color, int a, int power = 1) {
    LMonomial m;
    if (power) m.t_.push_back({key(color, a), power});
    return m;
  }
  static int32_t key(int color, int a) { return (color << 16) | (a + 0x8000); }
  static int key_color(int32_t k) { return k >> 16; }
  static int key_shift(int32_t k) { return (k & 0xffff) - 0x8000; }

  bool is_one() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  int power(int color, int a) const;

  LMonomial operator*(const LMonomial& o) const;
  LMonomial inverse() const;
  // adds `a` to every spectral index
  LMonomial shifted(int a) const;

  bool dominant() const;
  bool i_dominant(int color) const;
  // the Y_{i,.} part as (shift, power) pairs, all powers of this color
  std::vector<std::pair<int, int>> part(int color) const;

  Weight weight(const CartanData& cd) const;

  friend bool operator==(const LMonomial& a, const LMonomial& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LMonomial& a, const LMonomial& b) { return !(a == b); }
  friend bool operator<(const LMonomial& a, const LMonomial& b) { return a.t_ < b.t_; }

  size_t hash() const {
    size_t h = 146527;
    for (auto& t : t_) h = h * 1099511628211ull ^ (size_t)(t.first * 2654435761u + t.second);
    return h;
  }

  std::string str() const;                  // paper notation: 1_0, 2_3^{-1}, ...
  static LMonomial parse(const std::string& s);

private:
  std::vector<Term> t_;
  void normalize();
};

struct LMonomialHash {
  size_t operator()(const LMonomial& m) const { return m.hash(); }
};

// simple l-root A_{i, q^a} expanded in the Y variables
LMonomial a_root(int color, int a, const CartanData& cd);

// q-character: monomial multiset with multiplicities
class QCharacter {
public:
  using Map = std::unordered_map<LMonomial, long, LMonomialHash>;

  QCharacter() = default;

  const Map& terms() const { return t_; }
  long multiplicity(const LMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
  }
  long total() const { // term count with multiplicity
    long s = 0;
    for (auto& [m, c] : t_) s += c;
    return s;
  }
  size_t distinct() const { return t_.size(); }
  void add(const LMonomial& m, long c) {
    if (!c) return;
    auto it = t_.find(m);
    if (it == t_.end())
      t_[m] = c;
    else {
      it->second += c;
      if (!it->second) t_.erase(it);
    }
  }
  bool contains(const LMonomial& m) const { return t_.count(m) > 0; }

  std::vector<LMonomial> dominant_monomials() const;
  QCharacter shifted(int a) const;
  friend QCharacter operator*(const QCharacter& a, const QCharacter& b);
  friend QCharacter operator+(const QCharacter& a, const QCharacter& b);
  friend bool operator==(const QCharacter& a, const QCharacter& b) { return a.t_ == b.t_; }

  long zero_weight_terms(const CartanData& cd) const;
  // dominant part of the weight multiset (for classical decomposition)
  std::map<Weight, long, WeightLess> dominant_weight_multiset(const CartanData& cd) const;
  // full weight multiset is Weyl invariant (sanity for characters)
  bool weight_multiset_weyl_invariant(const CartanData& cd) const;

private:
  Map t_;
};

// Frenkel-Mukhin recursion for a special module with highest monomial m_plus.
// Throws if `cap` distinct monomials is exceeded, or if a second dominant
// monomial shows up (module not special).
QCharacter fm_character(const LMonomial& m_plus, const CartanData& cd, long cap = 0);

// Combinatorial test certifying that m_minus = m * A_{i, q^b}^{-1} cannot be
// a monomial of the character `chi` (typically a product character bounding
// chi_q(V) from above). Returns true when all four conditions hold.
bool eliminate_dominant(const QCharacter& chi, const LMonomial& m, int color, int b,
                        const CartanData& cd);

// searches a witness (m, i, b) eliminating m_minus from chi; returns false if
// no witness certifies the elimination
bool find_elimination_witness(const QCharacter& chi, const LMonomial& m_minus,
                              const CartanData& cd, LMonomial* m_out = nullptr,
                              int* color_out = nullptr, int* b_out = nullptr);

struct PoleRow {
  int exponent;                     // pole at z = q^exponent
  LMonomial sub_head;               // Drinfeld monomial of the submodule (a = q^0)
  std::vector<LMonomial> quot_heads;
  std::map<Weight, long, WeightLess> sub_decomp, quot_decomp; // classical pieces
  long sub_terms = 0, quot_terms = 0;
};

// Pole positions of R(z) on the tensor square of the first fundamental
// module, with submodule/quotient Drinfeld data and classical decompositions.
std::vector<PoleRow> predict_poles(const CartanData& cd, bool with_decompositions = true);

// parses a full character listing "m1 + m2 + 2*m3 + ..." (also accepts
// newlines); used for the printed tables
QCharacter parse_character(const std::string& text);
std::vector<std::pair<LMonomial, long>> parse_character_ordered(const std::string& text);

} // namespace rmx
