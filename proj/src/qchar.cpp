#include "rmx/qchar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rmx {

void LMonomial::normalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  t_.clear();
  for (auto& t : out)
    if (t.second) t_.push_back(t);
}

int LMonomial::power(int color, int a) const {
  int32_t k = key(color, a);
  for (auto& t : t_)
    if (t.first == k) return t.second;
  return 0;
}

LMonomial LMonomial::operator*(const LMonomial& o) const {
  LMonomial r;
  r.t_ = t_;
  r.t_.insert(r.t_.end(), o.t_.begin(), o.t_.end());
  r.normalize();
  return r;
}

LMonomial LMonomial::inverse() const {
  LMonomial r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

LMonomial LMonomial::shifted(int a) const {
  LMonomial r = *this;
  for (auto& t : r.t_) t.first += a;
  // keys stay sorted under a uniform shift within a color, but colors mix:
  // shifting preserves color field because |a| stays far below 2^15
  std::sort(r.t_.begin(), r.t_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  return r;
}

bool LMonomial::dominant() const {
  for (auto& t : t_)
    if (t.second < 0) return false;
  return true;
}

bool LMonomial::i_dominant(int color) const {
  for (auto& t : t_)
    if (key_color(t.first) == color && t.second < 0) return false;
  return true;
}

std::vector<std::pair<int, int>> LMonomial::part(int color) const {
  std::vector<std::pair<int, int>> r;
  for (auto& t : t_)
    if (key_color(t.first) == color) r.push_back({key_shift(t.first), t.second});
  return r;
}

Weight LMonomial::weight(const CartanData& cd) const {
  Weight w(cd.rank(), 0);
  for (auto& t : t_) w[key_color(t.first) - 1] += t.second;
  return w;
}

std::string LMonomial::str() const {
  if (t_.empty()) return "1";
  std::ostringstream os;
  for (auto& t : t_) {
    os << key_color(t.first) << "_" << key_shift(t.first);
    if (t.second != 1) os << "^{" << t.second << "}";
    os << " ";
  }
  std::string s = os.str();
  s.pop_back();
  return s;
}

LMonomial LMonomial::parse(const std::string& s) {
  LMonomial m;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == '*')) ++i;
  };
  skip();
  if (s.substr(i) == "1" || s.empty()) return m;
  while (i < s.size()) {
    skip();
    if (i >= s.size()) break;
    if (!std::isdigit((unsigned char)s[i])) throw std::domain_error("monomial parse: color expected in '" + s + "'");
    int color = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) color = color * 10 + (s[i++] - '0');
    if (i >= s.size() || s[i] != '_') throw std::domain_error("monomial parse: '_' expected in '" + s + "'");
    ++i;
    bool neg = false;
    if (s[i] == '-') {
      neg = true;
      ++i;
    }
    int a = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) a = a * 10 + (s[i++] - '0');
    if (neg) a = -a;
    int pow = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      if (s[i] != '{') throw std::domain_error("monomial parse: '{' expected");
      ++i;
      bool pn = false;
      if (s[i] == '-') {
        pn = true;
        ++i;
      }
      int p = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) p = p * 10 + (s[i++] - '0');
      if (s[i] != '}') throw std::domain_error("monomial parse: '}' expected");
      ++i;
      pow = pn ? -p : p;
    }
    m.t_.push_back({key(color, a), pow});
  }
  m.normalize();
  return m;
}

LMonomial a_root(int color, int a, const CartanData& cd) {
  int di = cd.sym(color);
  LMonomial m = LMonomial::y(color, a - di) * LMonomial::y(color, a + di);
  for (int j = 1; j <= cd.rank(); ++j) {
    if (j == color) continue;
    int c = cd.cartan(j, color);
    // factors Y_{j, q^{a+s}}^{-1} for s = -c-1, -c-3, ..., -(-c-1)
    for (int k = 0; k < -c; ++k) {
      int s = (-c - 1) - 2 * k;
      m = m * LMonomial::y(j, a + s, -1);
    }
  }
  return m;
}

std::vector<LMonomial> QCharacter::dominant_monomials() const {
  std::vector<LMonomial> r;
  for (auto& [m, c] : t_)
    if (m.dominant()) r.push_back(m);
  std::sort(r.begin(), r.end());
  return r;
}

QCharacter QCharacter::shifted(int a) const {
  QCharacter r;
  for (auto& [m, c] : t_) r.add(m.shifted(a), c);
  return r;
}

QCharacter operator*(const QCharacter& a, const QCharacter& b) {
  QCharacter r;
  for (auto& [m1, c1] : a.t_)
    for (auto& [m2, c2] : b.t_) r.add(m1 * m2, c1 * c2);
  return r;
}

QCharacter operator+(const QCharacter& a, const QCharacter& b) {
  QCharacter r = a;
  for (auto& [m, c] : b.t_) r.add(m, c);
  return r;
}

long QCharacter::zero_weight_terms(const CartanData& cd) const {
  long s = 0;
  Weight zero(cd.rank(), 0);
  for (auto& [m, c] : t_)
    if (m.weight(cd) == zero) s += c;
  return s;
}

std::map<Weight, long, WeightLess> QCharacter::dominant_weight_multiset(const CartanData& cd) const {
  std::map<Weight, long, WeightLess> r;
  for (auto& [m, c] : t_) {
    Weight w = m.weight(cd);
    if (cd.is_dominant(w)) r[w] += c;
  }
  return r;
}

bool QCharacter::weight_multiset_weyl_invariant(const CartanData& cd) const {
  std::map<Weight, long, WeightLess> full;
  for (auto& [m, c] : t_) full[m.weight(cd)] += c;
  for (auto& [w, c] : full) {
    for (int i = 1; i <= cd.rank(); ++i) {
      auto it = full.find(cd.reflect(w, i));
      if (it == full.end() || it->second != c) return false;
    }
  }
  return true;
}

// ---- FM algorithm ----

namespace {

// block character of the irreducible sl2 loop character with the given
// i-dominant part; each element is the multiset of A^{-1} spectral positions
// applied to the head, with a multiplicity
struct BlockElem {
  std::vector<int> a_positions;
  long coeff;
};

std::vector<BlockElem> sl2_block(const std::vector<std::pair<int, int>>& ipart, int di) {
  // multiset of shifts
  std::map<int, int> ms;
  for (auto& [a, p] : ipart) {
    if (p <= 0) throw std::logic_error("sl2_block: not i-dominant");
    ms[a] += p;
  }
  // greedy maximal segments with step 2*di
  std::vector<std::vector<int>> segments;
  while (!ms.empty()) {
    int start = ms.begin()->first;
    std::vector<int> seg;
    int a = start;
    while (true) {
      auto it = ms.find(a);
      if (it == ms.end()) break;
      seg.push_back(a);
      if (--it->second == 0) ms.erase(it);
      a += 2 * di;
    }
    segments.push_back(seg);
  }
  // segment string characters: j of the rightmost entries flipped; flip of
  // position a contributes A^{-1} at a + di
  std::vector<BlockElem> acc{{{}, 1}};
  for (auto& seg : segments) {
    int k = (int)seg.size();
    std::vector<BlockElem> out;
    for (auto& base : acc)
      for (int j = 0; j <= k; ++j) {
        BlockElem e = base;
        for (int t = k - j; t < k; ++t) e.a_positions.push_back(seg[t] + di);
        std::sort(e.a_positions.begin(), e.a_positions.end());
        out.push_back(std::move(e));
      }
    acc = std::move(out);
  }
  // merge equal position multisets
  std::map<std::vector<int>, long> merged;
  for (auto& e : acc) merged[e.a_positions] += e.coeff;
  std::vector<BlockElem> res;
  for (auto& [pos, c] : merged) res.push_back({pos, c});
  return res;
}

} // namespace

QCharacter fm_character(const LMonomial& m_plus, const CartanData& cd, long cap) {
  if (!m_plus.dominant()) throw std::domain_error("fm_character: highest monomial not dominant");
  if (cap <= 0) cap = 3000000;

  struct Pending {
    long req[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0}; // per-color requirement
  };
  using PendMap = std::unordered_map<LMonomial, Pending, LMonomialHash>;

  QCharacter chi;
  // monomials to finalize grouped by depth below the top weight
  std::map<int, PendMap> by_depth;
  Weight top_w = m_plus.weight(cd);
  auto depth_of = [&](const LMonomial& m) {
    Weight w = m.weight(cd);
    Weight d(cd.rank());
    for (int i = 0; i < cd.rank(); ++i) d[i] = top_w[i] - w[i];
    return cd.height2(d);
  };

  by_depth[0][m_plus].req[0] = 1; // color slot 0 reserved for the seed
  long processed = 0;

  while (!by_depth.empty()) {
    auto it = by_depth.begin();
    PendMap level = std::move(it->second);
    by_depth.erase(it);
    for (auto& [m, pend] : level) {
      long mult = 0;
      for (int i = 0; i <= cd.rank(); ++i) mult = std::max(mult, pend.req[i]);
      if (mult == 0) continue;
      chi.add(m, mult);
      if ((long)chi.distinct() > cap) throw std::runtime_error("fm_character: cap exceeded");
      if (++processed > cap) throw std::runtime_error("fm_character: cap exceeded");
      if (m.dominant() && !(m == m_plus))
        throw std::runtime_error("fm_character: second dominant monomial (module not special)");
      for (int i = 1; i <= cd.rank(); ++i) {
        if (!m.i_dominant(i)) continue;
        auto ip = m.part(i);
        if (ip.empty()) continue;
        auto block = sl2_block(ip, cd.sym(i));
        for (auto& e : block) {
          if (e.a_positions.empty()) continue; // head
          LMonomial mm = m;
          for (int a : e.a_positions) mm = mm * a_root(i, a, cd).inverse();
          int dep = depth_of(mm);
          by_depth[dep][mm].req[i] = std::max(by_depth[dep][mm].req[i], mult * e.coeff);
        }
      }
    }
  }
  return chi;
}

namespace {
// the spectral shifts that can occur in chi, padded for the A-shift scan
std::pair<int, int> shift_range(const QCharacter& chi, int pad) {
  int lo = 1 << 20, hi = -(1 << 20);
  for (auto& [m, c] : chi.terms())
    for (auto& t : m.terms()) {
      lo = std::min(lo, LMonomial::key_shift(t.first));
      hi = std::max(hi, LMonomial::key_shift(t.first));
    }
  if (lo > hi) return {0, 0};
  return {lo - pad, hi + pad};
}
} // namespace

namespace {
bool elim_check(const QCharacter& chi, const LMonomial& m, int color, int b,
                const CartanData& cd, int lo, int hi) {
  if (!m.i_dominant(color) || !chi.contains(m) || chi.multiplicity(m) != 1) return false;
  int di = cd.sym(color);
  // (1) power of Y_{i, q^{b - d_i}} in m not greater than that of Y_{i, q^{b + d_i}}
  if (m.power(color, b - di) > m.power(color, b + di)) return false;
  LMonomial m_minus = m * a_root(color, b, cd).inverse();
  // (4) multiplicity of m_minus at most one
  if (chi.multiplicity(m_minus) > 1) return false;
  // (2) m A_{i,c} not in chi for any c
  for (int c = lo; c <= hi; ++c)
    if (chi.contains(m * a_root(color, c, cd))) return false;
  // (3) m_minus A_{j,c} not in chi unless (j, c) = (i, b)
  for (int j = 1; j <= cd.rank(); ++j)
    for (int c = lo; c <= hi; ++c) {
      if (j == color && c == b) continue;
      if (chi.contains(m_minus * a_root(j, c, cd))) return false;
    }
  return true;
}
} // namespace

bool eliminate_dominant(const QCharacter& chi, const LMonomial& m, int color, int b,
                        const CartanData& cd) {
  auto [lo, hi] = shift_range(chi, 2 * cd.max_d() + 2);
  return elim_check(chi, m, color, b, cd, lo, hi);
}

bool find_elimination_witness(const QCharacter& chi, const LMonomial& m_minus,
                              const CartanData& cd, LMonomial* m_out, int* color_out,
                              int* b_out) {
  auto [lo, hi] = shift_range(chi, 2 * cd.max_d() + 2);
  for (int i = 1; i <= cd.rank(); ++i)
    for (int b = lo; b <= hi; ++b) {
      LMonomial m = m_minus * a_root(i, b, cd);
      if (!chi.contains(m)) continue;
      if (elim_check(chi, m, i, b, cd, lo, hi)) {
        if (m_out) *m_out = m;
        if (color_out) *color_out = i;
        if (b_out) *b_out = b;
        return true;
      }
    }
  return false;
}

std::vector<PoleRow> predict_poles(const CartanData& cd, bool with_decompositions) {
  LMonomial top = LMonomial::y(1, 0);
  long dim = cd.weyl_dim(cd.fundamental(1)).get_num().get_si();
  if (cd.series() == Series::E && cd.rank() == 8) dim += 1; // trivial summand
  QCharacter chi0 = fm_character(top, cd, 10 * dim);
  auto [lo, hi] = shift_range(chi0, 0);
  int amin = -(hi - lo) - 2 * cd.max_d() - 2;
  std::vector<PoleRow> rows;
  for (int a = amin; a <= -1; ++a) {
    QCharacter prod = chi0.shifted(a) * chi0;
    auto dom = prod.dominant_monomials();
    LMonomial tophead = top.shifted(a) * top;
    if (dom.size() <= 1) continue;
    PoleRow row;
    row.exponent = -a;
    row.sub_head = tophead;
    for (auto& d : dom)
      if (!(d == tophead)) row.quot_heads.push_back(d);
    if (with_decompositions) {
      // certify the split: every extra dominant monomial is eliminated from
      // the submodule character, which is then computed by the recursion
      for (auto& d : row.quot_heads)
        if (!find_elimination_witness(prod, d, cd))
          throw std::runtime_error("predict_poles: no elimination witness at q^" +
                                   std::to_string(row.exponent));
      QCharacter sub = fm_character(row.sub_head, cd, 10 * dim * dim);
      QCharacter quot;
      for (auto& d : row.quot_heads) quot = quot + fm_character(d, cd, 10 * dim * dim);
      if (!(sub + quot == prod))
        throw std::runtime_error("predict_poles: split characters do not sum to the product");
      row.sub_terms = sub.total();
      row.quot_terms = quot.total();
      row.sub_decomp = cd.decompose_dominant_part(sub.dominant_weight_multiset(cd));
      row.quot_decomp = cd.decompose_dominant_part(quot.dominant_weight_multiset(cd));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const PoleRow& a, const PoleRow& b) { return a.exponent < b.exponent; });
  return rows;
}

std::vector<std::pair<LMonomial, long>> parse_character_ordered(const std::string& text) {
  std::vector<std::pair<LMonomial, long>> out;
  std::string cur;
  auto flush = [&] {
    // trim
    size_t b = cur.find_first_not_of(" \t\n");
    if (b == std::string::npos) {
      cur.clear();
      return;
    }
    size_t e = cur.find_last_not_of(" \t\n");
    std::string s = cur.substr(b, e - b + 1);
    cur.clear();
    long mult = 1;
    size_t star = s.find('*');
    // multiplicity prefix "k*" only when everything before '*' is digits
    if (star != std::string::npos) {
      bool digits = star > 0;
      for (size_t i = 0; i < star; ++i)
        if (!std::isdigit((unsigned char)s[i])) digits = false;
      if (digits) {
        mult = std::stol(s.substr(0, star));
        s = s.substr(star + 1);
      }
    }
    out.push_back({LMonomial::parse(s), mult});
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+') {
      flush();
      continue;
    }
    if (c == '\n') {
      cur += ' ';
      continue;
    }
    cur += c;
  }
  flush();
  return out;
}

QCharacter parse_character(const std::string& text) {
  QCharacter chi;
  for (auto& [m, c] : parse_character_ordered(text)) chi.add(m, c);
  return chi;
}

} // namespace rmx
