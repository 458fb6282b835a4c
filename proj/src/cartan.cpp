#include "rmx/cartan.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace rmx {

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
  }
  return "?";
}

Series series_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Series::A;
    case 'B': case 'b': return Series::B;
    case 'C': case 'c': return Series::C;
    case 'D': case 'd': return Series::D;
    case 'E': case 'e': return Series::E;
    case 'F': case 'f': return Series::F;
    case 'G': case 'g': return Series::G;
  }
  throw std::domain_error("unknown series");
}

CartanData::CartanData(Series s, int rank) : series_(s), r_(rank) {
  build_finite();
  build_roots();
  build_affine();
}

void CartanData::build_finite() {
  auto bad = [&] { throw std::domain_error("unsupported type/rank"); };
  int r = r_;
  C_.assign(r + 1, std::vector<int>(r + 1, 0));
  d_.assign(r + 1, 1);
  for (int i = 1; i <= r; ++i) C_[i][i] = 2;
  auto edge = [&](int i, int j) { C_[i][j] = C_[j][i] = -1; };
  switch (series_) {
    case Series::A:
      if (r < 1) bad();
      for (int i = 1; i < r; ++i) edge(i, i + 1);
      break;
    case Series::B:
      if (r < 2) bad();
      for (int i = 1; i < r; ++i) edge(i, i + 1);
      C_[r][r - 1] = -2;
      for (int i = 1; i < r; ++i) d_[i] = 2;
      d_[r] = 1;
      break;
    case Series::C:
      if (r < 2) bad();
      for (int i = 1; i < r; ++i) edge(i, i + 1);
      C_[r - 1][r] = -2;
      for (int i = 1; i < r; ++i) d_[i] = 1;
      d_[r] = 2;
      break;
    case Series::D:
      if (r < 4) bad();
      for (int i = 1; i < r - 1; ++i) edge(i, i + 1);
      edge(r - 2, r);
      break;
    case Series::E:
      if (r == 6) {
        for (int i = 1; i < 5; ++i) edge(i, i + 1);
        edge(3, 6);
      } else if (r == 7) {
        edge(6, 5); edge(5, 4); edge(4, 3); edge(3, 2); edge(2, 1); edge(4, 7);
      } else if (r == 8) {
        for (int i = 1; i < 7; ++i) edge(i, i + 1);
        edge(5, 8);
      } else
        bad();
      break;
    case Series::F:
      if (r != 4) bad();
      edge(4, 3); edge(2, 1);
      C_[2][3] = -2;
      C_[3][2] = -1;
      d_[1] = d_[2] = 1;
      d_[3] = d_[4] = 2;
      break;
    case Series::G:
      if (r != 2) bad();
      C_[1][2] = -3;
      C_[2][1] = -1;
      d_[1] = 1;
      d_[2] = 3;
      break;
  }
  // sanity: B = DC symmetric
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      if (d_[i] * C_[i][j] != d_[j] * C_[j][i]) throw std::logic_error("B not symmetric");

  // C^{-1} by Gaussian elimination over Q
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(2 * r, Rat(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) m[i][j] = Rat(C_[i + 1][j + 1]);
    m[i][r + i] = 1;
  }
  for (int c = 0; c < r; ++c) {
    int p = c;
    while (rmx::is_zero(m[p][c])) ++p;
    std::swap(m[p], m[c]);
    Rat pin = Rat(1) / m[c][c];
    for (int j = 0; j < 2 * r; ++j) m[c][j] *= pin;
    for (int i = 0; i < r; ++i) {
      if (i == c) continue;
      Rat f = m[i][c];
      if (rmx::is_zero(f)) continue;
      for (int j = 0; j < 2 * r; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Cinv_.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) Cinv_[i][j] = m[i][r + j];
}

void CartanData::build_roots() {
  // closure of simple roots under simple reflections; alpha-coordinates
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int i = 1; i <= r_; ++i) {
    std::vector<int> a(r_, 0);
    a[i - 1] = 1;
    all.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    auto g = queue.back();
    queue.pop_back();
    for (int i = 1; i <= r_; ++i) {
      int pair = 0; // <g, alpha_i^vee> = (C g)_i
      for (int j = 0; j < r_; ++j) pair += C_[i][j + 1] * g[j];
      auto h = g;
      h[i - 1] -= pair;
      if (all.insert(h).second) queue.push_back(h);
    }
  }
  for (auto& a : all) {
    bool pos = true;
    for (int c : a)
      if (c < 0) pos = false;
    if (pos) pos_roots_.push_back(a);
  }
  int maxd = max_d();
  int best = -1, bh = -1;
  for (int k = 0; k < (int)pos_roots_.size(); ++k) {
    auto& a = pos_roots_[k];
    long norm = 0;
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j) norm += (long)a[i] * a[j] * d_[i + 1] * C_[i + 1][j + 1];
    if (norm != 2l * maxd) continue;
    int h = 0;
    for (int c : a) h += c;
    if (h > bh) {
      bh = h;
      best = k;
    }
  }
  theta_alpha_ = pos_roots_[best];
}

int CartanData::max_d() const {
  int m = 1;
  for (int i = 1; i <= r_; ++i) m = std::max(m, d_[i]);
  return m;
}

void CartanData::build_affine() {
  int r = r_;
  Caff_.assign(r + 1, std::vector<int>(r + 1, 0));
  daff_.assign(r + 1, 1);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) Caff_[i][j] = C_[i][j];
  Caff_[0][0] = 2;
  // alpha_0 = delta - theta; (alpha_0, alpha_j) = -(theta, alpha_j)
  long tt = 0; // (theta, theta)
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) tt += (long)theta_alpha_[i] * theta_alpha_[j] * b(i + 1, j + 1);
  daff_[0] = (int)(tt / 2);
  for (int i = 1; i <= r; ++i) daff_[i] = d_[i];
  for (int j = 1; j <= r; ++j) {
    long ta = 0; // (theta, alpha_j)
    for (int i = 0; i < r; ++i) ta += (long)theta_alpha_[i] * b(i + 1, j);
    if ((-2 * ta) % tt != 0 || (-2 * ta) % (2l * d_[j]) != 0)
      throw std::logic_error("affine Cartan entries not integral");
    Caff_[0][j] = (int)(-2 * ta / tt);
    Caff_[j][0] = (int)(-ta / d_[j]);
  }
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      if (daff_[i] * Caff_[i][j] != daff_[j] * Caff_[j][i])
        throw std::logic_error("affine B not symmetric");
  // marks: theta = sum_i a_i alpha_i gives a_i for i >= 1; a_0 = 1 untwisted
  marks_.assign(r + 1, 1);
  for (int i = 1; i <= r; ++i) marks_[i] = theta_alpha_[i - 1];
  for (int i = 0; i <= r; ++i) {
    long s = 0;
    for (int j = 0; j <= r; ++j) s += (long)Caff_[i][j] * marks_[j];
    if (s != 0) throw std::logic_error("affine marks: C~ a^t != 0");
  }
}

Weight CartanData::highest_root() const { return root_weight(theta_alpha_); }

Weight CartanData::fundamental(int i) const {
  Weight w(r_, 0);
  w[i - 1] = 1;
  return w;
}

Weight CartanData::rho() const { return Weight(r_, 1); }

Weight CartanData::root_weight(const std::vector<int>& a) const {
  Weight w(r_, 0);
  for (int k = 1; k <= r_; ++k) {
    int s = 0;
    for (int j = 1; j <= r_; ++j) s += C_[k][j] * a[j - 1];
    w[k - 1] = s;
  }
  return w;
}

Rat CartanData::inner(const Weight& a, const Weight& b) const {
  Rat s(0);
  for (int i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    Rat ci(0);
    for (int j = 0; j < r_; ++j) ci += Cinv_[i][j] * Rat(b[j]);
    s += Rat(a[i]) * Rat(d_[i + 1]) * ci;
  }
  return s;
}

Rat CartanData::casimir(const Weight& w) const {
  Weight w2 = w;
  for (int i = 0; i < r_; ++i) w2[i] += 2;
  return inner(w, w2);
}

bool CartanData::is_dominant(const Weight& w) const {
  for (int c : w)
    if (c < 0) return false;
  return true;
}

Weight CartanData::reflect(const Weight& w, int i) const {
  Weight v = w;
  int wi = w[i - 1];
  if (wi == 0) return v;
  for (int k = 1; k <= r_; ++k) v[k - 1] -= wi * C_[k][i];
  return v;
}

Weight CartanData::dominantize(const Weight& w) const {
  Weight v = w;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 1; i <= r_; ++i)
      if (v[i - 1] < 0) {
        v = reflect(v, i);
        again = true;
      }
  }
  return v;
}

int CartanData::height2(const Weight& w) const {
  Rat s(0);
  for (int i = 0; i < r_; ++i) {
    Rat ci(0);
    for (int j = 0; j < r_; ++j) ci += Cinv_[i][j] * Rat(w[j]);
    s += ci;
  }
  // scaled by the lcm of C^{-1} denominators so the result is integral
  Int lcm(1);
  for (auto& row : Cinv_)
    for (auto& e : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
  Rat t = s * Rat(lcm);
  if (t.get_den() != 1) throw std::logic_error("height2: unexpected denominator");
  return (int)t.get_num().get_si();
}

Rat CartanData::weyl_dim(const Weight& lambda) const {
  Weight lr = lambda;
  for (auto& c : lr) ++c;
  Rat dim(1);
  Weight rho_w = rho();
  for (auto& a : pos_roots_) {
    Weight aw = root_weight(a);
    dim *= inner(lr, aw) / inner(rho_w, aw);
  }
  return dim;
}

std::map<Weight, long, WeightLess> CartanData::dominant_multiplicities(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::domain_error("dominant_multiplicities: lambda not dominant");
  std::set<Weight> all;
  std::vector<Weight> queue{lambda};
  all.insert(lambda);
  while (!queue.empty()) {
    Weight w = queue.back();
    queue.pop_back();
    for (int i = 1; i <= r_; ++i) {
      int k = w[i - 1];
      Weight v = w;
      for (int step = 0; step < k; ++step) {
        for (int t = 1; t <= r_; ++t) v[t - 1] -= C_[t][i];
        if (all.insert(v).second) queue.push_back(v);
      }
    }
  }
  std::vector<Weight> dom;
  for (auto& w : all)
    if (is_dominant(w)) dom.push_back(w);
  std::sort(dom.begin(), dom.end(), [&](const Weight& a, const Weight& b) {
    return height2(a) > height2(b);
  });

  std::map<Weight, long, WeightLess> mult;
  auto lookup = [&](const Weight& w) -> long {
    Weight d = dominantize(w);
    auto it = mult.find(d);
    return it == mult.end() ? 0 : it->second;
  };
  std::vector<Weight> pos_w;
  for (auto& a : pos_roots_) pos_w.push_back(root_weight(a));

  Rat clr = casimir(lambda);
  for (auto& mu : dom) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rat denom = clr - casimir(mu);
    Rat num(0);
    for (auto& aw : pos_w) {
      for (int k = 1;; ++k) {
        Weight w = mu;
        for (int i = 0; i < r_; ++i) w[i] += k * aw[i];
        long m = lookup(w);
        if (m == 0) break;
        num += Rat(2) * Rat(m) * inner(w, aw);
      }
    }
    Rat res = num / denom;
    if (res.get_den() != 1) throw std::logic_error("Freudenthal: non-integer multiplicity");
    mult[mu] = res.get_num().get_si();
  }
  return mult;
}

std::map<Weight, long, WeightLess> CartanData::decompose_dominant_part(
    std::map<Weight, long, WeightLess> dom) const {
  std::map<Weight, long, WeightLess> out;
  while (true) {
    for (auto it = dom.begin(); it != dom.end();)
      it = it->second == 0 ? dom.erase(it) : std::next(it);
    if (dom.empty()) break;
    auto best = dom.begin();
    for (auto it = dom.begin(); it != dom.end(); ++it)
      if (height2(it->first) > height2(best->first)) best = it;
    Weight lam = best->first;
    long m = best->second;
    if (m < 0) throw std::domain_error("decompose: negative multiplicity (not a character)");
    out[lam] += m;
    for (auto& [w, mm] : dominant_multiplicities(lam)) dom[w] -= m * mm;
  }
  return out;
}

const CartanData& cartan_cache(Series s, int rank) {
  static std::map<std::pair<int, int>, CartanData*> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair((int)s, rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, new CartanData(s, rank)).first;
  return *it->second;
}

} // namespace rmx
