#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rmx {

// Sparse vector: sorted (index, value) pairs, no zeros.
template <class K>
class SpVec {
public:
  using Entry = std::pair<int, K>;

  SpVec() = default;
  static SpVec unit(int i, const K& c = K(1)) {
    SpVec v;
    if (!rmx::is_zero(c)) v.e_.push_back({i, c});
    return v;
  }

  bool is_zero() const { return e_.empty(); }
  size_t nnz() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }

  K get(int i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i,
                               [](const Entry& a, int b) { return a.first < b; });
    return (it != e_.end() && it->first == i) ? it->second : K(0);
  }
  void add_to(int i, const K& c) {
    if (rmx::is_zero(c)) return;
    e_.push_back({i, c});
    dirty_ = true;
  }
  void compact() {
    if (dirty_) {
      normalize();
      dirty_ = false;
    }
  }

  SpVec& operator+=(const SpVec& o) {
    for (auto& e : o.e_) e_.push_back(e);
    normalize();
    return *this;
  }
  friend SpVec operator+(SpVec a, const SpVec& b) { a += b; return a; }
  friend SpVec operator-(const SpVec& a, const SpVec& b) {
    SpVec r = a;
    r.axpy(-K(1), b);
    return r;
  }
  friend SpVec operator*(const K& s, const SpVec& v) {
    SpVec r;
    if (rmx::is_zero(s)) return r;
    r.e_ = v.e_;
    for (auto& e : r.e_) e.second = s * e.second;
    r.normalize();
    return r;
  }
  void axpy(const K& s, const SpVec& v) { // *this += s * v
    if (rmx::is_zero(s)) return;
    for (auto& e : v.e_) e_.push_back({e.first, s * e.second});
    normalize();
  }
  friend bool operator==(const SpVec& a, const SpVec& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SpVec& a, const SpVec& b) { return !(a == b); }

  // coordinate dot product (no conjugation)
  friend K dot(const SpVec& a, const SpVec& b) {
    K s(0);
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first)
        ++i;
      else if (b.e_[j].first < a.e_[i].first)
        ++j;
      else {
        s += a.e_[i].second * b.e_[j].second;
        ++i;
        ++j;
      }
    }
    return s;
  }

  template <class F>
  auto map(F f) const {
    using K2 = decltype(f(std::declval<K>()));
    SpVec<K2> r;
    for (auto& e : e_) r.add_to(e.first, f(e.second));
    r.compact();
    return r;
  }

private:
  std::vector<Entry> e_;
  bool dirty_ = false;
  void normalize() {
    std::sort(e_.begin(), e_.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> out;
    out.reserve(e_.size());
    for (auto& e : e_) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(e);
    }
    e_.clear();
    for (auto& e : out)
      if (!rmx::is_zero(e.second)) e_.push_back(e);
  }
};

// Sparse matrix stored by columns (fast y = A x for sparse x).
template <class K>
class SpMat {
public:
  SpMat() : rows_(0), cols_(0) {}
  SpMat(int r, int c) : rows_(r), cols_(c), col_(c) {}
  static SpMat identity(int n) {
    SpMat m(n, n);
    for (int i = 0; i < n; ++i) m.add_to(i, i, K(1));
    m.compact();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t nnz() const {
    size_t n = 0;
    for (auto& c : col_) n += c.nnz();
    return n;
  }
  bool is_zero() const {
    for (auto& c : col_)
      if (!c.is_zero()) return false;
    return true;
  }

  const SpVec<K>& col(int j) const { return col_[j]; }
  SpVec<K>& col_mut(int j) { return col_[j]; }
  K get(int i, int j) const { return col_[j].get(i); }
  void add_to(int i, int j, const K& c) { col_[j].add_to(i, c); }
  void set_col(int j, SpVec<K> v) { col_[j] = std::move(v); }
  void compact() {
    for (auto& c : col_) c.compact();
  }

  friend SpMat operator+(const SpMat& a, const SpMat& b) {
    SpMat r = a;
    for (int j = 0; j < b.cols_; ++j) r.col_[j] += b.col_[j];
    return r;
  }
  friend SpMat operator-(const SpMat& a, const SpMat& b) {
    SpMat r = a;
    for (int j = 0; j < b.cols_; ++j) r.col_[j].axpy(-K(1), b.col_[j]);
    return r;
  }
  friend SpMat operator*(const K& s, const SpMat& m) {
    SpMat r(m.rows_, m.cols_);
    for (int j = 0; j < m.cols_; ++j) r.col_[j] = s * m.col_[j];
    return r;
  }
  friend SpMat operator*(const SpMat& a, const SpMat& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("SpMat: shape mismatch");
    SpMat r(a.rows_, b.cols_);
    for (int j = 0; j < b.cols_; ++j) r.col_[j] = a.apply(b.col_[j]);
    return r;
  }
  friend bool operator==(const SpMat& a, const SpMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int j = 0; j < a.cols_; ++j)
      if (!(a.col_[j] == b.col_[j])) return false;
    return true;
  }

  SpMat transpose() const {
    SpMat r(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
      for (auto& [i, v] : col_[j].entries()) r.add_to(j, i, v);
    r.compact();
    return r;
  }

  SpVec<K> apply(const SpVec<K>& x) const {
    SpVec<K> y;
    for (auto& [j, xv] : x.entries()) y.axpy(xv, col_[j]);
    return y;
  }

  template <class F>
  auto map(F f) const {
    using K2 = decltype(f(std::declval<K>()));
    SpMat<K2> r(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
      for (auto& [i, v] : col_[j].entries()) r.add_to(i, j, f(v));
    r.compact();
    return r;
  }

  friend SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int j = 0; j < a.cols_; ++j)
      for (auto& [i, av] : a.col_[j].entries())
        for (int l = 0; l < b.cols_; ++l)
          for (auto& [k, bv] : b.col_[l].entries())
            r.add_to(i * b.rows_ + k, j * b.cols_ + l, av * bv);
    r.compact();
    return r;
  }

private:
  int rows_, cols_;
  std::vector<SpVec<K>> col_;
};

// Gaussian elimination over a field: nullspace basis of the row system.
// Rows are given as sparse vectors over `cols` unknowns. Pivot rows are
// chosen shortest-first to limit fill-in.
template <class K>
std::vector<SpVec<K>> nullspace_rows(std::vector<SpVec<K>> rows, int cols) {
  using Row = std::vector<std::pair<int, K>>;
  std::vector<Row> work;
  for (auto& r : rows)
    if (!r.is_zero()) work.push_back(r.entries());

  std::vector<int> pivot_col;
  std::vector<Row> elim;

  auto axpy_row = [](Row& r, const K& s, const Row& v) {
    Row out;
    out.reserve(r.size() + v.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < v.size()) {
      if (j == v.size() || (i < r.size() && r[i].first < v[j].first))
        out.push_back(r[i++]);
      else if (i == r.size() || v[j].first < r[i].first) {
        K c = s * v[j].second;
        if (!rmx::is_zero(c)) out.push_back({v[j].first, c});
        ++j;
      } else {
        K c = r[i].second + s * v[j].second;
        if (!rmx::is_zero(c)) out.push_back({r[i].first, c});
        ++i;
        ++j;
      }
    }
    r = std::move(out);
  };
  auto find_col = [](const Row& r, int c) -> const K* {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const std::pair<int, K>& x, int cc) { return x.first < cc; });
    return (it != r.end() && it->first == c) ? &it->second : nullptr;
  };

  while (true) {
    int best = -1;
    for (int i = 0; i < (int)work.size(); ++i)
      if (!work[i].empty() && (best < 0 || work[i].size() < work[best].size())) best = i;
    if (best < 0) break;
    Row row = std::move(work[best]);
    work.erase(work.begin() + best);
    for (size_t e = 0; e < elim.size(); ++e) {
      if (const K* v = find_col(row, pivot_col[e])) {
        K f = -*v;
        axpy_row(row, f, elim[e]);
      }
    }
    if (row.empty()) continue;
    K pinv = inv(row.front().second);
    for (auto& e : row) e.second = pinv * e.second;
    int pc = row.front().first;
    for (size_t e = 0; e < elim.size(); ++e) {
      if (const K* v = find_col(elim[e], pc)) {
        K f = -*v;
        axpy_row(elim[e], f, row);
      }
    }
    pivot_col.push_back(pc);
    elim.push_back(std::move(row));
  }

  std::vector<bool> is_pivot(cols, false);
  for (int pc : pivot_col) is_pivot[pc] = true;
  std::vector<SpVec<K>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    SpVec<K> v;
    v.add_to(c, K(1));
    for (size_t e = 0; e < elim.size(); ++e)
      if (const K* w = find_col(elim[e], c)) v.add_to(pivot_col[e], -*w);
    v.compact();
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve the square dense linear system M x = b over a field.
template <class K>
std::vector<K> solve_dense(std::vector<std::vector<K>> m, std::vector<K> b) {
  int n = (int)m.size();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!rmx::is_zero(m[r][c])) {
        p = r;
        break;
      }
    if (p < 0) throw std::domain_error("solve_dense: singular system");
    std::swap(m[p], m[c]);
    std::swap(b[p], b[c]);
    K pinv = inv(m[c][c]);
    for (int j = c; j < n; ++j) m[c][j] = pinv * m[c][j];
    b[c] = pinv * b[c];
    for (int r = 0; r < n; ++r) {
      if (r == c || rmx::is_zero(m[r][c])) continue;
      K f = m[r][c];
      for (int j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
      b[r] = b[r] - f * b[c];
    }
  }
  return b;
}

} // namespace rmx
