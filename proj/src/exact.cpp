#include "exholo/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace exholo::exact {

std::string to_string(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar parse_scalar(const std::string& text) {
  Scalar s;
  if (s.set_str(text, 10) != 0 || s.get_den() == 0) throw UsageError("not a rational: " + text);
  s.canonicalize();
  return s;
}

mpz_class height(const Scalar& s) {
  mpz_class n = abs(s.get_num());
  return n > s.get_den() ? n : s.get_den();
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw UsageError("Mat: entry count mismatch");
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("Mat: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("Mat::from_rows: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Mat Mat::column(std::span<const Scalar> v) {
  Mat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vec Mat::col_vec(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

Scalar Mat::trace() const {
  Scalar t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Mat& Mat::operator+=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("Mat +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw UsageError("Mat -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw UsageError("Mat *: shape mismatch");
  Mat c(a.rows_, b.cols_);
  Scalar t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  return c;
}

Vec operator*(const Mat& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw UsageError("Mat * vec: shape mismatch");
  Vec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Scalar& x = a(ia, ja);
      if (sgn(x) == 0) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          if (sgn(b(ib, jb)) != 0) k(ia * b.rows() + ib, ja * b.cols() + jb) = x * b(ib, jb);
    }
  return k;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw UsageError("vstack: column mismatch");
  std::vector<Scalar> e(a.entries());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Mat(a.rows() + b.rows(), a.cols(), std::move(e));
}

Vec flatten(const Mat& m) { return m.entries(); }

Mat unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols) {
  return Mat(rows, cols, Vec(v.begin(), v.end()));
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw UsageError("dot: length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vec row_times(std::span<const Scalar> v, const Mat& m) {
  if (v.size() != m.rows()) throw UsageError("row_times: shape mismatch");
  Vec out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[j] += v[i] * m(i, j);
  }
  return out;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Vec axpy(const Scalar& a, std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw UsageError("axpy: length mismatch");
  Vec out(y.begin(), y.end());
  if (sgn(a) == 0) return out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) out[i] += a * x[i];
  return out;
}

Scalar det_cofactor(const Mat& m) {
  if (m.rows() != m.cols()) throw UsageError("det_cofactor: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Scalar term = m(0, j) * det_cofactor(minor);
    if (j % 2) d -= term;
    else d += term;
  }
  return d;
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (sgn(x) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : row)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(std::span<const Scalar> row) {
  mpz_class l = 1;
  for (const auto& x : row)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntRow out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) out[j] = row[j].get_num() * (l / row[j].get_den());
  make_primitive(out);
  return out;
}

// row_i := p*row_i - f*row_r, then primitive
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col) {
  mpz_class p = pivot_row[col];
  mpz_class f = target[col];
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), f.get_mpz_t());
  p /= g;
  f /= g;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (sgn(target[j]) != 0) target[j] *= p;
    if (sgn(pivot_row[j]) != 0) target[j] -= f * pivot_row[j];
  }
  make_primitive(target);
}

}  // namespace

RrefResult rref(const Mat& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(integer_row(m.row(i)));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    // smallest-height nonzero candidate, lowest row index on ties
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (sgn(rows[i][col]) != 0) eliminate(rows[i], rows[r], col);
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);

  // back-substitution, still on primitive integer rows
  for (std::size_t k = r; k-- > 0;)
    for (std::size_t i = 0; i < k; ++i)
      if (sgn(rows[i][pivots[k]]) != 0) eliminate(rows[i], rows[k], pivots[k]);

  Mat out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& p = rows[i][pivots[i]];
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(rows[i][j]) != 0) {
        out(i, j) = Scalar(rows[i][j], p);
        out(i, j).canonicalize();
      }
  }
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Mat& m) {
  RowReducer red(m.cols());
  for (std::size_t i = 0; i < m.rows() && !red.full(); ++i) red.add(m.row(i));
  return red.rank();
}

Scalar det(const Mat& m) {
  if (m.rows() != m.cols()) throw UsageError("det: not square");
  const std::size_t n = m.rows();
  Mat a = m;
  Scalar d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Scalar f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse: not square");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw UsageError("inverse: singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------- RowReducer

RowReducer::RowReducer(std::size_t cols)
    : cols_(cols), pivot_of_col_(cols, -1), acc_(cols), touched_(cols, 0) {}

bool RowReducer::add(std::span<const Scalar> row) {
  if (row.size() != cols_) throw UsageError("RowReducer: row length mismatch");
  SparseRow s;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (sgn(row[j]) != 0) s.emplace_back(j, row[j]);
  return add(s);
}

bool RowReducer::add(const SparseRow& row) {
  if (full() || row.empty()) return false;
  heap_.clear();
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw UsageError("RowReducer: column out of range");
    acc_[c] += v;
    if (!touched_[c]) {
      touched_[c] = 1;
      heap_.push_back(c);
    }
  }
  std::make_heap(heap_.begin(), heap_.end(), std::greater<>());
  return reduce_accumulator(0);
}

bool RowReducer::reduce_accumulator(std::size_t) {
  std::vector<std::size_t> all_touched(heap_);
  std::size_t lead = cols_;
  Scalar t;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    std::size_t c = heap_.back();
    heap_.pop_back();
    if (sgn(acc_[c]) == 0) continue;
    long p = pivot_of_col_[c];
    if (p < 0) {
      lead = c;
      break;
    }
    Scalar f = acc_[c];
    for (const auto& [col, val] : rows_[static_cast<std::size_t>(p)]) {
      if (!touched_[col]) {
        touched_[col] = 1;
        heap_.push_back(col);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        all_touched.push_back(col);
      }
      t = f * val;
      acc_[col] -= t;
    }
  }

  bool independent = lead < cols_;
  if (independent) {
    SparseRow fresh;
    fresh.emplace_back(lead, Scalar(1));
    std::vector<std::size_t> rest;
    for (std::size_t c : heap_)
      if (sgn(acc_[c]) != 0) rest.push_back(c);
    std::sort(rest.begin(), rest.end());
    Scalar inv = 1 / acc_[lead];
    for (std::size_t c : rest) fresh.emplace_back(c, acc_[c] * inv);
    pivot_of_col_[lead] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(fresh));
  }
  for (std::size_t c : all_touched) {
    acc_[c] = 0;
    touched_[c] = 0;
  }
  heap_.clear();
  return independent;
}

RrefResult RowReducer::reduced() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });

  // fully reduce, highest pivot first, so every row used for substitution is final
  std::vector<SparseRow> done(rows_.size());
  std::vector<Scalar> acc(cols_);
  for (std::size_t k = order.size(); k-- > 0;) {
    const SparseRow& src = rows_[order[k]];
    std::vector<std::size_t> cols;
    for (const auto& [c, v] : src) {
      acc[c] = v;
      cols.push_back(c);
    }
    for (const auto& [c, v] : src) {
      if (c == src.front().first) continue;
      long q = pivot_of_col_[c];
      if (q < 0 || sgn(acc[c]) == 0) continue;
      Scalar f = acc[c];
      for (const auto& [c2, v2] : done[static_cast<std::size_t>(q)]) {
        if (sgn(acc[c2]) == 0) cols.push_back(c2);
        acc[c2] -= f * v2;
      }
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    SparseRow out;
    for (std::size_t c : cols) {
      if (sgn(acc[c]) != 0) out.emplace_back(c, acc[c]);
      acc[c] = 0;
    }
    done[order[k]] = std::move(out);
  }

  Mat m(rows_.size(), cols_);
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const SparseRow& r = done[order[i]];
    pivots.push_back(r.front().first);
    for (const auto& [c, v] : r) m(i, c) = v;
  }
  return {std::move(m), std::move(pivots)};
}

Subspace kernel_of(const RowReducer& reducer) {
  auto r = reducer.reduced();
  const std::size_t n = reducer.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  // kernel vectors e_f - sum_i R[i][f] e_{p_i}; fed through a reducer to reach canonical form
  RowReducer k(n);
  for (std::size_t f = n; f-- > 0;) {
    if (is_pivot[f]) continue;
    SparseRow v;
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      if (sgn(r.reduced(i, f)) != 0) v.emplace_back(r.pivots[i], -r.reduced(i, f));
    v.emplace_back(f, Scalar(1));
    k.add(v);
  }
  return Subspace::from_rref(k.reduced(), n);
}

// ------------------------------------------------------------ Subspace

Subspace Subspace::full(std::size_t n) {
  std::vector<std::size_t> pivots(n);
  std::iota(pivots.begin(), pivots.end(), 0);
  return from_rref({Mat::identity(n), std::move(pivots)}, n);
}

Subspace Subspace::span(const Mat& rows) {
  RowReducer red(rows.cols());
  for (std::size_t i = 0; i < rows.rows() && !red.full(); ++i) red.add(rows.row(i));
  return from_rref(red.reduced(), rows.cols());
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  RowReducer red(ambient);
  for (const auto& v : vectors) {
    if (red.full()) break;
    red.add(v);
  }
  return from_rref(red.reduced(), ambient);
}

Subspace Subspace::from_rref(RrefResult r, std::size_t ambient) {
  Subspace s(ambient);
  if (r.reduced.rows() > 0) s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw UsageError("Subspace::contains: ambient mismatch");
  Vec rest(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar f = rest[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) rest[j] -= f * basis_(i, j);
  }
  return is_zero(rest);
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw UsageError("Subspace::coordinates: vector not in subspace");
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  return kernel(basis_);
}

Subspace kernel(const Mat& m) {
  auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (std::size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, n);
}

Subspace row_space(const Mat& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw UsageError("intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  Mat constraints = vstack(a.annihilator().basis(), b.annihilator().basis());
  if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
  return kernel(constraints);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw UsageError("sum: ambient mismatch");
  Mat stacked = vstack(a.basis(), b.basis());
  if (stacked.rows() == 0) return Subspace::zero(a.ambient_dim());
  return Subspace::span(stacked);
}

bool equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw UsageError("equal: ambient mismatch");
  return a == b;
}

bool contains(const Subspace& s, std::span<const Scalar> v) { return s.contains(v); }

bool is_subset(const Subspace& a, const Subspace& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!b.contains(a.basis().row(i))) return false;
  return true;
}

Subspace image(const Subspace& s, const Mat& m) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(row_times(s.basis().row(i), m));
  return Subspace::span(out, m.cols());
}

SolveResult solve(const Mat& a, std::span<const Scalar> b) {
  if (a.rows() != b.size()) throw UsageError("solve: shape mismatch");
  SolveResult res;
  res.kernel = kernel(a);
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) {
    Subspace left = kernel(a.transpose());
    for (std::size_t i = 0; i < left.dim(); ++i)
      if (sgn(dot(left.basis().row(i), b)) != 0) {
        res.certificate = left.vector(i);
        break;
      }
    return res;
  }
  Vec x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
  res.particular = std::move(x);
  return res;
}

Subspace intertwiner_space(std::span<const Mat> a_gens, std::span<const Mat> b_gens) {
  if (a_gens.size() != b_gens.size()) throw UsageError("intertwiner_space: generator count mismatch");
  if (a_gens.empty()) throw UsageError("intertwiner_space: no generators");
  const std::size_t da = a_gens[0].rows();
  const std::size_t db = b_gens[0].rows();
  RowReducer red(da * db);

  // diagonal pairs first: their equations are single-entry and prune quickly
  std::vector<std::size_t> order(a_gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    bool dx = a_gens[x].is_diagonal() && b_gens[x].is_diagonal();
    bool dy = a_gens[y].is_diagonal() && b_gens[y].is_diagonal();
    return dx && !dy;
  });

  for (std::size_t g : order) {
    const Mat& A = a_gens[g];
    const Mat& B = b_gens[g];
    if (A.rows() != da || A.cols() != da || B.rows() != db || B.cols() != db)
      throw UsageError("intertwiner_space: inconsistent generator shapes");
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> a_cols(da), b_rows(db);
    for (std::size_t m = 0; m < da; ++m)
      for (std::size_t c = 0; c < da; ++c)
        if (sgn(A(m, c)) != 0) a_cols[c].emplace_back(m, A(m, c));
    for (std::size_t r = 0; r < db; ++r)
      for (std::size_t m = 0; m < db; ++m)
        if (sgn(B(r, m)) != 0) b_rows[r].emplace_back(m, B(r, m));

    for (std::size_t r = 0; r < db && !red.full(); ++r)
      for (std::size_t c = 0; c < da && !red.full(); ++c) {
        // (T A - B T)[r][c]
        SparseRow row;
        for (const auto& [m, v] : a_cols[c]) row.emplace_back(r * da + m, v);
        for (const auto& [m, v] : b_rows[r]) row.emplace_back(m * da + c, -v);
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseRow merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
          else merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
        red.add(merged);
      }
  }
  return kernel_of(red);
}

std::vector<Mat> intertwiners(std::span<const Mat> a_gens, std::span<const Mat> b_gens) {
  Subspace s = intertwiner_space(a_gens, b_gens);
  const std::size_t da = a_gens[0].rows();
  const std::size_t db = b_gens[0].rows();
  std::vector<Mat> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(unflatten(s.basis().row(i), db, da));
  return out;
}

// ---------------------------------------------------------------- JSON

json to_json(const Scalar& s) { return to_string(s); }

json to_json(std::span<const Scalar> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json to_json(const Mat& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = to_json(std::span<const Scalar>(m.entries()));
  return j;
}

json to_json(const Subspace& s) {
  json j = to_json(s.basis());
  j["cols"] = s.ambient_dim();
  return j;
}

Mat mat_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<Scalar> e;
  for (const auto& x : j.at("entries")) e.push_back(parse_scalar(x.get<std::string>()));
  return Mat(rows, cols, std::move(e));
}

}  // namespace exholo::exact
