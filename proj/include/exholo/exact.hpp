#pragma once

// Exact rational linear algebra: the substrate every other module reduces to.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace exholo {

using json = nlohmann::ordered_json;

/// Raised for malformed calls (shape mismatches, bad arguments).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact identity that a certificate depends on fails.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exact {

/// Arbitrary-precision rational, always canonical (lowest terms, den > 0).
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// "num/den" in lowest terms, "3/1" for integers.
std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);
/// max(|num|, |den|)
mpz_class height(const Scalar& s);

/// Dense row-major matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat column(std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  Vec col_vec(std::size_t j) const;

  const std::vector<Scalar>& entries() const { return data_; }

  Mat transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  Scalar trace() const;

  Mat& operator+=(const Mat& other);
  Mat& operator-=(const Mat& other);
  Mat& operator*=(const Scalar& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, std::span<const Scalar> v);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat commutator(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
/// row-major flattening of a matrix into a vector of length rows*cols
Vec flatten(const Mat& m);
Mat unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vec row_times(std::span<const Scalar> v, const Mat& m);
bool is_zero(std::span<const Scalar> v);
Vec unit_vector(std::size_t n, std::size_t i);
Vec axpy(const Scalar& a, std::span<const Scalar> x, std::span<const Scalar> y);  // a*x + y

/// Determinant by cofactor expansion; intended for small oracles only.
Scalar det_cofactor(const Mat& m);
/// Determinant by fraction-free elimination.
Scalar det(const Mat& m);
Mat inverse(const Mat& m);

struct RrefResult {
  Mat reduced;  // zero rows removed
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form; fraction-free forward pass on primitive
/// integer rows, then exact back-substitution.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Sparse row with strictly increasing column indices.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Incremental sparse elimination for large stacked systems: rows are pushed
/// one at a time and reduced against the current semi-echelon basis.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  /// Returns true iff the row was independent of those already added.
  bool add(std::span<const Scalar> row);
  bool add(const SparseRow& row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == cols_; }

  /// Canonical RREF of the row space.
  RrefResult reduced() const;

 private:
  bool reduce_accumulator(std::size_t first_col);

  std::size_t cols_;
  std::vector<long> pivot_of_col_;
  std::vector<SparseRow> rows_;  // monic, leading entry is the pivot
  // scratch space reused across add() calls
  std::vector<Scalar> acc_;
  std::vector<char> touched_;
  std::vector<std::size_t> heap_;
};

class Subspace;
Subspace kernel_of(const RowReducer& reducer);

/// Subspace of Q^n stored as its unique RREF basis; equality is identity of bases.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(const Mat& rows);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace from_rref(RrefResult r, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row_vec(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  /// Coordinates in the canonical basis; throws if v is not in the subspace.
  Vec coordinates(std::span<const Scalar> v) const;
  /// Linear functionals vanishing on this subspace (rows).
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Mat& m);
Subspace row_space(const Mat& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, std::span<const Scalar> v);
bool is_subset(const Subspace& a, const Subspace& b);
/// Image of s under the row-vector map v -> v * m.
Subspace image(const Subspace& s, const Mat& m);

struct SolveResult {
  std::optional<Vec> particular;   // a*x = b
  Subspace kernel;                 // kernel(a)
  std::optional<Vec> certificate;  // y*a = 0, y.b != 0 when unsolvable
};

SolveResult solve(const Mat& a, std::span<const Scalar> b);

/// Basis of {T : T*a_i = b_i*T for all i}, T of shape dim_b x dim_a, as a
/// subspace of row-major flattened matrices.
Subspace intertwiner_space(std::span<const Mat> a_gens, std::span<const Mat> b_gens);
std::vector<Mat> intertwiners(std::span<const Mat> a_gens, std::span<const Mat> b_gens);

json to_json(const Scalar& s);
json to_json(const Mat& m);
json to_json(const Subspace& s);
json to_json(std::span<const Scalar> v);
Mat mat_from_json(const json& j);

}  // namespace exact
}  // namespace exholo
