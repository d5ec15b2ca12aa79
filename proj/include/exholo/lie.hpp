#pragma once

// Lie algebras as exact structure constants, their representations, and the
// certification toolkit built on top of kernel computations.

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exholo/exact.hpp"

namespace exholo::lie {

using exact::Mat;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

struct StructureConstant {
  std::size_t i, j, k;
  Scalar value;
};

/// [b_i, b_j] = sum_k c(i,j,k) b_k. Antisymmetry is a constructor invariant,
/// the Jacobi identity is not.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Entries are listed for i < j only; the (j,i) entries are filled by antisymmetry.
  LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& upper, std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);
  static LieAlgebra sl2();
  /// gl(n) on basis E_ab (index a*n + b), so a gl(n) element and its
  /// row-major flattened matrix share coordinates.
  static LieAlgebra gl(std::size_t n);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Scalar structure(std::size_t i, std::size_t j, std::size_t k) const;
  /// Nonzero c(i,j,k) for all ordered pairs.
  const std::vector<StructureConstant>& nonzeros() const { return nonzeros_; }

  Vec bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  /// ad x as a dim x dim matrix (columns are images of basis vectors).
  Mat ad(std::span<const Scalar> x) const;
  Mat ad_basis(std::size_t i) const;

  json to_json() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<StructureConstant> nonzeros_;
  // row-major by (i, j): list of (k, value)
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// rho(b_i) for every basis element; the bracket relation is checked at construction.
class Representation {
 public:
  Representation() = default;
  Representation(std::shared_ptr<const LieAlgebra> algebra, std::vector<Mat> actions);

  const LieAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& actions() const { return actions_; }
  const Mat& action(std::size_t i) const { return actions_.at(i); }
  Mat act(std::span<const Scalar> x) const;

  /// Representation of the subalgebra whose basis is the canonical basis of s.
  Representation restrict_to(std::shared_ptr<const LieAlgebra> sub, const Subspace& s) const;
  /// Image rho(L) as a subspace of row-major flattened dim x dim matrices.
  Subspace image() const;
  Subspace image_of(const Subspace& s) const;

  json to_json(const std::string& algebra_ref) const;

 private:
  std::shared_ptr<const LieAlgebra> algebra_;
  std::size_t dim_ = 0;
  std::vector<Mat> actions_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  Vec defect;
};

std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& l, std::size_t max_reports = 16);
bool satisfies_jacobi(const LieAlgebra& l);

Mat killing_form(const LieAlgebra& l);
bool is_semisimple(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);
Representation adjoint_rep(std::shared_ptr<const LieAlgebra> l);
Representation defining_rep_gl(std::size_t n);

std::size_t commutant_dimension(const Representation& r);
bool is_simple(const LieAlgebra& l);

/// Minimal centralizer dimension over the trial elements sum_i i*t^(i-1) b_i.
std::size_t rank(const LieAlgebra& l, std::size_t trial_budget = 25);

/// B symmetric (or antisymmetric) with rho(x)^T B + B rho(x) = 0 for all x.
std::vector<Mat> invariant_symmetric_forms(const Representation& r);
std::vector<Mat> invariant_antisymmetric_forms(const Representation& r);
/// The unique invariant symmetric form scaled so its first nonzero entry
/// (row-major) is +1; usage error unless the invariant space is one-dimensional.
Mat normalized_invariant_form(const Representation& r);
/// Vectors killed by every rho(b_i).
Subspace invariant_vectors(const Representation& r);

/// Multilinear map V^{(x)in_rank} -> V^{(x)out_rank}, out_rank in {0,1}.
/// entries indexed by (out, in_1, ..., in_q), row-major.
struct MultilinearTensor {
  std::size_t n = 0;
  std::size_t out_rank = 1;
  std::size_t in_rank = 2;
  Vec entries;
};

struct FixVector { Vec v; };
struct FixLine { Vec v; };
struct FixSubspace { Subspace w; };
struct FixTensor { MultilinearTensor t; };
using Constraint = std::variant<FixVector, FixLine, FixSubspace, FixTensor>;

/// The isotropy subalgebra of a constraint, in algebra coordinates; bracket
/// closure is verified before returning.
Subspace invariance_subalgebra(const Representation& r, const Constraint& c);

bool is_bracket_closed(const LieAlgebra& l, const Subspace& s);
/// Span of all brackets [x, y], x, y in s.
Subspace derived_span(const LieAlgebra& l, const Subspace& s);
/// {y : [s, y] ⊆ t} style check: true iff [a, b] ∈ target for basis elements.
bool brackets_into(const LieAlgebra& l, const Subspace& a, const Subspace& b, const Subspace& target);

/// Structure constants of the restriction to the canonical basis of s.
LieAlgebra subalgebra_from_subspace(const LieAlgebra& l, const Subspace& s);
/// Coordinates of the subspace `inner` relative to the canonical basis of `outer`.
Subspace relative_subspace(const Subspace& outer, const Subspace& inner);

/// Lookup on (dim, rank, simple) against the classification table; "unknown" otherwise.
std::string cartan_label(std::size_t dim, std::size_t rank, bool simple);

struct TypeSummary {
  std::size_t dim = 0;
  bool jacobi = false;
  std::size_t center_dim = 0;
  bool semisimple = false;
  bool simple = false;
  std::size_t rank = 0;
  std::string label = "unknown";
};

/// Runs the full identification pipeline (rank only for semisimple algebras).
TypeSummary summarize(const LieAlgebra& l);

}  // namespace exholo::lie
