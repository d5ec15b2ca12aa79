#pragma once

// Quadratic spaces of the holonomy representations, isotropic planes, the
// isotropy computations relating the quadrics Q^5, Q^6 and the isotropic
// Grassmannians, the space of formal curvature tensors with prescribed
// holonomy, and the pointwise integrability obstruction.

#include <optional>
#include <string>
#include <vector>

#include "exholo/holo.hpp"

namespace exholo::quadric {

using exact::Mat;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using report::Certificate;

/// A representation together with its normalized invariant symmetric form.
struct QuadraticSpace {
  lie::Representation rep;
  Mat form;
  /// Algebra indices of a Cartan subalgebra acting diagonally on the standard basis.
  std::vector<std::size_t> cartan;

  std::size_t dim() const { return rep.dim(); }
  Scalar pair(std::span<const Scalar> x, std::span<const Scalar> y) const;
  bool is_isotropic(const Subspace& s) const;
  /// {v : B(v, w) = 0 for w in s}
  Subspace orthocomplement(const Subspace& s) const;
};

/// Requires a one-dimensional space of invariant symmetric forms (UsageError
/// otherwise) and asserts nondegeneracy (CertificationError).
QuadraticSpace quadratic_space(lie::Representation r, std::vector<std::size_t> cartan = {});
/// Cartan indices H_1, ..., H_k of a symmetric decomposition with k sl(2) factors.
std::vector<std::size_t> cartan_indices(const symdec::SymmetricDecomposition& sd);

struct NullCatalogue {
  /// Standard basis indices of weight vectors of nonzero weight (all null).
  std::vector<std::size_t> null_weight_vectors;
  /// Greedy isotropic planes assembled in basis order: planes[k-1] has dimension k.
  std::vector<Subspace> planes;
};

NullCatalogue null_basis_points(const QuadraticSpace& q);
/// The standard isotropic k-plane; throws CertificationError if unavailable.
Subspace standard_isotropic_plane(const QuadraticSpace& q, std::size_t k);

/// The adopted candidate W(v) = {w : (v × w) ∧ v = 0}.
Subspace cross_plane(const holo::CrossProduct& cross, std::span<const Scalar> v);
/// {w : v × w = 0}.
Subspace cross_kernel(const holo::CrossProduct& cross, std::span<const Scalar> v);
/// The l-submodule generated by v under the given action matrices.
Subspace cyclic_submodule(std::span<const Mat> actions, std::span<const Scalar> v);
/// All distinct isotropic l-invariant planes of dimension k generated by a single
/// vector among e_i, e_i ± e_j.
std::vector<Subspace> invariant_isotropic_planes(const QuadraticSpace& q, std::span<const Mat> actions,
                                                 std::size_t k);

/// The isotropic 3-plane attached to a null vector v of V7. The candidate
/// formula is used when it yields an isotropic 3-plane containing v; otherwise
/// W(v) is the unique l(v)-invariant isotropic 3-plane, l(v) the line isotropy
/// of v in g2. The kernel of x -> v × x is computed alongside for comparison.
struct NullPlane {
  Vec v;
  Subspace l;                            // line isotropy of v in g2 (inside so(7))
  Subspace formula;                      // {w : (v × w) ∧ v = 0}
  bool formula_ok = false;
  std::vector<Subspace> invariant_planes;  // l-invariant isotropic 3-planes found by the search
  Subspace kernel;                       // {w : v × w = 0}
  Subspace w;                            // the resolved plane (dimension 0 if unresolved)
  std::string route;
};

NullPlane null_plane(const holo::HoloModel& m, const QuadraticSpace& q7, std::span<const Scalar> v);

/// All data of the three isotropy cases, shared with the obstruction suite.
struct IsotropyData {
  QuadraticSpace q7, q8;
  // case i
  Subspace w0, l1, s0, l2;
  // case ii
  NullPlane p0;  // at the highest-weight null vector v0
  Vec v0;
  Subspace l;   // inside so(7), contained in g2
  Subspace w;   // W(v0) in V7
  // case iii
  Mat j;        // g2-intertwiner V7 -> V8
  Subspace s;   // the isotropic 4-plane in V8
  Vec a0;
  Scalar c;
};

IsotropyData isotropy_data(const holo::HoloModel& m);

Certificate prop21_case_i(const holo::HoloModel& m, const IsotropyData& d);
Certificate prop21_case_ii(const holo::HoloModel& m, const IsotropyData& d);
Certificate prop21_case_iii(const holo::HoloModel& m, const IsotropyData& d);

/// R(x, y) = sum_{a,b} C_ab B(X_a x, y) X_b with C symmetric, X_a a basis of hol,
/// subject to the first Bianchi identity.
struct CurvatureSpace {
  const QuadraticSpace* q = nullptr;
  Subspace hol;
  std::vector<Mat> generators;   // X_a = rho(hol basis a)
  std::vector<Mat> beta;         // beta_a(x, y) = B(X_a x, y), as the matrix X_a^T B
  std::size_t unknowns = 0;      // m(m+1)/2
  std::size_t bianchi_rank = 0;
  Subspace kernel;               // in coordinates C_ab, a <= b (row-major upper triangle)
  std::vector<Mat> coefficients; // symmetric C for every kernel basis vector

  std::size_t dim() const { return kernel.dim(); }
  /// R_r(x, y) z
  Vec apply(std::size_t r, std::span<const Scalar> x, std::span<const Scalar> y, std::span<const Scalar> z) const;
  /// Symmetric 21x21-style matrix M[(i<j),(k<l)] = B(R(e_i, e_j) e_k, e_l).
  Mat pair_matrix(std::size_t r) const;
};

CurvatureSpace curvature_space(const QuadraticSpace& q, const Subspace& hol);

struct ContainmentResult {
  bool holds = true;
  std::size_t tensors = 0, triples = 0;
  std::size_t failing = 0;  // basis tensors with at least one violating triple
  json witness;             // first violation (lowest tensor index); null when the containment holds
};

/// R(x, y) z in plane for every basis tensor and every basis triple of plane.
ContainmentResult containment(const CurvatureSpace& k, const Subspace& plane, std::size_t jobs = 1);

/// R0(x, y) z = B(y, z) x - B(x, z) y: the constant-curvature tensor, which preserves every subspace.
bool constant_curvature_preserves(const QuadraticSpace& q, const Subspace& plane);

Certificate curvature_certificate(const holo::HoloModel& m, const IsotropyData& d);
Certificate obstruction_certificate(const holo::HoloModel& m, const IsotropyData& d, std::size_t jobs = 1);

/// The curvature basis of g2 on V7 as symmetric matrices over the pairs i < j.
json export_curvature(const CurvatureSpace& k);

}  // namespace exholo::quadric
