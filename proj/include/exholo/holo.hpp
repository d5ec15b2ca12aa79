#pragma once

// The exceptional holonomy representations over so(7) = (2.1.1), g2 as a spinor
// annihilator, the reductive complement and its cross product, and the
// character-level triality and subalgebra-chain certificates.

#include <array>
#include <memory>
#include <optional>
#include <string>

#include "exholo/lie.hpp"
#include "exholo/report.hpp"
#include "exholo/sl2.hpp"
#include "exholo/symdec.hpp"

namespace exholo::holo {

using exact::Mat;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;
using report::Certificate;

/// A Z/2-graded module V0 (+) V1 of h (+) p: h acts blockwise through the given
/// sl(2)^k modules, p swaps the two summands.
struct GradedRepSpec {
  std::string name;
  std::shared_ptr<const symdec::SymmetricDecomposition> base;
  sl2::Sl2kModule v0;
  sl2::Sl2kModule v1;
};

struct GradedRep {
  lie::Representation rep;
  /// rho(p_a) = [[0, lambda*Phi10(a)], [Phi01(a), 0]]; lambda is pinned by the bracket relation.
  Scalar lambda;
  std::size_t dim0 = 0, dim1 = 0;
};

/// Solves for the off-diagonal p-action; throws CertificationError when a block
/// space is not one-dimensional, a diagonal block is allowed, or the system is inconsistent.
GradedRep solve_graded_rep(const GradedRepSpec& spec);

/// U_2 (+) U_1 (x) U_1 over (2.1.1).
GradedRepSpec vector_spec(std::shared_ptr<const symdec::SymmetricDecomposition> so7);
/// (U^1 (x) U^3) (+) (U^2 (x) U^4) branched along (A1, A2, A3) -> (A1, A1, A2, A3).
GradedRepSpec spin_spec(std::shared_ptr<const symdec::SymmetricDecomposition> so7);
/// The three modules (U^a (x) U^b) (+) (U^c (x) U^d) over (1.1.1.1), U^j a U_1 in slot j.
std::array<GradedRepSpec, 3> triality_specs(std::shared_ptr<const symdec::SymmetricDecomposition> so8);

/// Trilinear data of x × y on the 7-dimensional space: entries[(k*7 + i)*7 + j]
/// is the k-th coordinate of e_i × e_j.
struct CrossProduct {
  std::size_t n = 7;
  Vec entries;
  Mat form;  // the invariant quadratic form B
  Scalar lambda;  // B(x×y, x×y) = lambda (B(x,x)B(y,y) - B(x,y)^2)
  const Scalar& at(std::size_t k, std::size_t i, std::size_t j) const { return entries[(k * n + i) * n + j]; }
  Vec cross(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// The matrix of w -> x × w.
  Mat left(std::span<const Scalar> x) const;
  json to_json() const;
};

/// Everything the certificates of this module and of the quadric module share,
/// computed once.
struct HoloModel {
  std::shared_ptr<const symdec::SymmetricDecomposition> so7;
  std::shared_ptr<const lie::LieAlgebra> so7_algebra;
  GradedRep vec;   // 7-dimensional
  GradedRep spin;  // 8-dimensional
  Mat form7, form8;
  Vec spinor;                                   // the non-null spinor s
  std::string spinor_choice;                    // how s was chosen, for the certificate
  Subspace g2;                                  // inside so(7)
  std::shared_ptr<const lie::LieAlgebra> g2_algebra;
  Subspace complement;                          // Killing complement of g2 in so(7)
  Mat iota;                                     // V7 -> complement coordinates
  CrossProduct cross;
};

/// Builds the model; throws CertificationError if a structural step fails.
HoloModel build_model();

/// The first-nonzero-entry-normalized representative of a 1-dim intertwiner space.
Mat unique_intertwiner(std::span<const Mat> from, std::span<const Mat> to, const std::string& what);
/// Restriction of a representation of so(7) to a subalgebra given as a subspace.
lie::Representation restrict(const lie::Representation& r, const Subspace& s,
                             std::shared_ptr<const lie::LieAlgebra> sub = nullptr);

/// Non-null spinor: the first weight vector of nonzero norm, else the first e_i + e_j of nonzero norm.
std::pair<Vec, std::string> choose_non_null(const Mat& form);

Certificate representations_certificate(const HoloModel& m);
Certificate g2_certificate(const HoloModel& m);
Certificate cross_certificate(const HoloModel& m);
Certificate thm17_check(const HoloModel& m);
Certificate triality_checks();
Certificate rem14_checks();
Certificate cor15_chain(const HoloModel& m);

/// Exploratory: is span{(A, A, B)} (+) (U_3 (x) U_1-isotypic part of p) closed in (2.1.1)?
/// Reported only; no certificate depends on it.
Certificate diagonal_candidate(const HoloModel& m);

/// Label lookup extended by sl(2) = (3, 1, simple), used for the subalgebra chain.
std::string chain_label(const lie::LieAlgebra& l);

}  // namespace exholo::holo
