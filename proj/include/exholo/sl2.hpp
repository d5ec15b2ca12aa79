#pragma once

// Representations of sl(2)^k: irreducibles U_n, tensor products, weight
// decomposition, Clebsch-Gordan projections and branching.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "exholo/exact.hpp"

namespace exholo::sl2 {

using exact::Mat;
using exact::Scalar;

enum Generator : std::size_t { kE = 0, kF = 1, kH = 2 };

/// A module over k copies of sl(2), given by 3k action matrices.
class Sl2kModule {
 public:
  Sl2kModule() = default;
  /// Validates every bracket relation; throws UsageError on failure.
  Sl2kModule(std::size_t dim, std::vector<std::array<Mat, 3>> actions);
  /// The zero module structure (all factors act trivially).
  static Sl2kModule trivial(std::size_t k, std::size_t dim);

  std::size_t k() const { return actions_.size(); }
  std::size_t dim() const { return dim_; }
  const Mat& action(std::size_t factor, Generator g) const { return actions_.at(factor)[g]; }
  const std::vector<std::array<Mat, 3>>& actions() const { return actions_; }
  /// Flat list E_1,F_1,H_1,E_2,... for intertwiner computations.
  std::vector<Mat> generators() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::array<Mat, 3>> actions_;
};

/// U_n with weight basis v_0..v_n: H v_i = (n-2i) v_i, F v_i = v_{i+1},
/// E v_i = i(n+1-i) v_{i-1}.
Sl2kModule irrep(unsigned n);

/// U_{n1} (x) ... (x) U_{nk} over sl(2)^k.
Sl2kModule irrep_product(std::span<const unsigned> weights);

Sl2kModule external_tensor(const Sl2kModule& a, const Sl2kModule& b);
Sl2kModule internal_tensor(const Sl2kModule& a, const Sl2kModule& b);
Sl2kModule direct_sum(const Sl2kModule& a, const Sl2kModule& b);
/// Lambda^2 of a module, basis e_i ^ e_j for i < j in lexicographic order.
Sl2kModule antisymmetric_square(const Sl2kModule& m);
/// Target generator i acts as the sum of the slot actions assigned to i.
/// Targets receiving no slot act by zero.
Sl2kModule branch(const Sl2kModule& m, std::span<const std::size_t> assignment, std::size_t target_k);

struct IsotypicEntry {
  std::vector<unsigned> weights;
  std::size_t multiplicity = 0;
  friend bool operator==(const IsotypicEntry&, const IsotypicEntry&) = default;
};

/// Sorted lexicographically descending by weights.
using IsotypicList = std::vector<IsotypicEntry>;

IsotypicList decompose(const Sl2kModule& m);
std::size_t isotypic_dimension(const IsotypicList& list);
json to_json(const IsotypicList& list);

/// entry(t, i, j): coefficient of target basis vector t in the image of (source_i, source_j).
struct BilinearTensor {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Scalar> entries;
  bool symmetric = false;

  const Scalar& at(std::size_t t, std::size_t i, std::size_t j) const {
    return entries[(t * source_dim + i) * source_dim + j];
  }
  Scalar& at(std::size_t t, std::size_t i, std::size_t j) {
    return entries[(t * source_dim + i) * source_dim + j];
  }
  bool is_zero() const;
  /// +1 symmetric, -1 antisymmetric, 0 neither (zero tensor counts as both; reports +1)
  int symmetry_type() const;
};

/// The sl(2)-equivariant map U_n (x) U_n -> U_target (target 0 or 2), normalized
/// so that its first nonzero coefficient (target index, then source pair in
/// lexicographic order) is +1.
BilinearTensor clebsch_projection(unsigned n, unsigned target);

/// Max absolute defect of equivariance; zero iff the tensor is an intertwiner
/// from source (x) source to target.
bool is_equivariant(const BilinearTensor& t, const Sl2kModule& source, const Sl2kModule& target);

/// Basis of Hom_{sl(2)^k}(a, b) as dim_b x dim_a matrices.
std::vector<Mat> equivariant_maps(const Sl2kModule& a, const Sl2kModule& b);

/// Coordinates (E, F, H) of the image of the U_2 weight vector v_t under the
/// fixed intertwiner U_2 -> sl(2): v_0 -> E, v_1 -> -H, v_2 -> -2F.
std::array<Scalar, 3> u2_to_sl2(std::size_t t);

}  // namespace exholo::sl2
