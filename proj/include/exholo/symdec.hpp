#pragma once

// Symmetric decompositions h (+) p with h = sl(2)^k and p = U_{n1} (x) ... (x) U_{nk}:
// the bracket assembled from the h-action and the Clebsch-Gordan tensor eta,
// the first Bianchi identity on its coefficients, and the classification search.

#include <memory>
#include <string>
#include <vector>

#include "exholo/lie.hpp"
#include "exholo/sl2.hpp"

namespace exholo::symdec {

using exact::Mat;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

/// Non-increasing parts, each >= 1, with even sum.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Sorts into canonical (non-increasing) order; odd sum or a zero part is a usage error.
  explicit MultiIndex(std::vector<unsigned> parts);
  /// "n1.n2...nk"
  static MultiIndex parse(const std::string& text);

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t k() const { return parts_.size(); }
  std::size_t p_dim() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> parts_;
};

/// Bracket data of h (+) p. The h basis is (E_j, F_j, H_j) at indices 3j, 3j+1, 3j+2;
/// the p basis follows, in the Kronecker order of U_{n1} (x) ... (x) U_{nk}.
struct SymmetricDecomposition {
  MultiIndex mi;
  std::size_t h_dim = 0;
  sl2::Sl2kModule p_module;
  Vec coefficients;
  /// eta(x, y) in h coordinates: target_dim = 3k, source_dim = dim p.
  sl2::BilinearTensor eta;
  std::shared_ptr<const lie::LieAlgebra> algebra;

  std::size_t p_dim() const { return p_module.dim(); }
  /// alpha(h_g) acting on p, g in 0..3k-1.
  const Mat& alpha(std::size_t g) const { return p_module.action(g / 3, static_cast<sl2::Generator>(g % 3)); }
};

/// The k individual terms eps (x) ... (x) pi_{nj} (x) ... (x) eps, unscaled.
std::vector<sl2::BilinearTensor> eta_terms(const MultiIndex& mi);
/// sum_j c_j * term_j.
sl2::BilinearTensor eta_tensor(const MultiIndex& mi, std::span<const Scalar> c);

SymmetricDecomposition decomposition(const MultiIndex& mi, std::span<const Scalar> c);
/// The algebra on h (+) p; antisymmetric by construction, Jacobi not guaranteed.
lie::LieAlgebra build(const MultiIndex& mi, std::span<const Scalar> c);

/// R(x, y)z = alpha(eta(x, y))z, stored as entries[((a*n + x)*n + y)*n + z].
struct CurvatureForm {
  std::size_t n = 0;
  Vec entries;
  const Scalar& at(std::size_t a, std::size_t x, std::size_t y, std::size_t z) const {
    return entries[((a * n + x) * n + y) * n + z];
  }
  /// The vector R(x, y)z.
  Vec apply(std::size_t x, std::size_t y, std::size_t z) const;
};

CurvatureForm curvature_form(const SymmetricDecomposition& sd);

/// {c in Q^k : the cyclic sum of R(x,y)z vanishes for all basis triples}.
Subspace bianchi_solution_space(const MultiIndex& mi);

struct ClassifyBounds {
  std::size_t max_p_dim = 16;
  std::size_t max_k = 4;
  std::size_t max_n = 4;
};

struct ClassifyEntry {
  MultiIndex mi;
  std::size_t p_dim = 0;
  std::size_t solution_dim = 0;
};

struct ClassifyResult {
  std::vector<MultiIndex> candidates;   // every enumerated multi-index, in search order
  std::vector<ClassifyEntry> admitted;  // those with nonzero solution space, in search order
};

/// Canonical multi-indices with even sum within bounds, ascending p-dimension
/// then lexicographic on parts.
std::vector<MultiIndex> enumerate(const ClassifyBounds& b);
/// Evaluates candidates on up to `jobs` threads; output order is independent of jobs.
ClassifyResult classify(const ClassifyBounds& b, std::size_t jobs = 1);
json to_json(const ClassifyResult& r);

/// Cartan label from the (dim, rank, simple) lookup; "unknown" off-table.
std::string identify(const lie::LieAlgebra& l);

/// The seven table labels and their multi-indices, in table order.
const std::vector<std::pair<std::string, MultiIndex>>& model_table();
/// Built with the first canonical basis vector of the Bianchi solution space.
SymmetricDecomposition standard_model(const std::string& label);
SymmetricDecomposition standard_model(const MultiIndex& mi);

}  // namespace exholo::symdec
