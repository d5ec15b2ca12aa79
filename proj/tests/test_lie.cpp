#include <gtest/gtest.h>

#include "exholo/lie.hpp"

using namespace exholo;
using namespace exholo::lie;
using exact::Mat;
using exact::Scalar;
using exact::Subspace;
using exact::Vec;

namespace {

// so(n) as the isotropy of the identity form inside gl(n).
std::pair<LieAlgebra, Subspace> so(std::size_t n) {
  Representation gl = defining_rep_gl(n);
  MultilinearTensor form{n, 0, 2, Vec(n * n)};
  for (std::size_t i = 0; i < n; ++i) form.entries[i * n + i] = 1;
  Subspace s = invariance_subalgebra(gl, FixTensor{form});
  return {subalgebra_from_subspace(gl.algebra(), s), s};
}

}  // namespace

TEST(LieAlgebra, Sl2Brackets) {
  LieAlgebra l = LieAlgebra::sl2();
  EXPECT_EQ(l.bracket_basis(0, 1), (Vec{0, 0, 1}));
  EXPECT_EQ(l.bracket_basis(2, 0), (Vec{2, 0, 0}));
  EXPECT_EQ(l.bracket_basis(2, 1), (Vec{0, -2, 0}));
  EXPECT_EQ(l.bracket_basis(1, 0), (Vec{0, 0, -1}));
  EXPECT_TRUE(satisfies_jacobi(l));
}

TEST(LieAlgebra, RejectsMalformedInput) {
  EXPECT_THROW(LieAlgebra(2, {{1, 0, 0, 1}}), UsageError);
  EXPECT_THROW(LieAlgebra(2, {{0, 1, 2, 1}}), UsageError);
}

TEST(LieAlgebra, JacobiFailureIsReported) {
  // [b0,b1] = b2, [b1,b2] = b0, [b0,b2] = b2 is antisymmetric but not Lie
  LieAlgebra bad(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 2, 1}});
  auto defects = jacobi_defect(bad);
  ASSERT_FALSE(defects.empty());
  EXPECT_EQ(defects[0].i, 0u);
  EXPECT_EQ(defects[0].j, 1u);
  EXPECT_EQ(defects[0].k, 2u);
  EXPECT_FALSE(exact::is_zero(defects[0].defect));
}

TEST(LieAlgebra, GlHasJacobiAndScalarCenter) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LieAlgebra g = LieAlgebra::gl(n);
    EXPECT_TRUE(satisfies_jacobi(g));
    Subspace c = center(g);
    ASSERT_EQ(c.dim(), 1u);
    EXPECT_TRUE(c.contains(exact::flatten(Mat::identity(n))));
    EXPECT_FALSE(is_semisimple(g));
  }
}

TEST(Killing, Sl2Values) {
  Mat k = killing_form(LieAlgebra::sl2());
  EXPECT_EQ(k, (Mat{{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}));
}

TEST(Killing, AbelianIsNotSemisimple) {
  EXPECT_FALSE(is_semisimple(LieAlgebra::abelian(3)));
  EXPECT_FALSE(is_semisimple(LieAlgebra::abelian(0)));
  EXPECT_EQ(center(LieAlgebra::abelian(3)).dim(), 3u);
}

TEST(Representation, BracketRelationIsEnforced) {
  auto l = std::make_shared<const LieAlgebra>(LieAlgebra::sl2());
  Mat e{{0, 1}, {0, 0}}, f{{0, 0}, {1, 0}}, h{{1, 0}, {0, -1}};
  EXPECT_NO_THROW(Representation(l, {e, f, h}));
  EXPECT_THROW(Representation(l, {e, f, h * Scalar(2)}), CertificationError);
}

TEST(Representation, AdjointHasCommutantOne) {
  auto l = std::make_shared<const LieAlgebra>(LieAlgebra::sl2());
  EXPECT_EQ(commutant_dimension(adjoint_rep(l)), 1u);
  EXPECT_TRUE(is_simple(*l));
  EXPECT_EQ(rank(*l), 1u);
}

TEST(Representation, ImageOfGlIsEverything) {
  EXPECT_EQ(defining_rep_gl(3).image(), Subspace::full(9));
}

TEST(InvariantForms, KillingFormIsTheOnlyAdjointInvariant) {
  auto l = std::make_shared<const LieAlgebra>(LieAlgebra::sl2());
  auto rep = adjoint_rep(l);
  auto sym = invariant_symmetric_forms(rep);
  ASSERT_EQ(sym.size(), 1u);
  std::vector<Vec> both{exact::flatten(sym[0]), exact::flatten(killing_form(*l))};
  EXPECT_EQ(exact::rank(Mat::from_rows(both, 9)), 1u);
  EXPECT_TRUE(invariant_antisymmetric_forms(rep).empty());
  EXPECT_EQ(invariant_vectors(rep).dim(), 0u);
}

TEST(InvariantForms, DefiningSl2RepHasASymplecticForm) {
  auto l = std::make_shared<const LieAlgebra>(LieAlgebra::sl2());
  Representation r(l, {Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}, Mat{{1, 0}, {0, -1}}});
  EXPECT_TRUE(invariant_symmetric_forms(r).empty());
  auto anti = invariant_antisymmetric_forms(r);
  ASSERT_EQ(anti.size(), 1u);
  EXPECT_EQ(anti[0], (Mat{{0, 1}, {-1, 0}}));
}

TEST(Isotropy, OrthogonalAlgebrasHaveTheRightDimensions) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto [l, s] = so(n);
    EXPECT_EQ(l.dim(), n * (n - 1) / 2);
    EXPECT_TRUE(satisfies_jacobi(l));
  }
}

TEST(Isotropy, FixVectorAndFixLine) {
  Representation gl = defining_rep_gl(3);
  Vec e0{1, 0, 0};
  // matrices with first column zero: 6 dimensional
  EXPECT_EQ(invariance_subalgebra(gl, FixVector{e0}).dim(), 6u);
  // matrices with first column a multiple of e0: 7 dimensional
  EXPECT_EQ(invariance_subalgebra(gl, FixLine{e0}).dim(), 7u);
  Subspace plane = Subspace::span(Mat{{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(invariance_subalgebra(gl, FixSubspace{plane}).dim(), 7u);
  EXPECT_THROW(invariance_subalgebra(gl, FixLine{Vec(3)}), UsageError);
}

TEST(Classification, OrthogonalAndSpecialLinearTypes) {
  auto s3 = summarize(so(3).first);
  EXPECT_TRUE(s3.simple);
  EXPECT_EQ(s3.rank, 1u);
  auto s4 = summarize(so(4).first);
  EXPECT_TRUE(s4.semisimple);
  EXPECT_FALSE(s4.simple);
  EXPECT_EQ(s4.rank, 2u);
  EXPECT_EQ(s4.label, "so(4)");
  auto s5 = summarize(so(5).first);
  EXPECT_TRUE(s5.simple);
  EXPECT_EQ(s5.rank, 2u);
  EXPECT_EQ(s5.label, "so(5)");

  // sl(3): traceless matrices in gl(3)
  Representation gl = defining_rep_gl(3);
  Mat trace_row(1, 9);
  for (std::size_t i = 0; i < 3; ++i) trace_row(0, i * 3 + i) = 1;
  Subspace sl3 = exact::kernel(trace_row);
  auto t = summarize(subalgebra_from_subspace(gl.algebra(), sl3));
  EXPECT_EQ(t.label, "sl(3)");
  EXPECT_EQ(t.center_dim, 0u);
}

TEST(Classification, NonSemisimpleStopsEarly) {
  auto s = summarize(LieAlgebra::gl(2));
  EXPECT_TRUE(s.jacobi);
  EXPECT_EQ(s.center_dim, 1u);
  EXPECT_FALSE(s.semisimple);
  EXPECT_EQ(s.label, "unknown");
}

TEST(Subalgebras, NonClosedSubspaceIsRejectedWithWitness) {
  LieAlgebra l = LieAlgebra::sl2();
  Subspace ef = Subspace::span(Mat{{1, 0, 0}, {0, 1, 0}});
  EXPECT_FALSE(is_bracket_closed(l, ef));
  EXPECT_THROW(subalgebra_from_subspace(l, ef), UsageError);
  Subspace borel = Subspace::span(Mat{{1, 0, 0}, {0, 0, 1}});
  EXPECT_TRUE(is_bracket_closed(l, borel));
  EXPECT_EQ(derived_span(l, borel), Subspace::span(Mat{{1, 0, 0}}));
}

TEST(Json, AlgebraSchema) {
  json j = LieAlgebra::sl2().to_json();
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["brackets"].size(), 3u);
  EXPECT_EQ(j["brackets"][0]["value"], "1/1");
}
