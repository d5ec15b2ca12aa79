#include <gtest/gtest.h>

#include <mutex>

#include "exholo/holo.hpp"

using namespace exholo;
using namespace exholo::holo;

namespace {

const HoloModel& model() {
  static std::once_flag once;
  static HoloModel m;
  std::call_once(once, [] { m = build_model(); });
  return m;
}

void expect_all_pass(const Certificate& c) {
  for (const auto& check : c)
    EXPECT_EQ(check.status, report::Status::kPass)
        << check.name << ": expected " << check.expected.dump() << ", actual " << check.actual.dump();
}

}  // namespace

TEST(Holo, VectorAndSpinDimensions) {
  const auto& m = model();
  EXPECT_EQ(m.vec.rep.dim(), 7u);
  EXPECT_EQ(m.spin.rep.dim(), 8u);
  EXPECT_EQ(m.g2.dim(), 14u);
  EXPECT_EQ(m.complement.dim(), 7u);
}

TEST(Holo, RepresentationsCertificate) { expect_all_pass(representations_certificate(model())); }
TEST(Holo, G2Certificate) { expect_all_pass(g2_certificate(model())); }
TEST(Holo, CrossCertificate) { expect_all_pass(cross_certificate(model())); }
TEST(Holo, StabilizerOfCrossProductIsG2) { expect_all_pass(thm17_check(model())); }
TEST(Holo, Triality) { expect_all_pass(triality_checks()); }
TEST(Holo, TrialityRestrictions) { expect_all_pass(rem14_checks()); }
TEST(Holo, SubalgebraChain) { expect_all_pass(cor15_chain(model())); }

TEST(Holo, DiagonalCandidateRuns) {
  auto c = diagonal_candidate(model());
  ASSERT_EQ(c.size(), 2u);
}

TEST(Holo, CrossProductLeftMultiplicationIsSkew) {
  const auto& m = model();
  for (std::size_t i = 0; i < 7; ++i) {
    Mat l = m.cross.left(exact::unit_vector(7, i));
    Mat bl = m.form7 * l;
    EXPECT_EQ(bl.transpose(), bl * Scalar(-1));
  }
}

TEST(Holo, GradedSolverRejectsDiagonalBlocks) {
  auto so7 = std::make_shared<const symdec::SymmetricDecomposition>(symdec::standard_model("so(7)"));
  auto spec = vector_spec(so7);
  spec.v1 = spec.v0;
  EXPECT_THROW(solve_graded_rep(spec), CertificationError);
}

TEST(Holo, NonNullChoiceFallsBackToSums) {
  Mat hyperbolic{{0, 1}, {1, 0}};
  auto [v, how] = choose_non_null(hyperbolic);
  EXPECT_EQ(v, (Vec{1, 1}));
  Mat diag{{0, 0}, {0, 3}};
  EXPECT_EQ(choose_non_null(diag).first, (Vec{0, 1}));
}
