#include <gtest/gtest.h>

#include <random>

#include "exholo/exact.hpp"

using namespace exholo;
using namespace exholo::exact;

namespace {

Mat random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Random matrix of prescribed rank: product of r x k and k x c factors.
Mat random_rank_mat(std::mt19937& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_mat(rng, r, k) * random_mat(rng, k, c);
}

}  // namespace

TEST(Scalar, SerializesInLowestTerms) {
  EXPECT_EQ(to_string(Scalar(3)), "3/1");
  EXPECT_EQ(to_string(Scalar(6, 4)), "3/2");
  EXPECT_EQ(to_string(Scalar(-2, 4)), "-1/2");
  EXPECT_EQ(parse_scalar("10/4"), Scalar(5, 2));
  EXPECT_THROW(parse_scalar("x/2"), UsageError);
  EXPECT_EQ(height(Scalar(-7, 3)), 7);
}

TEST(Rref, IdentityIsFixed) {
  auto r = rref(Mat::identity(3));
  EXPECT_EQ(r.reduced, Mat::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, RankOneCase) {
  auto r = rref(Mat{{2, 4}, {1, 2}});
  EXPECT_EQ(r.reduced, (Mat{{1, 2}}));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, InvertibleRandomMatricesReduceToIdentity) {
  std::mt19937 rng(11);
  int tested = 0;
  while (tested < 12) {
    Mat m = random_mat(rng, 10, 10);
    // oracle: cofactor determinant is too slow at 10x10, elimination determinant is independent of rref
    if (det(m) == 0) continue;
    ++tested;
    auto r = rref(m);
    EXPECT_EQ(r.reduced, Mat::identity(10));
  }
}

TEST(Det, EliminationAgreesWithCofactorExpansion) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 4;
    Mat m = random_mat(rng, n, n, -5, 5);
    EXPECT_EQ(det(m), det_cofactor(m));
  }
}

TEST(Kernel, ZeroMapHasFullKernel) {
  EXPECT_EQ(kernel(Mat(2, 3)).dim(), 3u);
  EXPECT_EQ(kernel(Mat(2, 3)), Subspace::full(3));
}

TEST(Kernel, SingleRow) {
  Subspace k = kernel(Mat{{1, 0, 0}});
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_EQ(k.basis(), (Mat{{0, 1, 0}, {0, 0, 1}}));
}

TEST(Kernel, BasisVectorsAreAnnihilatedAndRankNullityHolds) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 7, c = 1 + (trial * 3) % 9;
    Mat m = random_rank_mat(rng, r, c, 1 + trial % 4);
    Subspace k = kernel(m);
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.basis().row(i)));
    EXPECT_EQ(rank(m) + k.dim(), c);
    EXPECT_EQ(rref(m).pivots.size(), rank(m));
  }
}

TEST(RowReducer, AgreesWithDenseRref) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Mat m = random_rank_mat(rng, 3 + trial % 6, 2 + trial % 8, 1 + trial % 5);
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) red.add(m.row(i));
    auto a = red.reduced();
    auto b = rref(m);
    EXPECT_EQ(a.reduced, b.reduced);
    EXPECT_EQ(a.pivots, b.pivots);
    EXPECT_EQ(kernel_of(red), kernel(m));
  }
}

TEST(Subspace, CanonicalUnderChangeOfBasis) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t k = 1 + trial % 4, n = 6;
    Mat basis = random_rank_mat(rng, k, n, k);
    Mat g = random_mat(rng, k, k);
    if (det(g) == 0 || rank(basis) < k) continue;
    EXPECT_EQ(Subspace::span(basis), Subspace::span(g * basis));
  }
}

TEST(Solve, IdentityGivesRightHandSide) {
  Vec b{Scalar(3), Scalar(-1, 2), Scalar(7)};
  auto r = solve(Mat::identity(3), b);
  ASSERT_TRUE(r.particular);
  EXPECT_EQ(*r.particular, b);
  EXPECT_EQ(r.kernel.dim(), 0u);
}

TEST(Solve, UnderdeterminedSystem) {
  auto r = solve(Mat{{1, 1}}, Vec{Scalar(2)});
  ASSERT_TRUE(r.particular);
  EXPECT_EQ(*r.particular, (Vec{Scalar(2), Scalar(0)}));
  EXPECT_EQ(r.kernel.basis(), (Mat{{1, -1}}));
}

TEST(Solve, InconsistentSystemYieldsCertificate) {
  Mat a{{1}, {1}};
  Vec b{Scalar(0), Scalar(1)};
  auto r = solve(a, b);
  EXPECT_FALSE(r.particular);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(*r.certificate, (Vec{Scalar(1), Scalar(-1)}));
  EXPECT_TRUE(is_zero(row_times(*r.certificate, a)));
  EXPECT_NE(dot(*r.certificate, b), 0);
}

TEST(Solve, ShapeMismatchIsUsageError) { EXPECT_THROW(solve(Mat{{1, 2}}, Vec{1, 2}), UsageError); }

TEST(Kron, IdentityAndScalarCases) {
  EXPECT_EQ(kron(Mat::identity(2), Mat::identity(3)), Mat::identity(6));
  Mat b{{1, 2}, {3, 4}};
  EXPECT_EQ(kron(Mat{{2}}, b), b * Scalar(2));
}

TEST(Kron, MixedProductMatchesComponentwiseExpansion) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_mat(rng, 2 + trial % 2, 3), b = random_mat(rng, 2, 2 + trial % 3);
    Vec x(3), y(b.cols());
    for (auto& v : x) v = static_cast<int>(rng() % 7) - 3;
    for (auto& v : y) v = static_cast<int>(rng() % 7) - 3;
    // oracle: (x (x) y)[i*|y|+j] = x_i y_j, expanded by hand
    Vec xy(x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) xy[i * y.size() + j] = x[i] * y[j];
    Vec ax = a * x, by = b * y;
    Vec expected(ax.size() * by.size());
    for (std::size_t i = 0; i < ax.size(); ++i)
      for (std::size_t j = 0; j < by.size(); ++j) expected[i * by.size() + j] = ax[i] * by[j];
    EXPECT_EQ(kron(a, b) * xy, expected);
  }
}

TEST(SubspaceOps, IntersectAndSum) {
  Subspace s12 = Subspace::span(Mat{{1, 0, 0}, {0, 1, 0}});
  Subspace s23 = Subspace::span(Mat{{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(intersect(s12, s23), Subspace::span(Mat{{0, 1, 0}}));
  Subspace s3 = Subspace::span(Mat{{0, 0, 1}});
  EXPECT_EQ(sum(s12, s3), Subspace::full(3));
  EXPECT_TRUE(equal(sum(s12, s23), Subspace::full(3)));
  EXPECT_TRUE(contains(s12, Vec{Scalar(5), Scalar(-1), Scalar(0)}));
  EXPECT_FALSE(contains(s12, Vec{Scalar(0), Scalar(0), Scalar(1)}));
  EXPECT_THROW(intersect(s12, Subspace::full(4)), UsageError);
}

TEST(SubspaceOps, ModularDimensionLaw) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + trial % 5;
    Mat a = random_rank_mat(rng, 1 + trial % n, n, 1 + trial % 3);
    Mat b = random_rank_mat(rng, 1 + (trial * 7) % n, n, 1 + (trial / 3) % 3);
    Subspace sa = Subspace::span(a), sb = Subspace::span(b);
    // independent ranks of the raw generator matrices
    std::size_t ra = rank(a), rb = rank(b), rab = rank(vstack(a, b));
    Subspace i = intersect(sa, sb);
    EXPECT_EQ(sum(sa, sb).dim(), rab);
    EXPECT_EQ(ra + rb, rab + i.dim());
    for (std::size_t r = 0; r < i.dim(); ++r) {
      EXPECT_TRUE(sa.contains(i.basis().row(r)));
      EXPECT_TRUE(sb.contains(i.basis().row(r)));
    }
  }
}

TEST(Subspace, CoordinatesRoundTrip) {
  Subspace s = Subspace::span(Mat{{1, 2, 3}, {0, 1, 1}});
  Vec v = axpy(Scalar(2), s.vector(0), s.vector(1));
  Vec c = s.coordinates(v);
  Vec back(3);
  for (std::size_t i = 0; i < c.size(); ++i) back = axpy(c[i], s.vector(i), back);
  EXPECT_EQ(back, v);
  EXPECT_THROW(s.coordinates(Vec{Scalar(0), Scalar(0), Scalar(1)}), UsageError);
}

TEST(Intertwiners, ScalarsCommuteWithEverything) {
  std::vector<Mat> gens{Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}};
  auto maps = intertwiners(gens, gens);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(maps[0], Mat::identity(2));
}

TEST(Json, MatrixSchema) {
  Mat m{{1, 2}, {3, 4}};
  m(0, 1) = Scalar(1, 3);
  json j = to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["entries"][1], "1/3");
  EXPECT_EQ(mat_from_json(j), m);
}
