#include <gtest/gtest.h>

#include "exholo/symdec.hpp"

using namespace exholo;
using namespace exholo::symdec;
using exact::Scalar;
using exact::Vec;

namespace {

MultiIndex mi(const std::string& s) { return MultiIndex::parse(s); }

const std::vector<std::string> kTable{"2", "1.1", "4", "3.1", "2.2", "2.1.1", "1.1.1.1"};

// ad(h_g) eta(x, y) = eta(alpha_g x, y) + eta(x, alpha_g y), checked on the full tensor.
bool eta_is_equivariant(const SymmetricDecomposition& sd) {
  const std::size_t n = sd.p_dim(), h = sd.h_dim;
  for (std::size_t g = 0; g < h; ++g) {
    const auto& a = sd.alpha(g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec lhs(h), rhs(h);
        Vec e(h);
        for (std::size_t t = 0; t < h; ++t) e[t] = sd.eta.at(t, x, y);
        // [h_g, eta(x,y)] through the algebra bracket restricted to h
        Vec full_g = exact::unit_vector(sd.algebra->dim(), g);
        Vec full_e(sd.algebra->dim());
        std::copy(e.begin(), e.end(), full_e.begin());
        Vec br = sd.algebra->bracket(full_g, full_e);
        std::copy(br.begin(), br.begin() + static_cast<long>(h), lhs.begin());
        for (std::size_t r = 0; r < n; ++r) {
          if (sgn(a(r, x)) != 0)
            for (std::size_t t = 0; t < h; ++t) rhs[t] += a(r, x) * sd.eta.at(t, r, y);
          if (sgn(a(r, y)) != 0)
            for (std::size_t t = 0; t < h; ++t) rhs[t] += a(r, y) * sd.eta.at(t, x, r);
        }
        if (lhs != rhs) return false;
      }
  }
  return true;
}

}  // namespace

TEST(MultiIndex, ParsesAndCanonicalizes) {
  EXPECT_EQ(mi("1.3").parts(), (std::vector<unsigned>{3, 1}));
  EXPECT_EQ(mi("1.1.2").to_string(), "2.1.1");
  EXPECT_EQ(mi("2.1.1").p_dim(), 12u);
  EXPECT_EQ(mi("1.1.1.1").k(), 4u);
  EXPECT_THROW(mi("5.1.1"), UsageError);
  EXPECT_THROW(mi("3"), UsageError);
  EXPECT_THROW(mi("2..2"), UsageError);
  EXPECT_THROW(mi("0.2"), UsageError);
  EXPECT_THROW(mi("a"), UsageError);
  EXPECT_THROW(mi(""), UsageError);
}

TEST(Eta, ZeroCoefficientsGiveZeroTensor) {
  Vec c{0, 0};
  EXPECT_TRUE(eta_tensor(mi("3.1"), c).is_zero());
}

TEST(Eta, SingleTermIsTransportedProjection) {
  Vec c{1};
  auto eta = eta_tensor(mi("2"), c);
  auto pi = sl2::clebsch_projection(2, 2);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      Vec expected(3);
      for (std::size_t u = 0; u < 3; ++u) {
        auto img = sl2::u2_to_sl2(u);
        for (std::size_t g = 0; g < 3; ++g) expected[g] += pi.at(u, x, y) * img[g];
      }
      for (std::size_t g = 0; g < 3; ++g) EXPECT_EQ(eta.at(g, x, y), expected[g]);
    }
  EXPECT_EQ(eta.symmetry_type(), -1);
}

TEST(Eta, EveryTermIsAntisymmetricAndNonzero) {
  for (const auto& s : kTable)
    for (const auto& t : eta_terms(mi(s))) {
      EXPECT_FALSE(t.is_zero()) << s;
      EXPECT_EQ(t.symmetry_type(), -1) << s;
    }
}

TEST(Eta, IsEquivariantForArbitraryCoefficients) {
  for (const auto& s : {"2", "3.1", "2.1.1", "5.1"}) {
    MultiIndex m = mi(s);
    Vec c;
    for (std::size_t j = 0; j < m.k(); ++j) c.push_back(Scalar(static_cast<long>(2 * j + 1)) / 3);
    EXPECT_TRUE(eta_is_equivariant(decomposition(m, c))) << s;
  }
}

TEST(Build, DimensionIsThreeKPlusP) {
  for (const auto& s : kTable) {
    MultiIndex m = mi(s);
    Vec c(m.k(), Scalar(1));
    EXPECT_EQ(build(m, c).dim(), 3 * m.k() + m.p_dim());
  }
}

TEST(Build, SmallestModelIsSo4) {
  auto sd = standard_model(mi("2"));
  EXPECT_EQ(sd.algebra->dim(), 6u);
  EXPECT_TRUE(lie::satisfies_jacobi(*sd.algebra));
  EXPECT_FALSE(lie::is_simple(*sd.algebra));
  auto ptr = sd.algebra;
  EXPECT_EQ(lie::commutant_dimension(lie::adjoint_rep(ptr)), 2u);
}

TEST(Build, G2Model) {
  auto sd = standard_model("g2");
  EXPECT_EQ(sd.algebra->dim(), 14u);
  auto s = lie::summarize(*sd.algebra);
  EXPECT_TRUE(s.simple);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.label, "g2");
}

TEST(Build, SextupleCandidateFailsJacobi) {
  Vec c{1};
  EXPECT_FALSE(lie::jacobi_defect(build(mi("6"), c)).empty());
}

TEST(Curvature, ZeroCoefficientsGiveZeroCurvature) {
  Vec c{0};
  auto r = curvature_form(decomposition(mi("2"), c));
  for (const auto& e : r.entries) EXPECT_EQ(sgn(e), 0);
}

TEST(Curvature, AntisymmetricAndBianchiForSolvedSo4) {
  auto sd = standard_model(mi("2"));
  auto r = curvature_form(sd);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t z = 0; z < 3; ++z) {
        Vec a = r.apply(x, y, z), b = r.apply(y, x, z);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(a[i], -b[i]);
        Vec cyc = r.apply(x, y, z);
        Vec c2 = r.apply(y, z, x), c3 = r.apply(z, x, y);
        for (std::size_t i = 0; i < 3; ++i) cyc[i] += c2[i] + c3[i];
        EXPECT_TRUE(exact::is_zero(cyc));
      }
}

TEST(Curvature, IsEquivariantAsA13Tensor) {
  for (const auto& s : {"2", "1.1", "3.1"}) {
    MultiIndex m = mi(s);
    Vec c(m.k(), Scalar(1));
    auto sd = decomposition(m, c);
    auto r = curvature_form(sd);
    const std::size_t n = sd.p_dim();
    for (std::size_t g = 0; g < sd.h_dim; ++g) {
      const auto& a = sd.alpha(g);
      // (X.R)(x,y,z) = X R(x,y)z - R(Xx,y)z - R(x,Xy)z - R(x,y)Xz
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Vec d = a * r.apply(x, y, z);
            for (std::size_t t = 0; t < n; ++t) {
              if (sgn(a(t, x)) != 0) d = exact::axpy(-a(t, x), r.apply(t, y, z), d);
              if (sgn(a(t, y)) != 0) d = exact::axpy(-a(t, y), r.apply(x, t, z), d);
              if (sgn(a(t, z)) != 0) d = exact::axpy(-a(t, z), r.apply(x, y, t), d);
            }
            ASSERT_TRUE(exact::is_zero(d)) << s << " g=" << g;
          }
    }
  }
}

TEST(Bianchi, TableEntriesAdmitSolutions) {
  for (const auto& s : kTable) EXPECT_GE(bianchi_solution_space(mi(s)).dim(), 1u) << s;
}

TEST(Bianchi, SextupleHasNoSolution) {
  EXPECT_EQ(bianchi_solution_space(mi("6")).dim(), 0u);
  EXPECT_EQ(bianchi_solution_space(mi("6")).ambient_dim(), 1u);
}

TEST(Bianchi, InvariantUnderPermutationOfParts) {
  EXPECT_EQ(bianchi_solution_space(mi("1.3")), bianchi_solution_space(mi("3.1")));
  EXPECT_EQ(bianchi_solution_space(mi("1.2.1")), bianchi_solution_space(mi("2.1.1")));
}

TEST(Bianchi, JacobiHoldsExactlyOnTheSolutionSpace) {
  for (const auto& s : kTable) {
    MultiIndex m = mi(s);
    auto space = bianchi_solution_space(m);
    for (std::size_t b = 0; b < space.dim(); ++b)
      EXPECT_TRUE(lie::satisfies_jacobi(build(m, space.vector(b)))) << s;
    // fixed off-space sample: each coordinate direction and an uneven mixture
    std::vector<Vec> samples;
    for (std::size_t j = 0; j < m.k(); ++j) samples.push_back(exact::unit_vector(m.k(), j));
    Vec mix(m.k());
    for (std::size_t j = 0; j < m.k(); ++j) mix[j] = static_cast<long>(j * j + 1);
    samples.push_back(mix);
    for (const auto& c : samples) {
      if (space.contains(c)) continue;
      EXPECT_FALSE(lie::satisfies_jacobi(build(m, c))) << s;
    }
  }
}

TEST(Bianchi, ScalingGivesTheSameType) {
  auto space = bianchi_solution_space(mi("4"));
  Vec c = space.vector(0);
  for (auto& x : c) x *= Scalar(-7, 3);
  EXPECT_EQ(identify(build(mi("4"), c)), "sl(3)");
}

TEST(Classify, TableBounds) {
  auto r = classify({16, 4, 4});
  std::vector<std::string> got;
  for (const auto& e : r.admitted) got.push_back(e.mi.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"2", "1.1", "4", "3.1", "2.2", "2.1.1", "1.1.1.1"}));
}

TEST(Classify, SingleFactor) {
  auto r = classify({5, 1, 8});
  std::vector<std::string> got;
  for (const auto& e : r.admitted) got.push_back(e.mi.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"2", "4"}));
}

TEST(Classify, EnumerationOrderAndBounds) {
  auto c = enumerate({12, 3, 4});
  for (std::size_t i = 1; i < c.size(); ++i) {
    EXPECT_LE(c[i - 1].p_dim(), c[i].p_dim());
    if (c[i - 1].p_dim() == c[i].p_dim()) EXPECT_LT(c[i - 1].parts(), c[i].parts());
  }
  for (const auto& m : c) {
    EXPECT_LE(m.p_dim(), 12u);
    EXPECT_LE(m.k(), 3u);
    EXPECT_LE(m.parts()[0], 4u);
  }
}

TEST(Classify, ResultDoesNotDependOnJobs) {
  auto a = classify({16, 4, 6}, 1), b = classify({16, 4, 6}, 4);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Identify, Labels) {
  EXPECT_EQ(identify(*standard_model(mi("4")).algebra), "sl(3)");
  EXPECT_EQ(identify(*standard_model(mi("2.2")).algebra), "so(6)");
  EXPECT_EQ(identify(lie::LieAlgebra::sl2()), "unknown");
}

TEST(StandardModel, Dimensions) {
  EXPECT_EQ(standard_model("g2").algebra->dim(), 14u);
  EXPECT_EQ(standard_model("so(7)").algebra->dim(), 21u);
  EXPECT_EQ(standard_model("so(8)").algebra->dim(), 28u);
  EXPECT_THROW(standard_model("e8"), UsageError);
}

TEST(StandardModel, CertificationOfAllSeven) {
  const std::vector<std::pair<std::size_t, std::size_t>> dim_rank{{6, 2},   {10, 2}, {8, 2}, {14, 2},
                                                                  {15, 3}, {21, 3}, {28, 4}};
  std::size_t i = 0;
  for (const auto& [label, m] : model_table()) {
    auto sd = standard_model(m);
    auto s = lie::summarize(*sd.algebra);
    EXPECT_TRUE(s.jacobi) << label;
    EXPECT_EQ(s.center_dim, 0u) << label;
    EXPECT_TRUE(s.semisimple) << label;
    EXPECT_EQ(s.simple, label != "so(4)") << label;
    EXPECT_EQ(s.dim, dim_rank[i].first) << label;
    EXPECT_EQ(s.rank, dim_rank[i].second) << label;
    EXPECT_EQ(s.label, label);
    ++i;
  }
}
