#include <gtest/gtest.h>

#include "exholo/lie.hpp"
#include "exholo/sl2.hpp"

using namespace exholo;
using namespace exholo::sl2;

namespace {

IsotypicList list(std::initializer_list<std::pair<std::vector<unsigned>, std::size_t>> entries) {
  IsotypicList out;
  for (const auto& [w, m] : entries) out.push_back({w, m});
  return out;
}

// (U^a (x) U^b) (+) (U^c (x) U^d) over sl(2)^4, each U^j a copy of U_1 in slot j.
Sl2kModule triality_module(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  Sl2kModule pair = external_tensor(irrep(1), irrep(1));
  std::vector<std::size_t> first{a, b}, second{c, d};
  return direct_sum(branch(pair, first, 4), branch(pair, second, 4));
}

}  // namespace

TEST(Irrep, TrivialModule) {
  Sl2kModule u = irrep(0);
  EXPECT_EQ(u.dim(), 1u);
  for (const auto& m : u.generators()) EXPECT_TRUE(m.is_zero());
}

TEST(Irrep, DefiningRepresentation) {
  Sl2kModule u = irrep(1);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_EQ(u.action(0, kH), (exact::Mat{{1, 0}, {0, -1}}));
}

TEST(Irrep, U2IsTheAdjointRepresentation) {
  auto sl2 = std::make_shared<const lie::LieAlgebra>(lie::LieAlgebra::sl2());
  auto ad = lie::adjoint_rep(sl2);
  Sl2kModule adj(3, {{ad.action(0), ad.action(1), ad.action(2)}});
  EXPECT_EQ(equivariant_maps(irrep(2), adj).size(), 1u);
}

TEST(Irrep, WeightsAndNormalization) {
  for (unsigned n = 0; n <= 6; ++n) {
    Sl2kModule u = irrep(n);
    for (unsigned i = 0; i <= n; ++i) EXPECT_EQ(u.action(0, kH)(i, i), static_cast<long>(n) - 2 * static_cast<long>(i));
    EXPECT_EQ(decompose(u), list({{{n}, 1}}));
  }
}

TEST(Tensor, ExternalProductsHaveProductDimension) {
  EXPECT_EQ(external_tensor(irrep(1), irrep(1)).dim(), 4u);
  EXPECT_EQ(external_tensor(irrep(1), irrep(1)).k(), 2u);
  std::vector<unsigned> g2{3, 1}, so7{2, 1, 1};
  EXPECT_EQ(irrep_product(g2).dim(), 8u);
  EXPECT_EQ(irrep_product(so7).dim(), 12u);
}

TEST(Tensor, U1TimesU1SplitsIntoU2AndU0) {
  EXPECT_EQ(decompose(internal_tensor(irrep(1), irrep(1))), list({{{2}, 1}, {{0}, 1}}));
}

TEST(Tensor, TrivialFactorIsNeutral) {
  for (unsigned n = 0; n <= 4; ++n) {
    Sl2kModule m = internal_tensor(irrep(0), irrep(n));
    EXPECT_EQ(equivariant_maps(m, irrep(n)).size(), 1u);
  }
}

TEST(Tensor, ExteriorSquareOfTheFourDimensionalModule) {
  // Lambda^2(U_1 (x) U_1) over sl(2)^2 is two copies of a U_2, one per factor
  Sl2kModule m = antisymmetric_square(external_tensor(irrep(1), irrep(1)));
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_EQ(decompose(m), list({{{2, 0}, 1}, {{0, 2}, 1}}));
}

TEST(Decompose, IsAPartitionOfTheDimension) {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b) {
      auto d = decompose(internal_tensor(external_tensor(irrep(a), irrep(1)), external_tensor(irrep(b), irrep(1))));
      EXPECT_EQ(isotypic_dimension(d), (a + 1) * (b + 1) * 4);
    }
}

TEST(Decompose, MalformedModuleIsRejected) {
  exact::Mat h{{1, 0}, {0, 0}};
  // E = F = 0 forces H = [E, F] = 0, so this H violates the relations
  EXPECT_THROW(Sl2kModule(2, {{exact::Mat(2, 2), exact::Mat(2, 2), h}}), UsageError);
}

TEST(Decompose, ReassemblyMatchesTheInput) {
  Sl2kModule m = internal_tensor(irrep(2), irrep(3));
  auto d = decompose(m);
  // commutant dimension of a multiplicity-free module equals its number of summands
  Sl2kModule reassembled = irrep(d[0].weights[0]);
  for (std::size_t i = 1; i < d.size(); ++i) reassembled = direct_sum(reassembled, irrep(d[i].weights[0]));
  EXPECT_EQ(equivariant_maps(m, reassembled).size(), d.size());
}

TEST(ClebschGordan, DimensionLaw) {
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b) {
      Sl2kModule ab = internal_tensor(irrep(a), irrep(b));
      for (unsigned c = 0; c <= a + b + 2; ++c) {
        bool allowed = (c + std::min(a, b) >= std::max(a, b)) && c <= a + b && (a + b + c) % 2 == 0;
        EXPECT_EQ(equivariant_maps(ab, irrep(c)).size(), allowed ? 1u : 0u) << a << " " << b << " " << c;
      }
    }
}

TEST(ClebschGordan, SchurForIrreducibles) {
  EXPECT_EQ(equivariant_maps(irrep(3), irrep(3)).size(), 1u);
  EXPECT_EQ(equivariant_maps(irrep(3), irrep(1)).size(), 0u);
  EXPECT_EQ(equivariant_maps(internal_tensor(irrep(1), irrep(1)), irrep(2)).size(), 1u);
}

TEST(Projection, EpsilonOneIsTheStandardTwoForm) {
  BilinearTensor e = clebsch_projection(1, 0);
  EXPECT_EQ(e.at(0, 0, 1), 1);
  EXPECT_EQ(e.at(0, 1, 0), -1);
  EXPECT_EQ(e.at(0, 0, 0), 0);
  EXPECT_EQ(e.at(0, 1, 1), 0);
  EXPECT_FALSE(e.symmetric);
}

TEST(Projection, SymmetryTypes) {
  EXPECT_TRUE(clebsch_projection(1, 2).symmetric);
  EXPECT_FALSE(clebsch_projection(2, 2).symmetric);
  for (unsigned n = 1; n <= 8; ++n) {
    EXPECT_EQ(clebsch_projection(n, 2).symmetry_type(), n % 2 ? 1 : -1);
    EXPECT_EQ(clebsch_projection(n, 0).symmetry_type(), n % 2 ? -1 : 1);
  }
}

TEST(Projection, ExactlyEquivariant) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned t : {0u, 2u}) {
      BilinearTensor p = clebsch_projection(n, t);
      EXPECT_FALSE(p.is_zero());
      EXPECT_TRUE(is_equivariant(p, irrep(n), irrep(t))) << n << " " << t;
    }
}

TEST(Projection, SimpleDecompositionTermsAreAntisymmetric) {
  // the j-th term of eta for an even-sum multi-index swaps sign under exchange of arguments
  std::vector<std::vector<unsigned>> indices{{2}, {1, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}, {5, 1}, {3, 3}};
  for (const auto& mi : indices)
    for (std::size_t j = 0; j < mi.size(); ++j) {
      int sign = 1;
      for (std::size_t i = 0; i < mi.size(); ++i)
        sign *= (i == j ? clebsch_projection(mi[i], 2) : clebsch_projection(mi[i], 0)).symmetry_type();
      EXPECT_EQ(sign, -1);
    }
}

TEST(Projection, U2IdentificationIsAnIntertwiner) {
  auto sl2 = lie::LieAlgebra::sl2();
  Sl2kModule u = irrep(2);
  exact::Mat iota(3, 3);
  for (std::size_t t = 0; t < 3; ++t) {
    auto c = u2_to_sl2(t);
    for (std::size_t g = 0; g < 3; ++g) iota(g, t) = c[g];
  }
  for (std::size_t g = 0; g < 3; ++g)
    EXPECT_EQ(iota * u.action(0, static_cast<Generator>(g)), sl2.ad_basis(g) * iota);
}

TEST(Branch, IdentityAssignmentKeepsModule) {
  Sl2kModule m = external_tensor(irrep(2), irrep(1));
  std::vector<std::size_t> id{0, 1};
  Sl2kModule b = branch(m, id, 2);
  EXPECT_EQ(b.generators(), m.generators());
}

TEST(Branch, TrialityRestrictionsAlongTheDiagonal) {
  std::vector<std::size_t> diag{0, 0, 1, 1};
  auto first = decompose(branch(triality_module(0, 1, 2, 3), diag, 2));
  EXPECT_EQ(first, list({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 2}}));
  auto second = decompose(branch(triality_module(0, 2, 1, 3), diag, 2));
  EXPECT_EQ(second, list({{{1, 1}, 2}}));
}

TEST(IsotypicJson, SortedDescending) {
  auto d = decompose(internal_tensor(irrep(2), irrep(2)));
  json j = to_json(d);
  EXPECT_EQ(j.dump(), R"([{"weights":[4],"multiplicity":1},{"weights":[2],"multiplicity":1},{"weights":[0],"multiplicity":1}])");
}
