#include <gtest/gtest.h>

#include <mutex>

#include "exholo/quadric.hpp"

using namespace exholo;
using namespace exholo::quadric;

namespace {

const holo::HoloModel& model() {
  static std::once_flag once;
  static holo::HoloModel m;
  std::call_once(once, [] { m = holo::build_model(); });
  return m;
}

const IsotropyData& data() {
  static std::once_flag once;
  static IsotropyData d;
  std::call_once(once, [] { d = isotropy_data(model()); });
  return d;
}

void expect_all_pass(const report::Certificate& c) {
  for (const auto& check : c)
    EXPECT_EQ(check.status, report::Status::kPass)
        << check.name << ": expected " << check.expected.dump() << ", actual " << check.actual.dump()
        << ", details " << check.details.dump();
}

}  // namespace

TEST(Quadric, QuadraticSpaceRequiresUniqueSymmetricForm) {
  auto sl2 = std::make_shared<const lie::LieAlgebra>(lie::LieAlgebra::sl2());
  auto u1 = sl2::irrep(1);
  lie::Representation r(sl2, u1.generators());
  EXPECT_THROW(quadratic_space(r), UsageError);
  auto u2 = sl2::irrep(2);
  EXPECT_NO_THROW(quadratic_space(lie::Representation(sl2, u2.generators()), {2}));
}

TEST(Quadric, NullCatalogue) {
  const auto& d = data();
  auto c7 = null_basis_points(d.q7);
  auto c8 = null_basis_points(d.q8);
  EXPECT_EQ(c7.planes.size(), 3u);
  EXPECT_EQ(c8.planes.size(), 4u);
  EXPECT_EQ(c7.null_weight_vectors.front(), 0u);
  for (const auto& p : c7.planes) EXPECT_TRUE(d.q7.is_isotropic(p));
  for (const auto& p : c8.planes) EXPECT_TRUE(d.q8.is_isotropic(p));
  EXPECT_THROW(standard_isotropic_plane(d.q7, 4), CertificationError);
}

TEST(Quadric, CaseI) { expect_all_pass(prop21_case_i(model(), data())); }
TEST(Quadric, CaseII) { expect_all_pass(prop21_case_ii(model(), data())); }
TEST(Quadric, CaseIII) { expect_all_pass(prop21_case_iii(model(), data())); }

TEST(Quadric, CurvatureSpaces) { expect_all_pass(curvature_certificate(model(), data())); }
// Structural checks and both controls must pass; every reported containment
// violation must be a genuine one, re-verified here from the witness alone.
TEST(Quadric, ObstructionWitnessesAreGenuine) {
  const auto& m = model();
  const auto& d = data();
  auto g2k = curvature_space(d.q7, m.g2);
  auto g2k8 = curvature_space(d.q8, m.g2);
  for (const auto& check : obstruction_certificate(m, d, 4)) {
    bool is_containment = check.name.find("R(") != std::string::npos;
    if (!is_containment) {
      EXPECT_EQ(check.status, report::Status::kPass) << check.name;
      continue;
    }
    if (check.status == report::Status::kPass) continue;
    const auto& w = check.details.at("witness");
    auto vec = [](const json& j) {
      exact::Vec v;
      for (const auto& e : j) v.push_back(exact::parse_scalar(e.get<std::string>()));
      return v;
    };
    bool eight = check.name.rfind("V8", 0) == 0;
    const auto& k = eight ? g2k8 : g2k;
    exact::Subspace plane = eight ? d.s : d.q7.orthocomplement(d.w);
    if (check.name.rfind("at v", 0) == 0) continue;  // planes at other points are checked through the same routine
    auto x = vec(w.at("x")), y = vec(w.at("y")), z = vec(w.at("z"));
    EXPECT_TRUE(plane.contains(x) && plane.contains(y) && plane.contains(z));
    auto r = k.apply(w.at("tensor").get<std::size_t>(), x, y, z);
    EXPECT_EQ(exact::to_json(r), w.at("R(x,y)z"));
    EXPECT_FALSE(plane.contains(r)) << check.name;
  }
}

TEST(Quadric, ConstantCurvaturePreservesEveryPlane) {
  const auto& d = data();
  EXPECT_TRUE(constant_curvature_preserves(d.q7, d.q7.orthocomplement(d.w)));
  EXPECT_TRUE(constant_curvature_preserves(d.q8, d.s));
  EXPECT_TRUE(constant_curvature_preserves(d.q7, d.w0));
}

TEST(Quadric, ContainmentIsJobIndependent) {
  const auto& d = data();
  auto full = curvature_space(d.q7, exact::Subspace::full(21));
  auto plane = d.q7.orthocomplement(d.w);
  auto a = containment(full, plane, 1);
  auto b = containment(full, plane, 3);
  EXPECT_FALSE(a.holds);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Quadric, ExportShape) {
  const auto& d = data();
  auto k = curvature_space(d.q7, model().g2);
  auto j = export_curvature(k);
  EXPECT_EQ(j["basis"].size(), 77u);
  EXPECT_EQ(j["pair_order"].size(), 21u);
}
