#include "exholo/holo.hpp"

#include <algorithm>

namespace exholo::holo {

using report::expect_eq;
using report::expect_true;
using report::record;

namespace {

void normalize_leading(Mat& m) {
  const auto& e = m.entries();
  auto lead = std::find_if(e.begin(), e.end(), [](const Scalar& s) { return sgn(s) != 0; });
  if (lead == e.end()) throw CertificationError("normalize: zero matrix");
  m *= 1 / Scalar(*lead);
}

Mat h_block(const GradedRepSpec& spec, std::size_t g) {
  auto gen = static_cast<sl2::Generator>(g % 3);
  return exact::block_diag(spec.v0.action(g / 3, gen), spec.v1.action(g / 3, gen));
}

bool bracket_relation_holds(const lie::Representation& r) {
  const auto& l = r.algebra();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      if (r.act(l.bracket_basis(i, j)) != exact::commutator(r.action(i), r.action(j))) return false;
  return true;
}

json vec_json(std::span<const Scalar> v) { return exact::to_json(v); }

Scalar pair(const Mat& b, std::span<const Scalar> x, std::span<const Scalar> y) { return exact::dot(x, b * y); }

}  // namespace

// -------------------------------------------------------- graded reps

GradedRep solve_graded_rep(const GradedRepSpec& spec) {
  const auto& sd = *spec.base;
  const auto& p = sd.p_module;
  if (spec.v0.k() != p.k() || spec.v1.k() != p.k())
    throw UsageError("solve_graded_rep: summands must be modules over the same sl(2)^k");
  const std::size_t n = p.dim(), d0 = spec.v0.dim(), d1 = spec.v1.dim(), d = d0 + d1;

  auto pv0 = sl2::internal_tensor(p, spec.v0);
  auto pv1 = sl2::internal_tensor(p, spec.v1);
  if (!sl2::equivariant_maps(pv0, spec.v0).empty() || !sl2::equivariant_maps(pv1, spec.v1).empty())
    throw CertificationError(spec.name + ": a diagonal p-block is allowed by equivariance");
  auto m01 = sl2::equivariant_maps(pv0, spec.v1);
  auto m10 = sl2::equivariant_maps(pv1, spec.v0);
  if (m01.size() != 1 || m10.size() != 1)
    throw CertificationError(spec.name + ": off-diagonal block spaces have dimensions " +
                             std::to_string(m01.size()) + ", " + std::to_string(m10.size()) + " (expected 1, 1)");
  Mat phi01 = m01[0], phi10 = m10[0];
  normalize_leading(phi01);
  normalize_leading(phi10);

  std::vector<Mat> b01(n, Mat(d1, d0)), b10(n, Mat(d0, d1));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t i = 0; i < d0; ++i) b01[a](r, i) = phi01(r, a * d0 + i);
    for (std::size_t r = 0; r < d0; ++r)
      for (std::size_t i = 0; i < d1; ++i) b10[a](r, i) = phi10(r, a * d1 + i);
  }
  std::vector<Mat> hb;
  for (std::size_t g = 0; g < sd.h_dim; ++g) hb.push_back(h_block(spec, g));

  // [rho(p_a), rho(p_b)] = lambda * M(a,b) must equal rho_h(eta(a,b)) = N(a,b)
  std::optional<Scalar> lambda;
  std::vector<std::pair<Mat, Mat>> equations;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Mat m = exact::block_diag(b10[a] * b01[b] - b10[b] * b01[a], b01[a] * b10[b] - b01[b] * b10[a]);
      Mat rhs(d, d);
      for (std::size_t g = 0; g < sd.h_dim; ++g)
        if (sgn(sd.eta.at(g, a, b)) != 0) rhs += hb[g] * sd.eta.at(g, a, b);
      if (!lambda)
        for (std::size_t i = 0; i < d * d && !lambda; ++i)
          if (sgn(m.entries()[i]) != 0) lambda = rhs.entries()[i] / m.entries()[i];
      equations.emplace_back(std::move(m), std::move(rhs));
    }
  if (!lambda || sgn(*lambda) == 0)
    throw CertificationError(spec.name + ": bracket condition does not pin a nonzero block product");
  for (const auto& [m, rhs] : equations)
    if (m * *lambda != rhs) throw CertificationError(spec.name + ": bracket condition is inconsistent");

  std::vector<Mat> actions = hb;
  for (std::size_t a = 0; a < n; ++a) {
    Mat x(d, d);
    for (std::size_t r = 0; r < d0; ++r)
      for (std::size_t i = 0; i < d1; ++i) x(r, d0 + i) = b10[a](r, i) * *lambda;
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t i = 0; i < d0; ++i) x(d0 + r, i) = b01[a](r, i);
    actions.push_back(std::move(x));
  }
  GradedRep out;
  out.rep = lie::Representation(sd.algebra, std::move(actions));
  out.lambda = *lambda;
  out.dim0 = d0;
  out.dim1 = d1;
  return out;
}

GradedRepSpec vector_spec(std::shared_ptr<const symdec::SymmetricDecomposition> so7) {
  std::vector<unsigned> w0{2, 0, 0}, w1{0, 1, 1};
  return {"vector representation", std::move(so7), sl2::irrep_product(w0), sl2::irrep_product(w1)};
}

GradedRepSpec spin_spec(std::shared_ptr<const symdec::SymmetricDecomposition> so7) {
  // U^1 (x) U^3 and U^2 (x) U^4 over sl(2)^4, pulled back along (A1, A2, A3) -> (A1, A1, A2, A3)
  std::vector<unsigned> w13{1, 0, 1, 0}, w24{0, 1, 0, 1};
  std::vector<std::size_t> assignment{0, 0, 1, 2};
  return {"spin representation", std::move(so7), sl2::branch(sl2::irrep_product(w13), assignment, 3),
          sl2::branch(sl2::irrep_product(w24), assignment, 3)};
}

std::array<GradedRepSpec, 3> triality_specs(std::shared_ptr<const symdec::SymmetricDecomposition> so8) {
  const std::array<std::array<std::size_t, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::array<GradedRepSpec, 3> out;
  for (std::size_t t = 0; t < 3; ++t) {
    std::vector<unsigned> w0(4, 0), w1(4, 0);
    w0[pairs[t][0]] = w0[pairs[t][1]] = 1;
    w1[pairs[t][2]] = w1[pairs[t][3]] = 1;
    out[t] = {"triality representation " + std::to_string(t + 1), so8, sl2::irrep_product(w0), sl2::irrep_product(w1)};
  }
  return out;
}

// ------------------------------------------------------- cross product

Vec CrossProduct::cross(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar t = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(at(k, i, j)) != 0) out[k] += t * at(k, i, j);
    }
  }
  return out;
}

Mat CrossProduct::left(std::span<const Scalar> x) const {
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec c = cross(x, exact::unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c[k];
  }
  return m;
}

json CrossProduct::to_json() const {
  json j;
  j["dim"] = n;
  json entries = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(at(k, i, jj)) != 0) {
          json e;
          e["i"] = i;
          e["j"] = jj;
          e["k"] = k;
          e["value"] = exact::to_string(at(k, i, jj));
          entries.push_back(std::move(e));
        }
  j["entries"] = std::move(entries);
  j["form"] = exact::to_json(form);
  j["lambda"] = exact::to_string(lambda);
  return j;
}

// --------------------------------------------------------------- model

Mat unique_intertwiner(std::span<const Mat> from, std::span<const Mat> to, const std::string& what) {
  auto maps = exact::intertwiners(from, to);
  if (maps.size() != 1)
    throw CertificationError(what + ": intertwiner space has dimension " + std::to_string(maps.size()));
  Mat t = std::move(maps[0]);
  normalize_leading(t);
  return t;
}

lie::Representation restrict(const lie::Representation& r, const Subspace& s,
                             std::shared_ptr<const lie::LieAlgebra> sub) {
  if (!sub) sub = std::make_shared<const lie::LieAlgebra>(lie::subalgebra_from_subspace(r.algebra(), s));
  return r.restrict_to(std::move(sub), s);
}

std::pair<Vec, std::string> choose_non_null(const Mat& form) {
  const std::size_t n = form.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(form(i, i)) != 0) return {exact::unit_vector(n, i), "e" + std::to_string(i)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (sgn(form(i, i) + 2 * form(i, j) + form(j, j)) != 0) {
        Vec v = exact::unit_vector(n, i);
        v[j] = 1;
        return {v, "e" + std::to_string(i) + " + e" + std::to_string(j) + " (every weight vector is null)"};
      }
  throw CertificationError("choose_non_null: form vanishes on all candidates");
}

namespace {

// ad of each subalgebra basis element on an invariant subspace, in its canonical coordinates.
std::vector<Mat> adjoint_on(const lie::LieAlgebra& l, const Subspace& acting, const Subspace& target) {
  std::vector<Mat> out;
  for (std::size_t a = 0; a < acting.dim(); ++a) {
    Mat m(target.dim(), target.dim());
    for (std::size_t c = 0; c < target.dim(); ++c) {
      Vec coords = target.coordinates(l.bracket(acting.basis().row(a), target.basis().row(c)));
      for (std::size_t r = 0; r < target.dim(); ++r) m(r, c) = coords[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> actions_on(const lie::Representation& r, const Subspace& acting) {
  std::vector<Mat> out;
  for (std::size_t a = 0; a < acting.dim(); ++a) out.push_back(r.act(acting.basis().row(a)));
  return out;
}

}  // namespace

HoloModel build_model() {
  HoloModel m;
  m.so7 = std::make_shared<const symdec::SymmetricDecomposition>(symdec::standard_model("so(7)"));
  m.so7_algebra = m.so7->algebra;
  m.vec = solve_graded_rep(vector_spec(m.so7));
  m.spin = solve_graded_rep(spin_spec(m.so7));
  m.form7 = lie::normalized_invariant_form(m.vec.rep);
  m.form8 = lie::normalized_invariant_form(m.spin.rep);

  std::tie(m.spinor, m.spinor_choice) = choose_non_null(m.form8);
  m.g2 = lie::invariance_subalgebra(m.spin.rep, lie::FixVector{m.spinor});
  if (m.g2.dim() != 14)
    throw CertificationError("spinor annihilator has dimension " + std::to_string(m.g2.dim()) + ", expected 14");
  m.g2_algebra = std::make_shared<const lie::LieAlgebra>(lie::subalgebra_from_subspace(*m.so7_algebra, m.g2));

  // Killing complement: {y : K(x, y) = 0 for x in g2}
  Mat killing = lie::killing_form(*m.so7_algebra);
  m.complement = exact::kernel(m.g2.basis() * killing);
  if (m.complement.dim() != 7)
    throw CertificationError("Killing complement has dimension " + std::to_string(m.complement.dim()));

  auto on_p = adjoint_on(*m.so7_algebra, m.g2, m.complement);
  auto on_v = actions_on(m.vec.rep, m.g2);
  m.iota = unique_intertwiner(on_v, on_p, "V7 -> complement");
  Mat iota_inv = exact::inverse(m.iota);

  // p-component of a vector of so(7): coordinates in the basis [g2; complement]
  Mat basis = exact::vstack(m.g2.basis(), m.complement.basis());
  Mat basis_inv = exact::inverse(basis);
  const std::size_t n = 7, gd = m.g2.dim();
  std::vector<Vec> lifted(n);
  for (std::size_t i = 0; i < n; ++i) lifted[i] = exact::row_times(m.iota.col_vec(i), m.complement.basis());

  CrossProduct& c = m.cross;
  c.n = n;
  c.entries.assign(n * n * n, Scalar(0));
  c.form = m.form7;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = m.so7_algebra->bracket(lifted[i], lifted[j]);
      Vec coords = exact::row_times(w, basis_inv);
      Vec pc(coords.begin() + static_cast<long>(gd), coords.end());
      Vec x = iota_inv * pc;
      for (std::size_t k = 0; k < n; ++k) c.entries[(k * n + i) * n + j] = x[k];
    }
  if (exact::is_zero(c.entries)) throw CertificationError("torsion of the reductive decomposition vanishes");

  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j) {
      Scalar den = m.form7(i, i) * m.form7(j, j) - m.form7(i, j) * m.form7(i, j);
      if (sgn(den) == 0) continue;
      Vec x = c.cross(exact::unit_vector(n, i), exact::unit_vector(n, j));
      c.lambda = pair(m.form7, x, x) / den;
      found = true;
    }
  if (!found) throw CertificationError("no basis pair with nonzero Gram determinant");
  return m;
}

// --------------------------------------------------------- certificates

Certificate representations_certificate(const HoloModel& m) {
  Certificate c;
  auto one = [&](const std::string& tag, const GradedRep& g, std::size_t dim, const Mat& form) {
    c.push_back(expect_eq(tag + ": dimension", dim, g.rep.dim(), {{"summands", {g.dim0, g.dim1}}}));
    c.push_back(expect_true(tag + ": exact bracket relation on all generator pairs", bracket_relation_holds(g.rep)));
    c.push_back(expect_eq(tag + ": commutant dimension", 1, lie::commutant_dimension(g.rep)));
    c.push_back(expect_eq(tag + ": invariant symmetric forms", 1, lie::invariant_symmetric_forms(g.rep).size()));
    c.push_back(expect_eq(tag + ": invariant form rank (nondegenerate)", dim, exact::rank(form)));
    c.push_back(expect_eq(tag + ": invariant antisymmetric forms", 0, lie::invariant_antisymmetric_forms(g.rep).size()));
    c.push_back(record(tag + ": pinned block product", exact::to_string(g.lambda)));
  };
  one("vector representation", m.vec, 7, m.form7);
  one("spin representation", m.spin, 8, m.form8);
  return c;
}

Certificate g2_certificate(const HoloModel& m) {
  Certificate c;
  c.push_back(record("non-null spinor s", vec_json(m.spinor), {{"choice", m.spinor_choice}}));
  c.push_back(expect_true("s is non-null", sgn(pair(m.form8, m.spinor, m.spinor)) != 0,
                          {{"norm", exact::to_string(pair(m.form8, m.spinor, m.spinor))}}));
  c.push_back(expect_eq("spinor annihilator: dimension", 14, m.g2.dim()));
  c.push_back(expect_true("spinor annihilator: bracket-closed", lie::is_bracket_closed(*m.so7_algebra, m.g2)));
  auto s = lie::summarize(*m.g2_algebra);
  c.push_back(expect_true("spinor annihilator: simple", s.simple));
  c.push_back(expect_eq("spinor annihilator: rank", 2, s.rank));
  c.push_back(expect_eq("spinor annihilator: label", "g2", s.label));

  auto spin_g2 = restrict(m.spin.rep, m.g2, m.g2_algebra);
  c.push_back(expect_eq("spin representation on g2: commutant dimension (1 + 7 split)", 2,
                        lie::commutant_dimension(spin_g2)));
  c.push_back(expect_true("spin representation on g2: invariant vectors are exactly <s>",
                          lie::invariant_vectors(spin_g2) == Subspace::span({m.spinor}, 8)));
  auto vec_g2 = restrict(m.vec.rep, m.g2, m.g2_algebra);
  c.push_back(expect_eq("vector representation on g2: commutant dimension (irreducible)", 1,
                        lie::commutant_dimension(vec_g2)));

  c.push_back(expect_eq("Killing complement: dimension", 7, m.complement.dim()));
  c.push_back(expect_true("Killing complement: [g2, p] in p",
                          lie::brackets_into(*m.so7_algebra, m.g2, m.complement, m.complement)));
  auto on_p = adjoint_on(*m.so7_algebra, m.g2, m.complement);
  auto on_v = actions_on(m.vec.rep, m.g2);
  c.push_back(expect_eq("Hom_g2(p, V7) dimension", 1, exact::intertwiners(on_p, on_v).size()));
  return c;
}

Certificate cross_certificate(const HoloModel& m) {
  Certificate c;
  const auto& x = m.cross;
  const std::size_t n = x.n;
  const Mat& b = x.form;
  std::size_t nonzero = 0;
  bool antisym = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        nonzero += sgn(x.at(k, i, j)) != 0;
        if (x.at(k, i, j) != -x.at(k, j, i)) antisym = false;
      }
  c.push_back(expect_true("torsion is nonzero", nonzero > 0, {{"nonzero_entries", nonzero}}));
  c.push_back(expect_true("x × y = -y × x", antisym));

  // phi(i,j,k) = B(e_i × e_j, e_k); B(x × y, x) = 0 for all x, y iff phi is antisymmetric in (i, k)
  std::vector<Vec> prods(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods[i * n + j] = x.cross(exact::unit_vector(n, i), exact::unit_vector(n, j));
  auto phi = [&](std::size_t i, std::size_t j, std::size_t k) { return exact::dot(prods[i * n + j], b.row(k)); };
  bool orth = true;
  for (std::size_t i = 0; i < n && orth; ++i)
    for (std::size_t j = 0; j < n && orth; ++j)
      for (std::size_t k = 0; k < n && orth; ++k)
        if (phi(i, j, k) != -phi(k, j, i)) orth = false;
  c.push_back(expect_true("B(x × y, x) = 0 (trilinear expansion on all basis triples)", orth));

  bool equivariant = true;
  for (std::size_t a = 0; a < m.g2.dim() && equivariant; ++a) {
    Mat r = m.vec.rep.act(m.g2.basis().row(a));
    for (std::size_t i = 0; i < n && equivariant; ++i)
      for (std::size_t j = 0; j < n && equivariant; ++j) {
        Vec lhs = r * prods[i * n + j];
        Vec rhs = exact::axpy(1, x.cross(r.col_vec(i), exact::unit_vector(n, j)),
                              x.cross(exact::unit_vector(n, i), r.col_vec(j)));
        if (lhs != rhs) equivariant = false;
      }
  }
  c.push_back(expect_true("g2 acts by derivations of ×", equivariant));

  c.push_back(expect_true("composition constant lambda is nonzero", sgn(x.lambda) != 0,
                          {{"lambda", exact::to_string(x.lambda)}}));
  bool uniform = true;
  std::size_t used = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& p = prods[i * n + j];
      Scalar lhs = pair(b, p, p);
      Scalar den = b(i, i) * b(j, j) - b(i, j) * b(i, j);
      used += sgn(den) != 0;
      if (lhs != x.lambda * den) uniform = false;
    }
  c.push_back(expect_true("B(x×y, x×y) = lambda (B(x,x)B(y,y) - B(x,y)^2) on all basis pairs", uniform,
                          {{"pairs_with_nonzero_gram", used}}));
  // full polarization in (x, x) and (y, y): the identity then holds for all x, y
  auto f = [&](std::size_t a, std::size_t bb, std::size_t cc, std::size_t d) -> Scalar {
    return pair(b, prods[a * n + cc], prods[bb * n + d]) - x.lambda * (b(a, bb) * b(cc, d) - b(a, cc) * b(bb, d));
  };
  bool polarized = true;
  for (std::size_t a = 0; a < n && polarized; ++a)
    for (std::size_t bb = a; bb < n && polarized; ++bb)
      for (std::size_t cc = 0; cc < n && polarized; ++cc)
        for (std::size_t d = cc; d < n && polarized; ++d)
          if (sgn(f(a, bb, cc, d) + f(bb, a, cc, d) + f(a, bb, d, cc) + f(bb, a, d, cc)) != 0) polarized = false;
  c.push_back(expect_true("composition law holds identically (polarized quartic identity)", polarized));
  c.push_back(record("composition constant lambda", exact::to_string(x.lambda)));
  return c;
}

Certificate thm17_check(const HoloModel& m) {
  Certificate c;
  auto gl7 = lie::defining_rep_gl(7);
  lie::MultilinearTensor t{7, 1, 2, m.cross.entries};
  Subspace stab = lie::invariance_subalgebra(gl7, lie::FixTensor{t});
  Subspace image_g2 = m.vec.rep.image_of(m.g2);
  Subspace image_so7 = m.vec.rep.image();
  c.push_back(expect_eq("stabilizer of × in gl(7): dimension", 14, stab.dim()));
  c.push_back(expect_true("stabilizer is contained in rho(so(7)) (automorphisms are skew)",
                          exact::is_subset(stab, image_so7)));
  c.push_back(expect_true("stabilizer equals rho(g2) as canonical subspaces", stab == image_g2));
  return c;
}

namespace {

sl2::IsotypicList restricted_triality(std::size_t which) {
  const std::array<std::array<std::size_t, 4>, 3> pairs{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  std::vector<unsigned> w0(4, 0), w1(4, 0);
  w0[pairs[which][0]] = w0[pairs[which][1]] = 1;
  w1[pairs[which][2]] = w1[pairs[which][3]] = 1;
  auto module = sl2::direct_sum(sl2::irrep_product(w0), sl2::irrep_product(w1));
  std::vector<std::size_t> assignment{0, 0, 1, 1};
  return sl2::decompose(sl2::branch(module, assignment, 2));
}

sl2::IsotypicList list(std::initializer_list<std::pair<std::vector<unsigned>, std::size_t>> entries) {
  sl2::IsotypicList out;
  for (const auto& [w, k] : entries) out.push_back({w, k});
  return out;
}

}  // namespace

Certificate triality_checks() {
  Certificate c;
  auto first = restricted_triality(0), second = restricted_triality(1), third = restricted_triality(2);
  c.push_back(expect_eq("first representation restricted to sl(2)+sl(2)",
                        sl2::to_json(list({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, 2}})), sl2::to_json(first)));
  c.push_back(expect_eq("second representation restricted to sl(2)+sl(2)", sl2::to_json(list({{{1, 1}, 2}})),
                        sl2::to_json(second)));
  c.push_back(expect_true("the two restrictions are distinct", first != second));
  c.push_back(expect_eq("dimension bookkeeping", json({8, 8}),
                        json({sl2::isotypic_dimension(first), sl2::isotypic_dimension(second)})));

  // the three modules are genuine so(8) representations
  auto so8 = std::make_shared<const symdec::SymmetricDecomposition>(symdec::standard_model("so(8)"));
  for (const auto& spec : triality_specs(so8)) {
    auto g = solve_graded_rep(spec);
    c.push_back(expect_eq(spec.name + " of so(8): dimension", 8, g.rep.dim()));
    c.push_back(expect_eq(spec.name + " of so(8): commutant dimension", 1, lie::commutant_dimension(g.rep)));
  }
  return c;
}

Certificate rem14_checks() {
  Certificate c;
  auto so5 = symdec::standard_model("so(5)");
  auto p = sl2::decompose(so5.p_module);
  auto first = restricted_triality(0);
  std::size_t trivial = 0;
  for (const auto& e : first)
    if (e.weights == std::vector<unsigned>{0, 0}) trivial = e.multiplicity;
  c.push_back(expect_eq("first restriction: trivial summand dimension", 2, trivial));
  c.push_back(expect_eq("first restriction: nontrivial part dimension", 6, sl2::isotypic_dimension(first) - trivial));
  c.push_back(expect_eq("p of so(5) = (1.1)", sl2::to_json(list({{{1, 1}, 1}})), sl2::to_json(p)));
  for (std::size_t which : {1u, 2u}) {
    auto r = restricted_triality(which);
    c.push_back(expect_eq(std::string(which == 1 ? "second" : "third") + " restriction is two copies of p of so(5)",
                          sl2::to_json(list({{p[0].weights, 2 * p[0].multiplicity}})), sl2::to_json(r)));
  }
  return c;
}

std::string chain_label(const lie::LieAlgebra& l) {
  auto s = lie::summarize(l);
  if (s.simple && s.dim == 3 && s.rank == 1) return "sl(2)";
  return s.label;
}

Certificate cor15_chain(const HoloModel& m) {
  Certificate c;
  const auto& so7 = *m.so7_algebra;
  const std::size_t n = 7;
  // w: the first weight vector of nonzero norm (the zero-weight vector of U_2)
  Vec w;
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    if (sgn(m.form7(i, i)) != 0) w = exact::unit_vector(n, i);
  if (w.empty()) throw CertificationError("cor15: no non-null weight vector");
  Subspace so6 = lie::invariance_subalgebra(m.vec.rep, lie::FixVector{w});
  c.push_back(record("non-null vector w", vec_json(w)));
  c.push_back(expect_eq("so(6) = stabilizer of w: dimension", 15, so6.dim()));
  c.push_back(expect_eq("so(6) label", "so(6)", chain_label(lie::subalgebra_from_subspace(so7, so6))));

  Subspace sl3 = exact::intersect(m.g2, so6);
  c.push_back(expect_eq("g2 ∩ so(6): dimension", 8, sl3.dim()));
  c.push_back(expect_eq("g2 ∩ so(6): label", "sl(3)", chain_label(lie::subalgebra_from_subspace(so7, sl3))));

  // w2 = e_mu + e_-mu for the first weight vector pairing nontrivially with another: B(w, w2) = 0, B(w2, w2) != 0
  Vec w2;
  for (std::size_t i = 0; i < n && w2.empty(); ++i)
    for (std::size_t j = i + 1; j < n && w2.empty(); ++j)
      if (sgn(m.form7(i, j)) != 0 && sgn(m.form7(i, i)) == 0 && sgn(m.form7(j, j)) == 0) {
        w2 = exact::unit_vector(n, i);
        w2[j] = 1;
      }
  if (w2.empty()) throw CertificationError("cor15: no hyperbolic pair of weight vectors");
  Mat gram{{0, 0}, {0, 0}};
  gram(0, 0) = pair(m.form7, w, w);
  gram(0, 1) = gram(1, 0) = pair(m.form7, w, w2);
  gram(1, 1) = pair(m.form7, w2, w2);
  c.push_back(record("second vector w2", vec_json(w2)));
  c.push_back(expect_true("<w, w2> is a nondegenerate 2-plane", sgn(exact::det(gram)) != 0));
  Subspace so5 = exact::intersect(so6, lie::invariance_subalgebra(m.vec.rep, lie::FixVector{w2}));
  c.push_back(expect_eq("so(5) = pointwise stabilizer of <w, w2>: dimension", 10, so5.dim()));
  c.push_back(expect_eq("so(5) label", "so(5)", chain_label(lie::subalgebra_from_subspace(so7, so5))));

  Subspace sl2s = exact::intersect(sl3, so5);
  c.push_back(expect_eq("sl(3) ∩ so(5): dimension", 3, sl2s.dim()));
  c.push_back(expect_eq("sl(3) ∩ so(5): label", "sl(2)", chain_label(lie::subalgebra_from_subspace(so7, sl2s))));

  // the decomposition so(5) = h5 + p5 with h5 = stabilizer of the third vector w × w2
  Vec u = m.cross.cross(w, w2);
  Subspace h5 = exact::intersect(so5, lie::invariance_subalgebra(m.vec.rep, lie::FixVector{u}));
  c.push_back(expect_true("u = w × w2 is non-null", sgn(pair(m.form7, u, u)) != 0));
  c.push_back(expect_eq("h5 = stabilizer of u in so(5): dimension", 6, h5.dim()));
  c.push_back(expect_true("sl(3) ∩ so(5) is an ideal of h5", lie::brackets_into(so7, h5, sl2s, sl2s)));
  // p5: Killing complement of h5 inside so(5)
  Mat killing = lie::killing_form(so7);
  Subspace p5 = exact::intersect(so5, exact::kernel(h5.basis() * killing));
  c.push_back(expect_eq("p5: dimension", 4, p5.dim()));
  c.push_back(expect_true("[h5, p5] in p5", lie::brackets_into(so7, h5, p5, p5)));
  auto sub = std::make_shared<const lie::LieAlgebra>(lie::subalgebra_from_subspace(so7, sl2s));
  lie::Representation on_p5(sub, adjoint_on(so7, sl2s, p5));
  // a 4-dim sl(2)-module with commutant of dimension 4 and no invariants is U_1 + U_1
  c.push_back(expect_eq("p5 over sl(3) ∩ so(5): commutant dimension", 4, lie::commutant_dimension(on_p5)));
  c.push_back(expect_eq("p5 over sl(3) ∩ so(5): invariant vectors", 0, lie::invariant_vectors(on_p5).dim()));
  return c;
}

Certificate diagonal_candidate(const HoloModel& m) {
  Certificate c;
  const auto& sd = *m.so7;
  // diagonal (A, A, B) in h
  std::vector<Vec> vs;
  const std::size_t dim = sd.algebra->dim();
  for (std::size_t g = 0; g < 3; ++g) {
    Vec v(dim);
    v[g] = 1;
    v[3 + g] = 1;
    vs.push_back(v);
    vs.push_back(exact::unit_vector(dim, 6 + g));
  }
  // U_3 (x) U_1-isotypic part of p under the diagonal
  std::vector<std::size_t> assignment{0, 0, 1};
  auto branched = sl2::branch(sd.p_module, assignment, 2);
  std::vector<unsigned> w{3, 1};
  for (const auto& t : sl2::equivariant_maps(sl2::irrep_product(w), branched))
    for (std::size_t col = 0; col < t.cols(); ++col) {
      Vec v(dim);
      for (std::size_t r = 0; r < t.rows(); ++r) v[sd.h_dim + r] = t(r, col);
      vs.push_back(v);
    }
  Subspace cand = Subspace::span(vs, dim);
  bool closed = lie::is_bracket_closed(*sd.algebra, cand);
  c.push_back(record("diagonal candidate: dimension", cand.dim()));
  c.push_back(record("diagonal candidate: bracket-closed", closed));
  return c;
}

}  // namespace exholo::holo
