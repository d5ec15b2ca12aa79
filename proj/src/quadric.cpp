#include "exholo/quadric.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace exholo::quadric {

using report::expect_eq;
using report::expect_true;
using report::record;

namespace {

json vec_json(std::span<const Scalar> v) { return exact::to_json(v); }

// v -> A v for every basis vector of s, spanned.
Subspace apply(const Mat& a, const Subspace& s) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(a * s.basis().row(i));
  return Subspace::span(out, a.rows());
}

bool invariant_under(std::span<const Mat> actions, const Subspace& s) {
  for (const auto& a : actions)
    for (std::size_t i = 0; i < s.dim(); ++i)
      if (!s.contains(a * s.basis().row(i))) return false;
  return true;
}

std::vector<Mat> actions_of(const lie::Representation& r, const Subspace& sub) {
  std::vector<Mat> out;
  for (std::size_t a = 0; a < sub.dim(); ++a) out.push_back(r.act(sub.basis().row(a)));
  return out;
}

std::optional<Scalar> rational_sqrt(Scalar q) {
  q.canonicalize();
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class num = sqrt(q.get_num()), den = sqrt(q.get_den());
  return Scalar(num) / Scalar(den);
}

// Linear functionals cutting out s, as matrix rows.
Mat equations_of(const Subspace& s) {
  Subspace ann = s.annihilator();
  return ann.basis();
}

}  // namespace

// ------------------------------------------------------ quadratic spaces

Scalar QuadraticSpace::pair(std::span<const Scalar> x, std::span<const Scalar> y) const {
  return exact::dot(x, form * y);
}

bool QuadraticSpace::is_isotropic(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j)
      if (sgn(pair(s.basis().row(i), s.basis().row(j))) != 0) return false;
  return true;
}

Subspace QuadraticSpace::orthocomplement(const Subspace& s) const {
  if (s.dim() == 0) return Subspace::full(dim());
  return exact::kernel(s.basis() * form);
}

QuadraticSpace quadratic_space(lie::Representation r, std::vector<std::size_t> cartan) {
  QuadraticSpace q;
  q.form = lie::normalized_invariant_form(r);
  if (exact::rank(q.form) != r.dim()) throw CertificationError("quadratic_space: invariant form is degenerate");
  q.rep = std::move(r);
  q.cartan = std::move(cartan);
  return q;
}

std::vector<std::size_t> cartan_indices(const symdec::SymmetricDecomposition& sd) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < sd.h_dim / 3; ++j) out.push_back(3 * j + 2);
  return out;
}

NullCatalogue null_basis_points(const QuadraticSpace& q) {
  if (q.cartan.empty()) throw UsageError("null_basis_points: no Cartan subalgebra recorded");
  const std::size_t n = q.dim();
  for (std::size_t h : q.cartan)
    if (!q.rep.action(h).is_diagonal()) throw UsageError("null_basis_points: Cartan element is not diagonal");
  NullCatalogue c;
  for (std::size_t i = 0; i < n; ++i) {
    bool nonzero_weight = false;
    for (std::size_t h : q.cartan) nonzero_weight |= sgn(q.rep.action(h)(i, i)) != 0;
    if (!nonzero_weight) continue;
    if (sgn(q.form(i, i)) != 0) throw CertificationError("weight vector of nonzero weight is not null");
    c.null_weight_vectors.push_back(i);
  }
  std::vector<std::size_t> chosen;
  for (std::size_t i : c.null_weight_vectors) {
    bool orthogonal = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return sgn(q.form(i, j)) == 0; });
    if (!orthogonal) continue;
    chosen.push_back(i);
    std::vector<Vec> vs;
    for (std::size_t j : chosen) vs.push_back(exact::unit_vector(n, j));
    Subspace plane = Subspace::span(vs, n);
    if (!q.is_isotropic(plane)) throw CertificationError("null_basis_points: assembled plane is not isotropic");
    c.planes.push_back(std::move(plane));
  }
  return c;
}

Subspace standard_isotropic_plane(const QuadraticSpace& q, std::size_t k) {
  auto c = null_basis_points(q);
  if (k == 0 || k > c.planes.size())
    throw CertificationError("no standard isotropic plane of dimension " + std::to_string(k) + " (maximum " +
                             std::to_string(c.planes.size()) + ")");
  return c.planes[k - 1];
}

// ------------------------------------------------------- planes from v

Subspace cross_plane(const holo::CrossProduct& cross, std::span<const Scalar> v) {
  const std::size_t n = cross.n;
  Mat left = cross.left(v);
  Mat ann = equations_of(Subspace::span({Vec(v.begin(), v.end())}, n));
  return exact::kernel(ann * left);
}

Subspace cross_kernel(const holo::CrossProduct& cross, std::span<const Scalar> v) {
  return exact::kernel(cross.left(v));
}

NullPlane null_plane(const holo::HoloModel& m, const QuadraticSpace& q7, std::span<const Scalar> v) {
  NullPlane p;
  p.v.assign(v.begin(), v.end());
  p.l = exact::intersect(m.g2, lie::invariance_subalgebra(m.vec.rep, lie::FixLine{p.v}));
  p.formula = cross_plane(m.cross, v);
  p.formula_ok = p.formula.dim() == 3 && q7.is_isotropic(p.formula) && p.formula.contains(v);
  p.invariant_planes = invariant_isotropic_planes(q7, actions_of(m.vec.rep, p.l), 3);
  p.kernel = cross_kernel(m.cross, v);
  if (p.formula_ok) {
    p.w = p.formula;
    p.route = "candidate formula";
  } else if (p.invariant_planes.size() == 1) {
    p.w = p.invariant_planes[0];
    p.route = "unique invariant isotropic plane (candidate formula has dimension " +
              std::to_string(p.formula.dim()) + ")";
  } else {
    p.w = Subspace::zero(q7.dim());
    p.route = "unresolved";
  }
  return p;
}

Subspace cyclic_submodule(std::span<const Mat> actions, std::span<const Scalar> v) {
  const std::size_t n = v.size();
  Subspace s = Subspace::span({Vec(v.begin(), v.end())}, n);
  while (true) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      vs.push_back(s.vector(i));
      for (const auto& a : actions) vs.push_back(a * s.basis().row(i));
    }
    Subspace next = Subspace::span(vs, n);
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

std::vector<Subspace> invariant_isotropic_planes(const QuadraticSpace& q, std::span<const Mat> actions,
                                                 std::size_t k) {
  const std::size_t n = q.dim();
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < n; ++i) seeds.push_back(exact::unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int sign : {1, -1}) {
        Vec v = exact::unit_vector(n, i);
        v[j] = sign;
        seeds.push_back(std::move(v));
      }
  std::vector<Subspace> out;
  for (const auto& v : seeds) {
    Subspace s = cyclic_submodule(actions, v);
    if (s.dim() != k || !q.is_isotropic(s)) continue;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

// --------------------------------------------------- isotropy (3 cases)

IsotropyData isotropy_data(const holo::HoloModel& m) {
  IsotropyData d;
  auto cartan = cartan_indices(*m.so7);
  d.q7 = quadratic_space(m.vec.rep, cartan);
  d.q8 = quadratic_space(m.spin.rep, cartan);
  const auto& so7 = *m.so7_algebra;

  // case i: stabilizer of a standard isotropic 3-plane and the pure spinor line it fixes
  d.w0 = standard_isotropic_plane(d.q7, 3);
  d.l1 = lie::invariance_subalgebra(m.vec.rep, lie::FixSubspace{d.w0});
  Subspace derived = lie::derived_span(so7, d.l1);
  exact::RowReducer red(8);
  for (std::size_t a = 0; a < derived.dim(); ++a) {
    Mat x = m.spin.rep.act(derived.basis().row(a));
    for (std::size_t r = 0; r < 8; ++r) red.add(x.row(r));
  }
  d.s0 = exact::kernel_of(red);
  if (d.s0.dim() == 1) d.l2 = lie::invariance_subalgebra(m.spin.rep, lie::FixLine{d.s0.vector(0)});

  // case ii: the highest-weight null vector and its plane W(v0)
  auto nulls = null_basis_points(d.q7).null_weight_vectors;
  if (nulls.empty()) throw CertificationError("no null weight vector in V7");
  d.v0 = exact::unit_vector(7, nulls.front());
  d.p0 = null_plane(m, d.q7, d.v0);
  d.l = d.p0.l;
  d.w = d.p0.w;
  if (d.w.dim() != 3) throw CertificationError("W(v0) could not be resolved: " + d.p0.route);

  // case iii: S = J(W) + <s + c a0>
  auto g2_on_v7 = actions_of(m.vec.rep, m.g2);
  auto g2_on_v8 = actions_of(m.spin.rep, m.g2);
  d.j = holo::unique_intertwiner(g2_on_v7, g2_on_v8, "V7 -> V8 over g2");
  Subspace w8 = apply(d.j, d.w);
  Subspace s_perp = d.q8.orthocomplement(Subspace::span({m.spinor}, 8));
  Subspace candidates = exact::intersect(d.q8.orthocomplement(w8), s_perp);
  for (std::size_t i = 0; i < candidates.dim() && d.a0.empty(); ++i)
    if (!w8.contains(candidates.basis().row(i))) d.a0 = candidates.vector(i);
  if (d.a0.empty()) throw CertificationError("case iii: W8-perp inside s-perp equals W8");
  Scalar na = d.q8.pair(d.a0, d.a0), ns = d.q8.pair(m.spinor, m.spinor);
  if (sgn(na) == 0) throw CertificationError("case iii: complementary vector a0 is null");
  auto c = rational_sqrt(-ns / na);
  if (!c) throw CertificationError("case iii: -B(s,s)/B(a0,a0) = " + exact::to_string(-ns / na) +
                                   " is not a rational square");
  d.c = *c;
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < w8.dim(); ++i) vs.push_back(w8.vector(i));
  vs.push_back(exact::axpy(d.c, d.a0, m.spinor));
  d.s = Subspace::span(vs, 8);
  return d;
}

Certificate prop21_case_i(const holo::HoloModel& m, const IsotropyData& d) {
  Certificate c;
  c.push_back(record("W0: standard isotropic 3-plane in V7", exact::to_json(d.w0)));
  c.push_back(expect_true("W0 is isotropic", d.q7.is_isotropic(d.w0)));
  c.push_back(expect_eq("L1 = stabilizer of W0 in so(7): dimension", 15, d.l1.dim()));
  c.push_back(expect_eq("dim L1 + dim OG(3,7) = dim so(7)", 21, d.l1.dim() + (3 * 4 - 6)));
  c.push_back(expect_eq("joint kernel of [L1, L1] on the spin space: dimension (unique invariant line)", 1,
                        d.s0.dim(), {{"kernel", exact::to_json(d.s0)}}));
  if (d.s0.dim() != 1) return c;
  Vec s0 = d.s0.vector(0);
  c.push_back(record("s0", vec_json(s0)));
  c.push_back(expect_true("s0 is null", sgn(d.q8.pair(s0, s0)) == 0));
  c.push_back(expect_true("L1 preserves the line <s0>", invariant_under(actions_of(m.spin.rep, d.l1), d.s0)));
  c.push_back(expect_eq("L2 = line isotropy of s0 in so(7): dimension", 15, d.l2.dim()));
  c.push_back(expect_eq("dim L2 + dim Q^6 = dim so(7)", 21, d.l2.dim() + 6));
  c.push_back(expect_true("L1 = L2 as canonical subspaces", d.l1 == d.l2));
  return c;
}

Certificate prop21_case_ii(const holo::HoloModel& m, const IsotropyData& d) {
  Certificate c;
  c.push_back(record("v0: highest-weight null vector of V7", vec_json(d.v0)));
  c.push_back(expect_true("v0 is null", sgn(d.q7.pair(d.v0, d.v0)) == 0));
  c.push_back(expect_eq("l = line isotropy of v0 in g2: dimension", 9, d.l.dim()));
  c.push_back(expect_eq("dim l + dim Q^5 = dim g2", 14, d.l.dim() + 5));
  c.push_back(record("candidate {w : (v0 × w) ∧ v0 = 0}: dimension", d.p0.formula.dim(),
                     {{"subspace", exact::to_json(d.p0.formula)}, {"isotropic_3_plane", d.p0.formula_ok}}));
  c.push_back(expect_eq("l-invariant isotropic 3-planes generated by one vector", 1, d.p0.invariant_planes.size()));
  c.push_back(record("W(v0)", exact::to_json(d.w), {{"route", d.p0.route}}));
  c.push_back(expect_eq("W(v0): dimension", 3, d.w.dim()));
  c.push_back(expect_true("W(v0) is isotropic", d.q7.is_isotropic(d.w)));
  c.push_back(expect_true("v0 ∈ W(v0)", d.w.contains(d.v0)));
  Subspace stab_w = exact::intersect(m.g2, lie::invariance_subalgebra(m.vec.rep, lie::FixSubspace{d.w}));
  c.push_back(expect_true("l = g2 ∩ stabilizer(W(v0)) as canonical subspaces", d.l == stab_w,
                          {{"stabilizer_dim", stab_w.dim()}}));
  c.push_back(expect_true("W(v0) = {w : v0 × w = 0}", d.w == d.p0.kernel));
  return c;
}

Certificate prop21_case_iii(const holo::HoloModel& m, const IsotropyData& d) {
  Certificate c;
  c.push_back(record("J: V7 -> V8 (g2-intertwiner)", exact::to_json(d.j)));
  c.push_back(record("complementary vector a0 and coefficient c", vec_json(d.a0), {{"c", exact::to_string(d.c)}}));
  c.push_back(record("S = J(W(v0)) + <s + c a0>", exact::to_json(d.s)));
  c.push_back(expect_eq("S: dimension", 4, d.s.dim()));
  c.push_back(expect_true("S is isotropic", d.q8.is_isotropic(d.s)));
  c.push_back(expect_true("S is invariant under l", invariant_under(actions_of(m.spin.rep, d.l), d.s)));
  Subspace stab_s = exact::intersect(m.g2, lie::invariance_subalgebra(m.spin.rep, lie::FixSubspace{d.s}));
  c.push_back(expect_true("g2 ∩ stabilizer(S) = l as canonical subspaces", stab_s == d.l,
                          {{"stabilizer_dim", stab_s.dim()}}));
  return c;
}

// ----------------------------------------------------- curvature space

Vec CurvatureSpace::apply(std::size_t r, std::span<const Scalar> x, std::span<const Scalar> y,
                          std::span<const Scalar> z) const {
  const std::size_t m = generators.size(), n = q->dim();
  const Mat& cm = coefficients[r];
  Vec bx(m);
  for (std::size_t a = 0; a < m; ++a) bx[a] = exact::dot(x, beta[a] * y);
  Vec out(n);
  for (std::size_t b = 0; b < m; ++b) {
    Scalar w;
    for (std::size_t a = 0; a < m; ++a)
      if (sgn(cm(a, b)) != 0 && sgn(bx[a]) != 0) w += cm(a, b) * bx[a];
    if (sgn(w) != 0) out = exact::axpy(w, generators[b] * z, out);
  }
  return out;
}

Mat CurvatureSpace::pair_matrix(std::size_t r) const {
  const std::size_t n = q->dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Mat out(pairs.size(), pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (std::size_t k = 0; k < n; ++k) {
      Vec rz = apply(r, exact::unit_vector(n, i), exact::unit_vector(n, j), exact::unit_vector(n, k));
      Vec brz = exact::row_times(rz, q->form);
      for (std::size_t pp = 0; pp < pairs.size(); ++pp)
        if (pairs[pp].first == k) out(p, pp) = brz[pairs[pp].second];
    }
  }
  return out;
}

CurvatureSpace curvature_space(const QuadraticSpace& q, const Subspace& hol) {
  const auto& alg = q.rep.algebra();
  if (hol.ambient_dim() != alg.dim()) throw UsageError("curvature_space: holonomy subspace has wrong ambient");
  if (!lie::is_bracket_closed(alg, hol)) throw UsageError("curvature_space: holonomy is not a subalgebra");
  CurvatureSpace k;
  k.q = &q;
  k.hol = hol;
  const std::size_t n = q.dim(), m = hol.dim();
  for (std::size_t a = 0; a < m; ++a) {
    Mat x = q.rep.act(hol.basis().row(a));
    Mat bx = q.form * x;
    if (bx.transpose() != bx * Scalar(-1)) throw UsageError("curvature_space: holonomy is not B-skew");
    k.beta.push_back(x.transpose() * q.form);
    k.generators.push_back(std::move(x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) unknowns.emplace_back(a, b);
  k.unknowns = unknowns.size();

  // Bianchi: sum over cyclic (x, y, z) of R(x, y) z = 0, for x < y < z
  exact::RowReducer red(k.unknowns);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const std::array<std::array<std::size_t, 3>, 3> cyc{{{x, y, z}, {y, z, x}, {z, x, y}}};
        for (std::size_t t = 0; t < n && !red.full(); ++t) {
          exact::SparseRow row;
          for (std::size_t u = 0; u < unknowns.size(); ++u) {
            auto [a, b] = unknowns[u];
            Scalar coeff;
            for (const auto& [p, r, s] : cyc) {
              coeff += k.beta[a](p, r) * k.generators[b](t, s);
              if (a != b) coeff += k.beta[b](p, r) * k.generators[a](t, s);
            }
            if (sgn(coeff) != 0) row.emplace_back(u, coeff);
          }
          if (!row.empty()) red.add(row);
        }
      }
  k.bianchi_rank = red.rank();
  k.kernel = exact::kernel_of(red);
  for (std::size_t r = 0; r < k.kernel.dim(); ++r) {
    Mat c(m, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [a, b] = unknowns[u];
      c(a, b) = c(b, a) = k.kernel.basis()(r, u);
    }
    k.coefficients.push_back(std::move(c));
  }
  return k;
}

ContainmentResult containment(const CurvatureSpace& k, const Subspace& plane, std::size_t jobs) {
  const std::size_t d = plane.dim(), m = k.generators.size();
  Mat eq = equations_of(plane);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(plane.vector(i));
  // beta_a(x, y) and X_b z on the plane basis
  std::vector<Vec> bxy(d * d, Vec(m));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t a = 0; a < m; ++a) bxy[x * d + y][a] = exact::dot(basis[x], k.beta[a] * basis[y]);
  // the plane equations applied to X_b z: containment needs only these numbers
  std::vector<Vec> exz(m * d);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t z = 0; z < d; ++z) exz[b * d + z] = eq * (k.generators[b] * basis[z]);

  const std::size_t tensors = k.dim();
  std::vector<json> witnesses(tensors);
  std::vector<char> ok(tensors, 1);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < tensors;) {
      const Mat& c = k.coefficients[r];
      for (std::size_t x = 0; x < d && ok[r]; ++x)
        for (std::size_t y = 0; y < d && ok[r]; ++y) {
          // w_b = sum_a C_ab beta_a(x, y)
          Vec w(m);
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t a = 0; a < m; ++a)
              if (sgn(c(a, b)) != 0 && sgn(bxy[x * d + y][a]) != 0) w[b] += c(a, b) * bxy[x * d + y][a];
          for (std::size_t z = 0; z < d && ok[r]; ++z) {
            Vec defect(eq.rows());
            for (std::size_t b = 0; b < m; ++b)
              if (sgn(w[b]) != 0) defect = exact::axpy(w[b], exz[b * d + z], defect);
            if (!exact::is_zero(defect)) {
              ok[r] = 0;
              witnesses[r] = {{"tensor", r},
                              {"x", vec_json(basis[x])},
                              {"y", vec_json(basis[y])},
                              {"z", vec_json(basis[z])},
                              {"R(x,y)z", vec_json(k.apply(r, basis[x], basis[y], basis[z]))}};
            }
          }
        }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ContainmentResult res;
  res.tensors = tensors;
  res.triples = d * d * d;
  for (std::size_t r = 0; r < tensors; ++r)
    if (!ok[r]) {
      if (res.holds) res.witness = witnesses[r];
      res.holds = false;
      ++res.failing;
    }
  return res;
}

bool constant_curvature_preserves(const QuadraticSpace& q, const Subspace& plane) {
  for (std::size_t x = 0; x < plane.dim(); ++x)
    for (std::size_t y = 0; y < plane.dim(); ++y)
      for (std::size_t z = 0; z < plane.dim(); ++z) {
        auto bx = plane.basis().row(x), by = plane.basis().row(y), bz = plane.basis().row(z);
        Vec r = exact::axpy(q.pair(by, bz), bx, exact::axpy(-q.pair(bx, bz), by, Vec(q.dim())));
        if (!plane.contains(r)) return false;
      }
  return true;
}

namespace {

// Direct re-evaluation of the defining properties on every basis tensor.
bool defining_properties(const CurvatureSpace& k) {
  const std::size_t n = k.q->dim();
  for (std::size_t r = 0; r < k.dim(); ++r) {
    if (!k.coefficients[r].is_symmetric()) return false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          auto e = [&](std::size_t i) { return exact::unit_vector(n, i); };
          Vec s = exact::axpy(1, k.apply(r, e(x), e(y), e(z)),
                              exact::axpy(1, k.apply(r, e(y), e(z), e(x)), k.apply(r, e(z), e(x), e(y))));
          if (!exact::is_zero(s)) return false;
        }
  }
  return true;
}

json containment_json(const ContainmentResult& r) {
  return {{"tensors", r.tensors},
          {"triples_per_tensor", r.triples},
          {"failing_tensors", r.failing},
          {"witness", r.witness}};
}

}  // namespace

Certificate curvature_certificate(const holo::HoloModel& m, const IsotropyData& d) {
  Certificate c;
  auto g2k = curvature_space(d.q7, m.g2);
  c.push_back(expect_eq("formal g2 curvature tensors on V7: dimension", 77, g2k.dim(),
                        {{"unknowns", g2k.unknowns}, {"bianchi_rank", g2k.bianchi_rank}}));
  c.push_back(expect_eq("Bianchi system rank (g2, V7)", 28, g2k.bianchi_rank));
  c.push_back(expect_true("basis tensors: pair symmetry and first Bianchi identity by direct evaluation",
                          defining_properties(g2k)));
  bool symmetric = true;
  for (std::size_t r = 0; r < g2k.dim() && symmetric; ++r) symmetric = g2k.pair_matrix(r).is_symmetric();
  c.push_back(expect_true("exported 21x21 pairing matrices are symmetric", symmetric));

  auto g2k8 = curvature_space(d.q8, m.g2);
  c.push_back(expect_eq("formal g2 curvature tensors on V8: dimension", 77, g2k8.dim(),
                        {{"unknowns", g2k8.unknowns}, {"bianchi_rank", g2k8.bianchi_rank}}));

  auto full = curvature_space(d.q7, Subspace::full(m.so7_algebra->dim()));
  c.push_back(expect_eq("full so(7) curvature tensors: dimension 7^2(7^2-1)/12", 196, full.dim()));
  auto zero = curvature_space(d.q7, Subspace::zero(m.so7_algebra->dim()));
  c.push_back(expect_eq("zero holonomy: dimension", 0, zero.dim()));
  return c;
}

Certificate obstruction_certificate(const holo::HoloModel& m, const IsotropyData& d, std::size_t jobs) {
  Certificate c;
  auto g2k = curvature_space(d.q7, m.g2);
  Subspace p_perp = d.q7.orthocomplement(d.w);
  c.push_back(expect_eq("p-perp = B-orthocomplement of W(v0): dimension", 4, p_perp.dim()));
  c.push_back(expect_true("p-perp contains W(v0)", exact::is_subset(d.w, p_perp)));
  auto r7 = containment(g2k, p_perp, jobs);
  c.push_back(expect_true("V7: R(p⊥,p⊥)p⊥ ⊆ p⊥ for all g2 basis tensors and basis triples", r7.holds,
                          containment_json(r7)));

  auto g2k8 = curvature_space(d.q8, m.g2);
  c.push_back(expect_true("V8: S is maximal isotropic, S⊥ = S", d.q8.orthocomplement(d.s) == d.s));
  auto r8 = containment(g2k8, d.s, jobs);
  c.push_back(expect_true("V8: R(S,S)S ⊆ S for all g2 basis tensors and basis triples", r8.holds,
                          containment_json(r8)));

  auto full = curvature_space(d.q7, Subspace::full(m.so7_algebra->dim()));
  auto neg = containment(full, p_perp, jobs);
  c.push_back(expect_true("negative control: the full so(7) curvature space violates the containment", !neg.holds,
                          containment_json(neg)));
  c.push_back(expect_true("positive control: the constant-curvature tensor satisfies the containment",
                          constant_curvature_preserves(d.q7, p_perp) && constant_curvature_preserves(d.q8, d.s)));

  // the same containment at further null vectors of V7
  const std::array<Vec, 3> extra{exact::unit_vector(7, 2), exact::unit_vector(7, 3),
                                 exact::axpy(1, exact::unit_vector(7, 3), exact::unit_vector(7, 4))};
  for (const auto& v : extra) {
    std::string tag = "at v = " + json(vec_json(v)).dump();
    bool null = sgn(d.q7.pair(v, v)) == 0;
    auto p = null_plane(m, d.q7, v);
    const Subspace& w = p.w;
    bool good = null && w.dim() == 3 && d.q7.is_isotropic(w) && w.contains(v) && w == p.kernel;
    c.push_back(expect_true(tag + ": v null, W(v) an isotropic 3-plane containing v", good,
                            {{"W", exact::to_json(w)}, {"route", p.route}}));
    if (!good) continue;
    auto r = containment(g2k, d.q7.orthocomplement(w), jobs);
    c.push_back(expect_true(tag + ": R(p⊥,p⊥)p⊥ ⊆ p⊥", r.holds, containment_json(r)));
  }
  return c;
}

json export_curvature(const CurvatureSpace& k) {
  json j;
  j["dim"] = k.q->dim();
  j["space_dim"] = k.dim();
  json pairs = json::array();
  for (std::size_t i = 0; i < k.q->dim(); ++i)
    for (std::size_t jj = i + 1; jj < k.q->dim(); ++jj) pairs.push_back({i, jj});
  j["pair_order"] = std::move(pairs);
  json mats = json::array();
  for (std::size_t r = 0; r < k.dim(); ++r) mats.push_back(exact::to_json(k.pair_matrix(r)));
  j["basis"] = std::move(mats);
  return j;
}

}  // namespace exholo::quadric
