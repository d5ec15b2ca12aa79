#include "exholo/lie.hpp"

#include <algorithm>
#include <sstream>

namespace exholo::lie {

using exact::RowReducer;
using exact::SparseRow;

// ----------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(std::size_t dim, const std::vector<StructureConstant>& upper, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim) {
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i));
  if (labels_.size() != dim) throw UsageError("LieAlgebra: label count mismatch");
  for (const auto& c : upper) {
    if (c.i >= dim || c.j >= dim || c.k >= dim) throw UsageError("LieAlgebra: index out of range");
    if (c.i >= c.j) throw UsageError("LieAlgebra: structure constants must be listed with i < j");
    if (sgn(c.value) == 0) continue;
    auto& fwd = table_[c.i * dim + c.j];
    auto it = std::find_if(fwd.begin(), fwd.end(), [&](const auto& e) { return e.first == c.k; });
    if (it != fwd.end()) it->second += c.value;
    else fwd.emplace_back(c.k, c.value);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      auto& fwd = table_[i * dim + j];
      std::erase_if(fwd, [](const auto& e) { return sgn(e.second) == 0; });
      std::sort(fwd.begin(), fwd.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      auto& back = table_[j * dim + i];
      for (const auto& [k, v] : fwd) back.emplace_back(k, -v);
    }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (const auto& [k, v] : table_[i * dim + j]) nonzeros_.push_back({i, j, k, v});
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

LieAlgebra LieAlgebra::sl2() {
  return LieAlgebra(3, {{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2}}, {"E", "F", "H"});
}

LieAlgebra LieAlgebra::gl(std::size_t n) {
  std::vector<StructureConstant> upper;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) labels.push_back("E" + std::to_string(a) + std::to_string(b));
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t x = 0; x < n * n; ++x)
    for (std::size_t y = x + 1; y < n * n; ++y) {
      std::size_t a = x / n, b = x % n, c = y / n, d = y % n;
      if (b == c) upper.push_back({x, y, a * n + d, 1});
      if (d == a) upper.push_back({x, y, c * n + b, -1});
    }
  return LieAlgebra(n * n, upper, std::move(labels));
}

Scalar LieAlgebra::structure(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, v] : table_.at(i * dim_ + j))
    if (kk == k) return v;
  return 0;
}

Vec LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw UsageError("bracket: dimension mismatch");
  Vec out(dim_);
  Scalar t;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& entries = table_[i * dim_ + j];
      if (entries.empty()) continue;
      t = x[i] * y[j];
      for (const auto& [k, v] : entries) out[k] += t * v;
    }
  }
  return out;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec out(dim_);
  for (const auto& [k, v] : table_.at(i * dim_ + j)) out[k] = v;
  return out;
}

Mat LieAlgebra::ad(std::span<const Scalar> x) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, v] : table_[i * dim_ + j]) m(k, j) += x[i] * v;
  }
  return m;
}

Mat LieAlgebra::ad_basis(std::size_t i) const { return ad(exact::unit_vector(dim_, i)); }

json LieAlgebra::to_json() const {
  json j;
  j["dim"] = dim_;
  j["labels"] = labels_;
  json br = json::array();
  for (const auto& c : nonzeros_) {
    if (c.i >= c.j) continue;
    json e;
    e["i"] = c.i;
    e["j"] = c.j;
    e["k"] = c.k;
    e["value"] = exact::to_string(c.value);
    br.push_back(std::move(e));
  }
  j["brackets"] = std::move(br);
  return j;
}

// ------------------------------------------------------- Representation

Representation::Representation(std::shared_ptr<const LieAlgebra> algebra, std::vector<Mat> actions)
    : algebra_(std::move(algebra)), actions_(std::move(actions)) {
  if (!algebra_) throw UsageError("Representation: null algebra");
  if (actions_.size() != algebra_->dim()) throw UsageError("Representation: one action per basis element required");
  dim_ = actions_.empty() ? 0 : actions_[0].rows();
  for (const auto& a : actions_)
    if (a.rows() != dim_ || a.cols() != dim_) throw UsageError("Representation: action shape mismatch");
  const std::size_t n = algebra_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat lhs = act(algebra_->bracket_basis(i, j));
      if (lhs != exact::commutator(actions_[i], actions_[j]))
        throw CertificationError("Representation: bracket relation fails for basis pair (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
    }
}

Mat Representation::act(std::span<const Scalar> x) const {
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m += actions_[i] * x[i];
  return m;
}

Representation Representation::restrict_to(std::shared_ptr<const LieAlgebra> sub, const Subspace& s) const {
  if (s.ambient_dim() != algebra_->dim() || sub->dim() != s.dim())
    throw UsageError("restrict_to: subspace does not match algebras");
  std::vector<Mat> acts;
  for (std::size_t a = 0; a < s.dim(); ++a) acts.push_back(act(s.basis().row(a)));
  return Representation(std::move(sub), std::move(acts));
}

Subspace Representation::image() const {
  std::vector<Vec> vs;
  for (const auto& a : actions_) vs.push_back(exact::flatten(a));
  return Subspace::span(vs, dim_ * dim_);
}

Subspace Representation::image_of(const Subspace& s) const {
  std::vector<Vec> vs;
  for (std::size_t a = 0; a < s.dim(); ++a) vs.push_back(exact::flatten(act(s.basis().row(a))));
  return Subspace::span(vs, dim_ * dim_);
}

json Representation::to_json(const std::string& algebra_ref) const {
  json j;
  j["algebra_ref"] = algebra_ref;
  j["dim"] = dim_;
  json acts = json::array();
  for (const auto& a : actions_) acts.push_back(exact::to_json(a));
  j["actions"] = std::move(acts);
  return j;
}

// ----------------------------------------------------------- predicates

std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& l, std::size_t max_reports) {
  std::vector<JacobiViolation> out;
  const std::size_t n = l.dim();
  std::vector<Vec> brackets(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets[i * n + j] = l.bracket_basis(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec d = l.bracket(exact::unit_vector(n, i), brackets[j * n + k]);
        Vec d2 = l.bracket(exact::unit_vector(n, j), brackets[k * n + i]);
        Vec d3 = l.bracket(exact::unit_vector(n, k), brackets[i * n + j]);
        for (std::size_t t = 0; t < n; ++t) d[t] += d2[t] + d3[t];
        if (!exact::is_zero(d)) {
          out.push_back({i, j, k, std::move(d)});
          if (out.size() >= max_reports) return out;
        }
      }
  return out;
}

bool satisfies_jacobi(const LieAlgebra& l) { return jacobi_defect(l, 1).empty(); }

Mat killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad_basis(i));
  Mat k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (sgn(ads[i](a, b)) != 0 && sgn(ads[j](b, a)) != 0) t += ads[i](a, b) * ads[j](b, a);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

bool is_semisimple(const LieAlgebra& l) {
  if (l.dim() == 0) return false;
  return exact::rank(killing_form(l)) == l.dim();
}

Subspace center(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  // x in center iff sum_i x_i c(i,j,k) = 0 for all j,k
  std::vector<SparseRow> rows(n * n);
  for (const auto& c : l.nonzeros()) rows[c.j * n + c.k].emplace_back(c.i, c.value);
  RowReducer red(n);
  for (auto& r : rows) {
    if (r.empty()) continue;
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    red.add(r);
  }
  return exact::kernel_of(red);
}

Representation adjoint_rep(std::shared_ptr<const LieAlgebra> l) {
  std::vector<Mat> acts;
  for (std::size_t i = 0; i < l->dim(); ++i) acts.push_back(l->ad_basis(i));
  return Representation(std::move(l), std::move(acts));
}

Representation defining_rep_gl(std::size_t n) {
  auto g = std::make_shared<const LieAlgebra>(LieAlgebra::gl(n));
  std::vector<Mat> acts;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Mat m(n, n);
      m(a, b) = 1;
      acts.push_back(std::move(m));
    }
  return Representation(std::move(g), std::move(acts));
}

std::size_t commutant_dimension(const Representation& r) {
  if (r.algebra().dim() == 0) return r.dim() * r.dim();
  return exact::intertwiner_space(r.actions(), r.actions()).dim();
}

bool is_simple(const LieAlgebra& l) {
  if (!is_semisimple(l)) return false;
  auto ptr = std::make_shared<const LieAlgebra>(l);
  return commutant_dimension(adjoint_rep(ptr)) == 1;
}

namespace {

Vec trial_element(std::size_t n, long t) {
  Vec x(n);
  mpz_class power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Scalar(mpz_class(static_cast<long>(i + 1)) * power);
    power *= t;
  }
  return x;
}

bool is_abelian_subspace(const LieAlgebra& l, const Subspace& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!exact::is_zero(l.bracket(s.basis().row(a), s.basis().row(b)))) return false;
  return true;
}

}  // namespace

std::size_t rank(const LieAlgebra& l, std::size_t trial_budget) {
  if (l.dim() == 0) return 0;
  constexpr std::size_t kWindow = 5;
  std::vector<Subspace> centralizers;
  for (std::size_t t = 1; t <= trial_budget; ++t) {
    centralizers.push_back(exact::kernel(l.ad(trial_element(l.dim(), static_cast<long>(t)))));
    if (centralizers.size() < kWindow) continue;
    std::size_t lo = centralizers.size() - kWindow;
    std::size_t best = l.dim();
    for (std::size_t i = lo; i < centralizers.size(); ++i) best = std::min(best, centralizers[i].dim());
    for (std::size_t i = lo; i < centralizers.size(); ++i)
      if (centralizers[i].dim() == best && is_abelian_subspace(l, centralizers[i])) return best;
  }
  throw CertificationError("rank: no regular element found within the trial budget");
}

namespace {

std::vector<Mat> invariant_forms(const Representation& r, bool symmetric) {
  const std::size_t n = r.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<long> index(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : i + 1; j < n; ++j) {
      index[i * n + j] = static_cast<long>(unknowns.size());
      unknowns.emplace_back(i, j);
    }
  // B(i,j) as a signed reference to an unknown
  auto entry = [&](std::size_t i, std::size_t j) -> std::pair<long, int> {
    if (i == j && !symmetric) return {-1, 0};
    if (i <= j) return {index[i * n + j], 1};
    return {index[j * n + i], symmetric ? 1 : -1};
  };
  RowReducer red(unknowns.size());
  for (const auto& rho : r.actions()) {
    for (std::size_t a = 0; a < n && !red.full(); ++a)
      for (std::size_t b = a; b < n && !red.full(); ++b) {
        // (rho^T B + B rho)(a, b) = sum_c rho(c,a) B(c,b) + B(a,c) rho(c,b)
        std::vector<std::pair<std::size_t, Scalar>> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (sgn(rho(c, a)) != 0) {
            auto [u, s] = entry(c, b);
            if (u >= 0) row.emplace_back(static_cast<std::size_t>(u), rho(c, a) * s);
          }
          if (sgn(rho(c, b)) != 0) {
            auto [u, s] = entry(a, c);
            if (u >= 0) row.emplace_back(static_cast<std::size_t>(u), rho(c, b) * s);
          }
        }
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseRow merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
          else merged.push_back(std::move(e));
        }
        std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
        red.add(merged);
      }
  }
  Subspace k = exact::kernel_of(red);
  std::vector<Mat> out;
  for (std::size_t f = 0; f < k.dim(); ++f) {
    Mat b(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      auto [i, j] = unknowns[u];
      b(i, j) = k.basis()(f, u);
      b(j, i) = symmetric ? k.basis()(f, u) : Scalar(-k.basis()(f, u));
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<Mat> invariant_symmetric_forms(const Representation& r) { return invariant_forms(r, true); }
std::vector<Mat> invariant_antisymmetric_forms(const Representation& r) { return invariant_forms(r, false); }

Mat normalized_invariant_form(const Representation& r) {
  auto forms = invariant_symmetric_forms(r);
  if (forms.size() != 1)
    throw UsageError("normalized_invariant_form: invariant symmetric forms span dimension " +
                     std::to_string(forms.size()) + ", expected 1");
  Mat b = std::move(forms[0]);
  const auto& e = b.entries();
  auto lead = std::find_if(e.begin(), e.end(), [](const Scalar& s) { return sgn(s) != 0; });
  b *= 1 / Scalar(*lead);
  return b;
}

Subspace invariant_vectors(const Representation& r) {
  RowReducer red(r.dim());
  for (const auto& a : r.actions())
    for (std::size_t i = 0; i < r.dim() && !red.full(); ++i) red.add(a.row(i));
  return exact::kernel_of(red);
}

namespace {

// Derivation action of X on a multilinear tensor, flattened.
Vec derive_tensor(const Mat& x, const MultilinearTensor& t) {
  const std::size_t n = t.n;
  std::size_t in_size = 1;
  for (std::size_t s = 0; s < t.in_rank; ++s) in_size *= n;
  const std::size_t out_size = t.out_rank == 1 ? n : 1;
  Vec d(out_size * in_size);
  std::vector<std::size_t> stride(t.in_rank, 1);
  for (std::size_t s = t.in_rank; s-- > 1;) stride[s - 1] = stride[s] * n;
  for (std::size_t o = 0; o < out_size; ++o)
    for (std::size_t in = 0; in < in_size; ++in) {
      Scalar acc = 0;
      if (t.out_rank == 1)
        for (std::size_t o2 = 0; o2 < n; ++o2)
          if (sgn(x(o, o2)) != 0) acc += x(o, o2) * t.entries[o2 * in_size + in];
      for (std::size_t s = 0; s < t.in_rank; ++s) {
        std::size_t v = (in / stride[s]) % n;
        std::size_t base = in - v * stride[s];
        for (std::size_t u = 0; u < n; ++u)
          if (sgn(x(u, v)) != 0) acc -= t.entries[o * in_size + base + u * stride[s]] * x(u, v);
      }
      d[o * in_size + in] = std::move(acc);
    }
  return d;
}

}  // namespace

Subspace invariance_subalgebra(const Representation& r, const Constraint& c) {
  const std::size_t n = r.dim();
  const std::size_t dim = r.algebra().dim();
  // columns: one per algebra basis element, holding the linear constraint data
  std::vector<Vec> cols;

  if (const auto* fv = std::get_if<FixVector>(&c)) {
    if (fv->v.size() != n) throw UsageError("fix_vector: dimension mismatch");
    for (const auto& a : r.actions()) cols.push_back(a * std::span<const Scalar>(fv->v));
  } else if (const auto* fl = std::get_if<FixLine>(&c)) {
    if (exact::is_zero(fl->v)) throw UsageError("fix_line: zero vector");
    return invariance_subalgebra(r, FixSubspace{Subspace::span({fl->v}, n)});
  } else if (const auto* fs = std::get_if<FixSubspace>(&c)) {
    if (fs->w.ambient_dim() != n) throw UsageError("fix_subspace: dimension mismatch");
    Subspace ann = fs->w.annihilator();
    for (const auto& a : r.actions()) {
      Vec col;
      for (std::size_t w = 0; w < fs->w.dim(); ++w) {
        Vec image = a * fs->w.basis().row(w);
        for (std::size_t f = 0; f < ann.dim(); ++f) col.push_back(exact::dot(ann.basis().row(f), image));
      }
      cols.push_back(std::move(col));
    }
  } else {
    const auto& t = std::get<FixTensor>(c).t;
    if (t.n != n) throw UsageError("fix_tensor: dimension mismatch");
    for (const auto& a : r.actions()) cols.push_back(derive_tensor(a, t));
  }

  Subspace s;
  if (cols.empty() || cols[0].empty()) {
    s = Subspace::full(dim);
  } else {
    const std::size_t m = cols[0].size();
    RowReducer red(dim);
    for (std::size_t row = 0; row < m && !red.full(); ++row) {
      SparseRow sr;
      for (std::size_t i = 0; i < dim; ++i)
        if (sgn(cols[i][row]) != 0) sr.emplace_back(i, cols[i][row]);
      if (!sr.empty()) red.add(sr);
    }
    s = exact::kernel_of(red);
  }
  if (!is_bracket_closed(r.algebra(), s))
    throw CertificationError("invariance_subalgebra: result is not bracket-closed (internal inconsistency)");
  return s;
}

bool is_bracket_closed(const LieAlgebra& l, const Subspace& s) { return brackets_into(l, s, s, s); }

bool brackets_into(const LieAlgebra& l, const Subspace& a, const Subspace& b, const Subspace& target) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      if (!target.contains(l.bracket(a.basis().row(i), b.basis().row(j)))) return false;
  return true;
}

Subspace derived_span(const LieAlgebra& l, const Subspace& s) {
  std::vector<Vec> vs;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) vs.push_back(l.bracket(s.basis().row(a), s.basis().row(b)));
  return Subspace::span(vs, l.dim());
}

LieAlgebra subalgebra_from_subspace(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient_dim() != l.dim()) throw UsageError("subalgebra_from_subspace: ambient mismatch");
  std::vector<StructureConstant> upper;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) {
      Vec v = l.bracket(s.basis().row(a), s.basis().row(b));
      if (!s.contains(v)) {
        std::ostringstream msg;
        msg << "subalgebra_from_subspace: subspace not bracket-closed, witness pair (" << a << ", " << b << ")";
        throw UsageError(msg.str());
      }
      Vec coords = s.coordinates(v);
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (sgn(coords[k]) != 0) upper.push_back({a, b, k, coords[k]});
    }
  return LieAlgebra(s.dim(), upper);
}

Subspace relative_subspace(const Subspace& outer, const Subspace& inner) {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < inner.dim(); ++i) vs.push_back(outer.coordinates(inner.basis().row(i)));
  return Subspace::span(vs, outer.dim());
}

std::string cartan_label(std::size_t dim, std::size_t rank, bool simple) {
  struct Row {
    std::size_t dim, rank;
    bool simple;
    const char* label;
  };
  static constexpr Row table[] = {
      {6, 2, false, "so(4)"}, {10, 2, true, "so(5)"}, {8, 2, true, "sl(3)"},  {14, 2, true, "g2"},
      {15, 3, true, "so(6)"}, {21, 3, true, "so(7)"}, {28, 4, true, "so(8)"},
  };
  for (const auto& r : table)
    if (r.dim == dim && r.rank == rank && r.simple == simple) return r.label;
  return "unknown";
}

TypeSummary summarize(const LieAlgebra& l) {
  TypeSummary s;
  s.dim = l.dim();
  s.jacobi = satisfies_jacobi(l);
  if (!s.jacobi) return s;
  s.center_dim = center(l).dim();
  s.semisimple = is_semisimple(l);
  if (!s.semisimple) return s;
  auto ptr = std::make_shared<const LieAlgebra>(l);
  s.simple = commutant_dimension(adjoint_rep(ptr)) == 1;
  s.rank = rank(l);
  s.label = cartan_label(s.dim, s.rank, s.simple);
  return s;
}

}  // namespace exholo::lie
