#include "exholo/symdec.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

namespace exholo::symdec {

using exact::RowReducer;
using exact::SparseRow;

// ----------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("multi-index: at least one part required");
  unsigned sum = 0;
  for (unsigned p : parts_) {
    if (p == 0) throw UsageError("multi-index: parts must be >= 1");
    sum += p;
  }
  if (sum % 2 != 0)
    throw UsageError("multi-index: n1+...+nk must be even (standing hypothesis on simple decompositions), got " +
                     std::to_string(sum));
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item.empty() || item.size() > 4 || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw UsageError("multi-index: expected dot-separated positive integers, got '" + text + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (text.empty() || text.back() == '.') throw UsageError("multi-index: malformed '" + text + "'");
  return MultiIndex(std::move(parts));
}

std::size_t MultiIndex::p_dim() const {
  std::size_t d = 1;
  for (unsigned p : parts_) d *= p + 1;
  return d;
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "." : "") + std::to_string(parts_[i]);
  return s;
}

// ------------------------------------------------------------------ eta

namespace {

// Digits of a p basis index, most significant factor first.
std::vector<std::size_t> digits(std::size_t x, const std::vector<unsigned>& parts) {
  std::vector<std::size_t> d(parts.size());
  for (std::size_t i = parts.size(); i-- > 0;) {
    d[i] = x % (parts[i] + 1);
    x /= parts[i] + 1;
  }
  return d;
}

}  // namespace

std::vector<sl2::BilinearTensor> eta_terms(const MultiIndex& mi) {
  const auto& parts = mi.parts();
  const std::size_t k = mi.k(), n = mi.p_dim();
  std::vector<sl2::BilinearTensor> eps, pi;
  for (unsigned p : parts) {
    eps.push_back(sl2::clebsch_projection(p, 0));
    pi.push_back(sl2::clebsch_projection(p, 2));
  }
  std::vector<std::vector<std::size_t>> dig(n);
  for (std::size_t x = 0; x < n; ++x) dig[x] = digits(x, parts);

  std::vector<sl2::BilinearTensor> terms(k);
  for (std::size_t j = 0; j < k; ++j) {
    auto& t = terms[j];
    t.source_dim = n;
    t.target_dim = 3 * k;
    t.entries.assign(t.target_dim * n * n, Scalar(0));
    t.symmetric = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Scalar scale = 1;
        for (std::size_t i = 0; i < k && sgn(scale) != 0; ++i)
          if (i != j) scale *= eps[i].at(0, dig[x][i], dig[y][i]);
        if (sgn(scale) == 0) continue;
        for (std::size_t u = 0; u < 3; ++u) {
          const Scalar& c = pi[j].at(u, dig[x][j], dig[y][j]);
          if (sgn(c) == 0) continue;
          auto img = sl2::u2_to_sl2(u);
          for (std::size_t g = 0; g < 3; ++g)
            if (sgn(img[g]) != 0) t.at(3 * j + g, x, y) += scale * c * img[g];
        }
      }
    if (t.symmetry_type() != -1 && !t.is_zero())
      throw CertificationError("eta_terms: term " + std::to_string(j) + " of " + mi.to_string() +
                               " is not antisymmetric");
  }
  return terms;
}

sl2::BilinearTensor eta_tensor(const MultiIndex& mi, std::span<const Scalar> c) {
  if (c.size() != mi.k()) throw UsageError("eta_tensor: one coefficient per factor required");
  auto terms = eta_terms(mi);
  sl2::BilinearTensor eta = terms[0];
  for (auto& e : eta.entries) e = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    for (std::size_t i = 0; i < eta.entries.size(); ++i)
      if (sgn(terms[j].entries[i]) != 0) eta.entries[i] += c[j] * terms[j].entries[i];
  }
  return eta;
}

// -------------------------------------------------------------- algebra

SymmetricDecomposition decomposition(const MultiIndex& mi, std::span<const Scalar> c) {
  SymmetricDecomposition sd;
  sd.mi = mi;
  const std::size_t k = mi.k();
  sd.h_dim = 3 * k;
  sd.p_module = sl2::irrep_product(mi.parts());
  sd.coefficients.assign(c.begin(), c.end());
  sd.eta = eta_tensor(mi, c);
  const std::size_t n = sd.p_dim(), h = sd.h_dim;

  std::vector<lie::StructureConstant> upper;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t e = 3 * j, f = 3 * j + 1, hh = 3 * j + 2;
    upper.push_back({e, f, hh, 1});
    upper.push_back({e, hh, e, -2});
    upper.push_back({f, hh, f, 2});
  }
  for (std::size_t g = 0; g < h; ++g) {
    const Mat& a = sd.alpha(g);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t r = 0; r < n; ++r)
        if (sgn(a(r, x)) != 0) upper.push_back({g, h + x, h + r, a(r, x)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t g = 0; g < h; ++g)
        if (sgn(sd.eta.at(g, x, y)) != 0) upper.push_back({h + x, h + y, g, sd.eta.at(g, x, y)});

  std::vector<std::string> labels;
  for (std::size_t j = 1; j <= k; ++j)
    for (const char* g : {"E", "F", "H"}) labels.push_back(g + std::to_string(j));
  for (std::size_t x = 0; x < n; ++x) {
    std::string s = "p(";
    auto d = digits(x, mi.parts());
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    labels.push_back(s + ")");
  }
  sd.algebra = std::make_shared<const lie::LieAlgebra>(h + n, upper, std::move(labels));
  return sd;
}

lie::LieAlgebra build(const MultiIndex& mi, std::span<const Scalar> c) { return *decomposition(mi, c).algebra; }

// ------------------------------------------------------------ curvature

Vec CurvatureForm::apply(std::size_t x, std::size_t y, std::size_t z) const {
  Vec v(n);
  for (std::size_t a = 0; a < n; ++a) v[a] = at(a, x, y, z);
  return v;
}

CurvatureForm curvature_form(const SymmetricDecomposition& sd) {
  const std::size_t n = sd.p_dim();
  CurvatureForm r;
  r.n = n;
  r.entries.assign(n * n * n * n, Scalar(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Mat m(n, n);
      for (std::size_t g = 0; g < sd.h_dim; ++g)
        if (sgn(sd.eta.at(g, x, y)) != 0) m += sd.alpha(g) * sd.eta.at(g, x, y);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t z = 0; z < n; ++z)
          if (sgn(m(a, z)) != 0) r.entries[((a * n + x) * n + y) * n + z] = m(a, z);
    }
  return r;
}

namespace {

// Sparse columns of the alpha matrices: cols[g][z] = nonzero (row, value) of alpha(g) e_z.
using SparseCols = std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>>;

SparseCols alpha_columns(const sl2::Sl2kModule& p) {
  const std::size_t n = p.dim();
  SparseCols cols(3 * p.k());
  for (std::size_t g = 0; g < 3 * p.k(); ++g) {
    const Mat& a = p.action(g / 3, static_cast<sl2::Generator>(g % 3));
    cols[g].resize(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t z = 0; z < n; ++z)
        if (sgn(a(r, z)) != 0) cols[g][z].emplace_back(r, a(r, z));
  }
  return cols;
}

}  // namespace

Subspace bianchi_solution_space(const MultiIndex& mi) {
  const std::size_t k = mi.k(), n = mi.p_dim();
  auto terms = eta_terms(mi);
  auto cols = alpha_columns(sl2::irrep_product(mi.parts()));

  // R_j(x, y)z accumulated into out
  auto add_r = [&](std::size_t j, std::size_t x, std::size_t y, std::size_t z, Vec& out) {
    for (std::size_t g = 3 * j; g < 3 * j + 3; ++g) {
      const Scalar& e = terms[j].at(g, x, y);
      if (sgn(e) == 0) continue;
      for (const auto& [r, v] : cols[g][z]) out[r] += e * v;
    }
  };

  RowReducer red(k);
  std::vector<Vec> cyc(k, Vec(n));
  for (std::size_t x = 0; x < n && !red.full(); ++x)
    for (std::size_t y = x + 1; y < n && !red.full(); ++y)
      for (std::size_t z = y + 1; z < n && !red.full(); ++z) {
        for (std::size_t j = 0; j < k; ++j) {
          std::fill(cyc[j].begin(), cyc[j].end(), Scalar(0));
          add_r(j, x, y, z, cyc[j]);
          add_r(j, y, z, x, cyc[j]);
          add_r(j, z, x, y, cyc[j]);
        }
        for (std::size_t o = 0; o < n && !red.full(); ++o) {
          SparseRow row;
          for (std::size_t j = 0; j < k; ++j)
            if (sgn(cyc[j][o]) != 0) row.emplace_back(j, cyc[j][o]);
          if (!row.empty()) red.add(row);
        }
      }
  return exact::kernel_of(red);
}

// ------------------------------------------------------- classification

std::vector<MultiIndex> enumerate(const ClassifyBounds& b) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, std::size_t, unsigned)> rec = [&](unsigned max_part, std::size_t dim, unsigned sum) {
    if (!cur.empty() && sum % 2 == 0) out.emplace_back(cur);
    if (cur.size() == b.max_k) return;
    for (unsigned p = 1; p <= max_part; ++p) {
      if (dim * (p + 1) > b.max_p_dim) break;
      cur.push_back(p);
      rec(p, dim * (p + 1), sum + p);
      cur.pop_back();
    }
  };
  rec(static_cast<unsigned>(b.max_n), 1, 0);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& c) {
    if (a.p_dim() != c.p_dim()) return a.p_dim() < c.p_dim();
    return a.parts() < c.parts();
  });
  return out;
}

ClassifyResult classify(const ClassifyBounds& b, std::size_t jobs) {
  ClassifyResult res;
  res.candidates = enumerate(b);
  const std::size_t m = res.candidates.size();
  std::vector<std::size_t> dims(m);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < m;) dims[i] = bianchi_solution_space(res.candidates[i]).dim();
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, m));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < m; ++i)
    if (dims[i] > 0) res.admitted.push_back({res.candidates[i], res.candidates[i].p_dim(), dims[i]});
  return res;
}

json to_json(const ClassifyResult& r) {
  json a = json::array();
  for (const auto& e : r.admitted) {
    json j;
    j["multi_index"] = e.mi.parts();
    j["p_dim"] = e.p_dim;
    j["solution_dim"] = e.solution_dim;
    a.push_back(std::move(j));
  }
  return a;
}

// -------------------------------------------------------------- models

std::string identify(const lie::LieAlgebra& l) { return lie::summarize(l).label; }

const std::vector<std::pair<std::string, MultiIndex>>& model_table() {
  static const std::vector<std::pair<std::string, MultiIndex>> table{
      {"so(4)", MultiIndex({2})},       {"so(5)", MultiIndex({1, 1})},       {"sl(3)", MultiIndex({4})},
      {"g2", MultiIndex({3, 1})},       {"so(6)", MultiIndex({2, 2})},       {"so(7)", MultiIndex({2, 1, 1})},
      {"so(8)", MultiIndex({1, 1, 1, 1})},
  };
  return table;
}

SymmetricDecomposition standard_model(const MultiIndex& mi) {
  Subspace s = bianchi_solution_space(mi);
  if (s.dim() == 0)
    throw CertificationError("standard_model: Bianchi solution space of " + mi.to_string() + " is zero");
  return decomposition(mi, s.vector(0));
}

SymmetricDecomposition standard_model(const std::string& label) {
  for (const auto& [name, mi] : model_table())
    if (name == label) return standard_model(mi);
  throw UsageError("standard_model: unknown label '" + label + "'");
}

}  // namespace exholo::symdec
