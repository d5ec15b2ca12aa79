#include "exholo/sl2.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace exholo::sl2 {

using exact::Subspace;

Sl2kModule::Sl2kModule(std::size_t dim, std::vector<std::array<Mat, 3>> actions)
    : dim_(dim), actions_(std::move(actions)) {
  for (const auto& f : actions_)
    for (const auto& m : f)
      if (m.rows() != dim_ || m.cols() != dim_) throw UsageError("Sl2kModule: action shape mismatch");
  for (const auto& [e, f, h] : actions_) {
    if (exact::commutator(h, e) != e * Scalar(2) || exact::commutator(h, f) != f * Scalar(-2) ||
        exact::commutator(e, f) != h)
      throw UsageError("Sl2kModule: sl(2) relations violated");
  }
  for (std::size_t a = 0; a < actions_.size(); ++a)
    for (std::size_t b = a + 1; b < actions_.size(); ++b)
      for (const auto& x : actions_[a])
        for (const auto& y : actions_[b])
          if (!exact::commutator(x, y).is_zero()) throw UsageError("Sl2kModule: factors do not commute");
}

Sl2kModule Sl2kModule::trivial(std::size_t k, std::size_t dim) {
  Sl2kModule m;
  m.dim_ = dim;
  m.actions_.assign(k, {Mat(dim, dim), Mat(dim, dim), Mat(dim, dim)});
  return m;
}

std::vector<Mat> Sl2kModule::generators() const {
  std::vector<Mat> out;
  for (const auto& f : actions_)
    for (const auto& m : f) out.push_back(m);
  return out;
}

Sl2kModule irrep(unsigned n) {
  const std::size_t d = n + 1;
  Mat e(d, d), f(d, d), h(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    h(i, i) = static_cast<long>(n) - 2 * static_cast<long>(i);
    if (i + 1 < d) f(i + 1, i) = 1;
    if (i > 0) e(i - 1, i) = static_cast<long>(i * (n + 1 - i));
  }
  return Sl2kModule(d, {{std::move(e), std::move(f), std::move(h)}});
}

Sl2kModule irrep_product(std::span<const unsigned> weights) {
  if (weights.empty()) throw UsageError("irrep_product: empty weight list");
  Sl2kModule m = irrep(weights[0]);
  for (std::size_t i = 1; i < weights.size(); ++i) m = external_tensor(m, irrep(weights[i]));
  return m;
}

Sl2kModule external_tensor(const Sl2kModule& a, const Sl2kModule& b) {
  Mat ia = Mat::identity(a.dim()), ib = Mat::identity(b.dim());
  std::vector<std::array<Mat, 3>> acts;
  for (const auto& f : a.actions())
    acts.push_back({exact::kron(f[0], ib), exact::kron(f[1], ib), exact::kron(f[2], ib)});
  for (const auto& f : b.actions())
    acts.push_back({exact::kron(ia, f[0]), exact::kron(ia, f[1]), exact::kron(ia, f[2])});
  return Sl2kModule(a.dim() * b.dim(), std::move(acts));
}

Sl2kModule internal_tensor(const Sl2kModule& a, const Sl2kModule& b) {
  if (a.k() != b.k()) throw UsageError("internal_tensor: factor count mismatch");
  Mat ia = Mat::identity(a.dim()), ib = Mat::identity(b.dim());
  std::vector<std::array<Mat, 3>> acts;
  for (std::size_t j = 0; j < a.k(); ++j) {
    std::array<Mat, 3> f;
    for (std::size_t g = 0; g < 3; ++g)
      f[g] = exact::kron(a.actions()[j][g], ib) + exact::kron(ia, b.actions()[j][g]);
    acts.push_back(std::move(f));
  }
  return Sl2kModule(a.dim() * b.dim(), std::move(acts));
}

Sl2kModule direct_sum(const Sl2kModule& a, const Sl2kModule& b) {
  if (a.k() != b.k()) throw UsageError("direct_sum: factor count mismatch");
  std::vector<std::array<Mat, 3>> acts;
  for (std::size_t j = 0; j < a.k(); ++j) {
    std::array<Mat, 3> f;
    for (std::size_t g = 0; g < 3; ++g) f[g] = exact::block_diag(a.actions()[j][g], b.actions()[j][g]);
    acts.push_back(std::move(f));
  }
  return Sl2kModule(a.dim() + b.dim(), std::move(acts));
}

Sl2kModule antisymmetric_square(const Sl2kModule& m) {
  const std::size_t n = m.dim();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      index[{i, j}] = pairs.size();
      pairs.emplace_back(i, j);
    }
  const std::size_t d = pairs.size();
  std::vector<std::array<Mat, 3>> acts;
  for (const auto& f : m.actions()) {
    std::array<Mat, 3> out{Mat(d, d), Mat(d, d), Mat(d, d)};
    for (std::size_t g = 0; g < 3; ++g) {
      const Mat& x = f[g];
      // x(e_i ^ e_j) = x e_i ^ e_j + e_i ^ x e_j
      auto add = [&](std::size_t col, std::size_t a, std::size_t b, const Scalar& c) {
        if (a == b || sgn(c) == 0) return;
        if (a < b) out[g](index[{a, b}], col) += c;
        else out[g](index[{b, a}], col) -= c;
      };
      for (std::size_t p = 0; p < d; ++p) {
        auto [i, j] = pairs[p];
        for (std::size_t r = 0; r < n; ++r) {
          add(p, r, j, x(r, i));
          add(p, i, r, x(r, j));
        }
      }
    }
    acts.push_back(std::move(out));
  }
  return Sl2kModule(d, std::move(acts));
}

Sl2kModule branch(const Sl2kModule& m, std::span<const std::size_t> assignment, std::size_t target_k) {
  if (assignment.size() != m.k()) throw UsageError("branch: assignment must cover every slot");
  Sl2kModule out = Sl2kModule::trivial(target_k, m.dim());
  std::vector<std::array<Mat, 3>> acts = out.actions();
  for (std::size_t slot = 0; slot < m.k(); ++slot) {
    std::size_t t = assignment[slot];
    if (t >= target_k) throw UsageError("branch: target generator out of range");
    for (std::size_t g = 0; g < 3; ++g) acts[t][g] += m.actions()[slot][g];
  }
  return Sl2kModule(m.dim(), std::move(acts));
}

namespace {

// Joint H-eigenspace dimensions keyed by weight tuple.
std::map<std::vector<long>, std::size_t> weight_multiplicities(const Sl2kModule& m) {
  bool diagonal = true;
  for (std::size_t j = 0; j < m.k(); ++j) diagonal = diagonal && m.action(j, kH).is_diagonal();
  if (diagonal) {
    std::map<std::vector<long>, std::size_t> out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      std::vector<long> w;
      for (std::size_t j = 0; j < m.k(); ++j) {
        const Scalar& x = m.action(j, kH)(i, i);
        if (x.get_den() != 1 || !x.get_num().fits_slong_p())
          throw UsageError("decompose: malformed module (non-integer eigenvalue)");
        w.push_back(x.get_num().get_si());
      }
      ++out[w];
    }
    return out;
  }
  const long bound = static_cast<long>(m.dim()) - 1;
  std::vector<std::pair<std::vector<long>, Subspace>> spaces{{{}, Subspace::full(m.dim())}};
  for (std::size_t j = 0; j < m.k(); ++j) {
    const Mat& h = m.action(j, kH);
    std::vector<std::pair<std::vector<long>, Subspace>> next;
    for (const auto& [w, s] : spaces) {
      for (long lambda = bound; lambda >= -bound; --lambda) {
        Mat shifted = h - Mat::identity(m.dim()) * Scalar(lambda);
        Subspace eig = exact::intersect(s, exact::kernel(shifted));
        if (eig.dim() == 0) continue;
        auto w2 = w;
        w2.push_back(lambda);
        next.emplace_back(std::move(w2), std::move(eig));
      }
    }
    spaces = std::move(next);
  }
  std::map<std::vector<long>, std::size_t> out;
  std::size_t total = 0;
  for (const auto& [w, s] : spaces) {
    out[w] = s.dim();
    total += s.dim();
  }
  if (total != m.dim())
    throw UsageError("decompose: malformed module (H not diagonalizable with integer eigenvalues)");
  return out;
}

}  // namespace

IsotypicList decompose(const Sl2kModule& m) {
  if (m.dim() == 0) return {};
  if (m.k() == 0) return {{{}, m.dim()}};
  auto chars = weight_multiplicities(m);
  IsotypicList out;
  while (!chars.empty()) {
    // lexicographically largest weight is a highest weight
    auto top = std::prev(chars.end());
    std::vector<long> hw = top->first;
    std::size_t mult = top->second;
    for (long x : hw)
      if (x < 0) throw UsageError("decompose: malformed module (negative highest weight)");
    // subtract mult copies of the product character
    std::vector<long> w(hw.size());
    std::function<void(std::size_t)> peel = [&](std::size_t j) {
      if (j == hw.size()) {
        auto it = chars.find(w);
        if (it == chars.end() || it->second < mult)
          throw UsageError("decompose: malformed module (character not a sum of irreducibles)");
        it->second -= mult;
        if (it->second == 0) chars.erase(it);
        return;
      }
      for (long v = hw[j]; v >= -hw[j]; v -= 2) {
        w[j] = v;
        peel(j + 1);
      }
    };
    peel(0);
    IsotypicEntry e;
    for (long x : hw) e.weights.push_back(static_cast<unsigned>(x));
    e.multiplicity = mult;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.weights > b.weights; });
  return out;
}

std::size_t isotypic_dimension(const IsotypicList& list) {
  std::size_t total = 0;
  for (const auto& e : list) {
    std::size_t d = 1;
    for (unsigned w : e.weights) d *= w + 1;
    total += d * e.multiplicity;
  }
  return total;
}

json to_json(const IsotypicList& list) {
  json a = json::array();
  for (const auto& e : list) {
    json j;
    j["weights"] = e.weights;
    j["multiplicity"] = e.multiplicity;
    a.push_back(std::move(j));
  }
  return a;
}

bool BilinearTensor::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

int BilinearTensor::symmetry_type() const {
  bool sym = true, anti = true;
  for (std::size_t t = 0; t < target_dim; ++t)
    for (std::size_t i = 0; i < source_dim; ++i)
      for (std::size_t j = 0; j < source_dim; ++j) {
        if (at(t, i, j) != at(t, j, i)) sym = false;
        if (at(t, i, j) != -at(t, j, i)) anti = false;
      }
  if (sym) return 1;
  if (anti) return -1;
  return 0;
}

BilinearTensor clebsch_projection(unsigned n, unsigned target) {
  if (n < 1) throw UsageError("clebsch_projection: n must be at least 1");
  if (target != 0 && target != 2) throw UsageError("clebsch_projection: target must be 0 or 2");
  Sl2kModule u = irrep(n);
  auto maps = equivariant_maps(internal_tensor(u, u), irrep(target));
  if (maps.size() != 1) throw CertificationError("clebsch_projection: intertwiner space is not one-dimensional");
  const Mat& m = maps[0];
  BilinearTensor t;
  t.source_dim = n + 1;
  t.target_dim = target + 1;
  t.entries.assign(t.target_dim * t.source_dim * t.source_dim, Scalar(0));
  for (std::size_t r = 0; r < t.target_dim; ++r)
    for (std::size_t i = 0; i < t.source_dim; ++i)
      for (std::size_t j = 0; j < t.source_dim; ++j) t.at(r, i, j) = m(r, i * t.source_dim + j);
  auto lead = std::find_if(t.entries.begin(), t.entries.end(), [](const Scalar& s) { return sgn(s) != 0; });
  Scalar scale = 1 / *lead;
  for (auto& x : t.entries) x *= scale;
  int s = t.symmetry_type();
  if (s == 0) throw CertificationError("clebsch_projection: tensor has no definite symmetry");
  t.symmetric = s > 0;
  return t;
}

bool is_equivariant(const BilinearTensor& t, const Sl2kModule& source, const Sl2kModule& target) {
  Sl2kModule pair = internal_tensor(source, source);
  Mat m(t.target_dim, t.source_dim * t.source_dim);
  for (std::size_t r = 0; r < t.target_dim; ++r)
    for (std::size_t i = 0; i < t.source_dim; ++i)
      for (std::size_t j = 0; j < t.source_dim; ++j) m(r, i * t.source_dim + j) = t.at(r, i, j);
  for (std::size_t f = 0; f < source.k(); ++f)
    for (std::size_t g = 0; g < 3; ++g) {
      auto gen = static_cast<Generator>(g);
      if (m * pair.action(f, gen) != target.action(f, gen) * m) return false;
    }
  return true;
}

std::vector<Mat> equivariant_maps(const Sl2kModule& a, const Sl2kModule& b) {
  if (a.k() != b.k()) throw UsageError("equivariant_maps: factor count mismatch");
  if (a.dim() == 0 || b.dim() == 0) return {};
  if (a.k() == 0) {
    std::vector<Mat> all;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Mat m(b.dim(), a.dim());
        m(i, j) = 1;
        all.push_back(std::move(m));
      }
    return all;
  }
  auto ga = a.generators();
  auto gb = b.generators();
  return exact::intertwiners(ga, gb);
}

std::array<Scalar, 3> u2_to_sl2(std::size_t t) {
  switch (t) {
    case 0: return {Scalar(1), Scalar(0), Scalar(0)};
    case 1: return {Scalar(0), Scalar(0), Scalar(-1)};
    case 2: return {Scalar(0), Scalar(-2), Scalar(0)};
    default: throw UsageError("u2_to_sl2: index out of range");
  }
}

}  // namespace exholo::sl2
