#include "exholo/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace exholo::suites {

using report::Certificate;
using report::expect_eq;
using report::expect_true;
using report::record;
using exact::Subspace;

namespace {

// Built on first use and shared by every suite of one run.
class Context {
 public:
  const holo::HoloModel& model() {
    std::call_once(model_once_, [this] { model_ = holo::build_model(); });
    return model_;
  }
  const quadric::IsotropyData& isotropy() {
    const auto& m = model();
    std::call_once(iso_once_, [&] { iso_ = quadric::isotropy_data(m); });
    return iso_;
  }

 private:
  std::once_flag model_once_, iso_once_;
  holo::HoloModel model_;
  quadric::IsotropyData iso_;
};

void append(Certificate& to, Certificate from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

Certificate run_body(const std::string& name, const Options& o, Context& ctx) {
  Certificate c;
  if (name == "thm-1-2") {
    append(c, classification_certificate(o.bounds, o.jobs));
    for (const auto& [label, mi] : symdec::model_table()) append(c, model_certificate(label));
  } else if (name == "lemma-1-3") {
    append(c, holo::triality_checks());
  } else if (name == "rem-1-4") {
    append(c, holo::rem14_checks());
  } else if (name == "cor-1-5") {
    append(c, holo::cor15_chain(ctx.model()));
  } else if (name == "cor-1-6") {
    const auto& m = ctx.model();
    append(c, holo::representations_certificate(m));
    append(c, holo::g2_certificate(m));
    append(c, holo::cross_certificate(m));
  } else if (name == "thm-1-7") {
    append(c, holo::thm17_check(ctx.model()));
  } else if (name == "prop-2-1") {
    const auto& m = ctx.model();
    const auto& d = ctx.isotropy();
    append(c, quadric::prop21_case_i(m, d));
    append(c, quadric::prop21_case_ii(m, d));
    append(c, quadric::prop21_case_iii(m, d));
  } else if (name == "thm-2-2") {
    const auto& m = ctx.model();
    const auto& d = ctx.isotropy();
    append(c, quadric::curvature_certificate(m, d));
    append(c, quadric::obstruction_certificate(m, d, o.jobs));
  } else if (name == "explore-diagonal") {
    append(c, holo::diagonal_candidate(ctx.model()));
  } else {
    throw UsageError("unknown suite '" + name + "'");
  }
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm-1-2", "lemma-1-3", "rem-1-4",  "cor-1-5",
                                              "cor-1-6", "thm-1-7",   "prop-2-1", "thm-2-2"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

Certificate classification_certificate(const symdec::ClassifyBounds& bounds, std::size_t jobs) {
  Certificate c;
  auto r = symdec::classify(bounds, jobs);
  json found = json::array(), expected = json::array();
  for (const auto& e : r.admitted) found.push_back(e.mi.to_string());
  // the table entries, in search order (ascending dim p, then lexicographic)
  std::vector<symdec::MultiIndex> table;
  for (const auto& [label, mi] : symdec::model_table()) table.push_back(mi);
  auto order = symdec::enumerate(bounds);
  for (const auto& mi : order)
    if (std::find(table.begin(), table.end(), mi) != table.end()) expected.push_back(mi.to_string());
  c.push_back(record("classification bounds",
                     {{"max_p_dim", bounds.max_p_dim}, {"max_k", bounds.max_k}, {"max_n", bounds.max_n}},
                     {{"candidates", r.candidates.size()}}));
  c.push_back(expect_eq("multi-indices with nonzero Bianchi solution space", expected, found,
                        {{"entries", symdec::to_json(r)}}));
  return c;
}

Certificate model_certificate(const std::string& label) {
  static const std::map<std::string, std::pair<std::size_t, std::size_t>> dim_rank{
      {"so(4)", {6, 2}},   {"so(5)", {10, 2}}, {"sl(3)", {8, 2}}, {"g2", {14, 2}},
      {"so(6)", {15, 3}},  {"so(7)", {21, 3}}, {"so(8)", {28, 4}}};
  Certificate c;
  auto sd = symdec::standard_model(label);
  const auto& l = *sd.algebra;
  std::string tag = label + " = (" + sd.mi.to_string() + ")";
  auto defect = lie::jacobi_defect(l, 4);
  c.push_back(expect_eq(tag + ": Jacobi defect", 0, defect.size()));
  c.push_back(expect_eq(tag + ": center dimension", 0, lie::center(l).dim()));
  c.push_back(expect_eq(tag + ": Killing form rank (nondegenerate)", l.dim(), exact::rank(lie::killing_form(l))));
  c.push_back(expect_eq(tag + ": simple", label != "so(4)", lie::is_simple(l)));
  const auto& [d, rk] = dim_rank.at(label);
  c.push_back(expect_eq(tag + ": dimension", d, l.dim()));
  c.push_back(expect_eq(tag + ": rank", rk, lie::rank(l)));
  c.push_back(expect_eq(tag + ": identified label", label, symdec::identify(l)));
  json coeffs = json::array();
  for (const auto& s : sd.coefficients) coeffs.push_back(exact::to_string(s));
  c.push_back(record(tag + ": Bianchi coefficients", coeffs));
  return c;
}

report::VerificationReport verify(const std::vector<std::string>& names, const Options& options) {
  std::vector<std::string> run;
  for (const auto& n : names) {
    if (!is_suite(n)) throw UsageError("unknown suite '" + n + "'");
    if (n == "all")
      run.insert(run.end(), suite_names().begin(), suite_names().end());
    else
      run.push_back(n);
  }
  // canonical order, no duplicates
  std::vector<std::string> ordered;
  for (const auto& s : suite_names())
    if (std::find(run.begin(), run.end(), s) != run.end()) ordered.push_back(s);
  if (options.explore) ordered.push_back("explore-diagonal");

  Context ctx;
  report::VerificationReport rep;
  rep.toolchain = report::toolchain_string();
  rep.suites.resize(ordered.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < ordered.size();)
      rep.suites[i] = report::run_guarded(ordered[i], [&] { return run_body(ordered[i], options, ctx); });
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::min(std::max<std::size_t>(options.jobs, 1), ordered.size());
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rep;
}

json build_payload(const symdec::MultiIndex& mi) {
  Subspace sol = symdec::bianchi_solution_space(mi);
  json j;
  j["multi_index"] = mi.parts();
  j["p_dim"] = mi.p_dim();
  j["solution_dim"] = sol.dim();
  if (sol.dim() == 0) {
    j["label"] = nullptr;
    return j;
  }
  auto sd = symdec::decomposition(mi, sol.vector(0));
  auto s = lie::summarize(*sd.algebra);
  json coeffs = json::array();
  for (const auto& c : sd.coefficients) coeffs.push_back(exact::to_string(c));
  j["coefficients"] = std::move(coeffs);
  j["label"] = s.label;
  json summary;
  summary["dim"] = s.dim;
  summary["jacobi"] = s.jacobi;
  summary["center_dim"] = s.center_dim;
  summary["semisimple"] = s.semisimple;
  summary["simple"] = s.simple;
  summary["rank"] = s.rank;
  j["summary"] = std::move(summary);
  j["algebra"] = sd.algebra->to_json();
  return j;
}

json classify_payload(const symdec::ClassifyBounds& bounds, std::size_t jobs) {
  auto r = symdec::classify(bounds, jobs);
  json j;
  j["bounds"] = {{"max_p_dim", bounds.max_p_dim}, {"max_k", bounds.max_k}, {"max_n", bounds.max_n}};
  j["candidates"] = r.candidates.size();
  j["admitted"] = symdec::to_json(r);
  return j;
}

json cross_payload(bool with_curvature) {
  auto m = holo::build_model();
  json j;
  j["cross_product"] = m.cross.to_json();
  if (with_curvature) {
    auto q7 = quadric::quadratic_space(m.vec.rep, quadric::cartan_indices(*m.so7));
    j["curvature"] = quadric::export_curvature(quadric::curvature_space(q7, m.g2));
  }
  return j;
}

}  // namespace exholo::suites
