// exholo: build symmetric decompositions, classify them, run verification
// suites and export the cross product.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <thread>
#include <iostream>

#include "exholo/suites.hpp"

using namespace exholo;

namespace {

constexpr int kUsage = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exholo: exact certificates for simple symmetric decompositions and exceptional holonomy"};
  app.require_subcommand(1);
  std::string json_path, md_path;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* build = app.add_subcommand("build", "Build the algebra of a multi-index n1.n2...nk and identify it");
  std::string mi_text;
  build->add_option("multi_index", mi_text, "Multi-index, e.g. 3.1")->required();
  build->add_option("--json", json_path, "Write the algebra as JSON");

  auto* classify = app.add_subcommand("classify", "Search all multi-indices within bounds");
  symdec::ClassifyBounds bounds{32, 4, 8};
  classify->add_option("--max-p-dim", bounds.max_p_dim, "Maximal dimension of p")->check(CLI::PositiveNumber);
  classify->add_option("--max-k", bounds.max_k, "Maximal number of sl(2) factors")->check(CLI::PositiveNumber);
  classify->add_option("--max-n", bounds.max_n, "Maximal part")->check(CLI::PositiveNumber);
  classify->add_option("--json", json_path, "Write the admitted multi-indices as JSON");
  classify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  bool explore = false;
  verify->add_option("suites", suites, "Suite names, or all")->required();
  verify->add_option("--json", json_path, "Write the canonical JSON report (default: standard output)");
  verify->add_option("--md", md_path, "Write a markdown report");
  verify->add_option("--jobs", jobs, "Suites and sweeps run on up to N threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-p-dim", bounds.max_p_dim, "Classification bound")->check(CLI::PositiveNumber);
  verify->add_option("--max-k", bounds.max_k, "Classification bound")->check(CLI::PositiveNumber);
  verify->add_option("--max-n", bounds.max_n, "Classification bound")->check(CLI::PositiveNumber);
  verify->add_flag("--explore", explore, "Also report the exploratory diagonal-candidate computation");

  auto* cross = app.add_subcommand("export-cross", "Export the cross product on the 7-dim representation");
  std::string curvature_path;
  cross->add_option("--json", json_path, "Output path (default: standard output)");
  cross->add_option("--curvature", curvature_path, "Also write the g2 curvature basis (21x21 matrices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*build) {
      auto mi = symdec::MultiIndex::parse(mi_text);
      json j = suites::build_payload(mi);
      if (!json_path.empty()) write_file(json_path, dump(j));
      if (j["solution_dim"] == 0) {
        std::cout << mi.to_string() << ": Bianchi solution space is zero, no Lie algebra\n";
        return 1;
      }
      std::cout << mi.to_string() << ": dim " << j["summary"]["dim"] << ", " << j["label"].get<std::string>()
                << "\n";
      return 0;
    }
    if (*classify) {
      json j = suites::classify_payload(bounds, jobs);
      if (!json_path.empty()) write_file(json_path, dump(j));
      std::cout << j["candidates"] << " candidates examined\n";
      for (const auto& e : j["admitted"]) {
        std::string parts;
        for (const auto& p : e["multi_index"]) parts += (parts.empty() ? "" : ".") + std::to_string(p.get<unsigned>());
        std::cout << "(" << parts << ")  dim p = " << e["p_dim"] << ", solution dim = " << e["solution_dim"] << "\n";
      }
      return 0;
    }
    if (*verify) {
      for (const auto& s : suites)
        if (!suites::is_suite(s)) {
          std::cerr << "unknown suite '" << s << "'\n\n" << verify->help();
          return kUsage;
        }
      suites::Options o;
      o.jobs = jobs;
      o.bounds = bounds;
      o.explore = explore;
      auto rep = suites::verify(suites, o);
      std::string canonical = dump(report::to_json(rep));
      if (json_path.empty()) {
        std::cout << canonical;
      } else {
        write_file(json_path, canonical);
      }
      if (!md_path.empty()) write_file(md_path, report::to_markdown(rep));
      for (const auto& s : rep.suites) {
        std::size_t pass = 0;
        for (const auto& c : s.checks) pass += c.status == report::Status::kPass;
        std::cerr << (report::all_pass(s.checks) ? "PASS " : "FAIL ") << s.suite << " (" << pass << "/"
                  << s.checks.size() << ")\n";
      }
      return rep.all_pass() ? 0 : 1;
    }
    if (*cross) {
      json j = suites::cross_payload(!curvature_path.empty());
      if (!curvature_path.empty()) {
        write_file(curvature_path, dump(j["curvature"]));
        j.erase("curvature");
      }
      if (json_path.empty())
        std::cout << dump(j);
      else
        write_file(json_path, dump(j));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
