// Acceptance run: one PASS/FAIL line per criterion, each with its runtime bound.
// Exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "exholo/suites.hpp"

using namespace exholo;
using report::Certificate;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from(const Certificate& c) {
  Outcome o;
  for (const auto& check : c)
    if (check.status != report::Status::kPass) {
      o.ok = false;
      if (o.note.empty()) o.note = "first failing check: " + check.name;
    }
  return o;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = s < limit_s;
  bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("[%s] %2d %-34s %8.2f s (limit %5.0f s)%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), s, limit_s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  holo::HoloModel m;
  quadric::IsotropyData d;

  criterion(1, "classification (32, 4, 8)", 600, [&] {
    return from(suites::classification_certificate({32, 4, 8}, jobs));
  });
  criterion(2, "model certification (7 models)", 7 * 60, [&] {
    Outcome all;
    for (const auto& [label, mi] : symdec::model_table()) {
      auto start = std::chrono::steady_clock::now();
      Outcome o = from(suites::model_certificate(label));
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (s >= 60) o = {false, label + " exceeded 60 s"};
      if (!o.ok && all.ok) all = o;
    }
    return all;
  });
  criterion(3, "triality branchings", 10, [&] {
    Certificate c = holo::triality_checks();
    auto r = holo::rem14_checks();
    c.insert(c.end(), r.begin(), r.end());
    return from(c);
  });
  criterion(4, "holonomy representations", 60, [&] {
    m = holo::build_model();
    return from(holo::representations_certificate(m));
  });
  criterion(5, "g2 as spinor annihilator", 120, [&] { return from(holo::g2_certificate(m)); });
  criterion(6, "cross product and its stabilizer", 300, [&] {
    Certificate c = holo::cross_certificate(m);
    auto t = holo::thm17_check(m);
    c.insert(c.end(), t.begin(), t.end());
    return from(c);
  });
  criterion(7, "subalgebra chain", 120, [&] { return from(holo::cor15_chain(m)); });
  criterion(8, "isotropy algebras (cases i-iii)", 300, [&] {
    d = quadric::isotropy_data(m);
    Certificate c = quadric::prop21_case_i(m, d);
    for (auto part : {quadric::prop21_case_ii(m, d), quadric::prop21_case_iii(m, d)})
      c.insert(c.end(), part.begin(), part.end());
    return from(c);
  });
  criterion(9, "curvature space and obstruction", 900, [&] {
    Certificate c = quadric::curvature_certificate(m, d);
    auto o = quadric::obstruction_certificate(m, d, jobs);
    c.insert(c.end(), o.begin(), o.end());
    return from(c);
  });
  criterion(10, "reproducible verify all", 1800, [&] {
    suites::Options serial, parallel;
    serial.jobs = 1;
    parallel.jobs = jobs;
    auto a = report::to_json(suites::verify({"all"}, serial)).dump(2);
    auto b = report::to_json(suites::verify({"all"}, parallel)).dump(2);
    return a == b ? Outcome{} : Outcome{false, "reports differ"};
  });
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
