#include "exholo/report.hpp"

#include <gmp.h>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace exholo::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kError: return "error";
  }
  return "error";
}

Check expect_eq(std::string name, json expected, json actual, json details) {
  Check c;
  c.name = std::move(name);
  c.status = expected == actual ? Status::kPass : Status::kFail;
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.details = std::move(details);
  return c;
}

Check expect_true(std::string name, bool condition, json details) {
  return expect_eq(std::move(name), true, condition, std::move(details));
}

Check record(std::string name, json value, json details) {
  Check c;
  c.name = std::move(name);
  c.expected = nullptr;
  c.actual = std::move(value);
  c.details = std::move(details);
  return c;
}

bool all_pass(const Certificate& c) {
  for (const auto& check : c)
    if (check.status != Status::kPass) return false;
  return true;
}

json to_json(const Check& c) {
  json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  j["details"] = c.details;
  return j;
}

json to_json(const Certificate& c) {
  json a = json::array();
  for (const auto& check : c) a.push_back(to_json(check));
  return a;
}

SuiteReport run_guarded(const std::string& suite, const std::function<Certificate()>& body) {
  SuiteReport r;
  r.suite = suite;
  auto start = std::chrono::steady_clock::now();
  try {
    r.checks = body();
  } catch (const std::exception& e) {
    Check c;
    c.name = suite + ": uncaught failure";
    c.status = Status::kError;
    c.expected = "completion";
    c.actual = e.what();
    r.checks.push_back(std::move(c));
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool VerificationReport::all_pass() const {
  for (const auto& s : suites)
    if (!report::all_pass(s.checks)) return false;
  return true;
}

json to_json(const VerificationReport& r) {
  json j;
  j["toolchain"] = r.toolchain;
  j["status"] = r.all_pass() ? "pass" : "fail";
  json suites = json::array();
  for (const auto& s : r.suites) {
    json sj;
    sj["suite"] = s.suite;
    sj["status"] = all_pass(s.checks) ? "pass" : "fail";
    sj["checks"] = to_json(s.checks);
    suites.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites);
  return j;
}

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "# exholo verification report\n\n";
  out << "toolchain: `" << r.toolchain << "`\n\n";
  out << "overall: **" << (r.all_pass() ? "pass" : "fail") << "**\n\n";
  for (const auto& s : r.suites) {
    std::size_t passed = 0;
    for (const auto& c : s.checks) passed += c.status == Status::kPass;
    out << "## " << s.suite << "\n\n";
    out << passed << "/" << s.checks.size() << " checks pass, " << std::fixed << std::setprecision(0)
        << s.elapsed_ms << " ms\n\n";
    out << "| check | status | expected | actual |\n|---|---|---|---|\n";
    for (const auto& c : s.checks) {
      std::string exp = c.expected.is_null() ? "(recorded)" : c.expected.dump();
      std::string act = c.actual.dump();
      if (act.size() > 80) act = act.substr(0, 77) + "...";
      out << "| " << c.name << " | " << to_string(c.status) << " | `" << exp << "` | `" << act << "` |\n";
    }
    out << "\n";
  }
  return out.str();
}

std::string toolchain_string() {
  std::ostringstream out;
  out << "exholo 1.0.0; ";
#if defined(__clang__)
  out << "clang " << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
  out << "gcc " << __GNUC__ << "." << __GNUC_MINOR__;
#else
  out << "unknown compiler";
#endif
  out << "; gmp " << gmp_version;
  return out.str();
}

}  // namespace exholo::report
