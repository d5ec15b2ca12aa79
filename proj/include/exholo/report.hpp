#pragma once

// Checks, suites and their deterministic serialization.

#include <functional>
#include <string>
#include <vector>

#include "exholo/exact.hpp"

namespace exholo::report {

enum class Status { kPass, kFail, kError };

std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::kPass;
  json expected;
  json actual;
  json details = json::object();
};

/// Pass iff expected == actual (JSON equality).
Check expect_eq(std::string name, json expected, json actual, json details = json::object());
/// Pass iff condition holds; expected/actual are rendered as booleans.
Check expect_true(std::string name, bool condition, json details = json::object());
/// Informational record: always passes, the value is reported as `actual`.
Check record(std::string name, json value, json details = json::object());

using Certificate = std::vector<Check>;

bool all_pass(const Certificate& c);
json to_json(const Check& c);
json to_json(const Certificate& c);

struct SuiteReport {
  std::string suite;
  Certificate checks;
  double elapsed_ms = 0;  // not part of the canonical serialization
};

/// Runs `body`, turning an escaping exception into a single error check.
SuiteReport run_guarded(const std::string& suite, const std::function<Certificate()>& body);

struct VerificationReport {
  std::string toolchain;
  std::vector<SuiteReport> suites;
  bool all_pass() const;
};

/// Canonical serialization: elapsed times are excluded so repeated runs are byte-identical.
json to_json(const VerificationReport& r);
std::string to_markdown(const VerificationReport& r);
std::string toolchain_string();

}  // namespace exholo::report
