#pragma once

// Named verification suites and the JSON payloads of the command-line tool.

#include <string>
#include <vector>

#include "exholo/quadric.hpp"
#include "exholo/report.hpp"
#include "exholo/symdec.hpp"

namespace exholo::suites {

/// Suite identifiers in canonical report order (without "all").
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

struct Options {
  std::size_t jobs = 1;
  symdec::ClassifyBounds bounds{32, 4, 8};
  /// Also report the exploratory diagonal-candidate computation.
  bool explore = false;
};

/// Classification within the bounds must return exactly the seven table entries.
report::Certificate classification_certificate(const symdec::ClassifyBounds& bounds, std::size_t jobs);
/// Jacobi, center, Killing form, simplicity, dimension, rank and label of one table model.
report::Certificate model_certificate(const std::string& label);

/// Runs the named suites ("all" expands to every suite); report order is canonical
/// and independent of jobs. Throws UsageError on an unknown name.
report::VerificationReport verify(const std::vector<std::string>& names, const Options& options);

/// Payload of `build`: multi-index, Bianchi coefficients, identification and structure constants.
json build_payload(const symdec::MultiIndex& mi);
/// Payload of `classify`.
json classify_payload(const symdec::ClassifyBounds& bounds, std::size_t jobs);
/// Payload of `export-cross`: the cross product and, optionally, the curvature basis.
json cross_payload(bool with_curvature);

}  // namespace exholo::suites
