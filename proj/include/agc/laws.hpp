#pragma once

#include <string>
#include <vector>

#include "agc/suite.hpp"

namespace agc {

/// Options for the law-suite runner. Atom counts 1..3 run exhaustively,
/// 4 runs in sampled mode. Suites: tables, monoids, semirings, actions,
/// adjoints (or "all").
struct LawsOptions {
  int atoms = 2;
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 0xA6C;
  int samples = 2048;
};

/// Runs the selected suites over a fresh algebra with atoms x, y, z, w
/// (prefix of the requested size). The report passes overall when every
/// expected-pass law passes and every counterexample cell fails.
SuiteReport run_laws(const LawsOptions& opts);

/// Names of the suites run_laws accepts, in canonical report order.
const std::vector<std::string>& law_suite_names();

}  // namespace agc
