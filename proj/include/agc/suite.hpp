#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "agc/rng.hpp"

namespace agc {

using Json = nlohmann::ordered_json;

/// Sampling policy for law suites. Exhaustive by default; sampled mode
/// draws `samples` tuples from a per-law splitmix stream.
struct SampleOpts {
  bool sampled = false;
  std::uint64_t seed = 0xA6C;
  int samples = 2048;
};

/// Outcome of one law: pass/fail, instance count, first counterexample.
/// `expect_pass` records whether the suite treats a failure as expected
/// (counterexample cells); it drives exit codes, not the JSON schema.
struct LawResult {
  std::string law;
  bool pass = true;
  Json witness;  // null when no counterexample was recorded
  long long instances = 0;
  bool expect_pass = true;

  bool as_expected() const { return pass == expect_pass; }
};

struct SuiteReport {
  std::vector<LawResult> laws;

  void add(LawResult r) { laws.push_back(std::move(r)); }
  void append(SuiteReport other) {
    for (auto& l : other.laws) laws.push_back(std::move(l));
  }

  bool all_as_expected() const {
    for (const auto& l : laws) {
      if (!l.as_expected()) return false;
    }
    return true;
  }

  /// Array of {"law","status","witness","instances"} objects in suite order.
  Json to_json() const;
  std::string to_text() const;
};

/// Accumulator for scanning one law over its instance space.
class LawScan {
 public:
  explicit LawScan(std::string name, bool expect_pass = true)
      : name_(std::move(name)), expect_pass_(expect_pass) {}

  void tally(bool ok, const std::function<Json()>& witness) {
    ++instances_;
    if (!ok) {
      if (failures_ == 0) witness_ = witness();
      ++failures_;
    }
  }

  long long failures() const { return failures_; }

  LawResult result() const {
    LawResult r;
    r.law = name_;
    r.pass = failures_ == 0;
    r.witness = witness_;
    r.instances = instances_;
    r.expect_pass = expect_pass_;
    return r;
  }

 private:
  std::string name_;
  bool expect_pass_;
  long long instances_ = 0;
  long long failures_ = 0;
  Json witness_;
};

/// Visit index tuples over the given domain sizes: the full product in
/// exhaustive mode, `samples` seeded draws otherwise. `stream` keys the
/// sampling stream (pass the law name).
void for_each_tuple(const std::vector<std::size_t>& sizes, const SampleOpts& opts,
                    std::string_view stream,
                    const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace agc
