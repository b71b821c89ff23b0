#include "agc/suite.hpp"

#include <sstream>

namespace agc {

Json SuiteReport::to_json() const {
  Json arr = Json::array();
  for (const auto& l : laws) {
    Json entry;
    entry["law"] = l.law;
    entry["status"] = l.pass ? "pass" : "fail";
    entry["witness"] = l.witness.is_null() ? Json(nullptr) : l.witness;
    entry["instances"] = l.instances;
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  long long unexpected = 0;
  for (const auto& l : laws) {
    const bool ok = l.as_expected();
    if (!ok) ++unexpected;
    out << (ok ? "ok  " : "BAD ") << "  " << l.law;
    for (std::size_t pad = l.law.size(); pad < 40; ++pad) out << ' ';
    out << (l.pass ? "pass" : "fail");
    if (!l.pass && l.expect_pass) out << "(!)";
    if (!l.pass && !l.expect_pass) out << "(expected)";
    if (l.pass && !l.expect_pass) out << " but expected a counterexample(!)";
    out << "  instances=" << l.instances;
    if (!l.witness.is_null()) out << "  witness=" << l.witness.dump();
    out << "\n";
  }
  out << "laws: " << laws.size() << ", unexpected outcomes: " << unexpected << "\n";
  return out.str();
}

void for_each_tuple(const std::vector<std::size_t>& sizes, const SampleOpts& opts,
                    std::string_view stream,
                    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  if (sizes.empty()) {
    fn(idx);
    return;
  }
  if (opts.sampled) {
    SplitMix64 rng(opts.seed ^ fnv1a(stream));
    for (int s = 0; s < opts.samples; ++s) {
      for (std::size_t k = 0; k < sizes.size(); ++k) {
        idx[k] = static_cast<std::size_t>(rng.below(sizes[k]));
      }
      fn(idx);
    }
    return;
  }
  for (;;) {
    fn(idx);
    std::size_t k = 0;
    while (k < sizes.size()) {
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      ++k;
    }
    if (k == sizes.size()) return;
  }
}

}  // namespace agc
