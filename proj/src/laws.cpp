#include "agc/laws.hpp"

#include <algorithm>

#include "agc/actions.hpp"
#include "agc/contract_laws.hpp"
#include "agc/structures.hpp"

namespace agc {

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names{"tables", "monoids", "semirings", "actions",
                                              "adjoints"};
  return names;
}

SuiteReport run_laws(const LawsOptions& opts) {
  if (opts.atoms < 1 || opts.atoms > 4) {
    throw Error("laws run on 1 to 4 atoms (4 sampled)");
  }
  const std::vector<std::string> all_atoms{"x", "y", "z", "w"};
  std::vector<std::string> atoms(all_atoms.begin(), all_atoms.begin() + opts.atoms);
  AlgebraPtr alg = Algebra::make(atoms, Backend::Bitset);
  oracle::ContractEnumeration en = oracle::enumerate(alg);

  SampleOpts sample;
  sample.sampled = opts.atoms >= 4;
  sample.seed = opts.seed;
  sample.samples = opts.samples;

  auto selected = [&](const std::string& name) {
    for (const auto& s : opts.suites) {
      if (s == "all" || s == name) return true;
    }
    return false;
  };

  SuiteReport report;
  if (selected("tables")) {
    report.append(distinguished_suite(en, sample));
    report.append(distributivity_suite(en, sample));
    report.append(duality_suite(en, sample));
    report.append(rewrite_suite(en, sample));
    report.append(canonicity_suite(en, sample));
    report.append(monotonicity_suite(en, sample));
    report.append(refinement_semantics_suite(en, sample));
    report.append(semidistributivity_suite(en, sample));
  }
  if (selected("monoids")) {
    for (ContractOp op : {ContractOp::Conj, ContractOp::Disj, ContractOp::Compose,
                          ContractOp::Merge}) {
      report.append(check_monoid(monoid_spec(op, alg), en, sample));
    }
    report.append(monoid_iso_suite(en, sample));
    report.append(monoid_map_suite(en, sample));
    report.append(morphism_suite(en, sample));
  }
  if (selected("semirings")) {
    report.append(semiring_census(en, sample));
    report.append(semiring_hom_suite(en, sample));
    if (opts.atoms == 1) report.append(no_isomorphism_suite(alg));
  }
  if (selected("actions")) {
    report.append(action_suite(en, sample));
  }
  if (selected("adjoints")) {
    report.append(oracle::certification_suite(en, sample));
  }
  return report;
}

}  // namespace agc
