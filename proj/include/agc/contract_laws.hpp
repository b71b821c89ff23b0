#pragma once

#include "agc/oracle.hpp"
#include "agc/suite.hpp"

namespace agc {

/// The full distinguished-element identity battery (every cell of the
/// zero/one/ident table), one law per cell, quantified over all contracts.
SuiteReport distinguished_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// Duality of the four operation pairs under reciprocal.
SuiteReport duality_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// quotient = merge with the reciprocal; separation = compose with the
/// reciprocal.
SuiteReport rewrite_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// Every operation's output satisfies assume | guarantee = top.
SuiteReport canonicity_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// compose, conj and disj are monotone in each argument for refines.
SuiteReport monotonicity_suite(const oracle::ContractEnumeration& en,
                               const SampleOpts& opts = {});

/// refines coincides with inclusion of implementation sets and reverse
/// inclusion of environment sets, both taken from the definitions.
SuiteReport refinement_semantics_suite(const oracle::ContractEnumeration& en,
                                       const SampleOpts& opts = {});

/// Prop-style semi-distributivity: (C1 & C2) op (C3 & C4) refines
/// (C1 op C3) & (C2 op C4), and dually for disjunction, for every
/// operation among conj/disj/compose/merge.
SuiteReport semidistributivity_suite(const oracle::ContractEnumeration& en,
                                     const SampleOpts& opts = {});

}  // namespace agc
