#pragma once

#include "agc/oracle.hpp"
#include "agc/suite.hpp"

namespace agc {

/// Left action of the algebra on its contracts: b . (a, g) = (b & a, b -> g).
/// Adds b to the assumptions; the result relaxes the contract.
Contract act_left(const Element& b, const Contract& c);

/// Right action: (a, g) . b = (b -> a, b & g). Adds b to the guarantees;
/// the result strengthens the contract.
Contract act_right(const Contract& c, const Element& b);

/// The complete identity battery for the two actions (order, reciprocal,
/// associativity, distributivity over the algebra, interaction with the
/// eight contract operations). Each row is quantified over all the
/// variables it mentions; three-way rows contribute one law per equality.
SuiteReport action_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

SuiteReport run_action_suite(const AlgebraPtr& alg);

}  // namespace agc
