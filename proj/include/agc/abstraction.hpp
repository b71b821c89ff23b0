#pragma once

#include "agc/contract_map.hpp"
#include "agc/suite.hpp"

namespace agc {

/// Lift a monotone, join- and top-preserving map alpha to contracts,
/// componentwise: (a, g) -> (alpha a, alpha g). The three flags are
/// preconditions; a missing one raises InvalidAbstraction naming it.
ContractMap lift_monotone(const MonotoneMap& alpha);

/// Lift a Boolean-algebra homomorphism f to f*(a, g) = (f a, f g);
/// commutes with all contract operations.
ContractMap lift_hom(const AlgebraHom& f);

/// The element-level right adjoint of a join-preserving map:
/// gamma(y) = join of { x : alpha(x) <= y }.
MonotoneMap element_right_adjoint(const MonotoneMap& alpha);

/// Check the adjunction alpha(Cc) <= Ca iff Cc <= gamma(Ca) on every pair
/// of contracts. When both maps are hom-induced and the adjunction holds,
/// additionally reports whether the two composites are identities (the
/// rigidity consequence, witnessed at this scale, never asserted as a
/// theorem).
SuiteReport check_galois_pair(const ContractMap& alpha, const ContractMap& gamma);

}  // namespace agc
