#pragma once

#include <vector>

#include "agc/contract_map.hpp"
#include "agc/oracle.hpp"
#include "agc/suite.hpp"

namespace agc {

// Isomorphisms of the four contract monoids, diagram (1).

/// theta_g(a, g) = (!(a & g), g); involution exchanging the composition
/// and conjunction monoids.
Contract theta_g(const Contract& c);

/// theta_a(a, g) = (a, !(a & g)); involution exchanging the merging and
/// disjunction monoids.
Contract theta_a(const Contract& c);

// Monoid maps between an algebra and its contract algebra.

Contract iota_a(const Element& b);   // (b, top)
Contract iota_g(const Element& b);   // (top, b)
Element pi_g(const Contract& c);     // g
Element pi_a(const Contract& c);     // a

/// pi(a, g) = iota_a(a) composed with iota_g(g) = (g -> a, g).
Contract pi_pair(const Element& a, const Element& g);

/// iota(c) = (a & g, g); left inverse of pi_pair on canonical contracts.
std::pair<Element, Element> iota_split(const Contract& c);

// Semiring maps.

Contract delta_g(const Element& b);       // (!b, b)
Contract delta_a(const Element& b);       // (b, !b)
Contract iota_g_prime(const Element& b);  // (top, !b)
Contract iota_a_prime(const Element& b);  // (!b, top)
Element pi_a_prime(const Contract& c);    // !a
Element pi_g_prime(const Contract& c);    // !g

// Law checking.

enum class ContractOp { Conj, Disj, Compose, Merge };

const char* op_name(ContractOp op);
Contract apply_op(ContractOp op, const Contract& c, const Contract& c2);
Contract op_identity(ContractOp op, const AlgebraPtr& alg);

struct MonoidSpec {
  ContractOp op;
  Contract identity;
};
MonoidSpec monoid_spec(ContractOp op, const AlgebraPtr& alg);

struct SemiringSpec {
  ContractOp mult;
  ContractOp add;
  Contract one;
  Contract zero;
};
SemiringSpec semiring_spec(ContractOp mult, ContractOp add, const AlgebraPtr& alg);

/// Identity, associativity, commutativity and idempotence of one
/// operation, each law quantified exhaustively (or sampled).
SuiteReport check_monoid(const MonoidSpec& spec, const oracle::ContractEnumeration& en,
                         const SampleOpts& opts = {});
SuiteReport check_monoid(const MonoidSpec& spec, const AlgebraPtr& alg);

/// The semiring axioms in definition order: additive commutative monoid,
/// multiplicative monoid, both distributivities, annihilation, 0 != 1.
SuiteReport check_semiring(const SemiringSpec& spec, const oracle::ContractEnumeration& en,
                           const SampleOpts& opts = {});
SuiteReport check_semiring(const SemiringSpec& spec, const AlgebraPtr& alg);

/// All twelve ordered (mult, add) candidates over {conj, disj, compose,
/// merge}. Exactly the conjunction, disjunction, composition and merging
/// semirings are expected to pass; the other eight entries expect a
/// counterexample.
SuiteReport semiring_census(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// Involutions theta_g/theta_a, their monoid-isomorphism laws, and the
/// commuting square with reciprocal.
SuiteReport monoid_iso_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// iota_a/iota_g/pi/iota/pi_g/pi_a monoid-map laws and pi o iota = id.
SuiteReport monoid_map_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

/// The full distributivity matrix: positive cells quantified over all
/// triples, counterexample cells checked on the distinguished-element
/// witnesses (with failure frequency reported).
SuiteReport distributivity_suite(const oracle::ContractEnumeration& en,
                                 const SampleOpts& opts = {});

/// Semiring homomorphism laws for delta_g, delta_a, iota_g, iota_a,
/// iota_g', iota_a', pi_g, pi_a, pi_a', pi_g', complement and reciprocal.
SuiteReport semiring_hom_suite(const oracle::ContractEnumeration& en,
                               const SampleOpts& opts = {});

/// Brute-force search over tabulated maps (one-atom algebra) for semiring
/// maps from the composition semiring to the conjunction semiring: every
/// candidate collapses (a, top) contracts to 1, so none is invertible.
SuiteReport no_isomorphism_suite(const AlgebraPtr& alg);

/// f = pi o (l_a(ag) l_g(g) r_a(ag) r_g(g), r_a(ag) r_g(g)) o iota;
/// a morphism of composition monoids for every valid quadruple.
ContractMap assemble_morphism(const MorphismQuadruple& q);

/// All meet/top-preserving maps between two small algebras, generated
/// from coatom images in a fixed order.
std::vector<MeetTopMap> all_meet_top_maps(const AlgebraPtr& source, const AlgebraPtr& target);

/// Seeded choice of a valid quadruple (uniform over coatom images).
MorphismQuadruple random_quadruple(const AlgebraPtr& source, const AlgebraPtr& target,
                                   std::uint64_t seed);

/// Structure-theorem checks: a seeded random quadruple assembles to a
/// composition-monoid morphism, and on the one-atom algebra every such
/// morphism arises from some quadruple.
SuiteReport morphism_suite(const oracle::ContractEnumeration& en, const SampleOpts& opts = {});

}  // namespace agc
