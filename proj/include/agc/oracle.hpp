#pragma once

#include <vector>

#include "agc/contract.hpp"
#include "agc/suite.hpp"

namespace agc::oracle {

/// The complete carrier of the contract algebra over a small algebra:
/// all canonical pairs, in lexicographic (assume, guarantee) mask order.
/// Size is 3^n for n atoms.
class ContractEnumeration {
 public:
  explicit ContractEnumeration(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return contracts_.size(); }
  const Contract& at(std::size_t i) const { return contracts_[i]; }
  const std::vector<Contract>& contracts() const { return contracts_; }
  std::size_t index_of(const Contract& c) const;

 private:
  AlgebraPtr alg_;
  std::vector<Contract> contracts_;
  std::vector<std::size_t> index_;  // keyed by (a << n) | g
};

/// Enumerate all canonical contracts; TooLarge above four atoms.
ContractEnumeration enumerate(const AlgebraPtr& alg);

/// Refinement used inside oracle searches. On algebras of up to two atoms
/// it is decided from the semantic definition (inclusion of environment
/// and implementation sets, with implementations taken from the
/// for-every-environment condition); on larger algebras it falls back to
/// the assume/guarantee characterization.
bool oracle_leq(const Contract& c, const Contract& c2);

/// Order-theoretic meet/join located by scanning the enumeration with
/// oracle_leq only. NoExtremum signals a missing extremum and means a bug.
Contract oracle_glb(const Contract& c, const Contract& c2);
Contract oracle_lub(const Contract& c, const Contract& c2);
Contract oracle_glb(const ContractEnumeration& en, const Contract& c, const Contract& c2);
Contract oracle_lub(const ContractEnumeration& en, const Contract& c, const Contract& c2);

enum class Residual { Quotient, Separation, Implication, Coimplication };

/// Extremal element of the defining inequality of the requested adjoint:
///   Quotient       largest d with compose(c2, d) <= c
///   Separation     smallest d with c <= merge(c2, d)
///   Implication    largest d with conj(d, c2) <= c
///   Coimplication  smallest d with disj(d, c2) >= c
/// Found by filtering the enumeration; never uses the closed forms.
Contract oracle_residual(Residual kind, const Contract& c, const Contract& c2);
Contract oracle_residual(const ContractEnumeration& en, Residual kind, const Contract& c,
                         const Contract& c2);

/// Agreement of every closed form (conj/disj and the four adjoints) with
/// the oracle extremum on every pair, plus extremum uniqueness.
SuiteReport certification_suite(const ContractEnumeration& en, const SampleOpts& opts);

}  // namespace agc::oracle
