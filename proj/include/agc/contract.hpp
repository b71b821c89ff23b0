#pragma once

#include <string>

#include "agc/algebra.hpp"

namespace agc {

/// An assume-guarantee contract in canonical form: assume | guarantee = top.
/// Immutable value; equality is componentwise.
class Contract {
 public:
  /// Canonicalizing constructor: (a, g) becomes (a, g | !a). Idempotent on
  /// canonical inputs.
  static Contract make(const Element& assume, const Element& guarantee);

  /// Constructor for pairs that are already canonical; throws
  /// NotCanonicalError otherwise.
  static Contract from_canonical(const Element& assume, const Element& guarantee);

  const Element& assume() const { return assume_; }
  const Element& guarantee() const { return guarantee_; }
  const AlgebraPtr& algebra() const { return assume_.algebra(); }

  friend bool operator==(const Contract& a, const Contract& b) {
    return a.assume_ == b.assume_ && a.guarantee_ == b.guarantee_;
  }
  friend bool operator!=(const Contract& a, const Contract& b) { return !(a == b); }

 private:
  Contract(Element a, Element g) : assume_(std::move(a)), guarantee_(std::move(g)) {}

  Element assume_;
  Element guarantee_;
};

/// Throws NotCanonicalError unless assume | guarantee = top.
void assert_canonical(const Contract& c);

/// The distinguished contracts: one = (bot, top) is the largest contract,
/// zero = (top, bot) the smallest, ident = (top, top) the identity of both
/// composition and merging.
struct Distinguished {
  Contract one;
  Contract zero;
  Contract ident;
};
Distinguished distinguished(const AlgebraPtr& alg);

/// E is an environment iff E <= assume.
bool is_environment(const Element& e, const Contract& c);

/// M is an implementation iff M & E <= guarantee for every environment E;
/// for canonical contracts this is equivalent to M <= guarantee, which is
/// what is computed here.
bool is_implementation(const Element& m, const Contract& c);

/// Refinement: c <= c2 iff guarantee(c) <= guarantee(c2) and
/// assume(c2) <= assume(c).
bool refines(const Contract& c, const Contract& c2);

/// (a, g) -> (g, a); involution exchanging environments and implementations.
Contract reciprocal(const Contract& c);

Contract conj(const Contract& c, const Contract& c2);     // (a|a', g&g')
Contract disj(const Contract& c, const Contract& c2);     // (a&a', g|g')
Contract compose(const Contract& c, const Contract& c2);  // (a&a' | !(g&g'), g&g')
Contract merge(const Contract& c, const Contract& c2);    // (a&a', g&g' | !(a&a'))

/// quotient(c, c2) = c / c2: the largest d with compose(c2, d) <= c.
Contract quotient(const Contract& c, const Contract& c2);

/// separate(c, c2) = c "divided" from the merging side: the smallest d with
/// c <= merge(c2, d).
Contract separate(const Contract& c, const Contract& c2);

/// implication(antecedent, c): the largest d with conj(d, antecedent) <= c.
/// Antecedent comes first.
Contract implication(const Contract& antecedent, const Contract& c);

/// coimplication(antecedent, c): the smallest d with
/// disj(d, antecedent) >= c. Antecedent comes first.
Contract coimplication(const Contract& antecedent, const Contract& c);

/// "contract(assume = <dnf>, guarantee = <dnf>)", deterministic.
std::string render(const Contract& c);

}  // namespace agc
