#include "agc/contract.hpp"

namespace agc {

namespace {

void require_same(const Contract& c, const Contract& c2, const char* where) {
  if (c.algebra() != c2.algebra()) throw MixedAlgebraError(where);
}

}  // namespace

Contract Contract::make(const Element& assume, const Element& guarantee) {
  if (assume.algebra() != guarantee.algebra()) throw MixedAlgebraError("Contract::make");
  return Contract(assume, guarantee | ~assume);
}

Contract Contract::from_canonical(const Element& assume, const Element& guarantee) {
  if (assume.algebra() != guarantee.algebra()) {
    throw MixedAlgebraError("Contract::from_canonical");
  }
  if (!(assume | guarantee).is_top()) {
    throw NotCanonicalError("assume = " + render_dnf(assume) +
                            ", guarantee = " + render_dnf(guarantee));
  }
  return Contract(assume, guarantee);
}

void assert_canonical(const Contract& c) {
  if (!(c.assume() | c.guarantee()).is_top()) {
    throw NotCanonicalError(render(c));
  }
}

Distinguished distinguished(const AlgebraPtr& alg) {
  Element bot = Element::bottom(alg);
  Element top = Element::top(alg);
  return Distinguished{Contract::from_canonical(bot, top),
                       Contract::from_canonical(top, bot),
                       Contract::from_canonical(top, top)};
}

bool is_environment(const Element& e, const Contract& c) {
  if (e.algebra() != c.algebra()) throw MixedAlgebraError("is_environment");
  return leq(e, c.assume());
}

bool is_implementation(const Element& m, const Contract& c) {
  if (m.algebra() != c.algebra()) throw MixedAlgebraError("is_implementation");
  return leq(m, c.guarantee());
}

bool refines(const Contract& c, const Contract& c2) {
  require_same(c, c2, "refines");
  return leq(c.guarantee(), c2.guarantee()) && leq(c2.assume(), c.assume());
}

Contract reciprocal(const Contract& c) {
  return Contract::from_canonical(c.guarantee(), c.assume());
}

Contract conj(const Contract& c, const Contract& c2) {
  require_same(c, c2, "conj");
  return Contract::from_canonical(c.assume() | c2.assume(),
                                  c.guarantee() & c2.guarantee());
}

Contract disj(const Contract& c, const Contract& c2) {
  require_same(c, c2, "disj");
  return Contract::from_canonical(c.assume() & c2.assume(),
                                  c.guarantee() | c2.guarantee());
}

Contract compose(const Contract& c, const Contract& c2) {
  require_same(c, c2, "compose");
  Element g = c.guarantee() & c2.guarantee();
  return Contract::from_canonical((c.assume() & c2.assume()) | ~g, g);
}

Contract merge(const Contract& c, const Contract& c2) {
  require_same(c, c2, "merge");
  Element a = c.assume() & c2.assume();
  return Contract::from_canonical(a, (c.guarantee() & c2.guarantee()) | ~a);
}

Contract quotient(const Contract& c, const Contract& c2) {
  require_same(c, c2, "quotient");
  Element a = c.assume() & c2.guarantee();
  return Contract::from_canonical(a, (c.guarantee() & c2.assume()) | ~a);
}

Contract separate(const Contract& c, const Contract& c2) {
  require_same(c, c2, "separate");
  Element g = c.guarantee() & c2.assume();
  return Contract::from_canonical((c.assume() & c2.guarantee()) | ~g, g);
}

Contract implication(const Contract& antecedent, const Contract& c) {
  require_same(antecedent, c, "implication");
  const Element& a = c.assume();
  const Element& g = c.guarantee();
  const Element& a2 = antecedent.assume();
  const Element& g2 = antecedent.guarantee();
  return Contract::from_canonical((a & ~a2) | (g2 & ~g), g | ~g2);
}

Contract coimplication(const Contract& antecedent, const Contract& c) {
  require_same(antecedent, c, "coimplication");
  const Element& a = c.assume();
  const Element& g = c.guarantee();
  const Element& a2 = antecedent.assume();
  const Element& g2 = antecedent.guarantee();
  return Contract::from_canonical(a | ~a2, (g & ~g2) | (a2 & ~a));
}

std::string render(const Contract& c) {
  return "contract(assume = " + render_dnf(c.assume()) +
         ", guarantee = " + render_dnf(c.guarantee()) + ")";
}

}  // namespace agc
