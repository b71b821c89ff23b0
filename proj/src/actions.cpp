#include "agc/actions.hpp"

namespace agc {

Contract act_left(const Element& b, const Contract& c) {
  if (b.algebra() != c.algebra()) throw MixedAlgebraError("act_left");
  return Contract::from_canonical(b & c.assume(), implies(b, c.guarantee()));
}

Contract act_right(const Contract& c, const Element& b) {
  if (b.algebra() != c.algebra()) throw MixedAlgebraError("act_right");
  return Contract::from_canonical(implies(b, c.assume()), b & c.guarantee());
}

namespace {

using oracle::ContractEnumeration;

struct ActionDomain {
  const ContractEnumeration& en;
  const AlgebraPtr& alg;
  std::size_t contracts;
  std::size_t elements;

  Element elem(std::size_t mask) const {
    return Element::from_mask(alg, static_cast<std::uint32_t>(mask));
  }
};

Json witness_bc(const Element& b, const Contract& c) {
  Json w;
  w["b"] = render_dnf(b);
  w["c"] = render(c);
  return w;
}

}  // namespace

SuiteReport action_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  ActionDomain dom{en, alg, en.size(), alg->carrier_size()};

  // (b, C) rows.
  auto bc_law = [&](const std::string& name,
                    const std::function<bool(const Element&, const Contract&)>& holds) {
    LawScan scan(name);
    for_each_tuple({dom.elements, dom.contracts}, opts, name,
                   [&](const std::vector<std::size_t>& idx) {
                     Element b = dom.elem(idx[0]);
                     const Contract& c = en.at(idx[1]);
                     scan.tally(holds(b, c), [&] { return witness_bc(b, c); });
                   });
    report.add(scan.result());
  };
  // (b, C, C') rows.
  auto bcc_law = [&](const std::string& name,
                     const std::function<bool(const Element&, const Contract&,
                                              const Contract&)>& holds) {
    LawScan scan(name);
    for_each_tuple({dom.elements, dom.contracts, dom.contracts}, opts, name,
                   [&](const std::vector<std::size_t>& idx) {
                     Element b = dom.elem(idx[0]);
                     const Contract& c = en.at(idx[1]);
                     const Contract& c2 = en.at(idx[2]);
                     scan.tally(holds(b, c, c2), [&] {
                       Json w = witness_bc(b, c);
                       w["c2"] = render(c2);
                       return w;
                     });
                   });
    report.add(scan.result());
  };
  // (b, b', C) rows.
  auto bbc_law = [&](const std::string& name,
                     const std::function<bool(const Element&, const Element&,
                                              const Contract&)>& holds) {
    LawScan scan(name);
    for_each_tuple({dom.elements, dom.elements, dom.contracts}, opts, name,
                   [&](const std::vector<std::size_t>& idx) {
                     Element b = dom.elem(idx[0]);
                     Element b2 = dom.elem(idx[1]);
                     const Contract& c = en.at(idx[2]);
                     scan.tally(holds(b, b2, c), [&] {
                       Json w = witness_bc(b, c);
                       w["b2"] = render_dnf(b2);
                       return w;
                     });
                   });
    report.add(scan.result());
  };

  // Order.
  bc_law("action/left_relaxes",
         [](const Element& b, const Contract& c) { return refines(c, act_left(b, c)); });
  bc_law("action/right_strengthens",
         [](const Element& b, const Contract& c) { return refines(act_right(c, b), c); });
  bcc_law("action/left_monotone",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return !refines(c, c2) || refines(act_left(b, c), act_left(b, c2));
          });
  bcc_law("action/right_monotone",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return !refines(c, c2) || refines(act_right(c, b), act_right(c2, b));
          });

  // Reciprocal.
  bc_law("action/reciprocal", [](const Element& b, const Contract& c) {
    return reciprocal(act_left(b, c)) == act_right(reciprocal(c), b);
  });

  // Associativity.
  bbc_law("action/left_assoc", [](const Element& b, const Element& b2, const Contract& c) {
    return act_left(b & b2, c) == act_left(b, act_left(b2, c));
  });
  bbc_law("action/right_assoc", [](const Element& b, const Element& b2, const Contract& c) {
    return act_right(c, b & b2) == act_right(act_right(c, b), b2);
  });

  // Distributivity over the Boolean algebra.
  bbc_law("action/left_join_to_conj",
          [](const Element& b, const Element& b2, const Contract& c) {
            return act_left(b | b2, c) == conj(act_left(b, c), act_left(b2, c));
          });
  bbc_law("action/right_join_to_disj",
          [](const Element& b, const Element& b2, const Contract& c) {
            return act_right(c, b | b2) == disj(act_right(c, b), act_right(c, b2));
          });

  // Actions and the contract operations. Four of these rows touch only
  // one operand on the right-hand side; that asymmetry is real and is
  // asserted exactly as stated.
  bcc_law("action/left_conj", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_left(b, conj(c, c2)) == conj(act_left(b, c), act_left(b, c2));
  });
  bcc_law("action/right_conj", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_right(conj(c, c2), b) == conj(act_right(c, b), c2);
  });
  bcc_law("action/left_disj", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_left(b, disj(c, c2)) == disj(act_left(b, c), c2);
  });
  bcc_law("action/right_disj", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_right(disj(c, c2), b) == disj(act_right(c, b), act_right(c2, b));
  });
  bcc_law("action/left_compose", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_left(b, compose(c, c2)) == compose(act_left(b, c), act_left(b, c2));
  });
  bcc_law("action/right_compose",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(compose(c, c2), b) == compose(act_right(c, b), c2);
          });
  bcc_law("action/left_merge", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_left(b, merge(c, c2)) == merge(act_left(b, c), c2);
  });
  bcc_law("action/right_merge", [](const Element& b, const Contract& c, const Contract& c2) {
    return act_right(merge(c, c2), b) == merge(act_right(c, b), act_right(c2, b));
  });

  // Actions and the adjoint operations; both equalities of each
  // three-way row are separate laws.
  bcc_law("action/left_quotient_shifts_right",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, quotient(c, c2)) == quotient(c, act_right(c2, b));
          });
  bcc_law("action/left_quotient_shifts_left",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, quotient(c, c2)) == quotient(act_left(b, c), c2);
          });
  bcc_law("action/right_quotient",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(quotient(c, c2), b) ==
                   quotient(act_right(c, b), act_left(b, c2));
          });
  bcc_law("action/left_separation",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, separate(c, c2)) ==
                   separate(act_left(b, c), act_right(c2, b));
          });
  bcc_law("action/right_separation_shifts_left",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(separate(c, c2), b) == separate(act_right(c, b), c2);
          });
  bcc_law("action/right_separation_shifts_right",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(separate(c, c2), b) == separate(c, act_left(b, c2));
          });
  bcc_law("action/left_implication_on_target",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, implication(c2, c)) == implication(c2, act_left(b, c));
          });
  bcc_law("action/left_implication_on_antecedent",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, implication(c2, c)) == implication(act_right(c2, b), c);
          });
  bcc_law("action/right_implication",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(implication(c2, c), b) ==
                   implication(act_left(b, c2), act_right(c, b));
          });
  bcc_law("action/left_coimplication",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_left(b, coimplication(c2, c)) ==
                   coimplication(act_right(c2, b), act_left(b, c));
          });
  bcc_law("action/right_coimplication_on_target",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(coimplication(c2, c), b) ==
                   coimplication(c2, act_right(c, b));
          });
  bcc_law("action/right_coimplication_on_antecedent",
          [](const Element& b, const Contract& c, const Contract& c2) {
            return act_right(coimplication(c2, c), b) ==
                   coimplication(act_left(b, c2), c);
          });

  return report;
}

SuiteReport run_action_suite(const AlgebraPtr& alg) {
  return action_suite(oracle::enumerate(alg), SampleOpts{});
}

}  // namespace agc
