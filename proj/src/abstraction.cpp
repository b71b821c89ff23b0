#include "agc/abstraction.hpp"

namespace agc {

ContractMap lift_monotone(const MonotoneMap& alpha) {
  if (!alpha.monotone()) throw InvalidAbstractionError("monotone");
  if (!alpha.join_preserving()) throw InvalidAbstractionError("join_preserving");
  if (!alpha.top_preserving()) throw InvalidAbstractionError("top_preserving");
  return ContractMap::tabulate(
      alpha.source(), alpha.target(),
      [&](const Contract& c) {
        // Well-defined: alpha(a) | alpha(g) = alpha(a | g) = alpha(top) = top.
        return Contract::from_canonical(alpha.apply(c.assume()), alpha.apply(c.guarantee()));
      },
      ContractMap::LiftedMonotone{alpha});
}

ContractMap lift_hom(const AlgebraHom& f) {
  return ContractMap::tabulate(
      f.source(), f.target(),
      [&](const Contract& c) {
        return Contract::from_canonical(f.apply(c.assume()), f.apply(c.guarantee()));
      },
      ContractMap::InducedHom{f});
}

MonotoneMap element_right_adjoint(const MonotoneMap& alpha) {
  const AlgebraPtr& src = alpha.source();
  const AlgebraPtr& tgt = alpha.target();
  std::vector<std::uint32_t> table(tgt->carrier_size(), 0);
  for (std::uint32_t y = 0; y < tgt->carrier_size(); ++y) {
    std::uint32_t best = 0;
    for (std::uint32_t x = 0; x < src->carrier_size(); ++x) {
      if ((alpha.apply_mask(x) & ~y) == 0) best |= x;
    }
    table[y] = best;
  }
  return MonotoneMap::make(tgt, src, std::move(table));
}

SuiteReport check_galois_pair(const ContractMap& alpha, const ContractMap& gamma) {
  if (alpha.source() != gamma.target() || alpha.target() != gamma.source()) {
    throw MixedAlgebraError("check_galois_pair");
  }
  SuiteReport report;
  oracle::ContractEnumeration concrete = oracle::enumerate(alpha.source());
  oracle::ContractEnumeration abstract_en = oracle::enumerate(alpha.target());

  LawScan adjunction("galois/adjunction");
  for (std::size_t i = 0; i < concrete.size(); ++i) {
    for (std::size_t j = 0; j < abstract_en.size(); ++j) {
      const Contract& cc = concrete.at(i);
      const Contract& ca = abstract_en.at(j);
      bool lhs = refines(alpha.apply(cc), ca);
      bool rhs = refines(cc, gamma.apply(ca));
      adjunction.tally(lhs == rhs, [&] {
        Json w;
        w["concrete"] = render(cc);
        w["abstract"] = render(ca);
        w["alpha_le"] = lhs;
        w["le_gamma"] = rhs;
        return w;
      });
    }
  }
  LawResult adj = adjunction.result();
  const bool adjunction_holds = adj.pass;
  report.add(std::move(adj));

  if (adjunction_holds && alpha.hom_induced() && gamma.hom_induced()) {
    LawScan ag("galois/alpha_gamma_identity");
    for (std::size_t j = 0; j < abstract_en.size(); ++j) {
      const Contract& ca = abstract_en.at(j);
      ag.tally(alpha.apply(gamma.apply(ca)) == ca, [&] {
        Json w;
        w["abstract"] = render(ca);
        w["roundtrip"] = render(alpha.apply(gamma.apply(ca)));
        return w;
      });
    }
    report.add(ag.result());

    LawScan ga("galois/gamma_alpha_identity");
    for (std::size_t i = 0; i < concrete.size(); ++i) {
      const Contract& cc = concrete.at(i);
      ga.tally(gamma.apply(alpha.apply(cc)) == cc, [&] {
        Json w;
        w["concrete"] = render(cc);
        w["roundtrip"] = render(gamma.apply(alpha.apply(cc)));
        return w;
      });
    }
    report.add(ga.result());
  }
  return report;
}

}  // namespace agc
