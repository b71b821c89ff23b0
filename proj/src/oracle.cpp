#include "agc/oracle.hpp"

namespace agc::oracle {

ContractEnumeration::ContractEnumeration(AlgebraPtr alg) : alg_(std::move(alg)) {
  const int n = alg_->atom_count();
  if (n > 4) {
    throw TooLargeError("contract enumeration capped at 4 atoms, got " + std::to_string(n));
  }
  const std::uint32_t full = alg_->full_mask();
  index_.assign(static_cast<std::size_t>(full + 1) << n, SIZE_MAX);
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t g = 0; g <= full; ++g) {
      if ((a | g) != full) continue;
      index_[(static_cast<std::size_t>(a) << n) | g] = contracts_.size();
      contracts_.push_back(Contract::from_canonical(Element::from_mask(alg_, a),
                                                    Element::from_mask(alg_, g)));
    }
  }
}

std::size_t ContractEnumeration::index_of(const Contract& c) const {
  const int n = alg_->atom_count();
  std::size_t key = (static_cast<std::size_t>(c.assume().mask()) << n) | c.guarantee().mask();
  std::size_t idx = index_[key];
  if (idx == SIZE_MAX) throw Error("contract not in enumeration");
  return idx;
}

ContractEnumeration enumerate(const AlgebraPtr& alg) { return ContractEnumeration(alg); }

namespace {

// Environment set of C: all E <= a. Implementation set: all M such that
// M & E <= g for every environment E. Computed straight from the
// definitions, independently of refines.
bool semantic_leq(const Contract& c, const Contract& c2) {
  const AlgebraPtr& alg = c.algebra();
  const std::uint32_t full = alg->full_mask();
  auto is_env = [&](std::uint32_t e, const Contract& k) {
    return (e & ~k.assume().mask()) == 0;
  };
  auto is_impl = [&](std::uint32_t m, const Contract& k) {
    for (std::uint32_t e = 0; e <= full; ++e) {
      if (!is_env(e, k)) continue;
      if (((m & e) & ~k.guarantee().mask()) != 0) return false;
    }
    return true;
  };
  for (std::uint32_t v = 0; v <= full; ++v) {
    if (is_impl(v, c) && !is_impl(v, c2)) return false;  // implementations grow
    if (is_env(v, c2) && !is_env(v, c)) return false;    // environments shrink
  }
  return true;
}

}  // namespace

bool oracle_leq(const Contract& c, const Contract& c2) {
  if (c.algebra() != c2.algebra()) throw MixedAlgebraError("oracle_leq");
  if (c.algebra()->atom_count() <= 2) return semantic_leq(c, c2);
  return leq(c.guarantee(), c2.guarantee()) && leq(c2.assume(), c.assume());
}

namespace {

Contract pick_maximum(const ContractEnumeration& en, const std::vector<std::size_t>& sat,
                      const char* what) {
  for (std::size_t i : sat) {
    bool is_max = true;
    for (std::size_t j : sat) {
      if (!oracle_leq(en.at(j), en.at(i))) {
        is_max = false;
        break;
      }
    }
    if (is_max) return en.at(i);
  }
  throw NoExtremumError(std::string("no maximum for ") + what);
}

Contract pick_minimum(const ContractEnumeration& en, const std::vector<std::size_t>& sat,
                      const char* what) {
  for (std::size_t i : sat) {
    bool is_min = true;
    for (std::size_t j : sat) {
      if (!oracle_leq(en.at(i), en.at(j))) {
        is_min = false;
        break;
      }
    }
    if (is_min) return en.at(i);
  }
  throw NoExtremumError(std::string("no minimum for ") + what);
}

}  // namespace

Contract oracle_glb(const ContractEnumeration& en, const Contract& c, const Contract& c2) {
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < en.size(); ++i) {
    if (oracle_leq(en.at(i), c) && oracle_leq(en.at(i), c2)) lower.push_back(i);
  }
  return pick_maximum(en, lower, "glb");
}

Contract oracle_lub(const ContractEnumeration& en, const Contract& c, const Contract& c2) {
  std::vector<std::size_t> upper;
  for (std::size_t i = 0; i < en.size(); ++i) {
    if (oracle_leq(c, en.at(i)) && oracle_leq(c2, en.at(i))) upper.push_back(i);
  }
  return pick_minimum(en, upper, "lub");
}

Contract oracle_glb(const Contract& c, const Contract& c2) {
  return oracle_glb(enumerate(c.algebra()), c, c2);
}

Contract oracle_lub(const Contract& c, const Contract& c2) {
  return oracle_lub(enumerate(c.algebra()), c, c2);
}

Contract oracle_residual(const ContractEnumeration& en, Residual kind, const Contract& c,
                         const Contract& c2) {
  std::vector<std::size_t> sat;
  for (std::size_t i = 0; i < en.size(); ++i) {
    const Contract& d = en.at(i);
    bool ok = false;
    switch (kind) {
      case Residual::Quotient: ok = oracle_leq(compose(c2, d), c); break;
      case Residual::Separation: ok = oracle_leq(c, merge(c2, d)); break;
      case Residual::Implication: ok = oracle_leq(conj(d, c2), c); break;
      case Residual::Coimplication: ok = oracle_leq(c, disj(d, c2)); break;
    }
    if (ok) sat.push_back(i);
  }
  switch (kind) {
    case Residual::Quotient: return pick_maximum(en, sat, "quotient");
    case Residual::Separation: return pick_minimum(en, sat, "separation");
    case Residual::Implication: return pick_maximum(en, sat, "implication");
    case Residual::Coimplication: return pick_minimum(en, sat, "coimplication");
  }
  throw NoExtremumError("unreachable");
}

Contract oracle_residual(Residual kind, const Contract& c, const Contract& c2) {
  return oracle_residual(enumerate(c.algebra()), kind, c, c2);
}

SuiteReport certification_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const std::size_t n = en.size();

  auto pair_witness = [&](const Contract& a, const Contract& b, const Contract& formula,
                          const Contract& extremum) {
    Json w;
    w["c"] = render(a);
    w["c2"] = render(b);
    w["formula"] = render(formula);
    w["oracle"] = render(extremum);
    return w;
  };

  auto scan_pairs = [&](const std::string& name,
                        const std::function<Contract(const Contract&, const Contract&)>& form,
                        const std::function<Contract(const Contract&, const Contract&)>& orac) {
    LawScan scan(name);
    for_each_tuple({n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
      const Contract& a = en.at(idx[0]);
      const Contract& b = en.at(idx[1]);
      Contract f = form(a, b);
      Contract o = orac(a, b);
      scan.tally(f == o, [&] { return pair_witness(a, b, f, o); });
    });
    report.add(scan.result());
  };

  scan_pairs(
      "adjoint/glb_agrees", [](const Contract& a, const Contract& b) { return conj(a, b); },
      [&](const Contract& a, const Contract& b) { return oracle_glb(en, a, b); });
  scan_pairs(
      "adjoint/lub_agrees", [](const Contract& a, const Contract& b) { return disj(a, b); },
      [&](const Contract& a, const Contract& b) { return oracle_lub(en, a, b); });
  scan_pairs(
      "adjoint/quotient_agrees",
      [](const Contract& a, const Contract& b) { return quotient(a, b); },
      [&](const Contract& a, const Contract& b) {
        return oracle_residual(en, Residual::Quotient, a, b);
      });
  scan_pairs(
      "adjoint/separation_agrees",
      [](const Contract& a, const Contract& b) { return separate(a, b); },
      [&](const Contract& a, const Contract& b) {
        return oracle_residual(en, Residual::Separation, a, b);
      });
  // implication(c2, c) takes the antecedent first; the oracle inequality
  // is phrased with the target first.
  scan_pairs(
      "adjoint/implication_agrees",
      [](const Contract& a, const Contract& b) { return implication(b, a); },
      [&](const Contract& a, const Contract& b) {
        return oracle_residual(en, Residual::Implication, a, b);
      });
  scan_pairs(
      "adjoint/coimplication_agrees",
      [](const Contract& a, const Contract& b) { return coimplication(b, a); },
      [&](const Contract& a, const Contract& b) {
        return oracle_residual(en, Residual::Coimplication, a, b);
      });

  // Existence of the extrema is exercised above (oracle_residual throws
  // NoExtremum when the satisfying set lacks one); record it as a law so
  // the report names the guarantee.
  LawScan unique("adjoint/extremum_exists_unique");
  for_each_tuple({n, n}, opts, "adjoint/extremum_exists_unique",
                 [&](const std::vector<std::size_t>& idx) {
                   const Contract& a = en.at(idx[0]);
                   const Contract& b = en.at(idx[1]);
                   bool ok = true;
                   try {
                     oracle_residual(en, Residual::Quotient, a, b);
                     oracle_residual(en, Residual::Separation, a, b);
                     oracle_residual(en, Residual::Implication, a, b);
                     oracle_residual(en, Residual::Coimplication, a, b);
                   } catch (const NoExtremumError&) {
                     ok = false;
                   }
                   unique.tally(ok, [&] {
                     Json w;
                     w["c"] = render(a);
                     w["c2"] = render(b);
                     return w;
                   });
                 });
  report.add(unique.result());
  return report;
}

}  // namespace agc::oracle
