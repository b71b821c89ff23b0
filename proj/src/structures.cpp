#include "agc/structures.hpp"

#include <array>

namespace agc {

namespace {

using oracle::ContractEnumeration;

Element top_of(const Element& b) { return Element::top(b.algebra()); }

Json render_pair(const Contract& c, const Contract& c2) {
  Json w;
  w["c"] = render(c);
  w["c2"] = render(c2);
  return w;
}

}  // namespace

Contract theta_g(const Contract& c) {
  return Contract::from_canonical(~(c.assume() & c.guarantee()), c.guarantee());
}

Contract theta_a(const Contract& c) {
  return Contract::from_canonical(c.assume(), ~(c.assume() & c.guarantee()));
}

Contract iota_a(const Element& b) { return Contract::from_canonical(b, top_of(b)); }

Contract iota_g(const Element& b) { return Contract::from_canonical(top_of(b), b); }

Element pi_g(const Contract& c) { return c.guarantee(); }

Element pi_a(const Contract& c) { return c.assume(); }

Contract pi_pair(const Element& a, const Element& g) {
  return compose(iota_a(a), iota_g(g));
}

std::pair<Element, Element> iota_split(const Contract& c) {
  return {c.assume() & c.guarantee(), c.guarantee()};
}

Contract delta_g(const Element& b) { return Contract::from_canonical(~b, b); }

Contract delta_a(const Element& b) { return Contract::from_canonical(b, ~b); }

Contract iota_g_prime(const Element& b) { return Contract::from_canonical(top_of(b), ~b); }

Contract iota_a_prime(const Element& b) { return Contract::from_canonical(~b, top_of(b)); }

Element pi_a_prime(const Contract& c) { return ~c.assume(); }

Element pi_g_prime(const Contract& c) { return ~c.guarantee(); }

const char* op_name(ContractOp op) {
  switch (op) {
    case ContractOp::Conj: return "conj";
    case ContractOp::Disj: return "disj";
    case ContractOp::Compose: return "compose";
    case ContractOp::Merge: return "merge";
  }
  return "?";
}

Contract apply_op(ContractOp op, const Contract& c, const Contract& c2) {
  switch (op) {
    case ContractOp::Conj: return conj(c, c2);
    case ContractOp::Disj: return disj(c, c2);
    case ContractOp::Compose: return compose(c, c2);
    case ContractOp::Merge: return merge(c, c2);
  }
  throw Error("unknown operation");
}

Contract op_identity(ContractOp op, const AlgebraPtr& alg) {
  const Distinguished d = distinguished(alg);
  switch (op) {
    case ContractOp::Conj: return d.one;
    case ContractOp::Disj: return d.zero;
    case ContractOp::Compose: return d.ident;
    case ContractOp::Merge: return d.ident;
  }
  throw Error("unknown operation");
}

MonoidSpec monoid_spec(ContractOp op, const AlgebraPtr& alg) {
  return MonoidSpec{op, op_identity(op, alg)};
}

SemiringSpec semiring_spec(ContractOp mult, ContractOp add, const AlgebraPtr& alg) {
  return SemiringSpec{mult, add, op_identity(mult, alg), op_identity(add, alg)};
}

SuiteReport check_monoid(const MonoidSpec& spec, const ContractEnumeration& en,
                         const SampleOpts& opts) {
  SuiteReport report;
  const std::string base = std::string("monoid/") + op_name(spec.op) + "/";
  const std::size_t n = en.size();

  LawScan identity(base + "identity");
  for_each_tuple({n}, opts, base + "identity", [&](const std::vector<std::size_t>& idx) {
    const Contract& c = en.at(idx[0]);
    bool ok = apply_op(spec.op, c, spec.identity) == c &&
              apply_op(spec.op, spec.identity, c) == c;
    identity.tally(ok, [&] { return render_pair(c, spec.identity); });
  });
  report.add(identity.result());

  LawScan assoc(base + "assoc");
  for_each_tuple({n, n, n}, opts, base + "assoc", [&](const std::vector<std::size_t>& idx) {
    const Contract& x = en.at(idx[0]);
    const Contract& y = en.at(idx[1]);
    const Contract& z = en.at(idx[2]);
    bool ok = apply_op(spec.op, x, apply_op(spec.op, y, z)) ==
              apply_op(spec.op, apply_op(spec.op, x, y), z);
    assoc.tally(ok, [&] {
      Json w = render_pair(x, y);
      w["c3"] = render(z);
      return w;
    });
  });
  report.add(assoc.result());

  LawScan comm(base + "comm");
  for_each_tuple({n, n}, opts, base + "comm", [&](const std::vector<std::size_t>& idx) {
    const Contract& x = en.at(idx[0]);
    const Contract& y = en.at(idx[1]);
    comm.tally(apply_op(spec.op, x, y) == apply_op(spec.op, y, x),
               [&] { return render_pair(x, y); });
  });
  report.add(comm.result());

  LawScan idem(base + "idem");
  for_each_tuple({n}, opts, base + "idem", [&](const std::vector<std::size_t>& idx) {
    const Contract& x = en.at(idx[0]);
    idem.tally(apply_op(spec.op, x, x) == x, [&] { return render_pair(x, x); });
  });
  report.add(idem.result());

  return report;
}

SuiteReport check_monoid(const MonoidSpec& spec, const AlgebraPtr& alg) {
  return check_monoid(spec, oracle::enumerate(alg), SampleOpts{});
}

SuiteReport check_semiring(const SemiringSpec& spec, const ContractEnumeration& en,
                           const SampleOpts& opts) {
  SuiteReport report;
  const std::string base =
      std::string("semiring/") + op_name(spec.mult) + "_" + op_name(spec.add) + "/";
  const std::size_t n = en.size();
  auto mul = [&](const Contract& x, const Contract& y) { return apply_op(spec.mult, x, y); };
  auto add = [&](const Contract& x, const Contract& y) { return apply_op(spec.add, x, y); };

  LawScan add_assoc(base + "add_assoc");
  LawScan add_comm(base + "add_comm");
  LawScan add_identity(base + "add_identity");
  LawScan mult_assoc(base + "mult_assoc");
  LawScan mult_identity(base + "mult_identity");
  LawScan distrib_left(base + "distrib_left");
  LawScan distrib_right(base + "distrib_right");
  LawScan annihilation(base + "annihilation");
  LawScan zero_neq_one(base + "zero_neq_one");

  for_each_tuple({n, n, n}, opts, base + "triples", [&](const std::vector<std::size_t>& idx) {
    const Contract& r = en.at(idx[0]);
    const Contract& s = en.at(idx[1]);
    const Contract& t = en.at(idx[2]);
    auto witness = [&] {
      Json w = render_pair(r, s);
      w["c3"] = render(t);
      return w;
    };
    add_assoc.tally(add(r, add(s, t)) == add(add(r, s), t), witness);
    mult_assoc.tally(mul(r, mul(s, t)) == mul(mul(r, s), t), witness);
    distrib_left.tally(mul(r, add(s, t)) == add(mul(r, s), mul(r, t)), witness);
    distrib_right.tally(mul(add(s, t), r) == add(mul(s, r), mul(t, r)), witness);
  });
  for_each_tuple({n, n}, opts, base + "pairs", [&](const std::vector<std::size_t>& idx) {
    const Contract& r = en.at(idx[0]);
    const Contract& s = en.at(idx[1]);
    add_comm.tally(add(r, s) == add(s, r), [&] { return render_pair(r, s); });
  });
  for_each_tuple({n}, opts, base + "singles", [&](const std::vector<std::size_t>& idx) {
    const Contract& r = en.at(idx[0]);
    auto witness = [&] { return render_pair(r, r); };
    add_identity.tally(add(r, spec.zero) == r && add(spec.zero, r) == r, witness);
    mult_identity.tally(mul(r, spec.one) == r && mul(spec.one, r) == r, witness);
    annihilation.tally(mul(r, spec.zero) == spec.zero && mul(spec.zero, r) == spec.zero,
                       witness);
  });
  zero_neq_one.tally(spec.zero != spec.one,
                     [&] { return render_pair(spec.zero, spec.one); });

  report.add(add_assoc.result());
  report.add(add_comm.result());
  report.add(add_identity.result());
  report.add(mult_assoc.result());
  report.add(mult_identity.result());
  report.add(distrib_left.result());
  report.add(distrib_right.result());
  report.add(annihilation.result());
  report.add(zero_neq_one.result());
  return report;
}

SuiteReport check_semiring(const SemiringSpec& spec, const AlgebraPtr& alg) {
  return check_semiring(spec, oracle::enumerate(alg), SampleOpts{});
}

SuiteReport semiring_census(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const std::array<ContractOp, 4> ops{ContractOp::Conj, ContractOp::Disj, ContractOp::Compose,
                                      ContractOp::Merge};
  auto expected_pass = [](ContractOp mult, ContractOp add) {
    return (mult == ContractOp::Conj && add == ContractOp::Disj) ||
           (mult == ContractOp::Disj && add == ContractOp::Conj) ||
           (mult == ContractOp::Compose && add == ContractOp::Disj) ||
           (mult == ContractOp::Merge && add == ContractOp::Conj);
  };
  for (ContractOp mult : ops) {
    for (ContractOp add : ops) {
      if (mult == add) continue;
      SemiringSpec spec = semiring_spec(mult, add, en.algebra());
      SuiteReport axioms = check_semiring(spec, en, opts);
      LawResult cell;
      cell.law = std::string("semiring/census/") + op_name(mult) + "_" + op_name(add);
      cell.expect_pass = expected_pass(mult, add);
      cell.pass = true;
      for (const auto& axiom : axioms.laws) {
        cell.instances += axiom.instances;
        if (!axiom.pass && cell.pass) {
          cell.pass = false;
          Json w;
          w["axiom"] = axiom.law;
          w["witness"] = axiom.witness;
          cell.witness = w;
        }
      }
      report.add(std::move(cell));
    }
  }
  return report;
}

SuiteReport monoid_iso_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const Distinguished d = distinguished(en.algebra());
  const std::size_t n = en.size();

  auto single = [&](const std::string& name, auto check) {
    LawScan scan(name);
    for_each_tuple({n}, opts, name, [&](const std::vector<std::size_t>& idx) {
      const Contract& c = en.at(idx[0]);
      auto [lhs, rhs] = check(c);
      scan.tally(lhs == rhs, [&] {
        Json w;
        w["c"] = render(c);
        w["lhs"] = render(lhs);
        w["rhs"] = render(rhs);
        return w;
      });
    });
    report.add(scan.result());
  };
  auto pairwise = [&](const std::string& name, auto check) {
    LawScan scan(name);
    for_each_tuple({n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
      const Contract& c = en.at(idx[0]);
      const Contract& c2 = en.at(idx[1]);
      auto [lhs, rhs] = check(c, c2);
      scan.tally(lhs == rhs, [&] {
        Json w = render_pair(c, c2);
        w["lhs"] = render(lhs);
        w["rhs"] = render(rhs);
        return w;
      });
    });
    report.add(scan.result());
  };

  single("iso/theta_g_involution",
         [](const Contract& c) { return std::pair(theta_g(theta_g(c)), c); });
  single("iso/theta_a_involution",
         [](const Contract& c) { return std::pair(theta_a(theta_a(c)), c); });
  {
    LawScan scan("iso/theta_g_ident_to_one");
    scan.tally(theta_g(d.ident) == d.one, [&] { return render_pair(d.ident, d.one); });
    report.add(scan.result());
  }
  {
    LawScan scan("iso/theta_a_ident_to_zero");
    scan.tally(theta_a(d.ident) == d.zero, [&] { return render_pair(d.ident, d.zero); });
    report.add(scan.result());
  }
  pairwise("iso/theta_g_compose_to_conj", [](const Contract& c, const Contract& c2) {
    return std::pair(theta_g(compose(c, c2)), conj(theta_g(c), theta_g(c2)));
  });
  pairwise("iso/theta_g_conj_to_compose", [](const Contract& c, const Contract& c2) {
    return std::pair(theta_g(conj(c, c2)), compose(theta_g(c), theta_g(c2)));
  });
  pairwise("iso/theta_a_merge_to_disj", [](const Contract& c, const Contract& c2) {
    return std::pair(theta_a(merge(c, c2)), disj(theta_a(c), theta_a(c2)));
  });
  pairwise("iso/theta_a_disj_to_merge", [](const Contract& c, const Contract& c2) {
    return std::pair(theta_a(disj(c, c2)), merge(theta_a(c), theta_a(c2)));
  });
  single("iso/diagram_commutes", [](const Contract& c) {
    return std::pair(theta_a(c), reciprocal(theta_g(reciprocal(c))));
  });
  return report;
}

SuiteReport monoid_map_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  const Distinguished d = distinguished(alg);
  const std::size_t carrier = alg->carrier_size();
  const std::size_t n = en.size();
  auto elem = [&](std::size_t mask) {
    return Element::from_mask(alg, static_cast<std::uint32_t>(mask));
  };
  auto elem_witness = [&](const Element& x, const Element& y) {
    Json w;
    w["x"] = render_dnf(x);
    w["y"] = render_dnf(y);
    return w;
  };

  {
    LawScan scan("monoidmap/iota_a");
    for_each_tuple({carrier, carrier}, opts, "monoidmap/iota_a",
                   [&](const std::vector<std::size_t>& idx) {
                     Element x = elem(idx[0]), y = elem(idx[1]);
                     bool ok = iota_a(x & y) == compose(iota_a(x), iota_a(y));
                     scan.tally(ok, [&] { return elem_witness(x, y); });
                   });
    LawResult r = scan.result();
    if (r.pass) r.pass = iota_a(Element::top(alg)) == d.ident;
    report.add(std::move(r));
  }
  {
    LawScan scan("monoidmap/iota_g");
    for_each_tuple({carrier, carrier}, opts, "monoidmap/iota_g",
                   [&](const std::vector<std::size_t>& idx) {
                     Element x = elem(idx[0]), y = elem(idx[1]);
                     bool ok = iota_g(x & y) == compose(iota_g(x), iota_g(y));
                     scan.tally(ok, [&] { return elem_witness(x, y); });
                   });
    LawResult r = scan.result();
    if (r.pass) r.pass = iota_g(Element::top(alg)) == d.ident;
    report.add(std::move(r));
  }
  {
    LawScan scan("monoidmap/pi");
    for_each_tuple({carrier, carrier, carrier, carrier}, opts, "monoidmap/pi",
                   [&](const std::vector<std::size_t>& idx) {
                     Element a = elem(idx[0]), g = elem(idx[1]);
                     Element a2 = elem(idx[2]), g2 = elem(idx[3]);
                     bool ok = pi_pair(a & a2, g & g2) ==
                               compose(pi_pair(a, g), pi_pair(a2, g2));
                     scan.tally(ok, [&] {
                       Json w = elem_witness(a, g);
                       w["x2"] = render_dnf(a2);
                       w["y2"] = render_dnf(g2);
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  {
    LawScan scan("monoidmap/iota");
    for_each_tuple({n, n}, opts, "monoidmap/iota", [&](const std::vector<std::size_t>& idx) {
      const Contract& c = en.at(idx[0]);
      const Contract& c2 = en.at(idx[1]);
      auto [u1, v1] = iota_split(c);
      auto [u2, v2] = iota_split(c2);
      auto [uc, vc] = iota_split(compose(c, c2));
      bool ok = uc == (u1 & u2) && vc == (v1 & v2);
      scan.tally(ok, [&] { return render_pair(c, c2); });
    });
    report.add(scan.result());
  }
  {
    LawScan scan("monoidmap/pi_iota_identity");
    for_each_tuple({n}, opts, "monoidmap/pi_iota_identity",
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     auto [u, v] = iota_split(c);
                     scan.tally(pi_pair(u, v) == c, [&] {
                       Json w;
                       w["c"] = render(c);
                       w["mapped"] = render(pi_pair(u, v));
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  {
    LawScan scan("monoidmap/pi_g");
    for_each_tuple({n, n}, opts, "monoidmap/pi_g", [&](const std::vector<std::size_t>& idx) {
      const Contract& c = en.at(idx[0]);
      const Contract& c2 = en.at(idx[1]);
      bool ok = pi_g(compose(c, c2)) == (pi_g(c) & pi_g(c2));
      scan.tally(ok, [&] { return render_pair(c, c2); });
    });
    LawResult r = scan.result();
    if (r.pass) r.pass = pi_g(d.ident).is_top();
    report.add(std::move(r));
  }
  {
    LawScan scan("monoidmap/pi_a");
    for_each_tuple({n, n}, opts, "monoidmap/pi_a", [&](const std::vector<std::size_t>& idx) {
      const Contract& c = en.at(idx[0]);
      const Contract& c2 = en.at(idx[1]);
      bool ok = pi_a(conj(c, c2)) == (pi_a(c) | pi_a(c2));
      scan.tally(ok, [&] { return render_pair(c, c2); });
    });
    LawResult r = scan.result();
    if (r.pass) r.pass = pi_a(d.one).is_bottom();
    report.add(std::move(r));
  }
  {
    // The composite !( pi_a ( theta_g (c) ) ) extracts a & g and is a
    // monoid map from the composition monoid to (B, meet, top).
    LawScan scan("monoidmap/meet_extraction");
    auto value = [](const Contract& c) { return ~pi_a(theta_g(c)); };
    for_each_tuple({n, n}, opts, "monoidmap/meet_extraction",
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     const Contract& c2 = en.at(idx[1]);
                     bool ok = value(c) == (c.assume() & c.guarantee()) &&
                               value(compose(c, c2)) == (value(c) & value(c2));
                     scan.tally(ok, [&] { return render_pair(c, c2); });
                   });
    LawResult r = scan.result();
    if (r.pass) r.pass = value(d.ident).is_top();
    report.add(std::move(r));
  }
  return report;
}

SuiteReport distributivity_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const Distinguished d = distinguished(en.algebra());
  const std::array<ContractOp, 4> ops{ContractOp::Conj, ContractOp::Disj, ContractOp::Compose,
                                      ContractOp::Merge};
  const std::size_t n = en.size();

  struct NegativeCell {
    ContractOp row, col;
    Contract x, y, z;  // the distinguished-element witness x row (y col z)
  };
  const std::vector<NegativeCell> negatives{
      {ContractOp::Conj, ContractOp::Merge, d.ident, d.one, d.zero},
      {ContractOp::Disj, ContractOp::Compose, d.ident, d.one, d.zero},
      {ContractOp::Compose, ContractOp::Merge, d.one, d.zero, d.ident},
      {ContractOp::Merge, ContractOp::Compose, d.zero, d.one, d.ident},
  };
  auto negative_of = [&](ContractOp row, ContractOp col) -> const NegativeCell* {
    for (const auto& neg : negatives) {
      if (neg.row == row && neg.col == col) return &neg;
    }
    return nullptr;
  };

  for (ContractOp row : ops) {
    for (ContractOp col : ops) {
      const NegativeCell* neg = negative_of(row, col);
      std::string name =
          std::string("distributivity/") + op_name(row) + "_over_" + op_name(col);
      LawScan scan(name, /*expect_pass=*/neg == nullptr);
      auto check_triple = [&](const Contract& x, const Contract& y, const Contract& z) {
        Contract lhs = apply_op(row, x, apply_op(col, y, z));
        Contract rhs = apply_op(col, apply_op(row, x, y), apply_op(row, x, z));
        scan.tally(lhs == rhs, [&] {
          Json w;
          w["x"] = render(x);
          w["y"] = render(y);
          w["z"] = render(z);
          w["lhs"] = render(lhs);
          w["rhs"] = render(rhs);
          return w;
        });
      };
      for_each_tuple({n, n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
        check_triple(en.at(idx[0]), en.at(idx[1]), en.at(idx[2]));
      });
      // In sampled mode the scan might miss every counterexample; the
      // recorded counterexample witness is always included so the cell pattern stays
      // deterministic.
      if (neg != nullptr && opts.sampled) check_triple(neg->x, neg->y, neg->z);
      LawResult r = scan.result();
      if (neg != nullptr) {
        Json w = r.witness;
        Json cell;
        cell["failures"] = scan.failures();
        cell["first"] = w;
        r.witness = cell;
      }
      report.add(std::move(r));

      if (neg != nullptr) {
        // The recorded counterexample itself must fail the identity.
        Contract lhs = apply_op(row, neg->x, apply_op(col, neg->y, neg->z));
        Contract rhs =
            apply_op(col, apply_op(row, neg->x, neg->y), apply_op(row, neg->x, neg->z));
        LawScan wscan("distributivity/witness/" + std::string(op_name(row)) + "_over_" +
                      op_name(col));
        wscan.tally(lhs != rhs, [&] {
          Json w;
          w["x"] = render(neg->x);
          w["y"] = render(neg->y);
          w["z"] = render(neg->z);
          w["both_sides"] = render(lhs);
          return w;
        });
        report.add(wscan.result());
      }
    }
  }
  return report;
}

namespace {

struct ElementSemiring {
  const char* name;
  Element (*mul)(const Element&, const Element&);
  Element (*add)(const Element&, const Element&);
  Element one;
  Element zero;
};

ElementSemiring s_and(const AlgebraPtr& alg) {
  return {"S_and", &meet, &join, Element::top(alg), Element::bottom(alg)};
}

ElementSemiring s_or(const AlgebraPtr& alg) {
  return {"S_or", &join, &meet, Element::bottom(alg), Element::top(alg)};
}

struct ContractSemiring {
  ContractOp mult;
  ContractOp add;
  Contract one;
  Contract zero;
};

ContractSemiring c_semiring(ContractOp mult, ContractOp add, const AlgebraPtr& alg) {
  SemiringSpec s = semiring_spec(mult, add, alg);
  return {s.mult, s.add, s.one, s.zero};
}

}  // namespace

SuiteReport semiring_hom_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  const std::size_t carrier = alg->carrier_size();
  const std::size_t n = en.size();

  // Element-source homs into a contract semiring.
  auto elem_to_contract = [&](const std::string& name, const ElementSemiring& src,
                              const ContractSemiring& dst,
                              const std::function<Contract(const Element&)>& h) {
    LawScan scan(name);
    scan.tally(h(src.zero) == dst.zero && h(src.one) == dst.one, [&] {
      Json w;
      w["h(zero)"] = render(h(src.zero));
      w["h(one)"] = render(h(src.one));
      return w;
    });
    for_each_tuple({carrier, carrier}, opts, name, [&](const std::vector<std::size_t>& idx) {
      Element x = Element::from_mask(alg, static_cast<std::uint32_t>(idx[0]));
      Element y = Element::from_mask(alg, static_cast<std::uint32_t>(idx[1]));
      bool ok = h(src.add(x, y)) == apply_op(dst.add, h(x), h(y)) &&
                h(src.mul(x, y)) == apply_op(dst.mult, h(x), h(y));
      scan.tally(ok, [&] {
        Json w;
        w["x"] = render_dnf(x);
        w["y"] = render_dnf(y);
        return w;
      });
    });
    report.add(scan.result());
  };

  // Contract-source homs into an element semiring.
  auto contract_to_elem = [&](const std::string& name, const ContractSemiring& src,
                              const ElementSemiring& dst,
                              const std::function<Element(const Contract&)>& h) {
    LawScan scan(name);
    scan.tally(h(src.zero) == dst.zero && h(src.one) == dst.one, [&] {
      Json w;
      w["h(zero)"] = render_dnf(h(src.zero));
      w["h(one)"] = render_dnf(h(src.one));
      return w;
    });
    for_each_tuple({n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
      const Contract& x = en.at(idx[0]);
      const Contract& y = en.at(idx[1]);
      bool ok = h(apply_op(src.add, x, y)) == dst.add(h(x), h(y)) &&
                h(apply_op(src.mult, x, y)) == dst.mul(h(x), h(y));
      scan.tally(ok, [&] { return render_pair(x, y); });
    });
    report.add(scan.result());
  };

  auto contract_to_contract = [&](const std::string& name, const ContractSemiring& src,
                                  const ContractSemiring& dst,
                                  const std::function<Contract(const Contract&)>& h) {
    LawScan scan(name);
    scan.tally(h(src.zero) == dst.zero && h(src.one) == dst.one, [&] {
      Json w;
      w["h(zero)"] = render(h(src.zero));
      w["h(one)"] = render(h(src.one));
      return w;
    });
    for_each_tuple({n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
      const Contract& x = en.at(idx[0]);
      const Contract& y = en.at(idx[1]);
      bool ok = h(apply_op(src.add, x, y)) == apply_op(dst.add, h(x), h(y)) &&
                h(apply_op(src.mult, x, y)) == apply_op(dst.mult, h(x), h(y));
      scan.tally(ok, [&] { return render_pair(x, y); });
    });
    report.add(scan.result());
  };

  auto elem_to_elem = [&](const std::string& name, const ElementSemiring& src,
                          const ElementSemiring& dst,
                          const std::function<Element(const Element&)>& h) {
    LawScan scan(name);
    scan.tally(h(src.zero) == dst.zero && h(src.one) == dst.one, [&] {
      Json w;
      w["h(zero)"] = render_dnf(h(src.zero));
      w["h(one)"] = render_dnf(h(src.one));
      return w;
    });
    for_each_tuple({carrier, carrier}, opts, name, [&](const std::vector<std::size_t>& idx) {
      Element x = Element::from_mask(alg, static_cast<std::uint32_t>(idx[0]));
      Element y = Element::from_mask(alg, static_cast<std::uint32_t>(idx[1]));
      bool ok = h(src.add(x, y)) == dst.add(h(x), h(y)) &&
                h(src.mul(x, y)) == dst.mul(h(x), h(y));
      scan.tally(ok, [&] {
        Json w;
        w["x"] = render_dnf(x);
        w["y"] = render_dnf(y);
        return w;
      });
    });
    report.add(scan.result());
  };

  const ElementSemiring sa = s_and(alg);
  const ElementSemiring so = s_or(alg);
  const ContractSemiring c_conj = c_semiring(ContractOp::Conj, ContractOp::Disj, alg);
  const ContractSemiring c_disj = c_semiring(ContractOp::Disj, ContractOp::Conj, alg);
  const ContractSemiring c_par = c_semiring(ContractOp::Compose, ContractOp::Disj, alg);
  const ContractSemiring c_merge = c_semiring(ContractOp::Merge, ContractOp::Conj, alg);

  elem_to_contract("semiringhom/delta_g_conj", sa, c_conj, &delta_g);
  elem_to_contract("semiringhom/delta_g_disj", so, c_disj, &delta_g);
  elem_to_contract("semiringhom/iota_g_compose", sa, c_par, &iota_g);
  elem_to_contract("semiringhom/delta_a_to_disj", sa, c_disj, &delta_a);
  elem_to_contract("semiringhom/delta_a_to_conj", so, c_conj, &delta_a);
  elem_to_contract("semiringhom/iota_a_merge", sa, c_merge, &iota_a);
  elem_to_contract("semiringhom/iota_g_prime_compose", so, c_par, &iota_g_prime);
  elem_to_contract("semiringhom/iota_a_prime_merge", so, c_merge, &iota_a_prime);

  contract_to_elem("semiringhom/pi_g_from_conj", c_conj, sa, &pi_g);
  contract_to_elem("semiringhom/pi_g_from_compose", c_par, sa, &pi_g);
  contract_to_elem("semiringhom/pi_g_from_disj", c_disj, so, &pi_g);
  contract_to_elem("semiringhom/pi_a_prime_from_conj", c_conj, sa, &pi_a_prime);
  contract_to_elem("semiringhom/pi_a_prime_from_disj", c_disj, so, &pi_a_prime);
  contract_to_elem("semiringhom/pi_a_prime_from_merge", c_merge, so, &pi_a_prime);
  contract_to_elem("semiringhom/pi_a_from_merge", c_merge, sa, &pi_a);
  contract_to_elem("semiringhom/pi_a_from_conj", c_conj, so, &pi_a);
  contract_to_elem("semiringhom/pi_g_prime_from_compose", c_par, so, &pi_g_prime);
  contract_to_elem("semiringhom/pi_g_prime_from_disj", c_disj, sa, &pi_g_prime);

  elem_to_elem("semiringhom/neg_iso", sa, so,
               [](const Element& x) { return ~x; });
  contract_to_contract("semiringhom/recip_conj_disj", c_conj, c_disj, &reciprocal);
  contract_to_contract("semiringhom/recip_compose_merge", c_par, c_merge, &reciprocal);

  return report;
}

SuiteReport no_isomorphism_suite(const AlgebraPtr& alg) {
  if (alg->atom_count() != 1) {
    throw Error("no_isomorphism_suite runs on the one-atom algebra only");
  }
  SuiteReport report;
  ContractEnumeration en = oracle::enumerate(alg);
  const std::size_t n = en.size();  // 3
  const ContractSemiring src = c_semiring(ContractOp::Compose, ContractOp::Disj, alg);
  const ContractSemiring dst = c_semiring(ContractOp::Conj, ContractOp::Disj, alg);

  // All tabulated maps C -> C, as base-n digit strings.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;

  LawScan found("noiso/semiring_maps_exist");
  LawScan obstruction("noiso/obstruction_a_top_to_one");
  LawScan invertible("noiso/none_invertible");
  long long homs = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> img(n);
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = rest % n;
      rest /= n;
    }
    auto h = [&](const Contract& c) { return en.at(img[en.index_of(c)]); };
    bool is_hom = h(src.zero) == dst.zero && h(src.one) == dst.one;
    for (std::size_t i = 0; i < n && is_hom; ++i) {
      for (std::size_t j = 0; j < n && is_hom; ++j) {
        const Contract& x = en.at(i);
        const Contract& y = en.at(j);
        if (h(apply_op(src.add, x, y)) != apply_op(dst.add, h(x), h(y))) is_hom = false;
        if (h(apply_op(src.mult, x, y)) != apply_op(dst.mult, h(x), h(y))) is_hom = false;
      }
    }
    if (!is_hom) continue;
    ++homs;
    // Obstruction: every contract of shape (a, top) collapses to 1.
    const Distinguished d = distinguished(alg);
    bool collapses = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Contract& c = en.at(i);
      if (c.guarantee().is_top() && h(c) != d.one) collapses = false;
    }
    obstruction.tally(collapses, [&] {
      Json w;
      w["map_code"] = code;
      return w;
    });
    bool bijective = true;
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (hit[img[i]]) bijective = false;
      hit[img[i]] = true;
    }
    invertible.tally(!bijective, [&] {
      Json w;
      w["map_code"] = code;
      return w;
    });
  }
  found.tally(homs > 0, [&] { return Json(nullptr); });
  LawResult f = found.result();
  f.instances = static_cast<long long>(total);
  report.add(std::move(f));
  report.add(obstruction.result());
  report.add(invertible.result());
  return report;
}

ContractMap assemble_morphism(const MorphismQuadruple& q) {
  const AlgebraPtr& target = q.target();
  auto fn = [&](const Contract& c) {
    Element ag = c.assume() & c.guarantee();
    const Element& g = c.guarantee();
    Element left = q.l_a().apply(ag) & q.l_g().apply(g);
    Element right = q.r_a().apply(ag) & q.r_g().apply(g);
    return pi_pair(left & right, right);
  };
  return ContractMap::tabulate(q.source(), target, fn,
                               ContractMap::Assembled{q});
}

std::vector<MeetTopMap> all_meet_top_maps(const AlgebraPtr& source, const AlgebraPtr& target) {
  const int ns = source->atom_count();
  const std::size_t choices = target->carrier_size();
  std::size_t total = 1;
  for (int i = 0; i < ns; ++i) total *= choices;
  std::vector<MeetTopMap> maps;
  maps.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> images(static_cast<std::size_t>(ns));
    std::size_t rest = code;
    for (int i = 0; i < ns; ++i) {
      images[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % choices);
      rest /= choices;
    }
    maps.push_back(MeetTopMap::from_coatom_images(source, target, images));
  }
  return maps;
}

MorphismQuadruple random_quadruple(const AlgebraPtr& source, const AlgebraPtr& target,
                                   std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto pick = [&] {
    std::vector<std::uint32_t> images(static_cast<std::size_t>(source->atom_count()));
    for (auto& img : images) {
      img = static_cast<std::uint32_t>(rng.below(target->carrier_size()));
    }
    return MeetTopMap::from_coatom_images(source, target, images);
  };
  MeetTopMap l_a = pick(), l_g = pick(), r_a = pick(), r_g = pick();
  return MorphismQuadruple::make(std::move(l_a), std::move(l_g), std::move(r_a),
                                 std::move(r_g));
}

SuiteReport morphism_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  const Distinguished d = distinguished(alg);
  const std::size_t n = en.size();

  {
    // ContractMap::tabulate re-checks the morphism laws, so assembling at
    // all is already a check; the scan re-verifies pair by pair for the
    // report.
    MorphismQuadruple q = random_quadruple(alg, alg, opts.seed);
    ContractMap f = assemble_morphism(q);
    LawScan scan("morphism/seeded_quadruple_preserves_compose");
    for_each_tuple({n, n}, opts, "morphism/seeded_quadruple_preserves_compose",
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     const Contract& c2 = en.at(idx[1]);
                     bool ok = f.apply(compose(c, c2)) == compose(f.apply(c), f.apply(c2));
                     scan.tally(ok, [&] { return render_pair(c, c2); });
                   });
    LawResult r = scan.result();
    if (r.pass) r.pass = f.apply(d.ident) == d.ident;
    report.add(std::move(r));
  }
  {
    // The identity morphism arises from the quadruple (id, id, top, id).
    MorphismQuadruple q = MorphismQuadruple::make(
        MeetTopMap::identity(alg), MeetTopMap::identity(alg),
        MeetTopMap::constant_top(alg, alg), MeetTopMap::identity(alg));
    ContractMap f = assemble_morphism(q);
    LawScan scan("morphism/identity_quadruple");
    for_each_tuple({n}, opts, "morphism/identity_quadruple",
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     scan.tally(f.apply(c) == c, [&] {
                       Json w;
                       w["c"] = render(c);
                       w["image"] = render(f.apply(c));
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  if (alg->atom_count() == 1) {
    // Converse at the smallest scale: every tabulated morphism of the
    // composition monoid arises from some quadruple.
    std::vector<MeetTopMap> components = all_meet_top_maps(alg, alg);
    std::vector<std::vector<std::size_t>> assembled;
    for (const MeetTopMap& la : components) {
      for (const MeetTopMap& lg : components) {
        for (const MeetTopMap& ra : components) {
          for (const MeetTopMap& rg : components) {
            ContractMap f = assemble_morphism(MorphismQuadruple::make(la, lg, ra, rg));
            std::vector<std::size_t> tab(n);
            for (std::size_t i = 0; i < n; ++i) tab[i] = en.index_of(f.apply(en.at(i)));
            assembled.push_back(std::move(tab));
          }
        }
      }
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    LawScan scan("morphism/converse_one_atom");
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> img(n);
      std::size_t rest = code;
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = rest % n;
        rest /= n;
      }
      auto h = [&](const Contract& c) { return en.at(img[en.index_of(c)]); };
      bool is_morphism = h(d.ident) == d.ident;
      for (std::size_t i = 0; i < n && is_morphism; ++i) {
        for (std::size_t j = 0; j < n && is_morphism; ++j) {
          if (h(compose(en.at(i), en.at(j))) != compose(h(en.at(i)), h(en.at(j)))) {
            is_morphism = false;
          }
        }
      }
      if (!is_morphism) continue;
      bool realized = false;
      for (const auto& tab : assembled) {
        if (tab == img) {
          realized = true;
          break;
        }
      }
      scan.tally(realized, [&] {
        Json w;
        w["morphism_code"] = code;
        return w;
      });
    }
    report.add(scan.result());
  }
  return report;
}

}  // namespace agc
