#include "agc/contract_laws.hpp"

#include <array>

namespace agc {

namespace {

using oracle::ContractEnumeration;

Json eq_witness(const Contract& c, const Contract& lhs, const Contract& rhs) {
  Json w;
  w["c"] = render(c);
  w["lhs"] = render(lhs);
  w["rhs"] = render(rhs);
  return w;
}

void scan_unary(SuiteReport& report, const ContractEnumeration& en, const SampleOpts& opts,
                const std::string& name,
                const std::function<std::pair<Contract, Contract>(const Contract&)>& sides) {
  LawScan scan(name);
  for_each_tuple({en.size()}, opts, name, [&](const std::vector<std::size_t>& idx) {
    const Contract& c = en.at(idx[0]);
    auto [lhs, rhs] = sides(c);
    scan.tally(lhs == rhs, [&] { return eq_witness(c, lhs, rhs); });
  });
  report.add(scan.result());
}

}  // namespace

SuiteReport distinguished_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  const Distinguished d = distinguished(alg);
  const Element top = Element::top(alg);

  auto law = [&](const std::string& name, auto sides) {
    scan_unary(report, en, opts, name, sides);
  };
  auto cpair = [](const Element& a, const Element& g) {
    return Contract::from_canonical(a, g);
  };

  law("distinguished/conj_c_zero", [&](const Contract& c) {
    return std::pair(conj(c, d.zero), d.zero);
  });
  law("distinguished/conj_c_one", [&](const Contract& c) { return std::pair(conj(c, d.one), c); });
  law("distinguished/conj_c_ident", [&](const Contract& c) {
    return std::pair(conj(c, d.ident), cpair(top, c.guarantee()));
  });
  law("distinguished/disj_c_zero", [&](const Contract& c) { return std::pair(disj(c, d.zero), c); });
  law("distinguished/disj_c_one", [&](const Contract& c) { return std::pair(disj(c, d.one), d.one); });
  law("distinguished/disj_c_ident", [&](const Contract& c) {
    return std::pair(disj(c, d.ident), cpair(c.assume(), top));
  });
  law("distinguished/compose_c_zero",
      [&](const Contract& c) { return std::pair(compose(c, d.zero), d.zero); });
  law("distinguished/compose_c_one", [&](const Contract& c) {
    return std::pair(compose(c, d.one), cpair(~c.guarantee(), c.guarantee()));
  });
  law("distinguished/compose_c_ident",
      [&](const Contract& c) { return std::pair(compose(c, d.ident), c); });
  law("distinguished/merge_c_zero", [&](const Contract& c) {
    return std::pair(merge(c, d.zero), cpair(c.assume(), ~c.assume()));
  });
  law("distinguished/merge_c_one", [&](const Contract& c) {
    return std::pair(merge(c, d.one), d.one);
  });
  law("distinguished/merge_c_ident",
      [&](const Contract& c) { return std::pair(merge(c, d.ident), c); });

  law("distinguished/quot_c_zero",
      [&](const Contract& c) { return std::pair(quotient(c, d.zero), d.one); });
  law("distinguished/quot_c_one", [&](const Contract& c) {
    return std::pair(quotient(c, d.one), cpair(c.assume(), ~c.assume()));
  });
  law("distinguished/quot_c_ident",
      [&](const Contract& c) { return std::pair(quotient(c, d.ident), c); });
  law("distinguished/quot_zero_c", [&](const Contract& c) {
    return std::pair(quotient(d.zero, c), cpair(c.guarantee(), ~c.guarantee()));
  });
  law("distinguished/quot_one_c",
      [&](const Contract& c) { return std::pair(quotient(d.one, c), d.one); });
  law("distinguished/quot_ident_c",
      [&](const Contract& c) { return std::pair(quotient(d.ident, c), reciprocal(c)); });

  law("distinguished/sep_c_zero", [&](const Contract& c) {
    return std::pair(separate(c, d.zero), cpair(~c.guarantee(), c.guarantee()));
  });
  law("distinguished/sep_c_one",
      [&](const Contract& c) { return std::pair(separate(c, d.one), d.zero); });
  law("distinguished/sep_c_ident",
      [&](const Contract& c) { return std::pair(separate(c, d.ident), c); });
  law("distinguished/sep_zero_c",
      [&](const Contract& c) { return std::pair(separate(d.zero, c), d.zero); });
  law("distinguished/sep_one_c", [&](const Contract& c) {
    return std::pair(separate(d.one, c), cpair(~c.assume(), c.assume()));
  });
  law("distinguished/sep_ident_c",
      [&](const Contract& c) { return std::pair(separate(d.ident, c), reciprocal(c)); });

  law("distinguished/imp_c_zero", [&](const Contract& c) {
    return std::pair(implication(c, d.zero), cpair(c.guarantee(), ~c.guarantee()));
  });
  law("distinguished/imp_c_one",
      [&](const Contract& c) { return std::pair(implication(c, d.one), d.one); });
  law("distinguished/imp_c_ident", [&](const Contract& c) {
    return std::pair(implication(c, d.ident), cpair(~c.assume(), top));
  });
  law("distinguished/imp_zero_c",
      [&](const Contract& c) { return std::pair(implication(d.zero, c), d.one); });
  law("distinguished/imp_one_c",
      [&](const Contract& c) { return std::pair(implication(d.one, c), c); });
  law("distinguished/imp_ident_c", [&](const Contract& c) {
    return std::pair(implication(d.ident, c), cpair(~c.guarantee(), c.guarantee()));
  });

  law("distinguished/coimp_c_zero",
      [&](const Contract& c) { return std::pair(coimplication(c, d.zero), d.zero); });
  law("distinguished/coimp_c_one", [&](const Contract& c) {
    return std::pair(coimplication(c, d.one), cpair(~c.assume(), c.assume()));
  });
  law("distinguished/coimp_c_ident", [&](const Contract& c) {
    return std::pair(coimplication(c, d.ident), cpair(top, ~c.guarantee()));
  });
  law("distinguished/coimp_zero_c",
      [&](const Contract& c) { return std::pair(coimplication(d.zero, c), c); });
  law("distinguished/coimp_one_c",
      [&](const Contract& c) { return std::pair(coimplication(d.one, c), d.zero); });
  law("distinguished/coimp_ident_c", [&](const Contract& c) {
    return std::pair(coimplication(d.ident, c), cpair(c.assume(), ~c.assume()));
  });

  return report;
}

SuiteReport duality_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  struct Row {
    const char* name;
    Contract (*lhs)(const Contract&, const Contract&);
    Contract (*rhs)(const Contract&, const Contract&);
  };
  const std::array<Row, 4> rows{{
      {"duality/compose_merge",
       [](const Contract& c, const Contract& c2) { return reciprocal(compose(c, c2)); },
       [](const Contract& c, const Contract& c2) {
         return merge(reciprocal(c), reciprocal(c2));
       }},
      {"duality/conj_disj",
       [](const Contract& c, const Contract& c2) { return reciprocal(conj(c, c2)); },
       [](const Contract& c, const Contract& c2) {
         return disj(reciprocal(c), reciprocal(c2));
       }},
      {"duality/quot_sep",
       [](const Contract& c, const Contract& c2) { return reciprocal(quotient(c, c2)); },
       [](const Contract& c, const Contract& c2) {
         return separate(reciprocal(c), reciprocal(c2));
       }},
      {"duality/imp_coimp",
       [](const Contract& c, const Contract& c2) { return implication(c2, c); },
       [](const Contract& c, const Contract& c2) {
         return reciprocal(coimplication(reciprocal(c2), reciprocal(c)));
       }},
  }};
  for (const Row& row : rows) {
    LawScan scan(row.name);
    for_each_tuple({en.size(), en.size()}, opts, row.name,
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     const Contract& c2 = en.at(idx[1]);
                     Contract lhs = row.lhs(c, c2);
                     Contract rhs = row.rhs(c, c2);
                     scan.tally(lhs == rhs, [&] {
                       Json w = eq_witness(c, lhs, rhs);
                       w["c2"] = render(c2);
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  return report;
}

SuiteReport rewrite_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  struct Row {
    const char* name;
    Contract (*lhs)(const Contract&, const Contract&);
    Contract (*rhs)(const Contract&, const Contract&);
  };
  const std::array<Row, 2> rows{{
      {"rewrite/quotient_as_merge", &quotient,
       [](const Contract& c, const Contract& c2) { return merge(c, reciprocal(c2)); }},
      {"rewrite/separation_as_compose", &separate,
       [](const Contract& c, const Contract& c2) { return compose(c, reciprocal(c2)); }},
  }};
  for (const Row& row : rows) {
    LawScan scan(row.name);
    for_each_tuple({en.size(), en.size()}, opts, row.name,
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     const Contract& c2 = en.at(idx[1]);
                     Contract lhs = row.lhs(c, c2);
                     Contract rhs = row.rhs(c, c2);
                     scan.tally(lhs == rhs, [&] {
                       Json w = eq_witness(c, lhs, rhs);
                       w["c2"] = render(c2);
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  return report;
}

SuiteReport canonicity_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  LawScan scan("canonical/closure");
  auto canonical = [](const Contract& c) {
    return (c.assume() | c.guarantee()).is_top();
  };
  for_each_tuple({en.size(), en.size()}, opts, "canonical/closure",
                 [&](const std::vector<std::size_t>& idx) {
                   const Contract& c = en.at(idx[0]);
                   const Contract& c2 = en.at(idx[1]);
                   bool ok = canonical(Contract::make(c.assume(), c2.guarantee())) &&
                             canonical(reciprocal(c)) && canonical(conj(c, c2)) &&
                             canonical(disj(c, c2)) && canonical(compose(c, c2)) &&
                             canonical(merge(c, c2)) && canonical(quotient(c, c2)) &&
                             canonical(separate(c, c2)) && canonical(implication(c2, c)) &&
                             canonical(coimplication(c2, c));
                   scan.tally(ok, [&] {
                     Json w;
                     w["c"] = render(c);
                     w["c2"] = render(c2);
                     return w;
                   });
                 });
  report.add(scan.result());
  return report;
}

SuiteReport monotonicity_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  struct Row {
    const char* name;
    Contract (*op)(const Contract&, const Contract&);
  };
  const std::array<Row, 3> rows{{
      {"monotone/compose", &compose},
      {"monotone/conj", &conj},
      {"monotone/disj", &disj},
  }};
  for (const Row& row : rows) {
    LawScan scan(row.name);
    for_each_tuple({en.size(), en.size(), en.size()}, opts, row.name,
                   [&](const std::vector<std::size_t>& idx) {
                     const Contract& c = en.at(idx[0]);
                     const Contract& c2 = en.at(idx[1]);
                     const Contract& other = en.at(idx[2]);
                     bool ok = true;
                     if (refines(c, c2)) {
                       ok = refines(row.op(c, other), row.op(c2, other)) &&
                            refines(row.op(other, c), row.op(other, c2));
                     }
                     scan.tally(ok, [&] {
                       Json w;
                       w["c"] = render(c);
                       w["c2"] = render(c2);
                       w["other"] = render(other);
                       return w;
                     });
                   });
    report.add(scan.result());
  }
  return report;
}

SuiteReport refinement_semantics_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  const AlgebraPtr& alg = en.algebra();
  const std::uint32_t full = alg->full_mask();
  // Implementation/environment sets straight from the definitions.
  auto impl_set = [&](const Contract& c) {
    std::uint32_t set = 0;
    for (std::uint32_t m = 0; m <= full; ++m) {
      bool impl = true;
      for (std::uint32_t e = 0; e <= full && impl; ++e) {
        if ((e & ~c.assume().mask()) != 0) continue;
        if (((m & e) & ~c.guarantee().mask()) != 0) impl = false;
      }
      if (impl) set |= 1u << m;
    }
    return set;
  };
  auto env_set = [&](const Contract& c) {
    std::uint32_t set = 0;
    for (std::uint32_t e = 0; e <= full; ++e) {
      if ((e & ~c.assume().mask()) == 0) set |= 1u << e;
    }
    return set;
  };
  LawScan scan("order/refines_semantic");
  for_each_tuple({en.size(), en.size()}, opts, "order/refines_semantic",
                 [&](const std::vector<std::size_t>& idx) {
                   const Contract& c = en.at(idx[0]);
                   const Contract& c2 = en.at(idx[1]);
                   bool semantic = (impl_set(c) & ~impl_set(c2)) == 0 &&
                                   (env_set(c2) & ~env_set(c)) == 0;
                   scan.tally(refines(c, c2) == semantic, [&] {
                     Json w;
                     w["c"] = render(c);
                     w["c2"] = render(c2);
                     w["refines"] = refines(c, c2);
                     return w;
                   });
                 });
  report.add(scan.result());
  return report;
}

SuiteReport semidistributivity_suite(const ContractEnumeration& en, const SampleOpts& opts) {
  SuiteReport report;
  struct Row {
    const char* name;
    Contract (*op)(const Contract&, const Contract&);
  };
  const std::array<Row, 4> ops{{
      {"conj", &conj},
      {"disj", &disj},
      {"compose", &compose},
      {"merge", &merge},
  }};
  const std::size_t n = en.size();
  for (const Row& row : ops) {
    for (bool meet_side : {true, false}) {
      std::string name = std::string("semidistr/") + row.name +
                         (meet_side ? "_conj" : "_disj");
      LawScan scan(name);
      for_each_tuple({n, n, n, n}, opts, name, [&](const std::vector<std::size_t>& idx) {
        const Contract& c1 = en.at(idx[0]);
        const Contract& c2 = en.at(idx[1]);
        const Contract& c3 = en.at(idx[2]);
        const Contract& c4 = en.at(idx[3]);
        bool ok;
        if (meet_side) {
          ok = refines(row.op(conj(c1, c2), conj(c3, c4)),
                       conj(row.op(c1, c3), row.op(c2, c4)));
        } else {
          ok = refines(disj(row.op(c1, c3), row.op(c2, c4)),
                       row.op(disj(c1, c2), disj(c3, c4)));
        }
        scan.tally(ok, [&] {
          Json w;
          w["c1"] = render(c1);
          w["c2"] = render(c2);
          w["c3"] = render(c3);
          w["c4"] = render(c4);
          return w;
        });
      });
      report.add(scan.result());
    }
  }
  return report;
}

}  // namespace agc
