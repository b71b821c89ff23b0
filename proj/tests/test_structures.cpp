#include <doctest.h>

#include <string>
#include <vector>

#include "agc/contract_laws.hpp"
#include "agc/formula.hpp"
#include "agc/structures.hpp"

using namespace agc;

namespace {

AlgebraPtr algebra_of(int n) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  return Algebra::make(std::vector<std::string>(names.begin(), names.begin() + n));
}

const LawResult& law_named(const SuiteReport& report, const std::string& name) {
  for (const LawResult& l : report.laws) {
    if (l.law == name) return l;
  }
  FAIL("law not found: " << name);
  static LawResult dummy;
  return dummy;
}

}  // namespace

TEST_CASE("theta involutions and identity images") {
  AlgebraPtr alg = algebra_of(2);
  const Distinguished d = distinguished(alg);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  for (std::size_t i = 0; i < en.size(); ++i) {
    CHECK(theta_g(theta_g(en.at(i))) == en.at(i));
    CHECK(theta_a(theta_a(en.at(i))) == en.at(i));
  }
  CHECK(theta_g(d.ident) == d.one);   // theta_g(e) = theta_g(1,1) = (0,1) = 1
  CHECK(theta_a(d.ident) == d.zero);
}

TEST_CASE("theta_g turns composition into conjunction on all pairs, 3 atoms") {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(3));
  for (std::size_t i = 0; i < en.size(); ++i) {
    for (std::size_t j = 0; j < en.size(); ++j) {
      CHECK(theta_g(compose(en.at(i), en.at(j))) ==
            conj(theta_g(en.at(i)), theta_g(en.at(j))));
    }
  }
  CHECK(monoid_iso_suite(en).all_as_expected());
}

TEST_CASE("monoid maps and the pi/iota splitting") {
  AlgebraPtr alg = algebra_of(2);
  Element x = Element::atom(alg, 0);
  Element y = Element::atom(alg, 1);
  CHECK(iota_g(Element::top(alg)) == distinguished(alg).ident);
  // pi({x}, {y}) = ({y} -> {x}, {y}) = ({x}, {y}).
  CHECK(pi_pair(x, y) == Contract::from_canonical(x, y));

  oracle::ContractEnumeration en3 = oracle::enumerate(algebra_of(3));
  for (std::size_t i = 0; i < en3.size(); ++i) {
    auto [u, v] = iota_split(en3.at(i));
    CHECK(pi_pair(u, v) == en3.at(i));
  }
  CHECK(monoid_map_suite(en3).all_as_expected());
}

TEST_CASE("semiring maps on elements") {
  AlgebraPtr alg = algebra_of(2);
  const Distinguished d = distinguished(alg);
  Element x = Element::atom(alg, 0);
  Element y = Element::atom(alg, 1);
  CHECK(delta_g(Element::bottom(alg)) == d.zero);
  CHECK(delta_g(Element::top(alg)) == d.one);
  CHECK(delta_a(x) == Contract::from_canonical(x, y));  // (b, !b)
  CHECK(iota_a_prime(x) == Contract::from_canonical(y, Element::top(alg)));
  CHECK(iota_g_prime(x) == Contract::from_canonical(Element::top(alg), y));
  CHECK(pi_a_prime(d.zero) == Element::bottom(alg));
  CHECK(pi_g_prime(d.zero) == Element::top(alg));

  oracle::ContractEnumeration en = oracle::enumerate(alg);
  for (std::size_t i = 0; i < en.size(); ++i) {
    for (std::size_t j = 0; j < en.size(); ++j) {
      // iota_g(b & b') = iota_g(b) || iota_g(b')
      Element b = en.at(i).guarantee();
      Element b2 = en.at(j).guarantee();
      CHECK(iota_g(b & b2) == compose(iota_g(b), iota_g(b2)));
    }
  }
}

TEST_CASE("check_monoid reports every axiom green for the four monoids") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  for (ContractOp op :
       {ContractOp::Conj, ContractOp::Disj, ContractOp::Compose, ContractOp::Merge}) {
    SuiteReport report = check_monoid(monoid_spec(op, alg), en);
    CHECK(report.laws.size() == 4);
    CHECK(report.all_as_expected());
  }
  SuiteReport conj_report = check_monoid(monoid_spec(ContractOp::Conj, alg), en);
  CHECK(law_named(conj_report, "monoid/conj/comm").pass);
  CHECK(law_named(conj_report, "monoid/conj/idem").pass);
  CHECK(law_named(conj_report, "monoid/conj/assoc").instances == 9 * 9 * 9);
}

TEST_CASE("check_semiring passes the composition semiring and fails compose/merge") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  CHECK(check_semiring(semiring_spec(ContractOp::Compose, ContractOp::Disj, alg), en)
            .all_as_expected());

  SuiteReport bad =
      check_semiring(semiring_spec(ContractOp::Compose, ContractOp::Merge, alg), en);
  CHECK(!bad.all_as_expected());
  const LawResult& distrib = law_named(bad, "semiring/compose_merge/distrib_left");
  CHECK(!distrib.pass);
  CHECK(!distrib.witness.is_null());
  // Both identities are e, so axiom (e) fails as well.
  CHECK(!law_named(bad, "semiring/compose_merge/zero_neq_one").pass);
}

TEST_CASE("the census finds exactly the four semirings at one and two atoms") {
  for (int n = 1; n <= 2; ++n) {
    oracle::ContractEnumeration en = oracle::enumerate(algebra_of(n));
    SuiteReport census = semiring_census(en);
    CHECK(census.laws.size() == 12);
    CHECK(census.all_as_expected());
    int passing = 0;
    for (const LawResult& cell : census.laws) {
      if (cell.pass) ++passing;
    }
    CHECK(passing == 4);
    CHECK(law_named(census, "semiring/census/conj_disj").pass);
    CHECK(law_named(census, "semiring/census/disj_conj").pass);
    CHECK(law_named(census, "semiring/census/compose_disj").pass);
    CHECK(law_named(census, "semiring/census/merge_conj").pass);
  }
}

TEST_CASE("distributivity matrix has the expected pass/fail pattern") {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(2));
  SuiteReport report = distributivity_suite(en);
  CHECK(report.all_as_expected());
  int cells = 0, witnesses = 0, negative = 0;
  for (const LawResult& l : report.laws) {
    if (l.law.rfind("distributivity/witness/", 0) == 0) {
      ++witnesses;
      CHECK(l.pass);  // the recorded counterexample really fails the identity
    } else {
      ++cells;
      CHECK(l.instances == 9 * 9 * 9);
      if (!l.expect_pass) {
        ++negative;
        CHECK(!l.pass);
        CHECK(l.witness.at("failures").get<long long>() > 0);
      }
    }
  }
  CHECK(cells == 16);
  CHECK(negative == 4);
  CHECK(witnesses == 4);
}

TEST_CASE("semi-distributivity holds on all quadruples at two atoms") {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(2));
  SuiteReport report = semidistributivity_suite(en);
  CHECK(report.laws.size() == 8);
  CHECK(report.all_as_expected());
  for (const LawResult& l : report.laws) {
    CHECK(l.instances == 6561);
  }
}

TEST_CASE("semiring homomorphism suite is green at two atoms") {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(2));
  SuiteReport report = semiring_hom_suite(en);
  CHECK(report.all_as_expected());
  for (const char* name :
       {"semiringhom/delta_g_conj", "semiringhom/delta_g_disj", "semiringhom/iota_g_compose",
        "semiringhom/delta_a_to_disj", "semiringhom/delta_a_to_conj",
        "semiringhom/iota_a_merge", "semiringhom/iota_g_prime_compose",
        "semiringhom/iota_a_prime_merge", "semiringhom/pi_g_from_conj",
        "semiringhom/pi_g_from_compose", "semiringhom/pi_a_prime_from_conj"}) {
    CHECK(law_named(report, name).pass);
  }
}

TEST_CASE("no semiring map from the composition to the conjunction semiring inverts") {
  SuiteReport report = no_isomorphism_suite(algebra_of(1));
  CHECK(report.all_as_expected());
  CHECK(law_named(report, "noiso/semiring_maps_exist").pass);
  CHECK(law_named(report, "noiso/obstruction_a_top_to_one").pass);
  CHECK(law_named(report, "noiso/none_invertible").pass);
  CHECK_THROWS_AS(no_isomorphism_suite(algebra_of(2)), Error);
}

TEST_CASE("assembled morphisms: identity quadruple flattens to (top, a & g)") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  MeetTopMap id = MeetTopMap::identity(alg);
  ContractMap f = assemble_morphism(MorphismQuadruple::make(id, id, id, id));
  // Exhaustive comparison: the four identity components do NOT assemble to
  // the identity map; pi o iota collapses the assumption to top.
  for (std::size_t i = 0; i < en.size(); ++i) {
    const Contract& c = en.at(i);
    Contract expected = Contract::from_canonical(Element::top(alg),
                                                 c.assume() & c.guarantee());
    CHECK(f.apply(c) == expected);
  }
}

TEST_CASE("assembled morphisms: (id, id, top, id) is the identity map") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  MeetTopMap id = MeetTopMap::identity(alg);
  ContractMap f = assemble_morphism(
      MorphismQuadruple::make(id, id, MeetTopMap::constant_top(alg, alg), id));
  for (std::size_t i = 0; i < en.size(); ++i) {
    CHECK(f.apply(en.at(i)) == en.at(i));
  }
}

TEST_CASE("assembled morphisms: constant-top quadruple sends everything to e") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  MeetTopMap top = MeetTopMap::constant_top(alg, alg);
  ContractMap f = assemble_morphism(MorphismQuadruple::make(top, top, top, top));
  for (std::size_t i = 0; i < en.size(); ++i) {
    CHECK(f.apply(en.at(i)) == distinguished(alg).ident);
  }
}

TEST_CASE("a seeded random quadruple assembles to a composition morphism") {
  AlgebraPtr alg = algebra_of(2);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  MorphismQuadruple q = random_quadruple(alg, alg, 0xA6C);
  ContractMap f = assemble_morphism(q);
  long long pairs = 0;
  for (std::size_t i = 0; i < en.size(); ++i) {
    for (std::size_t j = 0; j < en.size(); ++j) {
      CHECK(f.apply(compose(en.at(i), en.at(j))) ==
            compose(f.apply(en.at(i)), f.apply(en.at(j))));
      ++pairs;
    }
  }
  CHECK(pairs == 81);
  SampleOpts opts;
  CHECK(morphism_suite(en, opts).all_as_expected());
}

TEST_CASE("invalid quadruple components are rejected by name") {
  AlgebraPtr alg = algebra_of(2);
  std::vector<std::uint32_t> id_table{0, 1, 2, 3};
  std::vector<std::uint32_t> broken{0, 1, 2, 0};  // does not preserve top
  try {
    MorphismQuadruple::make(alg, alg, id_table, broken, id_table, id_table);
    FAIL("expected InvalidQuadrupleError");
  } catch (const InvalidQuadrupleError& e) {
    CHECK(e.component == "l_g");
  }
}

TEST_CASE("every one-atom composition morphism arises from a quadruple") {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(1));
  SuiteReport report = morphism_suite(en);
  const LawResult& converse = law_named(report, "morphism/converse_one_atom");
  CHECK(converse.pass);
  // Six of the 27 tabulated self-maps are composition-monoid morphisms.
  CHECK(converse.instances == 6);
  CHECK(report.all_as_expected());
}
