#include <doctest.h>

#include "agc/actions.hpp"
#include "agc/formula.hpp"

using namespace agc;

namespace {

AlgebraPtr algebra_of(int n) {
  std::vector<std::string> names{"x", "y", "z"};
  return Algebra::make(std::vector<std::string>(names.begin(), names.begin() + n));
}

}  // namespace

TEST_CASE("left action basics") {
  AlgebraPtr alg = algebra_of(2);
  const Distinguished d = distinguished(alg);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  Element x = Element::atom(alg, 0);

  for (std::size_t i = 0; i < en.size(); ++i) {
    CHECK(act_left(Element::top(alg), en.at(i)) == en.at(i));  // unit
  }
  for (std::uint32_t m = 0; m <= alg->full_mask(); ++m) {
    CHECK(act_left(Element::from_mask(alg, m), d.one) == d.one);  // top fixed
  }

  // act_left({x}, (top, {x})) evaluated independently as (b & a, !b | g).
  Contract c = Contract::from_canonical(Element::top(alg), x);
  Element expected_a = Element::from_mask(alg, x.mask() & c.assume().mask());
  Element expected_g = Element::from_mask(
      alg, (~x.mask() & alg->full_mask()) | c.guarantee().mask());
  CHECK(act_left(x, c) == Contract::from_canonical(expected_a, expected_g));
  CHECK(act_left(x, c) == Contract::from_canonical(x, Element::top(alg)));
}

TEST_CASE("right action basics") {
  AlgebraPtr alg = algebra_of(2);
  const Distinguished d = distinguished(alg);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  Element x = Element::atom(alg, 0);

  for (std::size_t i = 0; i < en.size(); ++i) {
    CHECK(act_right(en.at(i), Element::top(alg)) == en.at(i));
  }
  // e . {x} = ({x} -> top, {x} & top) = (top, {x})
  CHECK(act_right(d.ident, x) == Contract::from_canonical(Element::top(alg), x));
}

TEST_CASE("reciprocal swaps the two actions on all inputs, 3 atoms") {
  AlgebraPtr alg = algebra_of(3);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  for (std::uint32_t m = 0; m <= alg->full_mask(); ++m) {
    Element b = Element::from_mask(alg, m);
    for (std::size_t i = 0; i < en.size(); ++i) {
      CHECK(reciprocal(act_left(b, en.at(i))) == act_right(reciprocal(en.at(i)), b));
    }
  }
}

TEST_CASE("left action relaxes: c refines b.c everywhere") {
  AlgebraPtr alg = algebra_of(3);
  oracle::ContractEnumeration en = oracle::enumerate(alg);
  for (std::uint32_t m = 0; m <= alg->full_mask(); ++m) {
    Element b = Element::from_mask(alg, m);
    for (std::size_t i = 0; i < en.size(); ++i) {
      CHECK(refines(en.at(i), act_left(b, en.at(i))));
      CHECK(refines(act_right(en.at(i), b), en.at(i)));
    }
  }
}

TEST_CASE("the action identity battery is green at 2 and 3 atoms") {
  for (int n = 2; n <= 3; ++n) {
    SuiteReport report = run_action_suite(algebra_of(n));
    CHECK(report.laws.size() == 29);
    CHECK(report.all_as_expected());
  }
}

TEST_CASE("action battery instance counts at 3 atoms") {
  SuiteReport report = run_action_suite(algebra_of(3));
  for (const LawResult& l : report.laws) {
    if (l.law == "action/left_assoc") CHECK(l.instances == 8 * 8 * 27);
    if (l.law == "action/left_compose") CHECK(l.instances == 8 * 27 * 27);
    if (l.law == "action/reciprocal") CHECK(l.instances == 8 * 27);
  }
}

TEST_CASE("actions reject mixed algebras") {
  AlgebraPtr a = algebra_of(2);
  AlgebraPtr b = algebra_of(2);
  CHECK_THROWS_AS(act_left(Element::top(a), distinguished(b).ident), MixedAlgebraError);
  CHECK_THROWS_AS(act_right(distinguished(b).ident, Element::top(a)), MixedAlgebraError);
}
