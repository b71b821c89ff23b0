// Acceptance suite: one line per criterion, exit 0 only when all pass.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "agc/abstraction.hpp"
#include "agc/actions.hpp"
#include "agc/contract_laws.hpp"
#include "agc/formula.hpp"
#include "agc/structures.hpp"

using namespace agc;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void()> run;  // throws on failure
};

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CriterionFailure(what);
}

AlgebraPtr algebra_of(int n) {
  std::vector<std::string> names{"x", "y", "z", "w"};
  return Algebra::make(std::vector<std::string>(names.begin(), names.begin() + n));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void require_all(const SuiteReport& report, const std::string& where) {
  for (const LawResult& l : report.laws) {
    if (!l.as_expected()) {
      throw CriterionFailure(where + ": unexpected outcome for " + l.law +
                             (l.witness.is_null() ? "" : " witness=" + l.witness.dump()));
    }
  }
}

const LawResult& law_named(const SuiteReport& report, const std::string& name) {
  for (const LawResult& l : report.laws) {
    if (l.law == name) return l;
  }
  throw CriterionFailure("law not found: " + name);
}

// ---- criterion bodies ----

void criterion_distinguished() {
  auto start = std::chrono::steady_clock::now();
  const std::size_t counts[] = {0, 3, 9, 27};
  for (int n = 1; n <= 3; ++n) {
    oracle::ContractEnumeration en = oracle::enumerate(algebra_of(n));
    require(en.size() == counts[n], "contract count");
    SuiteReport report = distinguished_suite(en);
    require(report.laws.size() == 36, "expected all 36 table cells");
    require_all(report, "distinguished-element battery");
    for (const LawResult& l : report.laws) {
      require(l.instances == static_cast<long long>(counts[n]),
              "each identity quantified over every contract");
    }
  }
  require(seconds_since(start) < 5.0, "distinguished-element battery exceeded 5 s");
}

void criterion_adjoints() {
  auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 3; ++n) {
    oracle::ContractEnumeration en = oracle::enumerate(algebra_of(n));
    SuiteReport report = oracle::certification_suite(en, SampleOpts{});
    require_all(report, "adjoint certification");
    const long long pairs = static_cast<long long>(en.size() * en.size());
    for (const LawResult& l : report.laws) {
      require(l.instances == pairs, "certification quantified over all ordered pairs");
    }
  }
  require(seconds_since(start) < 60.0, "adjoint certification exceeded 60 s");
}

void criterion_distributivity() {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(2));
  SuiteReport report = distributivity_suite(en);
  int positive = 0, negative = 0, witnesses = 0;
  for (const LawResult& l : report.laws) {
    if (l.law.rfind("distributivity/witness/", 0) == 0) {
      ++witnesses;
      require(l.pass, "recorded counterexample does not fail: " + l.law);
      continue;
    }
    require(l.instances == 729, "each cell scans all 729 triples");
    if (l.expect_pass) {
      ++positive;
      require(l.pass, "positive cell failed: " + l.law);
    } else {
      ++negative;
      require(!l.pass, "counterexample cell unexpectedly held: " + l.law);
    }
  }
  require(positive == 12 && negative == 4 && witnesses == 4,
          "distributivity matrix shape");
  for (const char* name : {"distributivity/witness/conj_over_merge", "distributivity/witness/disj_over_compose",
                           "distributivity/witness/compose_over_merge",
                           "distributivity/witness/merge_over_compose"}) {
    require(law_named(report, name).pass, std::string("missing witness law ") + name);
  }
  // The suite exits zero only under this exact pattern.
  require(report.all_as_expected(), "suite gate rejects the recorded pattern");
  SuiteReport tampered = report;
  tampered.laws[0].pass = !tampered.laws[0].pass;
  require(!tampered.all_as_expected(), "suite gate accepts a flipped outcome");
}

void criterion_census() {
  for (int n = 1; n <= 2; ++n) {
    oracle::ContractEnumeration en = oracle::enumerate(algebra_of(n));
    SuiteReport census = semiring_census(en);
    require(census.laws.size() == 12, "twelve ordered candidates");
    require_all(census, "census");
    std::vector<std::string> passing;
    for (const LawResult& l : census.laws) {
      if (l.pass) passing.push_back(l.law);
    }
    std::vector<std::string> expected{
        "semiring/census/conj_disj", "semiring/census/disj_conj",
        "semiring/census/compose_disj", "semiring/census/merge_conj"};
    require(passing == expected, "exactly the four expected semirings pass");
  }
}

void criterion_isomorphisms() {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(3));
  SuiteReport iso = monoid_iso_suite(en);
  require_all(iso, "isomorphism diagram");
  require(law_named(iso, "iso/theta_g_involution").instances == 27, "involution coverage");
  require(law_named(iso, "iso/diagram_commutes").instances == 27, "diagram coverage");
  SuiteReport maps = monoid_map_suite(en);
  require_all(maps, "monoid maps");
  require(law_named(maps, "monoidmap/pi_iota_identity").instances == 27,
          "pi o iota on all 27 contracts");
}

void criterion_semiring_homs() {
  oracle::ContractEnumeration en = oracle::enumerate(algebra_of(2));
  SuiteReport report = semiring_hom_suite(en);
  require_all(report, "semiring homomorphisms");
  for (const char* name :
       {"semiringhom/delta_g_conj", "semiringhom/delta_g_disj", "semiringhom/delta_a_to_disj",
        "semiringhom/delta_a_to_conj", "semiringhom/iota_g_compose",
        "semiringhom/iota_a_merge", "semiringhom/iota_g_prime_compose",
        "semiringhom/pi_g_from_conj", "semiringhom/pi_g_from_compose",
        "semiringhom/pi_a_prime_from_conj"}) {
    require(law_named(report, name).pass, std::string("hom law failed: ") + name);
  }
}

void criterion_actions() {
  auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 3; ++n) {
    oracle::ContractEnumeration en = oracle::enumerate(algebra_of(n));
    SuiteReport report = action_suite(en, SampleOpts{});
    require(report.laws.size() == 29,
            "all action rows, including both equalities of three-way rows");
    require_all(report, "action battery");
  }
  require(seconds_since(start) < 120.0, "action battery exceeded 120 s");
}

void criterion_abstraction() {
  AlgebraPtr xy = algebra_of(2);
  AlgebraPtr z = Algebra::make({"z"});

  bool rejected = false;
  try {
    lift_monotone(MonotoneMap::make(xy, xy, {0, 0, 0, 3}));  // not join-preserving
  } catch (const InvalidAbstractionError& e) {
    rejected = e.flag == "join_preserving";
  }
  require(rejected, "non-join-preserving map accepted");
  rejected = false;
  try {
    lift_monotone(MonotoneMap::make(xy, z, {0, 0, 0, 0}));  // not top-preserving
  } catch (const InvalidAbstractionError& e) {
    rejected = e.flag == "top_preserving";
  }
  require(rejected, "non-top-preserving map accepted");

  ContractMap collapse = lift_monotone(MonotoneMap::make(xy, z, {0, 1, 1, 1}));
  oracle::ContractEnumeration en = oracle::enumerate(xy);
  long long pairs = 0;
  for (std::size_t i = 0; i < en.size(); ++i) {
    for (std::size_t j = 0; j < en.size(); ++j) {
      ++pairs;
      if (refines(en.at(i), en.at(j))) {
        require(refines(collapse.apply(en.at(i)), collapse.apply(en.at(j))),
                "lifted map not monotone");
      }
    }
  }
  require(pairs == 81, "monotonicity scanned all 81 ordered pairs");

  ContractMap f = lift_hom(AlgebraHom::atom_permutation(xy, xy, {1, 0}));
  for (std::size_t i = 0; i < en.size(); ++i) {
    const Contract& c = en.at(i);
    require(f.apply(reciprocal(c)) == reciprocal(f.apply(c)), "f* vs reciprocal");
    for (std::size_t j = 0; j < en.size(); ++j) {
      const Contract& c2 = en.at(j);
      bool ok = f.apply(conj(c, c2)) == conj(f.apply(c), f.apply(c2)) &&
                f.apply(disj(c, c2)) == disj(f.apply(c), f.apply(c2)) &&
                f.apply(compose(c, c2)) == compose(f.apply(c), f.apply(c2)) &&
                f.apply(merge(c, c2)) == merge(f.apply(c), f.apply(c2)) &&
                f.apply(quotient(c, c2)) == quotient(f.apply(c), f.apply(c2)) &&
                f.apply(separate(c, c2)) == separate(f.apply(c), f.apply(c2)) &&
                f.apply(implication(c2, c)) == implication(f.apply(c2), f.apply(c)) &&
                f.apply(coimplication(c2, c)) == coimplication(f.apply(c2), f.apply(c));
      require(ok, "f* does not commute with an operation");
    }
  }
}

void criterion_oracle_counts() {
  const std::size_t expected[] = {0, 3, 9, 27, 81};
  for (int n = 1; n <= 4; ++n) {
    require(oracle::enumerate(algebra_of(n)).size() == expected[n],
            "contract count at " + std::to_string(n) + " atoms");
  }
}

// ---- CLI goldens ----

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CriterionFailure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& cli, const std::string& args, const std::string& stdout_path,
            const std::string& stderr_path) {
  std::string cmd = cli + " " + args + " > " + stdout_path + " 2> " + stderr_path;
  int status = std::system(cmd.c_str());
  if (status < 0) throw CriterionFailure("failed to launch CLI");
  return WEXITSTATUS(status);
}

void criterion_cli_goldens() {
  const char* cli = std::getenv("AGC_CLI");
  const char* golden = std::getenv("AGC_GOLDEN_DIR");
  const char* work = std::getenv("AGC_WORK_DIR");
  require(cli && golden && work, "AGC_CLI/AGC_GOLDEN_DIR/AGC_WORK_DIR must be set");
  std::string out = std::string(work) + "/acc_out.txt";
  std::string err = std::string(work) + "/acc_err.txt";

  int code = run_cli(cli, std::string("eval ") + golden + "/eval_basic.agc", out, err);
  require(code == 0, "eval exit code");
  require(read_file(out) == read_file(std::string(golden) + "/eval_basic.txt"),
          "eval text output differs from golden");

  code = run_cli(cli, std::string("eval ") + golden + "/eval_basic.agc --format json", out,
                 err);
  require(code == 0, "eval json exit code");
  require(read_file(out) == read_file(std::string(golden) + "/eval_basic.json"),
          "eval json output differs from golden");

  code = run_cli(cli, "laws --atoms 2 --suites all --format json", out, err);
  require(code == 0, "laws exit code");
  require(read_file(out) == read_file(std::string(golden) + "/laws_atoms2.json"),
          "laws json differs from golden");

  code = run_cli(cli, std::string("eval ") + golden + "/eval_error.agc", out, err);
  require(code == 2, "parse errors exit with 2");
  require(read_file(err) == read_file(std::string(golden) + "/eval_error.txt"),
          "parse error position drifted");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "distinguished-element identity battery, 1-3 atoms, exact equality", criterion_distinguished},
      {2, "adjoint closed forms equal the oracle extrema, 2-3 atoms", criterion_adjoints},
      {3, "distributivity matrix pass/fail pattern with recorded witnesses", criterion_distributivity},
      {4, "semiring census: exactly four candidates pass", criterion_census},
      {5, "theta isomorphisms, commuting diagram, pi o iota = id", criterion_isomorphisms},
      {6, "semiring homomorphism suite at 2 atoms", criterion_semiring_homs},
      {7, "action identity battery at 2-3 atoms", criterion_actions},
      {8, "abstraction lifts: rejection, monotonicity, hom commutation",
       criterion_abstraction},
      {9, "oracle enumeration counts 3, 9, 27, 81", criterion_oracle_counts},
      {10, "CLI golden files and stable error positions", criterion_cli_goldens},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.run();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failed;
    }
    std::printf("criterion %02d: %-62s %s  (%.2fs)\n", c.number, c.title.c_str(),
                verdict.c_str(), seconds_since(start));
    if (!detail.empty()) std::printf("              %s\n", detail.c_str());
  }
  std::printf("acceptance: %d/%d criteria pass\n",
              static_cast<int>(criteria.size()) - failed, static_cast<int>(criteria.size()));
  return failed == 0 ? 0 : 1;
}
