#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agc/contract.hpp"
#include "agc/formula.hpp"

namespace agc {

/// Contract expression of the spec language.
struct CExpr;
using CExprPtr = std::shared_ptr<const CExpr>;

struct CExpr {
  enum class Kind { Name, Top, Bottom, Identity, Op };

  Kind kind = Kind::Name;
  std::string name;  // binding name, or operation name for Kind::Op
  SourcePos pos;
  std::vector<CExprPtr> args;
  FormulaPtr element_arg;      // scale_left / scale_right only
  bool element_first = false;  // scale_left takes the element first
};

struct Binding {
  std::string name;
  SourcePos pos;
  bool is_contract_literal = false;
  FormulaPtr assume, guarantee;  // contract literal
  CExprPtr expr;                 // let binding
};

struct Query {
  enum class Kind { CheckRefines, CheckEqual, AssertCanonical, Print };
  Kind kind = Kind::Print;
  SourcePos pos;
  std::vector<CExprPtr> operands;
};

/// A parsed spec file: one universe, bindings in order, then queries.
/// Name resolution happens at parse time, so forward references and
/// duplicates are parse errors and evaluation cannot fail.
struct SpecFile {
  AlgebraPtr algebra;
  std::vector<Binding> bindings;
  std::vector<Query> queries;
};

SpecFile parse_spec(std::string_view text, int atom_cap = kDefaultAtomCap);

struct QueryOutcome {
  Query::Kind kind;
  std::string text;    // rendered query expression
  bool is_check = false;
  bool holds = false;
  std::string output;  // printed value, or witness for a failing check
};

struct EvalResult {
  AlgebraPtr algebra;
  std::vector<std::pair<std::string, Contract>> bindings;
  std::vector<QueryOutcome> queries;
  bool all_checks_hold = true;
};

EvalResult eval(const SpecFile& spec);

std::string render_cexpr(const CExpr& e, const AlgebraPtr& alg);

}  // namespace agc
