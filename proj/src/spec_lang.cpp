#include "agc/spec_lang.hpp"

#include <map>
#include <set>

#include "agc/actions.hpp"

namespace agc {

namespace {

const std::set<std::string>& op_names() {
  static const std::set<std::string> names{
      "conj",     "disj",       "compose",    "merge",      "quotient", "separate",
      "implies_c", "coimplies_c", "recip",    "scale_left", "scale_right"};
  return names;
}

class SpecParser {
 public:
  SpecParser(std::string_view text, int atom_cap) : lex_(text), atom_cap_(atom_cap) {}

  SpecFile parse() {
    SpecFile file;
    parse_universe(file);
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Ident && t.text == "contract") {
        file.bindings.push_back(parse_contract_binding(file));
      } else if (t.kind == Tok::Ident && t.text == "let") {
        file.bindings.push_back(parse_let_binding(file));
      } else {
        break;
      }
    }
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Ident && (t.text == "check" || t.text == "print")) {
        file.queries.push_back(parse_query(file));
      } else {
        break;
      }
    }
    Token t = lex_.next();
    if (t.kind != Tok::End) throw ParseError("unexpected input", t.pos);
    return file;
  }

 private:
  Token expect(Tok kind, const char* what) {
    Token t = lex_.next();
    if (t.kind != kind) throw ParseError(std::string("expected ") + what, t.pos);
    return t;
  }

  Token expect_keyword(const char* word) {
    Token t = lex_.next();
    if (t.kind != Tok::Ident || t.text != word) {
      throw ParseError(std::string("expected '") + word + "'", t.pos);
    }
    return t;
  }

  void parse_universe(SpecFile& file) {
    expect_keyword("universe");
    std::vector<std::string> atoms;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind != Tok::Ident) break;
      atoms.push_back(lex_.next().text);
    }
    Token semi = expect(Tok::Semi, "';'");
    if (atoms.empty()) throw ParseError("universe needs at least one atom", semi.pos);
    file.algebra = Algebra::make(atoms, Backend::Bitset, atom_cap_);
  }

  std::string bind_name(SpecFile& file) {
    Token t = expect(Tok::Ident, "name");
    if (names_.count(t.text)) throw DuplicateNameError(t.text, t.pos);
    (void)file;
    return t.text;
  }

  FormulaPtr parse_formula_until_semi(const SpecFile& file) {
    FormulaParser fp(lex_, file.algebra);
    FormulaPtr f = fp.parse_expr();
    expect(Tok::Semi, "';'");
    return f;
  }

  Binding parse_contract_binding(SpecFile& file) {
    Binding b;
    b.pos = expect_keyword("contract").pos;
    b.name = bind_name(file);
    b.is_contract_literal = true;
    expect(Tok::LBrace, "'{'");
    expect_keyword("assume");
    expect(Tok::Colon, "':'");
    b.assume = parse_formula_until_semi(file);
    expect_keyword("guarantee");
    expect(Tok::Colon, "':'");
    b.guarantee = parse_formula_until_semi(file);
    expect(Tok::RBrace, "'}'");
    names_.insert(b.name);
    return b;
  }

  Binding parse_let_binding(SpecFile& file) {
    Binding b;
    b.pos = expect_keyword("let").pos;
    b.name = bind_name(file);
    expect(Tok::Equals, "'='");
    b.expr = parse_cexpr(file);
    expect(Tok::Semi, "';'");
    names_.insert(b.name);
    return b;
  }

  Query parse_query(SpecFile& file) {
    Query q;
    Token head = lex_.next();
    q.pos = head.pos;
    if (head.text == "print") {
      q.kind = Query::Kind::Print;
      q.operands.push_back(parse_cexpr(file));
    } else {
      Token pred = expect(Tok::Ident, "predicate");
      if (pred.text == "refines") {
        q.kind = Query::Kind::CheckRefines;
      } else if (pred.text == "equal") {
        q.kind = Query::Kind::CheckEqual;
      } else if (pred.text == "canonical") {
        q.kind = Query::Kind::AssertCanonical;
      } else {
        throw ParseError("expected refines/equal/canonical", pred.pos);
      }
      expect(Tok::LParen, "'('");
      q.operands.push_back(parse_cexpr(file));
      if (q.kind != Query::Kind::AssertCanonical) {
        expect(Tok::Comma, "','");
        q.operands.push_back(parse_cexpr(file));
      }
      expect(Tok::RParen, "')'");
    }
    expect(Tok::Semi, "';'");
    return q;
  }

  CExprPtr parse_cexpr(SpecFile& file) {
    Token t = expect(Tok::Ident, "contract expression");
    auto e = std::make_shared<CExpr>();
    e->pos = t.pos;
    if (t.text == "Top") {
      e->kind = CExpr::Kind::Top;
      return e;
    }
    if (t.text == "Bottom") {
      e->kind = CExpr::Kind::Bottom;
      return e;
    }
    if (t.text == "Identity") {
      e->kind = CExpr::Kind::Identity;
      return e;
    }
    if (op_names().count(t.text) && lex_.peek().kind == Tok::LParen) {
      e->kind = CExpr::Kind::Op;
      e->name = t.text;
      lex_.next();  // '('
      if (t.text == "scale_left") {
        FormulaParser fp(lex_, file.algebra);
        e->element_arg = fp.parse_expr();
        e->element_first = true;
        expect(Tok::Comma, "','");
        e->args.push_back(parse_cexpr(file));
      } else if (t.text == "scale_right") {
        e->args.push_back(parse_cexpr(file));
        expect(Tok::Comma, "','");
        FormulaParser fp(lex_, file.algebra);
        e->element_arg = fp.parse_expr();
      } else if (t.text == "recip") {
        e->args.push_back(parse_cexpr(file));
      } else {
        e->args.push_back(parse_cexpr(file));
        expect(Tok::Comma, "','");
        e->args.push_back(parse_cexpr(file));
      }
      expect(Tok::RParen, "')'");
      return e;
    }
    if (!names_.count(t.text)) throw UnknownNameError(t.text, t.pos);
    e->kind = CExpr::Kind::Name;
    e->name = t.text;
    return e;
  }

  Lexer lex_;
  int atom_cap_;
  std::set<std::string> names_;
};

std::string render_formula(const Formula& f, const Algebra& alg) {
  switch (f.kind) {
    case Formula::Kind::Const: return f.value ? "true" : "false";
    case Formula::Kind::Atom: return alg.atom_name(f.atom);
    case Formula::Kind::Not: return "!" + render_formula(*f.lhs, alg);
    case Formula::Kind::And:
      return "(" + render_formula(*f.lhs, alg) + " & " + render_formula(*f.rhs, alg) + ")";
    case Formula::Kind::Or:
      return "(" + render_formula(*f.lhs, alg) + " | " + render_formula(*f.rhs, alg) + ")";
    case Formula::Kind::Imp:
      return "(" + render_formula(*f.lhs, alg) + " -> " + render_formula(*f.rhs, alg) + ")";
    case Formula::Kind::Iff:
      return "(" + render_formula(*f.lhs, alg) + " <-> " + render_formula(*f.rhs, alg) + ")";
  }
  return "?";
}

}  // namespace

SpecFile parse_spec(std::string_view text, int atom_cap) {
  return SpecParser(text, atom_cap).parse();
}

std::string render_cexpr(const CExpr& e, const AlgebraPtr& alg) {
  switch (e.kind) {
    case CExpr::Kind::Name: return e.name;
    case CExpr::Kind::Top: return "Top";
    case CExpr::Kind::Bottom: return "Bottom";
    case CExpr::Kind::Identity: return "Identity";
    case CExpr::Kind::Op: break;
  }
  std::string out = e.name + "(";
  if (e.element_first) {
    out += render_formula(*e.element_arg, *alg) + ", " + render_cexpr(*e.args[0], alg);
  } else if (e.element_arg != nullptr) {
    out += render_cexpr(*e.args[0], alg) + ", " + render_formula(*e.element_arg, *alg);
  } else {
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i > 0) out += ", ";
      out += render_cexpr(*e.args[i], alg);
    }
  }
  return out + ")";
}

namespace {

Contract eval_cexpr(const CExpr& e, const SpecFile& spec,
                    const std::map<std::string, Contract>& env) {
  const AlgebraPtr& alg = spec.algebra;
  const Distinguished d = distinguished(alg);
  switch (e.kind) {
    case CExpr::Kind::Top: return d.one;
    case CExpr::Kind::Bottom: return d.zero;
    case CExpr::Kind::Identity: return d.ident;
    case CExpr::Kind::Name: return env.at(e.name);
    case CExpr::Kind::Op: break;
  }
  if (e.name == "recip") return reciprocal(eval_cexpr(*e.args[0], spec, env));
  if (e.name == "scale_left") {
    return act_left(evaluate(e.element_arg, alg), eval_cexpr(*e.args[0], spec, env));
  }
  if (e.name == "scale_right") {
    return act_right(eval_cexpr(*e.args[0], spec, env), evaluate(e.element_arg, alg));
  }
  Contract lhs = eval_cexpr(*e.args[0], spec, env);
  Contract rhs = eval_cexpr(*e.args[1], spec, env);
  if (e.name == "conj") return conj(lhs, rhs);
  if (e.name == "disj") return disj(lhs, rhs);
  if (e.name == "compose") return compose(lhs, rhs);
  if (e.name == "merge") return merge(lhs, rhs);
  if (e.name == "quotient") return quotient(lhs, rhs);
  if (e.name == "separate") return separate(lhs, rhs);
  if (e.name == "implies_c") return implication(lhs, rhs);     // antecedent first
  if (e.name == "coimplies_c") return coimplication(lhs, rhs); // antecedent first
  throw Error("unknown operation '" + e.name + "'");
}

}  // namespace

EvalResult eval(const SpecFile& spec) {
  EvalResult result;
  result.algebra = spec.algebra;
  std::map<std::string, Contract> env;
  for (const Binding& b : spec.bindings) {
    Contract value = b.is_contract_literal
                         ? Contract::make(evaluate(b.assume, spec.algebra),
                                          evaluate(b.guarantee, spec.algebra))
                         : eval_cexpr(*b.expr, spec, env);
    env.insert({b.name, value});
    result.bindings.emplace_back(b.name, value);
  }
  for (const Query& q : spec.queries) {
    QueryOutcome out;
    out.kind = q.kind;
    switch (q.kind) {
      case Query::Kind::Print: {
        out.text = render_cexpr(*q.operands[0], spec.algebra);
        out.output = render(eval_cexpr(*q.operands[0], spec, env));
        break;
      }
      case Query::Kind::CheckRefines:
      case Query::Kind::CheckEqual: {
        const char* pred = q.kind == Query::Kind::CheckRefines ? "refines" : "equal";
        out.text = std::string(pred) + "(" + render_cexpr(*q.operands[0], spec.algebra) +
                   ", " + render_cexpr(*q.operands[1], spec.algebra) + ")";
        out.is_check = true;
        Contract lhs = eval_cexpr(*q.operands[0], spec, env);
        Contract rhs = eval_cexpr(*q.operands[1], spec, env);
        out.holds = q.kind == Query::Kind::CheckRefines ? refines(lhs, rhs) : lhs == rhs;
        if (!out.holds) {
          out.output = "left = " + render(lhs) + ", right = " + render(rhs);
        }
        break;
      }
      case Query::Kind::AssertCanonical: {
        out.text = "canonical(" + render_cexpr(*q.operands[0], spec.algebra) + ")";
        out.is_check = true;
        Contract value = eval_cexpr(*q.operands[0], spec, env);
        out.holds = (value.assume() | value.guarantee()).is_top();
        if (!out.holds) out.output = "value = " + render(value);
        break;
      }
    }
    if (out.is_check && !out.holds) result.all_checks_hold = false;
    result.queries.push_back(std::move(out));
  }
  return result;
}

}  // namespace agc
