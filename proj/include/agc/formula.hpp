#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "agc/algebra.hpp"
#include "agc/errors.hpp"

namespace agc {

enum class Tok {
  Ident,
  True,
  False,
  Bang,
  Amp,
  Pipe,
  Arrow,   // ->
  Iff,     // <->
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semi,
  Comma,
  Colon,
  Equals,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

/// Shared lexer for the formula grammar and the spec-file grammar.
/// Skips whitespace and '#' line comments.
class Lexer {
 public:
  explicit Lexer(std::string_view src);

  const Token& peek();
  Token next();
  SourcePos pos() const { return pos_; }

 private:
  Token scan();
  void advance();

  std::string src_;
  std::size_t i_ = 0;
  SourcePos pos_;
  Token lookahead_;
  bool has_lookahead_ = false;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Propositional formula over the atoms of one algebra.
struct Formula {
  enum class Kind { Const, Atom, Not, And, Or, Imp, Iff };

  Kind kind;
  bool value = false;  // Const
  int atom = -1;       // Atom
  FormulaPtr lhs, rhs;

  static FormulaPtr constant(bool v);
  static FormulaPtr atom_ref(int index);
  static FormulaPtr unary(Kind k, FormulaPtr operand);
  static FormulaPtr binary(Kind k, FormulaPtr l, FormulaPtr r);
};

/// Evaluate under the single-atom assignment for `atom_index`: the variable
/// for atom j is true iff j == atom_index.
bool eval_at_atom(const Formula& f, int atom_index);

/// Reduce a formula to the element it denotes, one truth-table row per atom.
Element evaluate(const FormulaPtr& f, const AlgebraPtr& alg);

/// Recursive-descent parser for
///   expr := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
///   or := and ("|" and)* ; and := not ("&" not)* ;
///   not := "!" not | atom | "true" | "false" | "(" expr ")"
/// Atom names resolve against the algebra; unknown names raise UnknownAtom.
class FormulaParser {
 public:
  FormulaParser(Lexer& lex, const AlgebraPtr& alg) : lex_(lex), alg_(alg) {}

  FormulaPtr parse_expr();

 private:
  FormulaPtr parse_imp();
  FormulaPtr parse_or();
  FormulaPtr parse_and();
  FormulaPtr parse_not();

  Lexer& lex_;
  const AlgebraPtr& alg_;
};

/// Parse a complete formula text into an element of the algebra.
Element parse_formula(std::string_view text, const AlgebraPtr& alg);

}  // namespace agc
