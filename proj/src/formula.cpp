#include "agc/formula.hpp"

#include <cctype>

namespace agc {

Lexer::Lexer(std::string_view src) : src_(src) {}

void Lexer::advance() {
  if (i_ >= src_.size()) return;
  if (src_[i_] == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else {
    ++pos_.column;
  }
  ++i_;
  ++pos_.offset;
}

const Token& Lexer::peek() {
  if (!has_lookahead_) {
    lookahead_ = scan();
    has_lookahead_ = true;
  }
  return lookahead_;
}

Token Lexer::next() {
  if (has_lookahead_) {
    has_lookahead_ = false;
    return lookahead_;
  }
  return scan();
}

Token Lexer::scan() {
  for (;;) {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) advance();
    if (i_ < src_.size() && src_[i_] == '#') {
      while (i_ < src_.size() && src_[i_] != '\n') advance();
      continue;
    }
    break;
  }
  Token t;
  t.pos = pos_;
  if (i_ >= src_.size()) {
    t.kind = Tok::End;
    return t;
  }
  char c = src_[i_];
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string ident;
    while (i_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
      ident += src_[i_];
      advance();
    }
    if (ident == "true") {
      t.kind = Tok::True;
    } else if (ident == "false") {
      t.kind = Tok::False;
    } else {
      t.kind = Tok::Ident;
    }
    t.text = std::move(ident);
    return t;
  }
  switch (c) {
    case '!': t.kind = Tok::Bang; advance(); return t;
    case '&': t.kind = Tok::Amp; advance(); return t;
    case '|': t.kind = Tok::Pipe; advance(); return t;
    case '(': t.kind = Tok::LParen; advance(); return t;
    case ')': t.kind = Tok::RParen; advance(); return t;
    case '{': t.kind = Tok::LBrace; advance(); return t;
    case '}': t.kind = Tok::RBrace; advance(); return t;
    case ';': t.kind = Tok::Semi; advance(); return t;
    case ',': t.kind = Tok::Comma; advance(); return t;
    case ':': t.kind = Tok::Colon; advance(); return t;
    case '=': t.kind = Tok::Equals; advance(); return t;
    case '-':
      advance();
      if (i_ < src_.size() && src_[i_] == '>') {
        advance();
        t.kind = Tok::Arrow;
        return t;
      }
      throw ParseError("expected '->'", t.pos);
    case '<':
      advance();
      if (i_ + 1 < src_.size() && src_[i_] == '-' && src_[i_ + 1] == '>') {
        advance();
        advance();
        t.kind = Tok::Iff;
        return t;
      }
      throw ParseError("expected '<->'", t.pos);
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", t.pos);
  }
}

FormulaPtr Formula::constant(bool v) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Const;
  f->value = v;
  return f;
}

FormulaPtr Formula::atom_ref(int index) {
  auto f = std::make_shared<Formula>();
  f->kind = Kind::Atom;
  f->atom = index;
  return f;
}

FormulaPtr Formula::unary(Kind k, FormulaPtr operand) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(operand);
  return f;
}

FormulaPtr Formula::binary(Kind k, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

bool eval_at_atom(const Formula& f, int atom_index) {
  switch (f.kind) {
    case Formula::Kind::Const: return f.value;
    case Formula::Kind::Atom: return f.atom == atom_index;
    case Formula::Kind::Not: return !eval_at_atom(*f.lhs, atom_index);
    case Formula::Kind::And:
      return eval_at_atom(*f.lhs, atom_index) && eval_at_atom(*f.rhs, atom_index);
    case Formula::Kind::Or:
      return eval_at_atom(*f.lhs, atom_index) || eval_at_atom(*f.rhs, atom_index);
    case Formula::Kind::Imp:
      return !eval_at_atom(*f.lhs, atom_index) || eval_at_atom(*f.rhs, atom_index);
    case Formula::Kind::Iff:
      return eval_at_atom(*f.lhs, atom_index) == eval_at_atom(*f.rhs, atom_index);
  }
  return false;
}

Element evaluate(const FormulaPtr& f, const AlgebraPtr& alg) {
  std::uint32_t m = 0;
  for (int i = 0; i < alg->atom_count(); ++i) {
    if (eval_at_atom(*f, i)) m |= 1u << i;
  }
  return Element::from_mask(alg, m);
}

FormulaPtr FormulaParser::parse_expr() {
  FormulaPtr f = parse_imp();
  while (lex_.peek().kind == Tok::Iff) {
    lex_.next();
    f = Formula::binary(Formula::Kind::Iff, f, parse_imp());
  }
  return f;
}

FormulaPtr FormulaParser::parse_imp() {
  FormulaPtr f = parse_or();
  if (lex_.peek().kind == Tok::Arrow) {
    lex_.next();
    return Formula::binary(Formula::Kind::Imp, f, parse_imp());
  }
  return f;
}

FormulaPtr FormulaParser::parse_or() {
  FormulaPtr f = parse_and();
  while (lex_.peek().kind == Tok::Pipe) {
    lex_.next();
    f = Formula::binary(Formula::Kind::Or, f, parse_and());
  }
  return f;
}

FormulaPtr FormulaParser::parse_and() {
  FormulaPtr f = parse_not();
  while (lex_.peek().kind == Tok::Amp) {
    lex_.next();
    f = Formula::binary(Formula::Kind::And, f, parse_not());
  }
  return f;
}

FormulaPtr FormulaParser::parse_not() {
  Token t = lex_.next();
  switch (t.kind) {
    case Tok::Bang:
      return Formula::unary(Formula::Kind::Not, parse_not());
    case Tok::True:
      return Formula::constant(true);
    case Tok::False:
      return Formula::constant(false);
    case Tok::Ident: {
      int idx = alg_->atom_index(t.text);
      if (idx < 0) throw UnknownAtomError(t.text, t.pos);
      return Formula::atom_ref(idx);
    }
    case Tok::LParen: {
      FormulaPtr f = parse_expr();
      Token close = lex_.next();
      if (close.kind != Tok::RParen) throw ParseError("expected ')'", close.pos);
      return f;
    }
    default:
      throw ParseError("expected formula", t.pos);
  }
}

Element parse_formula(std::string_view text, const AlgebraPtr& alg) {
  Lexer lex(text);
  FormulaParser parser(lex, alg);
  FormulaPtr f = parser.parse_expr();
  Token t = lex.next();
  if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.pos);
  return evaluate(f, alg);
}

}  // namespace agc
