#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agc {

/// Base class of every recoverable error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A binary operation received operands owned by different algebras.
struct MixedAlgebraError : Error {
  explicit MixedAlgebraError(const std::string& where)
      : Error("mixed algebras in " + where) {}
};

/// Position inside a source text, 1-based line/column.
struct SourcePos {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
};

inline std::string to_string(const SourcePos& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

struct ParseError : Error {
  SourcePos pos;
  ParseError(const std::string& msg, SourcePos p)
      : Error(msg + " at " + to_string(p)), pos(p) {}
};

struct UnknownAtomError : ParseError {
  std::string atom;
  UnknownAtomError(std::string name, SourcePos p)
      : ParseError("unknown atom '" + name + "'", p), atom(std::move(name)) {}
};

struct UnknownNameError : ParseError {
  std::string name;
  UnknownNameError(std::string n, SourcePos p)
      : ParseError("unknown name '" + n + "'", p), name(std::move(n)) {}
};

struct DuplicateNameError : ParseError {
  std::string name;
  DuplicateNameError(std::string n, SourcePos p)
      : ParseError("duplicate name '" + n + "'", p), name(std::move(n)) {}
};

/// A contract pair failed the canonical-form condition a | g = top.
struct NotCanonicalError : Error {
  explicit NotCanonicalError(const std::string& detail)
      : Error("contract not canonical: " + detail) {}
};

/// A tabulated map failed a structural law; carries the law name and a
/// rendered witness.
struct MapLawError : Error {
  std::string law;
  MapLawError(std::string law_name, const std::string& witness)
      : Error("map violates " + law_name + ": " + witness),
        law(std::move(law_name)) {}
};

/// lift_monotone rejected a map; names the violated flag.
struct InvalidAbstractionError : Error {
  std::string flag;
  explicit InvalidAbstractionError(std::string violated)
      : Error("invalid abstraction: map is not " + violated),
        flag(std::move(violated)) {}
};

/// A morphism quadruple component failed the meet/top-morphism laws.
struct InvalidQuadrupleError : Error {
  std::string component;
  InvalidQuadrupleError(std::string comp, const std::string& detail)
      : Error("invalid quadruple component " + comp + ": " + detail),
        component(std::move(comp)) {}
};

struct TooLargeError : Error {
  explicit TooLargeError(const std::string& what) : Error(what) {}
};

/// An oracle search found no unique extremum. Firing is a test failure:
/// the adjoint definitions guarantee the extremum exists.
struct NoExtremumError : Error {
  explicit NoExtremumError(const std::string& what) : Error(what) {}
};

}  // namespace agc
