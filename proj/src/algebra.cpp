#include "agc/algebra.hpp"

#include <algorithm>
#include <unordered_set>

namespace agc {

Algebra::Algebra(std::vector<std::string> atoms, Backend backend)
    : atoms_(std::move(atoms)),
      backend_(backend),
      full_((1u << atoms_.size()) - 1u) {}

AlgebraPtr Algebra::make(std::vector<std::string> atoms, Backend backend, int atom_cap) {
  if (atoms.empty()) {
    throw Error("algebra needs at least one atom");
  }
  if (static_cast<int>(atoms.size()) > atom_cap) {
    throw TooLargeError("atom count " + std::to_string(atoms.size()) +
                        " exceeds cap " + std::to_string(atom_cap));
  }
  if (atoms.size() > 31) {  // mask representation limit regardless of cap
    throw TooLargeError("atom count " + std::to_string(atoms.size()) +
                        " exceeds the 31-atom representation limit");
  }
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms) {
    if (a.empty()) {
      throw Error("atom names must be nonempty");
    }
    if (!seen.insert(a).second) {
      throw Error("duplicate atom name '" + a + "'");
    }
  }
  return AlgebraPtr(new Algebra(std::move(atoms), backend));
}

int Algebra::atom_index(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Element Element::atom(const AlgebraPtr& alg, int index) {
  return from_mask(alg, 1u << index);
}

Element Element::from_mask(const AlgebraPtr& alg, std::uint32_t mask) {
  if ((mask & ~alg->full_mask()) != 0) {
    throw Error("element mask out of range for algebra");
  }
  return Element(alg, mask);
}

namespace {

void require_same(const Element& x, const Element& y, const char* where) {
  if (x.algebra() != y.algebra()) throw MixedAlgebraError(where);
}

template <typename BoolOp, typename MaskOp>
Element combine(const Element& x, const Element& y, BoolOp per_atom, MaskOp whole) {
  const AlgebraPtr& alg = x.algebra();
  if (alg->backend() == Backend::Formula) {
    std::uint32_t m = 0;
    for (int i = 0; i < alg->atom_count(); ++i) {
      if (per_atom(x.bit(i), y.bit(i))) m |= 1u << i;
    }
    return Element::from_mask(alg, m);
  }
  return Element::from_mask(alg, whole(x.mask(), y.mask()) & alg->full_mask());
}

}  // namespace

Element meet(const Element& x, const Element& y) {
  require_same(x, y, "meet");
  return combine(
      x, y, [](bool a, bool b) { return a && b; },
      [](std::uint32_t a, std::uint32_t b) { return a & b; });
}

Element join(const Element& x, const Element& y) {
  require_same(x, y, "join");
  return combine(
      x, y, [](bool a, bool b) { return a || b; },
      [](std::uint32_t a, std::uint32_t b) { return a | b; });
}

Element complement(const Element& x) {
  const AlgebraPtr& alg = x.algebra();
  if (alg->backend() == Backend::Formula) {
    std::uint32_t m = 0;
    for (int i = 0; i < alg->atom_count(); ++i) {
      if (!x.bit(i)) m |= 1u << i;
    }
    return Element::from_mask(alg, m);
  }
  return Element::from_mask(alg, ~x.mask() & alg->full_mask());
}

Element implies(const Element& x, const Element& y) {
  require_same(x, y, "implies");
  return combine(
      x, y, [](bool a, bool b) { return !a || b; },
      [](std::uint32_t a, std::uint32_t b) { return ~a | b; });
}

bool leq(const Element& x, const Element& y) {
  require_same(x, y, "leq");
  if (x.algebra()->backend() == Backend::Formula) {
    for (int i = 0; i < x.algebra()->atom_count(); ++i) {
      if (x.bit(i) && !y.bit(i)) return false;
    }
    return true;
  }
  return (x.mask() & ~y.mask()) == 0;
}

std::string render_dnf(const Element& x) {
  const Algebra& alg = *x.algebra();
  if (x.mask() == 0) return "false";
  std::string out;
  for (int i = 0; i < alg.atom_count(); ++i) {
    if (!x.bit(i)) continue;
    if (!out.empty()) out += " | ";
    out += "(";
    for (int j = 0; j < alg.atom_count(); ++j) {
      if (j > 0) out += " & ";
      if (j != i) out += "!";
      out += alg.atom_name(j);
    }
    out += ")";
  }
  return out;
}

}  // namespace agc
