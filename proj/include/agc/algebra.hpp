#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "agc/errors.hpp"

namespace agc {

/// How element operations are evaluated. Both backends share the same
/// carrier (subsets of the atom set); Bitset combines whole masks with
/// word operations, Formula evaluates the connective per atom, i.e. one
/// truth-table row per single-atom assignment.
enum class Backend { Bitset, Formula };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

inline constexpr int kDefaultAtomCap = 16;

/// A finite Boolean algebra: the powerset of a fixed, ordered list of
/// named atoms. The carrier has exactly 2^n elements; bottom is the empty
/// set and top is the full set. Immutable after construction.
class Algebra {
 public:
  static AlgebraPtr make(std::vector<std::string> atoms,
                         Backend backend = Backend::Bitset,
                         int atom_cap = kDefaultAtomCap);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& atom_name(int i) const { return atoms_[static_cast<std::size_t>(i)]; }
  Backend backend() const { return backend_; }

  std::uint32_t full_mask() const { return full_; }
  std::uint32_t carrier_size() const { return full_ + 1; }

  /// Index of a named atom, or -1 when the name is not declared.
  int atom_index(std::string_view name) const;

 private:
  Algebra(std::vector<std::string> atoms, Backend backend);

  std::vector<std::string> atoms_;
  Backend backend_;
  std::uint32_t full_;
};

/// One element of a finite Boolean algebra: a subset of its atoms, held
/// as a bitmask over the atom order. Elements are immutable values;
/// equality is semantic (same algebra, same subset).
class Element {
 public:
  static Element bottom(const AlgebraPtr& alg) { return Element(alg, 0); }
  static Element top(const AlgebraPtr& alg) { return Element(alg, alg->full_mask()); }
  static Element atom(const AlgebraPtr& alg, int index);
  static Element from_mask(const AlgebraPtr& alg, std::uint32_t mask);

  const AlgebraPtr& algebra() const { return alg_; }
  std::uint32_t mask() const { return mask_; }
  bool bit(int atom_index) const { return (mask_ >> atom_index) & 1u; }
  bool is_bottom() const { return mask_ == 0; }
  bool is_top() const { return mask_ == alg_->full_mask(); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.alg_ == b.alg_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  Element(AlgebraPtr alg, std::uint32_t mask) : alg_(std::move(alg)), mask_(mask) {}

  AlgebraPtr alg_;
  std::uint32_t mask_;
};

Element meet(const Element& x, const Element& y);
Element join(const Element& x, const Element& y);
Element complement(const Element& x);

/// implies(x, y) = !x | y.
Element implies(const Element& x, const Element& y);

/// Order of the algebra: x <= y iff x & !y is bottom (subset inclusion).
bool leq(const Element& x, const Element& y);

inline Element operator&(const Element& x, const Element& y) { return meet(x, y); }
inline Element operator|(const Element& x, const Element& y) { return join(x, y); }
inline Element operator~(const Element& x) { return complement(x); }

/// Sorted-minterm DNF over the atom order; deterministic and bit-exact.
/// The empty set renders as "false".
std::string render_dnf(const Element& x);

}  // namespace agc
