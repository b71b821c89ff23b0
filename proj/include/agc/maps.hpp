#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "agc/algebra.hpp"

namespace agc {

/// A total tabulated map between the carriers of two finite algebras,
/// indexed by the source element mask.
class TabulatedMap {
 public:
  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  std::uint32_t apply_mask(std::uint32_t m) const { return table_[m]; }

  Element apply(const Element& x) const {
    if (x.algebra() != source_) throw MixedAlgebraError("map application");
    return Element::from_mask(target_, table_[x.mask()]);
  }

 protected:
  TabulatedMap(AlgebraPtr source, AlgebraPtr target, std::vector<std::uint32_t> table);

  AlgebraPtr source_;
  AlgebraPtr target_;
  std::vector<std::uint32_t> table_;
};

/// Boolean-algebra homomorphism: preserves bottom, top, meet, join and
/// complement. All laws are checked exhaustively at construction and a
/// violation raises MapLawError with the law name and a witness.
class AlgebraHom : public TabulatedMap {
 public:
  static AlgebraHom make(AlgebraPtr source, AlgebraPtr target,
                         std::vector<std::uint32_t> table);
  static AlgebraHom identity(const AlgebraPtr& alg);
  /// Hom sending atom i of the source to atom perm[i] of the target.
  static AlgebraHom atom_permutation(const AlgebraPtr& source, const AlgebraPtr& target,
                                     const std::vector<int>& perm);

 private:
  using TabulatedMap::TabulatedMap;
};

/// Monotone map with structural flags computed (not enforced) at
/// construction; lift_monotone is the place where flags become
/// preconditions.
class MonotoneMap : public TabulatedMap {
 public:
  static MonotoneMap make(AlgebraPtr source, AlgebraPtr target,
                          std::vector<std::uint32_t> table);
  static MonotoneMap identity(const AlgebraPtr& alg);

  bool monotone() const { return monotone_; }
  bool join_preserving() const { return join_preserving_; }
  bool top_preserving() const { return top_preserving_; }

 private:
  MonotoneMap(AlgebraPtr source, AlgebraPtr target, std::vector<std::uint32_t> table);

  bool monotone_;
  bool join_preserving_;
  bool top_preserving_;
};

/// Map preserving finite meets and top: a morphism of the (B, meet, top)
/// monoid. Building block of morphism quadruples.
class MeetTopMap : public TabulatedMap {
 public:
  static MeetTopMap make(AlgebraPtr source, AlgebraPtr target,
                         std::vector<std::uint32_t> table);
  static MeetTopMap identity(const AlgebraPtr& alg);
  static MeetTopMap constant_top(const AlgebraPtr& source, const AlgebraPtr& target);

  /// A meet/top-preserving map is determined freely by the images of the
  /// source coatoms; images[i] is the image of complement(atom i).
  static MeetTopMap from_coatom_images(const AlgebraPtr& source, const AlgebraPtr& target,
                                       const std::vector<std::uint32_t>& images);

 private:
  using TabulatedMap::TabulatedMap;
};

/// Text form of a tabulated map:
///   source: x y
///   target: z
///   <source mask> -> <target mask>   (one line per carrier element)
struct MapTable {
  std::vector<std::string> source_atoms;
  std::vector<std::string> target_atoms;
  std::vector<std::uint32_t> entries;  // indexed by source mask
};

MapTable parse_map_table(std::string_view text);
std::string render_map_table(const TabulatedMap& map);

}  // namespace agc
