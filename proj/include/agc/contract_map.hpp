#pragma once

#include <functional>
#include <variant>

#include "agc/maps.hpp"
#include "agc/oracle.hpp"

namespace agc {

/// Four meet/top-preserving maps (l_a, l_g, r_a, r_g) between two algebras;
/// the data from which a morphism of composition monoids is assembled.
class MorphismQuadruple {
 public:
  /// Validates each component; a failing component raises InvalidQuadruple
  /// naming it.
  static MorphismQuadruple make(const AlgebraPtr& source, const AlgebraPtr& target,
                                std::vector<std::uint32_t> l_a, std::vector<std::uint32_t> l_g,
                                std::vector<std::uint32_t> r_a, std::vector<std::uint32_t> r_g);
  static MorphismQuadruple make(MeetTopMap l_a, MeetTopMap l_g, MeetTopMap r_a,
                                MeetTopMap r_g);

  const MeetTopMap& l_a() const { return l_a_; }
  const MeetTopMap& l_g() const { return l_g_; }
  const MeetTopMap& r_a() const { return r_a_; }
  const MeetTopMap& r_g() const { return r_g_; }
  const AlgebraPtr& source() const { return l_a_.source(); }
  const AlgebraPtr& target() const { return l_a_.target(); }

 private:
  MorphismQuadruple(MeetTopMap l_a, MeetTopMap l_g, MeetTopMap r_a, MeetTopMap r_g);

  MeetTopMap l_a_, l_g_, r_a_, r_g_;
};

/// A tabulated total map between two contract algebras. Lifted and
/// hom-induced maps are validated to be monotone for refines; assembled
/// maps are validated to preserve composition and its identity (they are
/// monoid morphisms, not order maps).
class ContractMap {
 public:
  struct LiftedMonotone {
    MonotoneMap map;
  };
  struct InducedHom {
    AlgebraHom map;
  };
  struct Assembled {
    MorphismQuadruple quadruple;
  };
  using Provenance = std::variant<LiftedMonotone, InducedHom, Assembled>;

  static ContractMap tabulate(const AlgebraPtr& source, const AlgebraPtr& target,
                              const std::function<Contract(const Contract&)>& fn,
                              Provenance provenance);

  Contract apply(const Contract& c) const;

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Provenance& provenance() const { return provenance_; }
  bool hom_induced() const { return std::holds_alternative<InducedHom>(provenance_); }

 private:
  ContractMap(AlgebraPtr source, AlgebraPtr target, oracle::ContractEnumeration src_enum,
              std::vector<Contract> table, Provenance provenance);

  AlgebraPtr source_;
  AlgebraPtr target_;
  oracle::ContractEnumeration src_enum_;
  std::vector<Contract> table_;
  Provenance provenance_;
};

}  // namespace agc
