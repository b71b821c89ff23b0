#include "agc/contract_map.hpp"

namespace agc {

MorphismQuadruple::MorphismQuadruple(MeetTopMap l_a, MeetTopMap l_g, MeetTopMap r_a,
                                     MeetTopMap r_g)
    : l_a_(std::move(l_a)), l_g_(std::move(l_g)), r_a_(std::move(r_a)), r_g_(std::move(r_g)) {}

MorphismQuadruple MorphismQuadruple::make(const AlgebraPtr& source, const AlgebraPtr& target,
                                          std::vector<std::uint32_t> l_a,
                                          std::vector<std::uint32_t> l_g,
                                          std::vector<std::uint32_t> r_a,
                                          std::vector<std::uint32_t> r_g) {
  auto component = [&](const char* name, std::vector<std::uint32_t> table) {
    try {
      return MeetTopMap::make(source, target, std::move(table));
    } catch (const MapLawError& e) {
      throw InvalidQuadrupleError(name, e.what());
    }
  };
  MeetTopMap la = component("l_a", std::move(l_a));
  MeetTopMap lg = component("l_g", std::move(l_g));
  MeetTopMap ra = component("r_a", std::move(r_a));
  MeetTopMap rg = component("r_g", std::move(r_g));
  return MorphismQuadruple(std::move(la), std::move(lg), std::move(ra), std::move(rg));
}

MorphismQuadruple MorphismQuadruple::make(MeetTopMap l_a, MeetTopMap l_g, MeetTopMap r_a,
                                          MeetTopMap r_g) {
  auto same = [&](const MeetTopMap& m) {
    return m.source() == l_a.source() && m.target() == l_a.target();
  };
  if (!same(l_g) || !same(r_a) || !same(r_g)) {
    throw InvalidQuadrupleError("quadruple", "components disagree on source/target");
  }
  return MorphismQuadruple(std::move(l_a), std::move(l_g), std::move(r_a), std::move(r_g));
}

ContractMap::ContractMap(AlgebraPtr source, AlgebraPtr target,
                         oracle::ContractEnumeration src_enum, std::vector<Contract> table,
                         Provenance provenance)
    : source_(std::move(source)),
      target_(std::move(target)),
      src_enum_(std::move(src_enum)),
      table_(std::move(table)),
      provenance_(std::move(provenance)) {}

ContractMap ContractMap::tabulate(const AlgebraPtr& source, const AlgebraPtr& target,
                                  const std::function<Contract(const Contract&)>& fn,
                                  Provenance provenance) {
  oracle::ContractEnumeration en = oracle::enumerate(source);
  std::vector<Contract> table;
  table.reserve(en.size());
  for (std::size_t i = 0; i < en.size(); ++i) {
    Contract image = fn(en.at(i));
    if (image.algebra() != target) throw MixedAlgebraError("contract map image");
    assert_canonical(image);
    table.push_back(std::move(image));
  }
  ContractMap map(source, target, std::move(en), std::move(table), std::move(provenance));

  if (std::holds_alternative<Assembled>(map.provenance_)) {
    // Monoid-morphism laws for the composition monoids.
    const Distinguished ds = distinguished(source);
    const Distinguished dt = distinguished(target);
    if (map.apply(ds.ident) != dt.ident) {
      throw Error("assembled map does not preserve the composition identity");
    }
    for (std::size_t i = 0; i < map.src_enum_.size(); ++i) {
      for (std::size_t j = 0; j < map.src_enum_.size(); ++j) {
        const Contract& c = map.src_enum_.at(i);
        const Contract& c2 = map.src_enum_.at(j);
        if (map.apply(compose(c, c2)) != compose(map.apply(c), map.apply(c2))) {
          throw Error("assembled map does not preserve composition: c=" + render(c) +
                      " c2=" + render(c2));
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < map.src_enum_.size(); ++i) {
      for (std::size_t j = 0; j < map.src_enum_.size(); ++j) {
        const Contract& c = map.src_enum_.at(i);
        const Contract& c2 = map.src_enum_.at(j);
        if (refines(c, c2) && !refines(map.apply(c), map.apply(c2))) {
          throw Error("contract map not monotone: c=" + render(c) + " c2=" + render(c2));
        }
      }
    }
  }
  return map;
}

Contract ContractMap::apply(const Contract& c) const {
  return table_[src_enum_.index_of(c)];
}

}  // namespace agc
