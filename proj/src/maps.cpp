#include "agc/maps.hpp"

#include <sstream>

namespace agc {

namespace {

std::string mask_names(const Algebra& alg, std::uint32_t m) {
  if (m == 0) return "{}";
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < alg.atom_count(); ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ",";
      out += alg.atom_name(i);
      first = false;
    }
  }
  return out + "}";
}

std::string witness2(const Algebra& alg, std::uint32_t x, std::uint32_t y) {
  return "x=" + mask_names(alg, x) + " y=" + mask_names(alg, y);
}

}  // namespace

TabulatedMap::TabulatedMap(AlgebraPtr source, AlgebraPtr target,
                           std::vector<std::uint32_t> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->carrier_size()) {
    throw Error("map table must have one entry per source element");
  }
  for (std::uint32_t v : table_) {
    if ((v & ~target_->full_mask()) != 0) {
      throw Error("map table entry out of target range");
    }
  }
}

AlgebraHom AlgebraHom::make(AlgebraPtr source, AlgebraPtr target,
                            std::vector<std::uint32_t> table) {
  AlgebraHom h(std::move(source), std::move(target), std::move(table));
  const Algebra& s = *h.source();
  const std::uint32_t sfull = s.full_mask();
  const std::uint32_t tfull = h.target()->full_mask();
  const auto& t = h.table();
  if (t[0] != 0) throw MapLawError("bottom preservation", "f(bottom) = " + mask_names(*h.target(), t[0]));
  if (t[sfull] != tfull) throw MapLawError("top preservation", "f(top) = " + mask_names(*h.target(), t[sfull]));
  for (std::uint32_t x = 0; x <= sfull; ++x) {
    if (t[(~x) & sfull] != ((~t[x]) & tfull)) {
      throw MapLawError("complement preservation", "x=" + mask_names(s, x));
    }
    for (std::uint32_t y = 0; y <= sfull; ++y) {
      if (t[x & y] != (t[x] & t[y])) throw MapLawError("meet preservation", witness2(s, x, y));
      if (t[x | y] != (t[x] | t[y])) throw MapLawError("join preservation", witness2(s, x, y));
    }
  }
  return h;
}

AlgebraHom AlgebraHom::identity(const AlgebraPtr& alg) {
  std::vector<std::uint32_t> t(alg->carrier_size());
  for (std::uint32_t m = 0; m < t.size(); ++m) t[m] = m;
  return make(alg, alg, std::move(t));
}

AlgebraHom AlgebraHom::atom_permutation(const AlgebraPtr& source, const AlgebraPtr& target,
                                        const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != source->atom_count() ||
      source->atom_count() != target->atom_count()) {
    throw Error("atom permutation must cover every atom");
  }
  std::vector<std::uint32_t> t(source->carrier_size(), 0);
  for (std::uint32_t m = 0; m < t.size(); ++m) {
    std::uint32_t img = 0;
    for (int i = 0; i < source->atom_count(); ++i) {
      if ((m >> i) & 1u) img |= 1u << perm[static_cast<std::size_t>(i)];
    }
    t[m] = img;
  }
  return make(source, target, std::move(t));
}

MonotoneMap::MonotoneMap(AlgebraPtr source, AlgebraPtr target,
                         std::vector<std::uint32_t> table)
    : TabulatedMap(std::move(source), std::move(target), std::move(table)),
      monotone_(true),
      join_preserving_(true),
      top_preserving_(false) {
  const std::uint32_t sfull = source_->full_mask();
  top_preserving_ = table_[sfull] == target_->full_mask();
  for (std::uint32_t x = 0; x <= sfull && (monotone_ || join_preserving_); ++x) {
    for (std::uint32_t y = 0; y <= sfull; ++y) {
      if ((x & ~y) == 0 && (table_[x] & ~table_[y]) != 0) monotone_ = false;
      if (table_[x | y] != (table_[x] | table_[y])) join_preserving_ = false;
      if (!monotone_ && !join_preserving_) break;
    }
  }
}

MonotoneMap MonotoneMap::make(AlgebraPtr source, AlgebraPtr target,
                              std::vector<std::uint32_t> table) {
  return MonotoneMap(std::move(source), std::move(target), std::move(table));
}

MonotoneMap MonotoneMap::identity(const AlgebraPtr& alg) {
  std::vector<std::uint32_t> t(alg->carrier_size());
  for (std::uint32_t m = 0; m < t.size(); ++m) t[m] = m;
  return make(alg, alg, std::move(t));
}

MeetTopMap MeetTopMap::make(AlgebraPtr source, AlgebraPtr target,
                            std::vector<std::uint32_t> table) {
  MeetTopMap h(std::move(source), std::move(target), std::move(table));
  const Algebra& s = *h.source();
  const std::uint32_t sfull = s.full_mask();
  const auto& t = h.table();
  if (t[sfull] != h.target()->full_mask()) {
    throw MapLawError("top preservation", "f(top) = " + mask_names(*h.target(), t[sfull]));
  }
  for (std::uint32_t x = 0; x <= sfull; ++x) {
    for (std::uint32_t y = 0; y <= sfull; ++y) {
      if (t[x & y] != (t[x] & t[y])) throw MapLawError("meet preservation", witness2(s, x, y));
    }
  }
  return h;
}

MeetTopMap MeetTopMap::identity(const AlgebraPtr& alg) {
  std::vector<std::uint32_t> t(alg->carrier_size());
  for (std::uint32_t m = 0; m < t.size(); ++m) t[m] = m;
  return make(alg, alg, std::move(t));
}

MeetTopMap MeetTopMap::constant_top(const AlgebraPtr& source, const AlgebraPtr& target) {
  std::vector<std::uint32_t> t(source->carrier_size(), target->full_mask());
  return make(source, target, std::move(t));
}

MeetTopMap MeetTopMap::from_coatom_images(const AlgebraPtr& source, const AlgebraPtr& target,
                                          const std::vector<std::uint32_t>& images) {
  if (static_cast<int>(images.size()) != source->atom_count()) {
    throw Error("need one coatom image per source atom");
  }
  // Every element is the meet of the coatoms above it; extend by meets.
  std::vector<std::uint32_t> t(source->carrier_size(), 0);
  const std::uint32_t sfull = source->full_mask();
  for (std::uint32_t m = 0; m <= sfull; ++m) {
    std::uint32_t img = target->full_mask();
    for (int i = 0; i < source->atom_count(); ++i) {
      if (((m >> i) & 1u) == 0) img &= images[static_cast<std::size_t>(i)];
    }
    t[m] = img;
  }
  return make(source, target, std::move(t));
}

MapTable parse_map_table(std::string_view text) {
  MapTable mt;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_source = false, have_target = false;
  std::vector<bool> seen;
  auto fail = [&](const std::string& msg) {
    throw ParseError(msg, SourcePos{0, lineno, 1});
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (first == "source:" || first == "target:") {
      std::vector<std::string> atoms;
      std::string a;
      while (ls >> a) atoms.push_back(a);
      if (atoms.empty()) fail("empty atom list");
      if (first == "source:") {
        mt.source_atoms = std::move(atoms);
        have_source = true;
        seen.assign(1u << mt.source_atoms.size(), false);
        mt.entries.assign(1u << mt.source_atoms.size(), 0);
      } else {
        mt.target_atoms = std::move(atoms);
        have_target = true;
      }
      continue;
    }
    if (!have_source || !have_target) fail("expected source:/target: header first");
    std::uint32_t src = 0, dst = 0;
    std::string arrow;
    std::istringstream entry(line);
    if (!(entry >> src >> arrow >> dst) || arrow != "->") fail("expected '<mask> -> <mask>'");
    if (src >= mt.entries.size()) fail("source mask out of range");
    if (dst >= (1u << mt.target_atoms.size())) fail("target mask out of range");
    if (seen[src]) fail("duplicate entry for source mask " + std::to_string(src));
    seen[src] = true;
    mt.entries[src] = dst;
  }
  if (!have_source || !have_target) {
    throw ParseError("map table missing source:/target: header", SourcePos{0, lineno, 1});
  }
  for (std::size_t m = 0; m < seen.size(); ++m) {
    if (!seen[m]) {
      throw ParseError("map table missing entry for source mask " + std::to_string(m),
                       SourcePos{0, lineno, 1});
    }
  }
  return mt;
}

std::string render_map_table(const TabulatedMap& map) {
  std::string out = "source:";
  for (const auto& a : map.source()->atoms()) out += " " + a;
  out += "\ntarget:";
  for (const auto& a : map.target()->atoms()) out += " " + a;
  out += "\n";
  for (std::uint32_t m = 0; m < map.table().size(); ++m) {
    out += std::to_string(m) + " -> " + std::to_string(map.table()[m]) + "\n";
  }
  return out;
}

}  // namespace agc
