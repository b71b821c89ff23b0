#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "agc/algebra.hpp"
#include "agc/formula.hpp"
#include "agc/maps.hpp"

using namespace agc;

namespace {

AlgebraPtr make_xy(Backend b = Backend::Bitset) { return Algebra::make({"x", "y"}, b); }

// Independent subset model: elements as sets of atom names.
using AtomSet = std::set<std::string>;

AtomSet to_set(const Element& e) {
  AtomSet s;
  for (int i = 0; i < e.algebra()->atom_count(); ++i) {
    if (e.bit(i)) s.insert(e.algebra()->atom_name(i));
  }
  return s;
}

AtomSet set_meet(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  for (const auto& x : a) {
    if (b.count(x)) out.insert(x);
  }
  return out;
}

AtomSet set_join(const AtomSet& a, const AtomSet& b) {
  AtomSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

AtomSet set_complement(const AlgebraPtr& alg, const AtomSet& a) {
  AtomSet out;
  for (const auto& name : alg->atoms()) {
    if (!a.count(name)) out.insert(name);
  }
  return out;
}

}  // namespace

TEST_CASE("algebra construction validates atoms") {
  CHECK_THROWS_AS(Algebra::make({}), Error);
  CHECK_THROWS_AS(Algebra::make({"x", "x"}), Error);
  CHECK_THROWS_AS(Algebra::make({""}), Error);
  CHECK_THROWS_AS(Algebra::make({"a", "b", "c"}, Backend::Bitset, 2), TooLargeError);
  {
    // Default cap is 16 atoms (carrier 65536); 17 is over, and raising the
    // cap past the mask width is still rejected.
    std::vector<std::string> many;
    for (int i = 0; i < 17; ++i) many.push_back("a" + std::to_string(i));
    CHECK_THROWS_AS(Algebra::make(many), TooLargeError);
    many.pop_back();
    AlgebraPtr wide = Algebra::make(many);
    CHECK(wide->carrier_size() == 65536);
    std::vector<std::string> too_wide;
    for (int i = 0; i < 32; ++i) too_wide.push_back("b" + std::to_string(i));
    CHECK_THROWS_AS(Algebra::make(too_wide, Backend::Bitset, 64), TooLargeError);
  }
  AlgebraPtr alg = Algebra::make({"a", "b", "c"});
  CHECK(alg->atom_count() == 3);
  CHECK(alg->carrier_size() == 8);
  CHECK(alg->atom_index("b") == 1);
  CHECK(alg->atom_index("z") == -1);
}

TEST_CASE("meet examples") {
  AlgebraPtr alg = make_xy();
  Element x = Element::atom(alg, 0);
  Element y = Element::atom(alg, 1);
  Element xy = x | y;
  CHECK(meet(x, xy) == x);                    // absorption
  CHECK(meet(x, y) == Element::bottom(alg));  // disjoint atoms
}

TEST_CASE("top is the unit of meet, exhaustively against the subset oracle") {
  AlgebraPtr alg = Algebra::make({"a", "b", "c", "d"});
  Element top = Element::top(alg);
  for (std::uint32_t m = 0; m < alg->carrier_size(); ++m) {
    Element v = Element::from_mask(alg, m);
    CHECK(meet(top, v) == v);
    CHECK(to_set(meet(top, v)) == set_meet(to_set(top), to_set(v)));
  }
}

TEST_CASE("join, complement and implies basics") {
  AlgebraPtr alg = make_xy();
  Element x = Element::atom(alg, 0);
  Element y = Element::atom(alg, 1);
  CHECK(implies(Element::bottom(alg), y) == Element::top(alg));  // ex falso
  CHECK(complement(complement(x)) == x);                         // involution
  // implies({x}, {y}) = {y} | !{x} = {y} over atoms {x, y}
  CHECK(implies(x, y) == y);
  CHECK(to_set(implies(x, y)) == set_join(to_set(y), set_complement(alg, to_set(x))));
}

TEST_CASE("leq is subset inclusion, exhaustively at 4 atoms") {
  AlgebraPtr alg = Algebra::make({"a", "b", "c", "d"});
  CHECK(leq(Element::bottom(alg), Element::top(alg)));
  for (std::uint32_t m = 0; m < alg->carrier_size(); ++m) {
    for (std::uint32_t k = 0; k < alg->carrier_size(); ++k) {
      Element v = Element::from_mask(alg, m);
      Element w = Element::from_mask(alg, k);
      CHECK(leq(v, w) == ((m & ~k) == 0));
      CHECK(leq(v, w) == (meet(v, complement(w)) == Element::bottom(alg)));
    }
  }
  AlgebraPtr xy = make_xy();
  CHECK(!leq(Element::atom(xy, 0), Element::atom(xy, 1)));
}

TEST_CASE("boolean algebra axioms hold exhaustively up to 4 atoms") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    AlgebraPtr alg = Algebra::make(atoms);
    const std::uint32_t size = alg->carrier_size();
    for (std::uint32_t mx = 0; mx < size; ++mx) {
      Element x = Element::from_mask(alg, mx);
      CHECK(join(x, complement(x)) == Element::top(alg));
      CHECK(meet(x, complement(x)) == Element::bottom(alg));
      for (std::uint32_t my = 0; my < size; ++my) {
        Element y = Element::from_mask(alg, my);
        CHECK(complement(meet(x, y)) == join(complement(x), complement(y)));
        CHECK(complement(join(x, y)) == meet(complement(x), complement(y)));
        for (std::uint32_t mz = 0; mz < size; ++mz) {
          Element z = Element::from_mask(alg, mz);
          CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
          CHECK(join(x, meet(y, z)) == meet(join(x, y), join(x, z)));
        }
      }
    }
  }
}

TEST_CASE("formula and bitset backends agree on every operation") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    AlgebraPtr bit = Algebra::make(atoms, Backend::Bitset);
    AlgebraPtr form = Algebra::make(atoms, Backend::Formula);
    const std::uint32_t size = bit->carrier_size();
    for (std::uint32_t mx = 0; mx < size; ++mx) {
      Element bx = Element::from_mask(bit, mx);
      Element fx = Element::from_mask(form, mx);
      CHECK(complement(bx).mask() == complement(fx).mask());
      for (std::uint32_t my = 0; my < size; ++my) {
        Element by = Element::from_mask(bit, my);
        Element fy = Element::from_mask(form, my);
        CHECK(meet(bx, by).mask() == meet(fx, fy).mask());
        CHECK(join(bx, by).mask() == join(fx, fy).mask());
        CHECK(implies(bx, by).mask() == implies(fx, fy).mask());
        CHECK(leq(bx, by) == leq(fx, fy));
      }
    }
  }
}

TEST_CASE("mixed algebras are rejected") {
  AlgebraPtr a = make_xy();
  AlgebraPtr b = make_xy();  // same atoms, distinct algebra
  CHECK_THROWS_AS(meet(Element::top(a), Element::top(b)), MixedAlgebraError);
  CHECK_THROWS_AS(join(Element::top(a), Element::bottom(b)), MixedAlgebraError);
  CHECK_THROWS_AS(implies(Element::top(a), Element::top(b)), MixedAlgebraError);
  CHECK_THROWS_AS(leq(Element::top(a), Element::top(b)), MixedAlgebraError);
  CHECK(Element::top(a) != Element::top(b));
}

TEST_CASE("parse_formula constants and atoms") {
  AlgebraPtr alg = make_xy();
  CHECK(parse_formula("true", alg) == Element::top(alg));
  CHECK(parse_formula("false", alg) == Element::bottom(alg));
  CHECK(parse_formula("x | y", alg) == Element::top(alg));
  CHECK(parse_formula("x & y", alg) == Element::bottom(alg));
  // !(x & y) = !bottom = top since {x} meet {y} is empty
  CHECK(parse_formula("!(x & y)", alg) == Element::top(alg));
  CHECK(parse_formula("x -> y", alg) == Element::atom(alg, 1));
  CHECK(parse_formula("x <-> y", alg) == Element::bottom(alg));
  CHECK(parse_formula("x <-> x", alg) == Element::top(alg));
}

TEST_CASE("parse_formula precedence and associativity") {
  AlgebraPtr alg = Algebra::make({"x", "y", "z"});
  // ! binds tighter than &, & tighter than |, | tighter than ->.
  CHECK(parse_formula("!x & y | z", alg) == parse_formula("((!x) & y) | z", alg));
  CHECK(parse_formula("x -> y -> z", alg) == parse_formula("x -> (y -> z)", alg));
  CHECK(parse_formula("x | y -> z", alg) == parse_formula("(x | y) -> z", alg));
  CHECK(parse_formula("x <-> y -> z", alg) == parse_formula("x <-> (y -> z)", alg));
}

TEST_CASE("parse_formula error positions") {
  AlgebraPtr alg = make_xy();
  try {
    parse_formula("x & (y | ", alg);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.pos.line == 1);
    CHECK(e.pos.column == 10);
  }
  try {
    parse_formula("x & q", alg);
    FAIL("expected UnknownAtomError");
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom == "q");
    CHECK(e.pos.column == 5);
  }
  CHECK_THROWS_AS(parse_formula("x y", alg), ParseError);  // trailing input
  CHECK_THROWS_AS(parse_formula("x <- y", alg), ParseError);
  CHECK_THROWS_AS(parse_formula("", alg), ParseError);
}

TEST_CASE("render_dnf round-trips through the parser") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    for (Backend backend : {Backend::Bitset, Backend::Formula}) {
      AlgebraPtr alg = Algebra::make(atoms, backend);
      for (std::uint32_t m = 0; m < alg->carrier_size(); ++m) {
        Element v = Element::from_mask(alg, m);
        CHECK(parse_formula(render_dnf(v), alg) == v);
      }
    }
  }
  AlgebraPtr alg = make_xy();
  CHECK(render_dnf(Element::bottom(alg)) == "false");
  CHECK(render_dnf(Element::atom(alg, 0)) == "(x & !y)");
  CHECK(render_dnf(Element::top(alg)) == "(x & !y) | (!x & y)");
}

TEST_CASE("algebra hom accepts the identity and rejects broken tables") {
  AlgebraPtr alg = make_xy();
  AlgebraHom id = AlgebraHom::identity(alg);
  for (std::uint32_t m = 0; m < alg->carrier_size(); ++m) {
    CHECK(id.apply_mask(m) == m);
  }

  // Constant-top map: breaks bottom preservation.
  std::vector<std::uint32_t> const_top(alg->carrier_size(), alg->full_mask());
  try {
    AlgebraHom::make(alg, alg, const_top);
    FAIL("expected MapLawError");
  } catch (const MapLawError& e) {
    CHECK(e.law == "bottom preservation");
  }

  // Swap of the two atoms without fixing meet/join tables accordingly is
  // fine; swapping only one pair of carrier entries is not.
  CHECK_THROWS_AS(AlgebraHom::make(alg, alg, {0, 1, 2, 0}), MapLawError);

  // A projection onto the first atom is a proper hom to the 1-atom algebra.
  AlgebraPtr one = Algebra::make({"z"});
  AlgebraHom p = AlgebraHom::make(alg, one, {0, 1, 0, 1});
  CHECK(p.apply(Element::atom(alg, 0)) == Element::top(one));

  AlgebraHom swap = AlgebraHom::atom_permutation(alg, alg, {1, 0});
  CHECK(swap.apply(Element::atom(alg, 0)) == Element::atom(alg, 1));
}

TEST_CASE("monotone map flags are computed, not enforced") {
  AlgebraPtr xy = make_xy();
  AlgebraPtr z = Algebra::make({"z"});

  // Atom collapse {x},{y},{x,y} -> {z}; empty -> empty.
  MonotoneMap collapse = MonotoneMap::make(xy, z, {0, 1, 1, 1});
  CHECK(collapse.monotone());
  CHECK(collapse.join_preserving());
  CHECK(collapse.top_preserving());

  // Complement is antitone.
  MonotoneMap neg = MonotoneMap::make(xy, xy, {3, 2, 1, 0});
  CHECK(!neg.monotone());

  // Collapse everything to bottom: monotone and join-preserving, not top.
  MonotoneMap to_bottom = MonotoneMap::make(xy, z, {0, 0, 0, 0});
  CHECK(to_bottom.monotone());
  CHECK(to_bottom.join_preserving());
  CHECK(!to_bottom.top_preserving());

  // Monotone but not join-preserving: both atoms to bottom, top to top.
  MonotoneMap lumpy = MonotoneMap::make(xy, xy, {0, 0, 0, 3});
  CHECK(lumpy.monotone());
  CHECK(!lumpy.join_preserving());
}

TEST_CASE("meet-top maps from coatom images") {
  AlgebraPtr alg = make_xy();
  MeetTopMap id = MeetTopMap::identity(alg);
  CHECK(id.apply_mask(2) == 2);
  MeetTopMap top = MeetTopMap::constant_top(alg, alg);
  CHECK(top.apply_mask(0) == alg->full_mask());
  // Images of the two coatoms determine the map on all four elements.
  MeetTopMap built = MeetTopMap::from_coatom_images(alg, alg, {2, 1});
  CHECK(built.apply_mask(alg->full_mask()) == alg->full_mask());
  CHECK(built.apply_mask(2) == 2);  // excludes atom 0 -> image of coatom 0
  CHECK(built.apply_mask(1) == 1);
  CHECK(built.apply_mask(0) == 0);  // meet of both images
  for (std::uint32_t x = 0; x < alg->carrier_size(); ++x) {
    for (std::uint32_t y = 0; y < alg->carrier_size(); ++y) {
      CHECK(built.apply_mask(x & y) == (built.apply_mask(x) & built.apply_mask(y)));
    }
  }
  CHECK_THROWS_AS(MeetTopMap::make(alg, alg, {0, 1, 2, 0}), MapLawError);
}

TEST_CASE("map table text format round-trips") {
  AlgebraPtr xy = make_xy();
  AlgebraPtr z = Algebra::make({"z"});
  MonotoneMap collapse = MonotoneMap::make(xy, z, {0, 1, 1, 1});
  std::string text = render_map_table(collapse);
  MapTable parsed = parse_map_table(text);
  CHECK(parsed.source_atoms == std::vector<std::string>{"x", "y"});
  CHECK(parsed.target_atoms == std::vector<std::string>{"z"});
  CHECK(parsed.entries == collapse.table());

  MonotoneMap again = MonotoneMap::make(Algebra::make(parsed.source_atoms),
                                        Algebra::make(parsed.target_atoms), parsed.entries);
  CHECK(again.join_preserving());

  CHECK_THROWS_AS(parse_map_table("source: x\n0 -> 0\n"), ParseError);             // no target
  CHECK_THROWS_AS(parse_map_table("source: x\ntarget: z\n0 -> 0\n"), ParseError);  // missing 1
  CHECK_THROWS_AS(parse_map_table("source: x\ntarget: z\n0 -> 0\n0 -> 1\n1 -> 1\n"),
                  ParseError);  // duplicate
  CHECK_THROWS_AS(parse_map_table("source: x\ntarget: z\n0 -> 7\n1 -> 1\n"),
                  ParseError);  // out of range
}
