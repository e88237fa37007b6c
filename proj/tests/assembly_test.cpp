#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ideal24/error.hpp"
#include "test_support.hpp"

using namespace ideal24;
using namespace ideal24::testing;

namespace {

int count_color(const PairingTable& t, Color c) {
  int n = 0;
  for (const auto& p : t.pairings())
    if (cell24().color(p.source.facet) == c) ++n;
  return n;
}

}  // namespace

TEST_CASE("every preset compiles to a valid table") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto t = preset_table(name);
    CHECK(validate_table(t).valid());
    for (const auto& p : t.pairings()) {
      CHECK(facet_image(p.map, cell24().facets[p.source.facet]) == cell24().facets[p.target.facet]);
      const Pairing* back = t.find(p.target);
      REQUIRE(back);
      CHECK(back->target == p.source);
      CHECK(back->map == p.map.inverse());
    }
  }
}

TEST_CASE("compile A: green by antipodal, red by H, blue unpaired") {
  const auto t = preset_table("A");
  CHECK(count_color(t, Color::Green) == 8);
  CHECK(count_color(t, Color::Red) == 8);
  CHECK(count_color(t, Color::Blue) == 0);
  for (const auto& p : t.pairings())
    CHECK(p.map == (cell24().color(p.source.facet) == Color::Green ? Isometry::antipodal() : map_h()));
  const auto qc = build_quotient(t);
  CHECK(qc.unpaired().size() == 8);
}

TEST_CASE("compile G and H: every facet paired") {
  const auto g = build_quotient(preset_table("G"));
  CHECK(g.unpaired().empty());
  CHECK(g.table().pairings().size() == 24);
  const auto h = build_quotient(preset_table("H"));
  CHECK(h.unpaired().empty());
  CHECK(h.table().pairings().size() == 48);
}

TEST_CASE("empty script") {
  ConstructionScript s;
  const auto t = compile_script(s);
  CHECK(t.pairings().empty());
  const auto qc = build_quotient(t);
  CHECK(qc.unpaired().size() == 24);
  CHECK(qc.orbit_count(0) == 24);
  const auto ridges = ridge_check(qc);
  CHECK(ridges.size() == 96);
  for (const auto& r : ridges) {
    CHECK(r.kind == RidgeClassReport::Kind::BoundaryChain);
    CHECK(r.length == 1);
    CHECK_FALSE(r.ok);
  }
}

TEST_CASE("compile errors") {
  SUBCASE("double pairing") {
    ConstructionScript s;
    s.stages.push_back(PairExplicitStage{{{{0, 0}, {0, 1}, Isometry::identity()}}});
    CHECK_THROWS_AS(compile_script(s), EngineError);
  }
  SUBCASE("colour scope empty") {
    auto s = preset("A");
    s.stages.push_back(PairColorStage{std::nullopt, Color::Green, Isometry::antipodal(), std::nullopt});
    try {
      compile_script(s);
      FAIL("expected ColorScopeEmpty");
    } catch (const EngineError& e) {
      CHECK(e.code() == ErrorCode::ColorScopeEmpty);
    }
  }
  SUBCASE("seed that is not an octahedral map") {
    auto text = preset_text("G");
    text.replace(text.find("m1:b"), 4, "m1:a");
    try {
      compile_script(parse_construction(text));
      FAIL("expected SeedDoesNotExtend");
    } catch (const EngineError& e) {
      CHECK(e.code() == ErrorCode::SeedDoesNotExtend);
    }
  }
}

TEST_CASE("validate_table counterexamples") {
  const auto& m = cell24();
  const int x1p = m.facet_index(FacetLabel::green(0, 1));
  const int x1m = m.facet_index(FacetLabel::green(0, -1));
  PairingTable dbl(1);
  dbl.add_raw({{0, x1p}, {0, x1m}, Isometry::antipodal()});
  dbl.add_raw({{0, x1m}, {0, x1p}, Isometry::antipodal()});
  dbl.add_raw({{0, x1p}, {0, x1m}, Isometry::antipodal()});
  CHECK(validate_table(dbl).has(Violation::DoublePairing));

  PairingTable fixed(1);
  fixed.add_raw({{0, x1p}, {0, x1p}, Isometry::identity()});
  CHECK(validate_table(fixed).has(Violation::FixedPointOnFacet));

  PairingTable missing(1);
  missing.add_raw({{0, x1p}, {0, x1m}, Isometry::antipodal()});
  CHECK(validate_table(missing).has(Violation::MissingInverse));

  CHECK(validate_table(preset_table("A")).valid());
}

TEST_CASE("vertex orbits") {
  CHECK(preset_quotient("C_mod_antipodal").orbit_count(0) == 12);
  CHECK(preset_quotient("D").orbit_count(0) == 12);
  CHECK(cusp_classes(preset_quotient("G")).size() == 2);
  CHECK(cusp_classes(preset_quotient("H")).size() == 1);
}

TEST_CASE("ridge_check") {
  SUBCASE("G: 96 corners in interior 4-cycles with identity return") {
    const auto r = ridge_check(preset_quotient("G"));
    CHECK(r.size() == 24);
    int corners = 0;
    for (const auto& c : r) {
      CHECK(c.kind == RidgeClassReport::Kind::InteriorCycle);
      CHECK(c.length == 4);
      REQUIRE(c.return_map);
      CHECK(c.return_map->is_identity());
      corners += c.length;
    }
    CHECK(corners == 96);
  }
  SUBCASE("A: blue triangles lie on boundary chains of length 2") {
    const auto qc = preset_quotient("A");
    const auto r = ridge_check(qc);
    CHECK(ridges_ok(r));
    for (const auto& c : r) {
      bool touches_blue = false;
      for (const auto& k : c.corners)
        for (int f : cell24().triangle_facets[k.triangle]) touches_blue |= cell24().color(f) == Color::Blue;
      CHECK(touches_blue == (c.kind == RidgeClassReport::Kind::BoundaryChain));
      if (touches_blue) CHECK(c.length == 2);
    }
  }
  SUBCASE("corner conservation") {
    for (const auto& name : preset_names()) {
      const auto qc = preset_quotient(name);
      int corners = 0;
      for (const auto& c : ridge_check(qc)) corners += c.length;
      CHECK(corners == 96 * qc.copies());
    }
  }
}

TEST_CASE("boundary_strata") {
  const auto a = boundary_strata(preset_quotient("A"));
  REQUIRE(a.size() == 2);
  for (const auto& c : a) {
    CHECK(c.facets.size() == 4);
    for (const auto& f : c.facets) CHECK(cell24().color(f.facet) == Color::Blue);
  }
  // X holds (+,+,+,-), Y holds (+,-,+,+)
  const int xf = cell24().facet_index(FacetLabel::parse("+++-"));
  const int yf = cell24().facet_index(FacetLabel::parse("+-++"));
  CHECK(component_of(a, {0, xf}) == 0);
  CHECK(component_of(a, {0, yf}) == 1);

  const auto d = boundary_strata(preset_quotient("D"));
  REQUIRE(d.size() == 4);
  for (const auto& c : d) {
    CHECK(c.facets.size() == 4);
    // {O1, O2, -O1, -O2}
    for (const auto& f : c.facets) {
      const int opp = cell24().facet_index(facet_image(Isometry::antipodal(), cell24().facets[f.facet]));
      CHECK(std::count(c.facets.begin(), c.facets.end(), FacetSlot{f.copy, opp}) == 1);
    }
  }
  CHECK(boundary_strata(preset_quotient("G")).empty());
}

TEST_CASE("orientability") {
  CHECK(orientability(preset_quotient("C_mod_antipodal")) == Orientability::NonOrientable);
  CHECK(orientability(preset_quotient("S")) == Orientability::Orientable);
  CHECK(orientability(preset_quotient("H")) == Orientability::NonOrientable);
  CHECK(orientability(preset_quotient("G")) == Orientability::NonOrientable);
  for (const auto& name : {"S", "D", "H"}) {
    const auto t = preset_table(name);
    CHECK(orientability(build_quotient(permute_copies(t, reversed_copies(t.copies())))) ==
          orientability(build_quotient(t)));
  }
}

TEST_CASE("cusp members cover every vertex") {
  for (const auto& name : preset_names()) {
    const auto qc = preset_quotient(name);
    std::size_t members = 0;
    for (const auto& c : cusp_classes(qc)) members += c.members.size();
    CHECK(members == 24u * qc.copies());
  }
  std::multiset<std::size_t> sizes;
  for (const auto& c : cusp_classes(preset_quotient("A"))) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 2, 2, 4, 4, 4, 4});
  for (const auto& c : cusp_classes(preset_quotient("G"))) CHECK(c.members.size() == 12);
  CHECK(cusp_classes(preset_quotient("H")).front().members.size() == 48);
}

TEST_CASE("volume_multiple") {
  CHECK(volume_multiple(preset_quotient("G")) == 1);
  CHECK(volume_multiple(preset_quotient("H")) == 2);
  try {
    volume_multiple(preset_quotient("A"));
    FAIL("expected HasBoundary");
  } catch (const EngineError& e) {
    CHECK(e.code() == ErrorCode::HasBoundary);
  }
}

TEST_CASE("orientation double cover") {
  const auto g = preset_quotient("G");
  const auto cover = orientation_double_cover(g);
  CHECK(cover.copies() == 2);
  CHECK(orientability(cover) == Orientability::Orientable);
  CHECK(cusp_classes(cover).size() == 2);
  CHECK(ridges_ok(ridge_check(cover)));
  for (const auto& name : {"A", "D", "C_mod_antipodal"}) {
    const auto qc = preset_quotient(name);
    const auto c = orientation_double_cover(qc);
    CHECK(orientability(c) == Orientability::Orientable);
    CHECK(ridges_ok(ridge_check(c)) == ridges_ok(ridge_check(qc)));
  }
  try {
    orientation_double_cover(preset_quotient("S"));
    FAIL("expected AlreadyOrientable");
  } catch (const EngineError& e) {
    CHECK(e.code() == ErrorCode::AlreadyOrientable);
  }
}
