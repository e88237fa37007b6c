#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ideal24/error.hpp"
#include "ideal24/oct_complex.hpp"
#include "ideal24/script.hpp"
#include "test_support.hpp"

using namespace ideal24;
using namespace ideal24::testing;

namespace {

// component ids are ordered by smallest facet: A has X = 0, Y = 1; D has B1 = 3
constexpr int kX = 0, kY = 1, kB1 = 3, kB2 = 2;

std::string alias_of(const ConstructionScript& s, int vertex) {
  const CuspLabel l = canonical_cusp_label(cell24().vertices[vertex]);
  for (const auto& a : s.aliases)
    if (std::find(a.labels.begin(), a.labels.end(), l) != a.labels.end()) return a.name;
  return "?";
}

int oct_of(const OctComplex& oc, const FacetSlot& s) {
  const auto it = std::find(oc.slots.begin(), oc.slots.end(), s);
  REQUIRE(it != oc.slots.end());
  return static_cast<int>(it - oc.slots.begin());
}

// independent check that iso carries every gluing of x onto a gluing of y
bool carries_gluings(const OctComplex& x, const OctComplex& y, const Automorphism3& iso) {
  for (int a = 0; a < x.size(); ++a)
    for (int t = 0; t < 8; ++t) {
      const auto& g = x.glue_at(a, t);
      if (!g) continue;
      const auto& h = y.glue_at(iso.oct_image[a], iso.maps[a].triangle(t));
      if (!h || h->target != iso.oct_image[g->target] ||
          h->target_triangle != iso.maps[g->target].triangle(g->target_triangle))
        return false;
      if (h->map.compose(iso.maps[a]) != iso.maps[g->target].compose(g->map)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("octahedron symmetries") {
  CHECK(oct_symmetries().size() == 48);
  CHECK(oct_edges().size() == 12);
  CHECK_FALSE(OctSym::from_images({0, 2, 1, 3, 4, 5}));
  for (const auto& s : oct_symmetries())
    for (int t = 0; t < 8; ++t) {
      auto v = oct_triangle_vertices(t);
      CHECK(s.triangle(t) == oct_triangle_of(s.vertex(v[0]), s.vertex(v[1]), s.vertex(v[2])));
    }
}

TEST_CASE("boundary complexes of A") {
  const auto qc = preset_quotient("A");
  for (int c : {kX, kY}) {
    const auto oc = boundary_complex(qc, c);
    CHECK(oc.size() == 4);
    int glued = 0;
    for (int a = 0; a < 4; ++a)
      for (int t = 0; t < 8; ++t) glued += oc.glue_at(a, t).has_value();
    CHECK(glued / 2 == 16);
    const auto r = verify_octahedral(oc);
    CHECK(r.ok);
    for (int len : r.edge_class_lengths) CHECK(len == 4);
    for (int chi : r.vertex_link_euler) CHECK(chi == 0);
    CHECK(cusp_count3(oc) == 6);
    // checkerboard: triangles sharing an edge in one octahedron get different colours
    for (int a = 0; a < 4; ++a)
      for (int t = 0; t < 8; ++t)
        for (int k = 0; k < 3; ++k) CHECK(oc.triangle_colors[a][t] != oc.triangle_colors[a][t ^ (1 << k)]);
  }
  try {
    boundary_complex(preset_quotient("G"), 0);
    FAIL("expected NoBoundary");
  } catch (const EngineError& e) {
    CHECK(e.code() == ErrorCode::NoBoundary);
  }
}

TEST_CASE("boundary complexes of D") {
  const auto qc = preset_quotient("D");
  const auto b1 = boundary_complex(qc, kB1);
  CHECK(b1.size() == 4);
  std::set<int> facets;
  for (const auto& s : b1.slots) facets.insert(s.facet);
  CHECK(facets.size() == 2);  // one opposite pair of facets, once in each copy
  for (int c = 0; c < 4; ++c) {
    const auto oc = boundary_complex(qc, c);
    CHECK(verify_octahedral(oc).ok);
    CHECK(cusp_count3(oc) == 6);
  }
  CHECK(cusp_count3(boundary_complex(qc, kB2)) == 6);
}

TEST_CASE("vertex structure of the octahedra of A") {
  const auto s = preset("A");
  const auto qc = build_quotient(compile_script(s));
  const std::map<int, std::set<std::set<std::string>>> expect{
      {kX, {{"m1", "m2"}, {"a", "d"}, {"b", "c"}}}, {kY, {{"n1", "n2"}, {"a", "d"}, {"b", "c"}}}};
  for (const auto& [c, pairs] : expect) {
    const auto oc = boundary_complex(qc, c);
    for (int a = 0; a < oc.size(); ++a) {
      std::set<std::set<std::string>> got;
      for (int k = 0; k < 3; ++k)
        got.insert({alias_of(s, oc.local_vertices[a][2 * k]), alias_of(s, oc.local_vertices[a][2 * k + 1])});
      CHECK(got == pairs);
    }
  }
}

TEST_CASE("edge classes of the wrong length are reported") {
  // the double of the octahedron: every edge lies in just two octahedra
  OctComplex oc(2);
  for (int t = 0; t < 8; ++t) oc.glue(0, t, 1, t, OctSym{});
  const auto r = verify_octahedral(oc);
  CHECK_FALSE(r.ok);
  CHECK(r.edge_classes == 12);
  CHECK(std::count(r.edge_class_lengths.begin(), r.edge_class_lengths.end(), 2) == 12);

  OctComplex open(1);
  CHECK_FALSE(verify_octahedral(open).ok);
}

TEST_CASE("automorphism groups have order 192 and are groups") {
  for (const auto& [name, comp] : std::vector<std::pair<std::string, int>>{{"A", kX}, {"A", kY}, {"D", kB1}}) {
    CAPTURE(name);
    const auto oc = boundary_complex(preset_quotient(name), comp);
    const auto g = automorphism_group(oc);
    REQUIRE(g.size() == 192);
    const std::set<Automorphism3> s(g.begin(), g.end());
    CHECK(s.size() == 192);
    CHECK(s.count(Automorphism3::identity(4)));
    for (const auto& a : g) {
      CHECK(s.count(a.inverse()));
      CHECK(carries_gluings(oc, oc, a));
      for (const auto& b : g) CHECK(s.count(a.compose(b)));
    }
  }
}

TEST_CASE("automorphisms permute ideal-vertex classes") {
  const auto oc = boundary_complex(preset_quotient("A"), kX);
  const auto cls = ideal_vertex_classes(oc);
  for (const auto& a : automorphism_group(oc)) {
    std::map<int, int> induced;
    bool consistent = true;
    for (int o = 0; o < 4; ++o)
      for (int v = 0; v < 6; ++v) {
        const int from = cls[o][v], to = cls[a.oct_image[o]][a.maps[o].vertex(v)];
        const auto [it, fresh] = induced.emplace(from, to);
        consistent = consistent && (fresh || it->second == to);
      }
    CHECK(consistent);
    std::set<int> images;
    for (const auto& [k, v] : induced) images.insert(v);
    CHECK(images.size() == 6);
  }
}

TEST_CASE("single self-glued octahedron") {
  // mirror in the plane swapping vertices 0 and 1 glues each triangle to its neighbour
  OctComplex oc(1);
  const auto mirror = *OctSym::from_images({1, 0, 2, 3, 4, 5});
  for (int t = 0; t < 8; ++t)
    if (!(t & 1)) oc.glue(0, t, 0, t ^ 1, mirror);
  const auto g = automorphism_group(oc);
  int centralizer = 0;
  for (const auto& s : oct_symmetries()) centralizer += s.compose(mirror) == mirror.compose(s);
  CHECK(static_cast<int>(g.size()) == centralizer);
  const std::set<Automorphism3> set(g.begin(), g.end());
  for (const auto& a : g)
    for (const auto& b : g) CHECK(set.count(a.compose(b)));
}

TEST_CASE("induced W and V and the exact sequence") {
  SUBCASE("A, X: W antipodal, V = H") {
    const auto qc = preset_quotient("A");
    const auto oc = boundary_complex(qc, kX);
    const auto w = induced_boundary_automorphism(qc, Isometry::antipodal(), kX);
    const auto v = induced_boundary_automorphism(qc, map_h(), kX);
    CHECK_FALSE(w.is_identity());
    CHECK_FALSE(v.is_identity());
    // W swaps each octahedron with its opposite
    for (int a = 0; a < 4; ++a) {
      const int opp = cell24().facet_index(facet_image(Isometry::antipodal(), cell24().facets[oc.slots[a].facet]));
      CHECK(oc.slots[w.oct_image[a]].facet == opp);
    }
    const auto r = verify_exact_sequence(automorphism_group(oc), w, v);
    CHECK(r.ok);
    CHECK(r.group_order == 192);
    CHECK(r.kernel_order == 4);
    CHECK(r.stabilizer_order == 48);
    CHECK(r.involutions);
    CHECK(r.commute);
    CHECK(r.normal);
    CHECK(r.trivial_intersection);
  }
  SUBCASE("D, B1: the two mirror involutions") {
    const auto qc = preset_quotient("D");
    const auto oc = boundary_complex(qc, kB1);
    const auto w = induced_boundary_automorphism(qc, Isometry::antipodal(), kB1);
    const auto v = induced_boundary_automorphism(qc, Isometry::identity(), kB1, {1, 0});
    const auto r = verify_exact_sequence(automorphism_group(oc), w, v);
    CHECK(r.ok);
    CHECK(r.stabilizer_order == 48);
  }
  SUBCASE("W = V = id fails") {
    const auto oc = boundary_complex(preset_quotient("A"), kX);
    const auto id = Automorphism3::identity(4);
    const auto r = verify_exact_sequence(automorphism_group(oc), id, id);
    CHECK_FALSE(r.ok);
    CHECK(r.kernel_order == 1);
  }
  SUBCASE("a map into the other component") {
    const auto qc = preset_quotient("A");
    try {
      induced_boundary_automorphism(qc, parse_mapspec("x,w,z,y"), kX);
      FAIL("expected NotBoundaryPreserving");
    } catch (const EngineError& e) {
      CHECK(e.code() == ErrorCode::NotBoundaryPreserving);
    }
  }
}

TEST_CASE("seeded extension") {
  SUBCASE("phi of G extends X to Y") {
    const auto s = preset("G");
    const auto qc = build_quotient(compile_script(preset("A")));
    const auto x = boundary_complex(qc, kX), y = boundary_complex(qc, kY);
    const auto& st = std::get<BoundaryGlueStage>(s.stages.back());
    const OctSym seed = seed_symmetry(s, st);
    const int a = oct_of(x, st.seed_src), b = oct_of(y, st.seed_dst);
    const auto iso = extend_isometry(x, y, a, b, seed);
    CHECK(iso.oct_image[a] == b);
    CHECK(iso.maps[a] == seed);
    CHECK(std::set<int>(iso.oct_image.begin(), iso.oct_image.end()).size() == 4);
    CHECK(commutes_with_gluings(x, y, iso));
    CHECK(carries_gluings(x, y, iso));
  }
  SUBCASE("phi1 and phi2 of H extend") {
    const auto s = preset("H");
    const auto qc = build_quotient(compile_script(preset("D")));
    for (const auto& stage : s.stages) {
      const auto* st = std::get_if<BoundaryGlueStage>(&stage);
      if (!st) continue;
      const auto x = boundary_complex(qc, st->src), y = boundary_complex(qc, st->dst);
      const auto iso = extend_isometry(x, y, oct_of(x, st->seed_src), oct_of(y, st->seed_dst), seed_symmetry(s, *st));
      CHECK(carries_gluings(x, y, iso));
      CHECK(commutes_with_gluings(x, y, iso));
    }
  }
  SUBCASE("a seed sending adjacent vertices to opposite ones fails") {
    auto s = preset("G");
    auto& st = std::get<BoundaryGlueStage>(s.stages.back());
    // m1, m2 are opposite in X but b, d are not opposite in Y
    st.vertices[1].second = "d";
    st.vertices[2].second = "c";
    try {
      seed_symmetry(s, st);
      FAIL("expected SeedDoesNotExtend");
    } catch (const EngineError& e) {
      CHECK(e.code() == ErrorCode::SeedDoesNotExtend);
    }
  }
  SUBCASE("every seed on X extends and respects gluings") {
    const auto qc = preset_quotient("A");
    const auto x = boundary_complex(qc, kX), y = boundary_complex(qc, kY);
    int extended = 0;
    for (int t = 0; t < 4; ++t)
      for (const auto& sym : oct_symmetries())
        if (const auto iso = try_extend(x, y, 0, t, sym)) {
          ++extended;
          CHECK(carries_gluings(x, y, *iso));
        }
    CHECK(extended == 192);
  }
}
