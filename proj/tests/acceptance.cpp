// Acceptance run: one line per criterion, with wall time against its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ideal24/census.hpp"
#include "ideal24/complex_models.hpp"
#include "ideal24/construction_file.hpp"
#include "ideal24/cube_complex.hpp"
#include "ideal24/error.hpp"
#include "ideal24/oct_complex.hpp"
#include "ideal24/pipeline.hpp"

#ifndef IDEAL24_CENSUS_DIR
#define IDEAL24_CENSUS_DIR "census"
#endif

using namespace ideal24;

namespace {

/// Collects failed expectations for one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

AbelianGroup group(int rank, std::vector<int> torsion) {
  AbelianGroup g;
  g.rank = rank;
  for (int t : torsion) g.torsion.push_back(t);
  return g;
}

const int kX = 0, kY = 1, kB1 = 3;

QuotientComplex quotient_of(const std::string& name) { return build_quotient(compile_script(preset(name))); }

void ridge_cycles_ok(Probe& p, const QuotientComplex& qc) {
  for (const auto& r : ridge_check(qc)) {
    p.expect(r.kind == RidgeClassReport::Kind::InteriorCycle, "ridge orbit " + std::to_string(r.orbit) + " is a chain");
    p.expect(r.length == 4, "ridge cycle of length " + std::to_string(r.length));
    p.expect(r.return_map && r.return_map->is_identity(), "ridge cycle with nontrivial return");
  }
}

void criterion1(Probe& p) {
  const auto& m = cell24();
  p.expect(m.count(0) == 24 && m.count(1) == 96 && m.count(2) == 96 && m.count(3) == 24, "cell counts");
  std::array<int, 3> colors{};
  for (int f = 0; f < 24; ++f) ++colors[static_cast<int>(m.color(f))];
  p.expect(colors == std::array<int, 3>{8, 8, 8}, "8 facets per color");
  for (const auto& tf : m.triangle_facets) p.expect(m.color(tf[0]) != m.color(tf[1]), "same-color adjacency");
  for (int v = 0; v < 24; ++v) {
    std::array<int, 3> c{};
    for (int f : m.vertex_facets[v]) ++c[static_cast<int>(m.color(f))];
    p.expect(m.vertex_facets[v].size() == 6 && c == std::array<int, 3>{2, 2, 2}, "vertex " + std::to_string(v));
  }
}

void criterion2(Probe& p) {
  const auto doc = run_verify(preset("G"));
  p.expect(doc.pass, "pipeline PASS");
  p.expect(doc.cusps.size() == 2, "2 cusps");
  p.expect(doc.volume_multiple == 1, "volume multiple 1");
  p.expect(doc.orientability == Orientability::NonOrientable, "non-orientable");
  ridge_cycles_ok(p, quotient_of("G"));
  for (const auto& c : doc.cusps) {
    p.expect(c.closed, "cusp closed");
    p.expect(c.orientability == Orientability::NonOrientable, "cusp non-orientable");
    p.expect(c.h1 == group(1, {4}), "cusp H1 " + c.h1.text());
    p.expect(c.classification == "B4", "cusp type " + c.classification);
  }
}

void criterion3(Probe& p) {
  const auto doc = run_verify(preset("G"), {true, false});
  p.expect(doc.double_cover && doc.double_cover->applicable && doc.double_cover->pass, "double cover built and passing");
  if (!doc.double_cover) return;
  const auto& dc = *doc.double_cover;
  p.expect(dc.orientability == Orientability::Orientable, "orientable");
  p.expect(dc.copies == 2, "volume multiple 2");
  p.expect(dc.cusps.size() == 2, "2 cusps");
  for (const auto& c : dc.cusps) {
    p.expect(c.h1 == group(1, {2, 2}), "cusp H1 " + c.h1.text());
    p.expect(c.classification == "G2", "cusp type " + c.classification);
  }
}

bool named(const CuspReport& c, char prefix) {
  return c.names.size() == 1 && c.names[0].size() == 2 && c.names[0][0] == prefix;
}

void criterion4(Probe& p) {
  const auto doc = run_verify(preset("A"));
  p.expect(doc.pass, "pipeline PASS");
  p.expect(doc.cusps.size() == 8, "8 cusps");
  std::multiset<int> cubes;
  std::map<std::string, int> types;
  for (const auto& c : doc.cusps) {
    cubes.insert(c.cubes);
    ++types[c.classification];
    if (c.classification == "TwistedIBundleOverKlein") p.expect(c.orientability == Orientability::Orientable, "twisted bundle orientable");
    if (c.classification == "MoebiusTimesCircle") p.expect(c.orientability == Orientability::NonOrientable, "Moebius x S1 non-orientable");
    std::set<int> comps;
    for (const auto& s : c.boundary_surfaces) comps.insert(s.component);
    if (named(c, 'm')) p.expect(comps == std::set<int>{kX}, "m-cusp surfaces on X");
    else if (named(c, 'n')) p.expect(comps == std::set<int>{kY}, "n-cusp surfaces on Y");
    else p.expect(c.boundary_surfaces.size() == 2 && comps == std::set<int>{kX, kY}, "non-mute cusp meets X and Y");
  }
  p.expect(cubes == std::multiset<int>{2, 2, 2, 2, 4, 4, 4, 4}, "cube counts");
  p.expect(types["TwistedIBundleOverKlein"] == 2 && types["MoebiusTimesCircle"] == 2 && types["TxI"] == 4, "cusp types");
  for (const auto& r : ridge_check(quotient_of("A")))
    if (r.kind == RidgeClassReport::Kind::BoundaryChain) p.expect(r.length == 2, "boundary chain length");
  p.expect(doc.boundary.size() == 2, "2 boundary components");
  for (const auto& b : doc.boundary) p.expect(b.octahedra == 4 && b.cusps == 6, "component of 4 octahedra, 6 cusps");
}

void criterion5(Probe& p) {
  const auto doc = run_verify(preset("D"));
  p.expect(doc.pass, "pipeline PASS");
  p.expect(doc.cusps.size() == 12, "12 cusps");
  for (const auto& c : doc.cusps) p.expect(c.classification == "TxI" && c.cubes == 4, "TxI of 4 cubes");
  p.expect(doc.boundary.size() == 4, "4 boundary components");
  for (const auto& b : doc.boundary) p.expect(b.octahedra == 4 && b.cusps == 6, "component of 4 octahedra, 6 cusps");
  const auto qc = quotient_of("D");
  for (int c = 0; c < 4; ++c)
    for (int len : verify_octahedral(boundary_complex(qc, c)).edge_class_lengths) p.expect(len == 4, "edge cycle length");
}

void criterion6(Probe& p) {
  const auto doc = run_verify(preset("H"));
  p.expect(doc.pass, "pipeline PASS");
  p.expect(doc.cusps.size() == 1, "1 cusp");
  p.expect(doc.volume_multiple == 2, "volume multiple 2");
  p.expect(doc.orientability == Orientability::NonOrientable, "non-orientable");
  for (const auto& c : doc.cusps) {
    p.expect(c.cubes == 48, "48 cubes");
    p.expect(c.closed, "closed");
    p.expect(c.orientability == Orientability::Orientable, "orientable section");
    p.expect(c.h1 == group(3, {}), "cusp H1 " + c.h1.text());
    p.expect(c.classification == "G1", "cusp type " + c.classification);
  }
}

void exact_sequence(Probe& p, const std::string& what, const OctComplex& oc, const Automorphism3& w,
                    const Automorphism3& v) {
  const auto r = verify_exact_sequence(automorphism_group(oc), w, v);
  p.expect(r.group_order == 192, what + ": |Aut| = " + std::to_string(r.group_order));
  p.expect(r.involutions && r.commute, what + ": W, V commuting involutions");
  p.expect(r.kernel_order == 4 && r.normal, what + ": normal Z2+Z2");
  p.expect(r.stabilizer_order == 48, what + ": stabilizer " + std::to_string(r.stabilizer_order));
  p.expect(r.ok, what + ": exact sequence");
}

void criterion7(Probe& p) {
  const auto a = quotient_of("A");
  exact_sequence(p, "X of A", boundary_complex(a, kX), induced_boundary_automorphism(a, Isometry::antipodal(), kX),
                 induced_boundary_automorphism(a, map_h(), kX));
  // D is two copies: the reflection in the common green facets is the copy swap
  const auto d = quotient_of("D");
  exact_sequence(p, "B1 of D", boundary_complex(d, kB1), induced_boundary_automorphism(d, Isometry::antipodal(), kB1),
                 induced_boundary_automorphism(d, Isometry::identity(), kB1, {1, 0}));
}

int slot_oct(const OctComplex& oc, const FacetSlot& s) {
  const auto it = std::find(oc.slots.begin(), oc.slots.end(), s);
  return it == oc.slots.end() ? -1 : static_cast<int>(it - oc.slots.begin());
}

void seeds_extend(Probe& p, const std::string& base, const std::string& glued) {
  const auto s = preset(glued);
  const auto qc = quotient_of(base);
  for (const auto& stage : s.stages) {
    const auto* st = std::get_if<BoundaryGlueStage>(&stage);
    if (!st) continue;
    const auto x = boundary_complex(qc, st->src), y = boundary_complex(qc, st->dst);
    const int a = slot_oct(x, st->seed_src), b = slot_oct(y, st->seed_dst);
    const OctSym seed = seed_symmetry(s, *st);
    const auto iso = try_extend(x, y, a, b, seed);
    p.expect(iso.has_value() && commutes_with_gluings(x, y, *iso), glued + ": seed extends");
    if (!iso) continue;
    // uniqueness: among all isomorphisms iso * g, exactly one carries the seed
    int matching = 0;
    for (const auto& g : automorphism_group(x)) {
      const auto h = iso->compose(g);
      matching += h.oct_image[a] == b && h.maps[a] == seed;
    }
    p.expect(matching == 1, glued + ": extension unique");
  }
}

void criterion8(Probe& p) {
  seeds_extend(p, "A", "G");
  seeds_extend(p, "D", "H");
  auto s = preset("G");
  auto& st = std::get<BoundaryGlueStage>(s.stages.back());
  st.vertices[1].second = "d";
  st.vertices[2].second = "c";
  bool rejected = false;
  try {
    seed_symmetry(s, st);
  } catch (const EngineError& e) {
    rejected = e.code() == ErrorCode::SeedDoesNotExtend;
  }
  p.expect(rejected, "adjacency-breaking seed rejected");
}

bool divides_chain(const SNFResult& r) {
  for (std::size_t i = 1; i < r.factors.size(); ++i)
    if (r.factors[i] % r.factors[i - 1] != 0) return false;
  return true;
}

void criterion9(Probe& p) {
  for (const auto& name : preset_names()) {
    const auto qc = quotient_of(name);
    p.expect(boundary_squared_zero(order_complex_model(qc).complex), name + ": manifold model");
    // the pipeline builds cusp and boundary complexes only once the ridges check out
    if (!ridges_ok(ridge_check(qc))) continue;
    for (const auto& c : cusp_classes(qc))
      p.expect(boundary_squared_zero(order_complex_model(cusp_complex(qc, c.id)).complex), name + ": cusp model");
    for (int b = 0; b < static_cast<int>(boundary_strata(qc).size()); ++b)
      p.expect(boundary_squared_zero(order_complex_model(boundary_complex(qc, b)).complex), name + ": boundary model");
  }
  p.expect(smith_normal_form(DenseMatrix{{2, 4}, {6, 8}}).factors == std::vector<BigInt>{2, 4}, "[[2,4],[6,8]] -> (2,4)");

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9), pick(0, 5), coef(-3, 3), kind(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    DenseMatrix m(6, std::vector<BigInt>(6));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto base = smith_normal_form(m);
    p.expect(divides_chain(base), "divisibility chain");
    for (int op = 0; op < 1000; ++op) {
      const int i = pick(rng), j = pick(rng), k = kind(rng), c = coef(rng);
      // additions that would push an entry past 10^6 become swaps
      bool fits = i != j && k < 2;
      for (int t = 0; t < 6 && fits; ++t) fits = abs(k == 0 ? m[i][t] + c * m[j][t] : m[t][i] + c * m[t][j]) <= 1000000;
      if (k == 0 && fits) {
        for (int t = 0; t < 6; ++t) m[i][t] += c * m[j][t];
      } else if (k == 1 && fits) {
        for (int t = 0; t < 6; ++t) m[t][i] += c * m[t][j];
      } else if (k != 3) {
        std::swap(m[i], m[j]);
      } else {
        for (auto& row : m) std::swap(row[i], row[j]);
      }
    }
    p.expect(smith_normal_form(m).factors == base.factors, "invariance under unimodular operations");
  }
}

void criterion10(Probe& p) {
  const auto& table = flat_type_table();
  p.expect(table.size() == 10, "ten rows");
  p.expect(flat_table_injective(table), "injective");
  for (const auto& row : table) {
    if (row.type == FlatClosedType::G2)
      p.expect(row.orientability == Orientability::Orientable && row.h1 == group(1, {2, 2}), "G2 row");
    if (row.type == FlatClosedType::B4)
      p.expect(row.orientability == Orientability::NonOrientable && row.h1 == group(1, {4}), "B4 row");
  }
}

void census_finds(Probe& p, const std::string& scheme_file, const std::string& target) {
  const auto result = census_enumerate(load_census_scheme(std::string(IDEAL24_CENSUS_DIR) + "/" + scheme_file));
  const auto want = closed_signature(compile_script(preset(target)));
  bool found = false;
  for (const auto& e : result.entries) found = found || (want && e.signature == *want);
  p.expect(found, scheme_file + " rediscovers " + target + " (" + std::to_string(result.entries.size()) +
                      " signatures from " + std::to_string(result.enumerated) + " assignments)");
  const auto again = census_enumerate(load_census_scheme(std::string(IDEAL24_CENSUS_DIR) + "/" + scheme_file));
  const auto& first = result;
  bool same = again.entries.size() == first.entries.size();
  for (std::size_t i = 0; same && i < again.entries.size(); ++i)
    same = again.entries[i].signature == first.entries[i].signature && again.entries[i].description == first.entries[i].description;
  p.expect(same, scheme_file + " deterministic");
}

void criterion11(Probe& p) {
  census_finds(p, "g_one_copy.scheme", "G");
  census_finds(p, "h_two_copies.scheme", "H");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double budget;
    std::function<void(Probe&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "24-cell model", 1, criterion1},
      {2, "preset G", 10, criterion2},
      {3, "double cover of G", 30, criterion3},
      {4, "preset A", 10, criterion4},
      {5, "preset D", 10, criterion5},
      {6, "preset H", 20, criterion6},
      {7, "boundary automorphisms", 30, criterion7},
      {8, "seeded extension", 5, criterion8},
      {9, "homology engine", 30, criterion9},
      {10, "flat-type table", 5, criterion10},
      {11, "census smoke", 300, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Probe p;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(p);
    } catch (const std::exception& e) {
      p.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) p.failures.push_back("over time budget");
    const bool ok = p.failures.empty();
    failed += !ok;
    std::printf("criterion %2d %-24s %s  %7.2fs / %gs", c.id, c.what, ok ? "PASS" : "FAIL", secs, c.budget);
    if (!ok) std::printf("  %s%s", p.failures.front().c_str(),
                         p.failures.size() > 1 ? (" (+" + std::to_string(p.failures.size() - 1) + " more)").c_str() : "");
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
