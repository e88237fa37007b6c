#include "ideal24/script.hpp"

#include <algorithm>

#include "ideal24/error.hpp"
#include "ideal24/quotient.hpp"

namespace ideal24 {

int resolve_seed_vertex(const ConstructionScript& s, int facet, const std::string& token) {
  const auto& model = cell24();
  std::vector<CuspLabel> labels;
  auto alias = std::find_if(s.aliases.begin(), s.aliases.end(), [&](const CuspAlias& a) { return a.name == token; });
  if (alias != s.aliases.end())
    labels = alias->labels;
  else
    labels.push_back(parse_cusp_label(token));
  int found = -1, matches = 0;
  for (int v : model.facet_vertices[facet]) {
    const CuspLabel l = canonical_cusp_label(model.vertices[v]);
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) {
      found = v;
      ++matches;
    }
  }
  if (matches != 1)
    throw EngineError(ErrorCode::InvalidArgument, "cusp '" + token + "' names " + std::to_string(matches) +
                                                      " vertices of facet " + model.facets[facet].text());
  return found;
}

OctSym seed_symmetry(const ConstructionScript& s, const BoundaryGlueStage& st) {
  const auto src_lv = facet_local_vertices(st.seed_src.facet);
  const auto dst_lv = facet_local_vertices(st.seed_dst.facet);
  std::array<int, 6> img;
  img.fill(-1);
  if (st.vertices.size() != 6)
    throw EngineError(ErrorCode::InvalidArgument, "vertex table needs 6 entries, got " +
                                                      std::to_string(st.vertices.size()));
  for (const auto& [from, to] : st.vertices) {
    const int u = resolve_seed_vertex(s, st.seed_src.facet, from);
    const int w = resolve_seed_vertex(s, st.seed_dst.facet, to);
    const int i = static_cast<int>(std::find(src_lv.begin(), src_lv.end(), u) - src_lv.begin());
    const int j = static_cast<int>(std::find(dst_lv.begin(), dst_lv.end(), w) - dst_lv.begin());
    if (img[i] >= 0) throw EngineError(ErrorCode::InvalidArgument, "cusp '" + from + "' appears twice in the vertex table");
    img[i] = j;
  }
  const auto sym = OctSym::from_images(img);
  if (!sym)
    throw EngineError(ErrorCode::SeedDoesNotExtend,
                      "vertex table does not preserve the octahedron (opposite vertices must go to opposite vertices)");
  return *sym;
}

std::vector<Pairing> pairings_from_isomorphism(const OctComplex& x, const OctComplex& y, const Automorphism3& iso) {
  const auto& model = cell24();
  std::vector<Pairing> out;
  for (int i = 0; i < x.size(); ++i) {
    const int j = iso.oct_image[i];
    std::vector<Vector4> from, to;
    for (int k = 0; k < 6; ++k) {
      from.push_back(model.vertices[x.local_vertices[i][k]]);
      to.push_back(model.vertices[y.local_vertices[j][iso.maps[i].vertex(k)]]);
    }
    out.push_back({x.slots[i], y.slots[j], Isometry::from_point_images(from, to)});
  }
  return out;
}

namespace {

void add_consistent(PairingTable& t, const Pairing& p) {
  if (const Pairing* old = t.find(p.source)) {
    if (old->target == p.target && old->map == p.map) return;
    throw EngineError(ErrorCode::DoublePairing, "facet " + p.source.text() + " is already paired");
  }
  t.add_pair(p.source, p.target, p.map);
}

void check_copy(const ConstructionScript& s, CopyId c) {
  if (c < 0 || c >= s.copies)
    throw EngineError(ErrorCode::InvalidArgument, "copy " + std::to_string(c) + " outside 0.." +
                                                      std::to_string(s.copies - 1));
}

void compile_color(const ConstructionScript& s, const PairColorStage& st, PairingTable& t) {
  const auto& model = cell24();
  const PairingTable before = t;
  std::vector<CopyId> scope;
  if (st.copy) {
    check_copy(s, *st.copy);
    scope.push_back(*st.copy);
  } else {
    for (int c = 0; c < s.copies; ++c) scope.push_back(c);
  }
  if (st.to) check_copy(s, *st.to);
  const CellAction& act = cell_action(st.map);
  int in_scope = 0;
  for (CopyId c : scope)
    for (int f = 0; f < 24; ++f) {
      if (model.color(f) != st.color || before.is_paired({c, f})) continue;
      ++in_scope;
      const FacetSlot target{st.to.value_or(c), act.facet(f)};
      if (before.is_paired(target))
        throw EngineError(ErrorCode::DoublePairing, "facet " + target.text() + " is already paired");
      add_consistent(t, {{c, f}, target, st.map});
    }
  if (in_scope == 0)
    throw EngineError(ErrorCode::ColorScopeEmpty, std::string("no unpaired ") + color_name(st.color) +
                                                      " facets in scope");
}

void compile_explicit(const ConstructionScript& s, const PairExplicitStage& st, PairingTable& t) {
  const auto& model = cell24();
  for (const auto& p : st.pairs) {
    check_copy(s, p.source.copy);
    check_copy(s, p.target.copy);
    if (cell_action(p.map).facet(p.source.facet) != p.target.facet)
      throw EngineError(ErrorCode::InvalidArgument, "map " + p.map.mapspec() + " does not send " +
                                                        model.facets[p.source.facet].text() + " to " +
                                                        model.facets[p.target.facet].text());
    add_consistent(t, p);
  }
}

}  // namespace

PairingTable compile_script(const ConstructionScript& s) {
  if (s.copies < 1) throw EngineError(ErrorCode::InvalidArgument, "a construction needs at least one copy");
  PairingTable t(s.copies);
  for (const auto& stage : s.stages) {
    if (const auto* c = std::get_if<PairColorStage>(&stage)) compile_color(s, *c, t);
    if (const auto* e = std::get_if<PairExplicitStage>(&stage)) compile_explicit(s, *e, t);
  }

  std::vector<const BoundaryGlueStage*> glues;
  for (const auto& stage : s.stages)
    if (const auto* g = std::get_if<BoundaryGlueStage>(&stage)) glues.push_back(g);
  if (glues.empty()) return t;

  const QuotientComplex qc = build_quotient(t);
  const auto comps = boundary_strata(qc);
  std::vector<OctComplex> boundary;
  for (const auto& c : comps) boundary.push_back(boundary_complex(c));
  for (const auto* g : glues) {
    for (int id : {g->src, g->dst})
      if (id < 0 || id >= static_cast<int>(comps.size()))
        throw EngineError(ErrorCode::InvalidArgument, "no boundary component " + std::to_string(id) + " (there are " +
                                                          std::to_string(comps.size()) + ")");
    const OctComplex& x = boundary[g->src];
    const OctComplex& y = boundary[g->dst];
    auto oct_of = [](const OctComplex& oc, const FacetSlot& slot, int id) {
      auto it = std::find(oc.slots.begin(), oc.slots.end(), slot);
      if (it == oc.slots.end())
        throw EngineError(ErrorCode::InvalidArgument,
                          "facet " + slot.text() + " is not in boundary component " + std::to_string(id));
      return static_cast<int>(it - oc.slots.begin());
    };
    const int a = oct_of(x, g->seed_src, g->src);
    const int b = oct_of(y, g->seed_dst, g->dst);
    const Automorphism3 iso = extend_isometry(x, y, a, b, seed_symmetry(s, *g));
    for (const auto& p : pairings_from_isomorphism(x, y, iso)) add_consistent(t, p);
  }
  return t;
}

}  // namespace ideal24
