#include "ideal24/complex_models.hpp"

#include <algorithm>

namespace ideal24 {

int cell24_poset_offset(int dim) {
  static const std::array<int, 5> offsets{0, 24, 120, 216, 240};
  return offsets[dim];
}

const LocalPoset& cell24_poset() {
  static const LocalPoset p = [] {
    const auto& model = cell24();
    LocalPoset out;
    std::vector<std::vector<int>> verts;
    for (int d = 0; d < 4; ++d)
      for (int i = 0; i < model.count(d); ++i) {
        out.dim.push_back(d);
        auto v = model.cell_vertices({d, i});
        std::sort(v.begin(), v.end());
        verts.push_back(v);
      }
    const int n = static_cast<int>(verts.size());
    out.below.resize(n + 1);
    for (int c = 0; c < n; ++c)
      for (int b = 0; b < n; ++b)
        if (b != c && out.dim[b] < out.dim[c] &&
            std::includes(verts[c].begin(), verts[c].end(), verts[b].begin(), verts[b].end()))
          out.below[c].push_back(b);
    out.dim.push_back(4);
    for (int b = 0; b < n; ++b) out.below[n].push_back(b);
    return out;
  }();
  return p;
}

FlagModel order_complex_model(const QuotientComplex& qc, const FlagOptions& opt) {
  std::vector<FaceGlue> glues;
  for (const auto& p : qc.table().pairings()) {
    const CellAction& act = cell_action(p.map);
    FaceGlue g{p.source.copy, p.target.copy, cell24_poset_offset(3) + p.source.facet, std::vector<int>(241, 240)};
    for (int d = 0; d < 4; ++d)
      for (int i = 0; i < static_cast<int>(act.cells[d].size()); ++i)
        g.cell_map[cell24_poset_offset(d) + i] = cell24_poset_offset(d) + act.cells[d][i];
    glues.push_back(std::move(g));
  }
  return order_complex_model(cell24_poset(), qc.copies(), glues, opt);
}

std::vector<AbelianGroup> manifold_homology(const QuotientComplex& qc, int max_dim) {
  FlagOptions opt;
  opt.min_cell_dim = 1;
  opt.max_simplex_dim = max_dim + 1;
  return homology_groups(order_complex_model(qc, opt).complex, max_dim);
}

namespace {

// local cells: vertices 0..5, edges 6..17 (oct_edges order), triangles 18..25, solid 26
constexpr int kEdge0 = 6, kTri0 = 18, kSolid = 26;

std::vector<int> oct_cell_vertices(int c) {
  if (c < kEdge0) return {c};
  if (c < kTri0) {
    const auto& e = oct_edges()[c - kEdge0];
    return {e[0], e[1]};
  }
  if (c < kSolid) {
    const auto t = oct_triangle_vertices(c - kTri0);
    return {t[0], t[1], t[2]};
  }
  return {0, 1, 2, 3, 4, 5};
}

int oct_cell_image(const OctSym& s, int c) {
  auto v = oct_cell_vertices(c);
  for (int& x : v) x = s.vertex(x);
  std::sort(v.begin(), v.end());
  for (int d = 0; d <= kSolid; ++d) {
    auto w = oct_cell_vertices(d);
    std::sort(w.begin(), w.end());
    if (w == v) return d;
  }
  return -1;
}

}  // namespace

const LocalPoset& oct_poset() {
  static const LocalPoset p = [] {
    LocalPoset out;
    for (int c = 0; c <= kSolid; ++c) {
      out.dim.push_back(c < kEdge0 ? 0 : c < kTri0 ? 1 : c < kSolid ? 2 : 3);
      auto vc = oct_cell_vertices(c);
      std::sort(vc.begin(), vc.end());
      std::vector<int> below;
      for (int b = 0; b <= kSolid; ++b) {
        auto vb = oct_cell_vertices(b);
        std::sort(vb.begin(), vb.end());
        if (b != c && vb.size() < vc.size() && std::includes(vc.begin(), vc.end(), vb.begin(), vb.end()))
          below.push_back(b);
      }
      out.below.push_back(below);
    }
    return out;
  }();
  return p;
}

FlagModel order_complex_model(const OctComplex& oc, const FlagOptions& opt) {
  std::vector<FaceGlue> glues;
  for (int a = 0; a < oc.size(); ++a)
    for (int t = 0; t < 8; ++t)
      if (const auto& g = oc.glue_at(a, t)) {
        FaceGlue fg{a, g->target, kTri0 + t, std::vector<int>(kSolid + 1)};
        for (int c = 0; c <= kSolid; ++c) fg.cell_map[c] = oct_cell_image(g->map, c);
        glues.push_back(std::move(fg));
      }
  return order_complex_model(oct_poset(), oc.size(), glues, opt);
}

}  // namespace ideal24
