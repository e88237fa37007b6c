#include "ideal24/quotient.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ideal24/error.hpp"
#include "ideal24/union_find.hpp"

namespace ideal24 {

QuotientComplex build_quotient(const PairingTable& t) {
  const auto& model = cell24();
  QuotientComplex qc;
  qc.table_ = t;
  qc.slot_pairing_ = t.slot_index();
  const int n = t.copies();

  std::array<UnionFind, 4> uf;
  for (int d = 0; d < 4; ++d) uf[d] = UnionFind(n * model.count(d));
  for (const auto& p : t.pairings()) {
    const CellAction& act = cell_action(p.map);
    const int a = p.source.copy, b = p.target.copy, f = p.source.facet;
    uf[3].unite(a * 24 + f, b * 24 + act.facet(f));
    for (int tri : model.facet_triangles[f]) uf[2].unite(a * 96 + tri, b * 96 + act.cells[2][tri]);
    for (int e : model.facet_edges[f]) uf[1].unite(a * 96 + e, b * 96 + act.cells[1][e]);
    for (int v : model.facet_vertices[f]) uf[0].unite(a * 24 + v, b * 24 + act.vertex(v));
  }
  for (int d = 0; d < 4; ++d) qc.orbit_count_[d] = uf[d].labels(qc.orbit_[d]);
  for (int c = 0; c < n; ++c)
    for (int f = 0; f < 24; ++f)
      if (qc.slot_pairing_[c * 24 + f] < 0) qc.unpaired_.push_back({c, f});
  return qc;
}

namespace {

struct WalkState {
  CopyId copy;
  int triangle;
  int exit_side;  // index into triangle_facets
  bool operator==(const WalkState&) const = default;
};

struct WalkResult {
  bool closed = false;
  std::vector<RidgeCorner> corners;  // excluding the start corner
  Isometry map;  // composite of crossed pairings
  FacetSlot end{};  // unpaired facet reached (open walks)
  int end_triangle = 0;
};

WalkResult walk(const QuotientComplex& qc, const WalkState& start) {
  const auto& model = cell24();
  WalkResult r;
  WalkState s = start;
  const int guard = qc.copies() * 96 * 2 + 4;
  for (int step = 0; step < guard; ++step) {
    const int f = model.triangle_facets[s.triangle][s.exit_side];
    const Pairing* p = qc.pairing_at(s.copy, f);
    if (!p) {
      r.end = {s.copy, f};
      r.end_triangle = s.triangle;
      return r;
    }
    const int t2 = cell_action(p->map).cells[2][s.triangle];
    const int g = p->target.facet;
    const auto& tf = model.triangle_facets[t2];
    s = {p->target.copy, t2, tf[0] == g ? 1 : 0};
    r.map = p->map.compose(r.map);
    if (s == start) {
      r.closed = true;
      return r;
    }
    r.corners.push_back({s.copy, s.triangle});
  }
  throw EngineError(ErrorCode::InvalidArgument, "ridge walk did not terminate");
}

}  // namespace

std::vector<RidgeClassReport> ridge_check(const QuotientComplex& qc) {
  std::vector<RidgeClassReport> out;
  const int n = qc.copies();
  std::vector<char> seen(static_cast<std::size_t>(n) * 96, 0);
  for (int c = 0; c < n; ++c)
    for (int t = 0; t < 96; ++t) {
      if (seen[c * 96 + t]) continue;
      RidgeClassReport rep;
      rep.orbit = qc.orbit(2, c, t);
      const RidgeCorner start{c, t};
      WalkResult fwd = walk(qc, {c, t, 0});
      if (fwd.closed) {
        rep.kind = RidgeClassReport::Kind::InteriorCycle;
        rep.corners.push_back(start);
        rep.corners.insert(rep.corners.end(), fwd.corners.begin(), fwd.corners.end());
        rep.return_map = fwd.map;
      } else {
        WalkResult bwd = walk(qc, {c, t, 1});
        rep.kind = RidgeClassReport::Kind::BoundaryChain;
        rep.corners.assign(bwd.corners.rbegin(), bwd.corners.rend());
        rep.corners.push_back(start);
        rep.corners.insert(rep.corners.end(), fwd.corners.begin(), fwd.corners.end());
        rep.end_facets = {bwd.end, fwd.end};
        rep.chain_map = fwd.map.compose(bwd.map.inverse());
      }
      rep.length = static_cast<int>(rep.corners.size());

      std::vector<RidgeCorner> sorted = rep.corners;
      std::sort(sorted.begin(), sorted.end());
      const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
      for (const auto& k : rep.corners) seen[k.copy * 96 + k.triangle] = 1;

      if (repeats) {
        rep.problem = "ridge class passes a corner twice";
      } else if (rep.kind == RidgeClassReport::Kind::InteriorCycle) {
        if (rep.length != 4)
          rep.problem = "interior cycle of length " + std::to_string(rep.length);
        else if (!rep.return_map->is_identity())
          rep.problem = "cycle return map " + rep.return_map->mapspec() + " is not the identity";
      } else if (rep.length != 2) {
        rep.problem = "boundary chain of length " + std::to_string(rep.length);
      }
      rep.ok = rep.problem.empty();
      out.push_back(std::move(rep));
    }
  return out;
}

bool ridges_ok(const std::vector<RidgeClassReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const RidgeClassReport& r) { return r.ok; });
}

std::vector<BoundaryComponent> boundary_strata(const QuotientComplex& qc) {
  const auto& model = cell24();
  const auto& unpaired = qc.unpaired();
  std::map<FacetSlot, int> index;
  for (int i = 0; i < static_cast<int>(unpaired.size()); ++i) index[unpaired[i]] = i;
  UnionFind uf(static_cast<int>(unpaired.size()));
  std::vector<BoundaryTriangleGlue> glues;
  for (const auto& r : ridge_check(qc)) {
    if (r.kind != RidgeClassReport::Kind::BoundaryChain) continue;
    const FacetSlot a = r.end_facets[0], b = r.end_facets[1];
    uf.unite(index.at(a), index.at(b));
    const RidgeCorner first = r.corners.front(), last = r.corners.back();
    glues.push_back({a, first.triangle, b, last.triangle, *r.chain_map});
    glues.push_back({b, last.triangle, a, first.triangle, r.chain_map->inverse()});
  }
  std::vector<int> label;
  const int count = uf.labels(label);
  std::vector<BoundaryComponent> comps(count);
  for (int i = 0; i < static_cast<int>(unpaired.size()); ++i) comps[label[i]].facets.push_back(unpaired[i]);
  for (const auto& g : glues) comps[label[index.at(g.from)]].glues.push_back(g);
  for (auto& c : comps) {
    std::sort(c.facets.begin(), c.facets.end());
    std::sort(c.glues.begin(), c.glues.end(), [](const auto& x, const auto& y) {
      return std::tie(x.from, x.from_triangle) < std::tie(y.from, y.from_triangle);
    });
  }
  std::sort(comps.begin(), comps.end(),
            [](const BoundaryComponent& x, const BoundaryComponent& y) { return x.facets.front() < y.facets.front(); });
  (void)model;
  return comps;
}

int component_of(const std::vector<BoundaryComponent>& comps, const FacetSlot& slot) {
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    if (std::binary_search(comps[i].facets.begin(), comps[i].facets.end(), slot)) return i;
  return -1;
}

const char* orientability_name(Orientability o) {
  return o == Orientability::Orientable ? "Orientable" : "NonOrientable";
}

Orientability orientability(const QuotientComplex& qc) {
  const int n = qc.copies();
  std::vector<int> eps(n, 0);
  for (int root = 0; root < n; ++root) {
    if (eps[root]) continue;
    eps[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int f = 0; f < 24; ++f) {
        const Pairing* p = qc.pairing_at(a, f);
        if (!p) continue;
        const int want = -p->map.determinant() * eps[a];
        const int b = p->target.copy;
        if (eps[b] == 0) {
          eps[b] = want;
          q.push(b);
        } else if (eps[b] != want) {
          return Orientability::NonOrientable;
        }
      }
    }
  }
  return Orientability::Orientable;
}

std::vector<CuspClass> cusp_classes(const QuotientComplex& qc) {
  const auto& model = cell24();
  std::vector<CuspClass> out(qc.orbit_count(0));
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i].id = i;
  for (int c = 0; c < qc.copies(); ++c)
    for (int v = 0; v < 24; ++v) {
      auto& cls = out[qc.orbit(0, c, v)];
      cls.members.push_back({c, v});
      cls.labels.push_back(canonical_cusp_label(model.vertices[v]));
    }
  for (auto& cls : out) {
    std::sort(cls.labels.begin(), cls.labels.end());
    cls.labels.erase(std::unique(cls.labels.begin(), cls.labels.end()), cls.labels.end());
  }
  return out;
}

int volume_multiple(const QuotientComplex& qc) {
  if (!qc.unpaired().empty())
    throw EngineError(ErrorCode::HasBoundary, std::to_string(qc.unpaired().size()) + " facets are unpaired");
  return qc.copies();
}

PairingTable orientation_double_cover_table(const PairingTable& t) {
  PairingTable cover(2 * t.copies());
  for (const auto& p : t.pairings())
    for (int sigma : {1, -1}) {
      const int tau = -p.map.determinant() * sigma;
      const FacetSlot src{2 * p.source.copy + (sigma > 0 ? 0 : 1), p.source.facet};
      const FacetSlot dst{2 * p.target.copy + (tau > 0 ? 0 : 1), p.target.facet};
      cover.add_raw({src, dst, p.map});
    }
  return cover;
}

QuotientComplex orientation_double_cover(const QuotientComplex& qc) {
  if (orientability(qc) == Orientability::Orientable)
    throw EngineError(ErrorCode::AlreadyOrientable, "complex is already orientable");
  return build_quotient(orientation_double_cover_table(qc.table()));
}

}  // namespace ideal24
