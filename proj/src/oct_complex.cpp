#include "ideal24/oct_complex.hpp"

#include <algorithm>
#include <queue>

#include "ideal24/error.hpp"
#include "ideal24/union_find.hpp"

namespace ideal24 {

std::optional<OctSym> OctSym::from_images(const std::array<int, 6>& image) {
  std::array<bool, 6> used{};
  for (int v : image) {
    if (v < 0 || v > 5 || used[v]) return std::nullopt;
    used[v] = true;
  }
  for (int k = 0; k < 3; ++k)
    if ((image[2 * k] ^ 1) != image[2 * k + 1]) return std::nullopt;
  OctSym s;
  s.image = image;
  return s;
}

std::array<int, 3> oct_triangle_vertices(int t) {
  return {(t & 1), 2 + ((t >> 1) & 1), 4 + ((t >> 2) & 1)};
}

int oct_triangle_of(int a, int b, int c) {
  int t = 0, pairs = 0;
  for (int v : {a, b, c}) {
    t |= (v & 1) << (v >> 1);
    pairs |= 1 << (v >> 1);
  }
  if (pairs != 7) throw EngineError(ErrorCode::InvalidArgument, "vertices do not span an octahedron triangle");
  return t;
}

const std::vector<std::array<int, 2>>& oct_edges() {
  static const std::vector<std::array<int, 2>> edges = [] {
    std::vector<std::array<int, 2>> out;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if ((i >> 1) != (j >> 1)) out.push_back({i, j});
    return out;
  }();
  return edges;
}

namespace {

int oct_edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  const auto& es = oct_edges();
  auto it = std::lower_bound(es.begin(), es.end(), std::array<int, 2>{a, b});
  if (it == es.end() || (*it)[0] != a || (*it)[1] != b)
    throw EngineError(ErrorCode::InvalidArgument, "not an octahedron edge");
  return static_cast<int>(it - es.begin());
}

/// The two local triangles containing local edge e.
std::array<int, 2> edge_triangles(int e) {
  const auto& ed = oct_edges()[e];
  const int k = 3 - (ed[0] >> 1) - (ed[1] >> 1);
  return {oct_triangle_of(ed[0], ed[1], 2 * k), oct_triangle_of(ed[0], ed[1], 2 * k + 1)};
}

}  // namespace

int OctSym::triangle(int t) const {
  const auto v = oct_triangle_vertices(t);
  return oct_triangle_of(image[v[0]], image[v[1]], image[v[2]]);
}

OctSym OctSym::compose(const OctSym& rhs) const {
  OctSym out;
  for (int i = 0; i < 6; ++i) out.image[i] = image[rhs.image[i]];
  return out;
}

OctSym OctSym::inverse() const {
  OctSym out;
  for (int i = 0; i < 6; ++i) out.image[image[i]] = i;
  return out;
}

const std::vector<OctSym>& oct_symmetries() {
  static const std::vector<OctSym> all = [] {
    std::vector<OctSym> out;
    std::array<int, 3> perm{0, 1, 2};
    do {
      for (int flips = 0; flips < 8; ++flips) {
        std::array<int, 6> img{};
        for (int k = 0; k < 3; ++k) {
          const int f = (flips >> k) & 1;
          img[2 * k] = 2 * perm[k] + f;
          img[2 * k + 1] = 2 * perm[k] + (1 - f);
        }
        out.push_back(*OctSym::from_images(img));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

void OctComplex::glue(int a, int ta, int b, int tb, const OctSym& map) {
  if (a < 0 || b < 0 || a >= size() || b >= size() || ta < 0 || ta > 7 || tb < 0 || tb > 7)
    throw EngineError(ErrorCode::InvalidArgument, "gluing outside the complex");
  if (map.triangle(ta) != tb) throw EngineError(ErrorCode::InvalidArgument, "gluing map does not match triangles");
  const OctGlue fwd{b, tb, map};
  const OctGlue back{a, ta, map.inverse()};
  auto set = [&](int o, int t, const OctGlue& g) {
    auto& slot = glues_[o][t];
    if (slot && (slot->target != g.target || slot->target_triangle != g.target_triangle || slot->map != g.map))
      throw EngineError(ErrorCode::DoublePairing, "triangle " + std::to_string(t) + " of octahedron " +
                                                      std::to_string(o) + " is already glued");
    slot = g;
  };
  set(a, ta, fwd);
  set(b, tb, back);
}

std::array<int, 6> facet_local_vertices(int facet) {
  const auto& model = cell24();
  const auto& fv = model.facet_vertices[facet];
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (dot(model.vertices[fv[i]], model.vertices[fv[j]]) == 0) pairs.push_back({fv[i], fv[j]});
  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() != 3) throw EngineError(ErrorCode::InvalidArgument, "facet is not an octahedron");
  return {pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1], pairs[2][0], pairs[2][1]};
}

namespace {

int local_index(const std::array<int, 6>& lv, int vertex) {
  for (int i = 0; i < 6; ++i)
    if (lv[i] == vertex) return i;
  return -1;
}

}  // namespace

OctComplex boundary_complex(const BoundaryComponent& comp) {
  const auto& model = cell24();
  OctComplex oc(static_cast<int>(comp.facets.size()));
  oc.slots = comp.facets;
  for (const auto& s : comp.facets) {
    oc.local_vertices.push_back(facet_local_vertices(s.facet));
    std::array<Color, 8> colors{};
    const auto& lv = oc.local_vertices.back();
    for (int t = 0; t < 8; ++t) {
      const auto tv = oct_triangle_vertices(t);
      std::vector<int> vs{lv[tv[0]], lv[tv[1]], lv[tv[2]]};
      std::sort(vs.begin(), vs.end());
      const int tri = model.find_cell(vs).index;
      const auto& tf = model.triangle_facets[tri];
      colors[t] = model.color(tf[0] == s.facet ? tf[1] : tf[0]);
    }
    oc.triangle_colors.push_back(colors);
  }
  auto oct_of = [&](const FacetSlot& s) {
    return static_cast<int>(std::lower_bound(comp.facets.begin(), comp.facets.end(), s) - comp.facets.begin());
  };
  for (const auto& g : comp.glues) {
    const int a = oct_of(g.from), b = oct_of(g.to);
    std::array<int, 6> img{};
    for (int i = 0; i < 6; ++i) {
      const int w = model.vertex_index(g.map.apply(model.vertices[oc.local_vertices[a][i]]));
      img[i] = local_index(oc.local_vertices[b], w);
    }
    const auto sym = OctSym::from_images(img);
    if (!sym) throw EngineError(ErrorCode::InvalidArgument, "boundary gluing does not map facet to facet");
    const auto tv = model.triangles[g.from_triangle];
    const int ta = oct_triangle_of(local_index(oc.local_vertices[a], tv[0]), local_index(oc.local_vertices[a], tv[1]),
                                   local_index(oc.local_vertices[a], tv[2]));
    oc.glue(a, ta, b, sym->triangle(ta), *sym);
  }
  return oc;
}

OctComplex boundary_complex(const QuotientComplex& qc, int component) {
  const auto comps = boundary_strata(qc);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw EngineError(ErrorCode::NoBoundary, "no boundary component " + std::to_string(component));
  return boundary_complex(comps[component]);
}

std::vector<std::array<int, 6>> ideal_vertex_classes(const OctComplex& oc) {
  const int n = oc.size();
  UnionFind uf(n * 6);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < 8; ++t)
      if (const auto& g = oc.glue_at(a, t))
        for (int v : oct_triangle_vertices(t)) uf.unite(a * 6 + v, g->target * 6 + g->map.vertex(v));
  std::vector<int> label;
  uf.labels(label);
  std::vector<std::array<int, 6>> out(n);
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < 6; ++v) out[a][v] = label[a * 6 + v];
  return out;
}

int cusp_count3(const OctComplex& oc) {
  int m = -1;
  for (const auto& row : ideal_vertex_classes(oc))
    for (int c : row) m = std::max(m, c);
  return m + 1;
}

OctahedralReport verify_octahedral(const OctComplex& oc) {
  OctahedralReport rep;
  const int n = oc.size();
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < 8; ++t) {
      const auto& g = oc.glue_at(a, t);
      if (!g) {
        rep.problems.push_back("free triangle " + std::to_string(t) + " on octahedron " + std::to_string(a));
        continue;
      }
      if (g->target == a && g->target_triangle == t)
        rep.problems.push_back("triangle glued to itself on octahedron " + std::to_string(a));
      const auto& back = oc.glue_at(g->target, g->target_triangle);
      if (!back || back->target != a || back->target_triangle != t || !back->map.compose(g->map).is_identity())
        rep.problems.push_back("gluing is not involutive at octahedron " + std::to_string(a));
    }
  if (!rep.problems.empty()) return rep;

  // edge classes: walk around each edge through the triangles containing it
  std::vector<char> seen(n * 12, 0);
  for (int a = 0; a < n; ++a)
    for (int e = 0; e < 12; ++e) {
      if (seen[a * 12 + e]) continue;
      int oct = a, edge = e, exit = edge_triangles(e)[0];
      OctSym composite;
      int length = 0;
      std::vector<int> visited;
      while (true) {
        visited.push_back(oct * 12 + edge);
        ++length;
        const auto& g = *oc.glue_at(oct, exit);
        const auto& ed = oct_edges()[edge];
        const int e2 = oct_edge_index(g.map.vertex(ed[0]), g.map.vertex(ed[1]));
        const auto tris = edge_triangles(e2);
        const int next_exit = tris[0] == g.target_triangle ? tris[1] : tris[0];
        composite = g.map.compose(composite);
        oct = g.target;
        edge = e2;
        exit = next_exit;
        if ((oct == a && edge == e && exit == edge_triangles(e)[0]) || length > 4 * n * 12) break;
      }
      std::sort(visited.begin(), visited.end());
      const bool repeats = std::adjacent_find(visited.begin(), visited.end()) != visited.end();
      for (int k : visited) seen[k] = 1;
      rep.edge_class_lengths.push_back(length);
      ++rep.edge_classes;
      if (length != 4 || repeats)
        rep.problems.push_back("edge class of length " + std::to_string(length) + " at octahedron " +
                               std::to_string(a));
      else if (!composite.is_identity())
        rep.problems.push_back("edge class with nontrivial return at octahedron " + std::to_string(a));
    }

  // ideal vertex links: squares (a,v), sides (a,v,triangle), corners (a,v,edge)
  const auto vclass = ideal_vertex_classes(oc);
  rep.vertex_classes = cusp_count3(oc);
  UnionFind sides(n * 6 * 8), corners(n * 6 * 12);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < 8; ++t) {
      const auto& g = *oc.glue_at(a, t);
      const auto tv = oct_triangle_vertices(t);
      for (int v : tv) {
        const int w = g.map.vertex(v);
        sides.unite((a * 6 + v) * 8 + t, (g.target * 6 + w) * 8 + g.target_triangle);
        for (int u : tv) {
          if (u == v) continue;
          const int e = oct_edge_index(v, u);
          const int e2 = oct_edge_index(w, g.map.vertex(u));
          corners.unite((a * 6 + v) * 12 + e, (g.target * 6 + w) * 12 + e2);
        }
      }
    }
  std::vector<int> f(rep.vertex_classes, 0);
  std::vector<std::vector<int>> side_roots(rep.vertex_classes), corner_roots(rep.vertex_classes);
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < 6; ++v) {
      const int c = vclass[a][v];
      ++f[c];
      for (int t = 0; t < 8; ++t) {
        const auto tv = oct_triangle_vertices(t);
        if (std::find(tv.begin(), tv.end(), v) != tv.end()) side_roots[c].push_back(sides.find((a * 6 + v) * 8 + t));
      }
      for (int e = 0; e < 12; ++e) {
        const auto& ed = oct_edges()[e];
        if (ed[0] == v || ed[1] == v) corner_roots[c].push_back(corners.find((a * 6 + v) * 12 + e));
      }
    }
  for (int c = 0; c < rep.vertex_classes; ++c) {
    auto uniq = [](std::vector<int>& x) {
      std::sort(x.begin(), x.end());
      return static_cast<int>(std::unique(x.begin(), x.end()) - x.begin());
    };
    const int chi = uniq(corner_roots[c]) - uniq(side_roots[c]) + f[c];
    rep.vertex_link_euler.push_back(chi);
    if (chi != 0) rep.problems.push_back("vertex link " + std::to_string(c) + " has Euler characteristic " + std::to_string(chi));
  }
  rep.ok = rep.problems.empty();
  return rep;
}

Automorphism3 Automorphism3::identity(int n) {
  Automorphism3 a;
  a.oct_image.resize(n);
  for (int i = 0; i < n; ++i) a.oct_image[i] = i;
  a.maps.assign(n, OctSym{});
  return a;
}

Automorphism3 Automorphism3::compose(const Automorphism3& rhs) const {
  Automorphism3 out;
  const int n = static_cast<int>(oct_image.size());
  out.oct_image.resize(n);
  out.maps.resize(n);
  for (int i = 0; i < n; ++i) {
    const int mid = rhs.oct_image[i];
    out.oct_image[i] = oct_image[mid];
    out.maps[i] = maps[mid].compose(rhs.maps[i]);
  }
  return out;
}

Automorphism3 Automorphism3::inverse() const {
  Automorphism3 out;
  const int n = static_cast<int>(oct_image.size());
  out.oct_image.resize(n);
  out.maps.resize(n);
  for (int i = 0; i < n; ++i) {
    out.oct_image[oct_image[i]] = i;
    out.maps[oct_image[i]] = maps[i].inverse();
  }
  return out;
}

bool Automorphism3::is_identity() const { return *this == identity(static_cast<int>(oct_image.size())); }

bool commutes_with_gluings(const OctComplex& from, const OctComplex& to, const Automorphism3& iso) {
  if (from.size() != to.size() || static_cast<int>(iso.oct_image.size()) != from.size()) return false;
  for (int a = 0; a < from.size(); ++a)
    for (int t = 0; t < 8; ++t) {
      const auto& g = from.glue_at(a, t);
      const auto& h = to.glue_at(iso.oct_image[a], iso.maps[a].triangle(t));
      if (!g || !h) {
        if (g.has_value() != h.has_value()) return false;
        continue;
      }
      if (h->target != iso.oct_image[g->target] || h->target_triangle != iso.maps[g->target].triangle(g->target_triangle))
        return false;
      if (h->map != iso.maps[g->target].compose(g->map).compose(iso.maps[a].inverse())) return false;
    }
  return true;
}

std::optional<Automorphism3> try_extend(const OctComplex& x, const OctComplex& y, int source_oct, int target_oct,
                                        const OctSym& seed) {
  const int n = x.size();
  if (n != y.size() || source_oct < 0 || source_oct >= n || target_oct < 0 || target_oct >= n) return std::nullopt;
  Automorphism3 iso;
  iso.oct_image.assign(n, -1);
  iso.maps.assign(n, OctSym{});
  std::vector<char> used(n, 0);
  iso.oct_image[source_oct] = target_oct;
  iso.maps[source_oct] = seed;
  used[target_oct] = 1;
  std::queue<int> q;
  q.push(source_oct);
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    for (int t = 0; t < 8; ++t) {
      const auto& g = x.glue_at(a, t);
      const auto& h = y.glue_at(iso.oct_image[a], iso.maps[a].triangle(t));
      if (g.has_value() != h.has_value()) return std::nullopt;
      if (!g) continue;
      const OctSym want = h->map.compose(iso.maps[a]).compose(g->map.inverse());
      const int b = g->target;
      if (iso.oct_image[b] < 0) {
        if (used[h->target]) return std::nullopt;
        iso.oct_image[b] = h->target;
        iso.maps[b] = want;
        used[h->target] = 1;
        q.push(b);
      } else if (iso.oct_image[b] != h->target || iso.maps[b] != want) {
        return std::nullopt;
      }
    }
  }
  if (std::find(iso.oct_image.begin(), iso.oct_image.end(), -1) != iso.oct_image.end()) return std::nullopt;
  if (!commutes_with_gluings(x, y, iso)) return std::nullopt;
  return iso;
}

Automorphism3 extend_isometry(const OctComplex& x, const OctComplex& y, int source_oct, int target_oct,
                              const OctSym& seed) {
  auto r = try_extend(x, y, source_oct, target_oct, seed);
  if (!r)
    throw EngineError(ErrorCode::SeedDoesNotExtend, "seed on octahedra " + std::to_string(source_oct) + " -> " +
                                                        std::to_string(target_oct) + " does not extend");
  return *r;
}

std::vector<Automorphism3> automorphism_group(const OctComplex& oc) {
  std::vector<Automorphism3> out;
  if (oc.size() == 0) return out;
  for (int target = 0; target < oc.size(); ++target)
    for (const auto& s : oct_symmetries())
      if (auto a = try_extend(oc, oc, 0, target, s)) out.push_back(std::move(*a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Automorphism3 induced_boundary_automorphism(const QuotientComplex& qc, const Isometry& map, int component,
                                            const std::vector<int>& copy_perm) {
  const auto& model = cell24();
  const auto comps = boundary_strata(qc);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw EngineError(ErrorCode::NoBoundary, "no boundary component " + std::to_string(component));
  const auto& comp = comps[component];
  const OctComplex oc = boundary_complex(comp);
  Automorphism3 aut;
  for (int i = 0; i < oc.size(); ++i) {
    const FacetSlot s = oc.slots[i];
    const int copy = copy_perm.empty() ? s.copy : copy_perm.at(s.copy);
    const FacetSlot image{copy, cell_action(map).facet(s.facet)};
    auto it = std::lower_bound(comp.facets.begin(), comp.facets.end(), image);
    if (it == comp.facets.end() || *it != image)
      throw EngineError(ErrorCode::NotBoundaryPreserving,
                        "facet " + s.text() + " is sent to " + image.text() + " outside the component");
    const int j = static_cast<int>(it - comp.facets.begin());
    std::array<int, 6> img{};
    for (int k = 0; k < 6; ++k)
      img[k] = local_index(oc.local_vertices[j], model.vertex_index(map.apply(model.vertices[oc.local_vertices[i][k]])));
    aut.oct_image.push_back(j);
    aut.maps.push_back(*OctSym::from_images(img));
  }
  if (!commutes_with_gluings(oc, oc, aut))
    throw EngineError(ErrorCode::NotBoundaryPreserving, "map does not respect the boundary gluings");
  return aut;
}

ExactSequenceReport verify_exact_sequence(const std::vector<Automorphism3>& group, const Automorphism3& w,
                                          const Automorphism3& v) {
  ExactSequenceReport rep;
  std::vector<Automorphism3> g = group;
  std::sort(g.begin(), g.end());
  rep.group_order = static_cast<int>(g.size());
  if (g.empty()) {
    rep.problems.push_back("empty group");
    return rep;
  }
  const int n = static_cast<int>(g.front().oct_image.size());
  const auto id = Automorphism3::identity(n);
  auto member = [&](const Automorphism3& a) { return std::binary_search(g.begin(), g.end(), a); };
  if (!member(w) || !member(v)) rep.problems.push_back("W or V is not an automorphism");

  rep.involutions = w.compose(w) == id && v.compose(v) == id && !w.is_identity() && !v.is_identity();
  rep.commute = w.compose(v) == v.compose(w);
  std::vector<Automorphism3> kernel{id, w, v, w.compose(v)};
  std::sort(kernel.begin(), kernel.end());
  kernel.erase(std::unique(kernel.begin(), kernel.end()), kernel.end());
  rep.kernel_order = static_cast<int>(kernel.size());
  if (!rep.involutions) rep.problems.push_back("W and V are not both nontrivial involutions");
  if (!rep.commute) rep.problems.push_back("W and V do not commute");
  if (rep.kernel_order != 4) rep.problems.push_back("<W,V> has order " + std::to_string(rep.kernel_order));

  rep.normal = true;
  for (const auto& x : g) {
    const auto xi = x.inverse();
    for (const auto& k : {w, v})
      if (!std::binary_search(kernel.begin(), kernel.end(), x.compose(k).compose(xi))) rep.normal = false;
  }
  if (!rep.normal) rep.problems.push_back("<W,V> is not normal");

  for (const auto& x : g) rep.stabilizer_order += x.oct_image[0] == 0;
  rep.trivial_intersection = std::all_of(kernel.begin(), kernel.end(),
                                         [&](const Automorphism3& k) { return k == id || k.oct_image[0] != 0; });
  if (!rep.trivial_intersection) rep.problems.push_back("<W,V> meets the octahedron stabilizer");
  if (rep.stabilizer_order != 48)
    rep.problems.push_back("octahedron stabilizer has order " + std::to_string(rep.stabilizer_order));
  if (rep.group_order != rep.kernel_order * rep.stabilizer_order)
    rep.problems.push_back("|G| != |<W,V>| * |Stab|");
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace ideal24
