#include "ideal24/cube_complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ideal24/error.hpp"
#include "ideal24/union_find.hpp"

namespace ideal24 {

namespace {

std::array<int, 3> trits(int c) { return {c % 3, (c / 3) % 3, c / 9}; }
int from_trits(const std::array<int, 3>& t) { return t[0] + 3 * t[1] + 9 * t[2]; }

/// Faces (axis*2+side) containing a cell.
std::vector<int> faces_of(int cell) {
  std::vector<int> out;
  const auto t = trits(cell);
  for (int a = 0; a < 3; ++a)
    if (t[a] != 2) out.push_back(2 * a + t[a]);
  return out;
}

bool cell_le(int lo, int hi) {
  const auto a = trits(lo), b = trits(hi);
  for (int i = 0; i < 3; ++i)
    if (b[i] != 2 && a[i] != b[i]) return false;
  return true;
}

}  // namespace

int cube_face_cell(int face) {
  std::array<int, 3> t{2, 2, 2};
  t[face / 2] = face % 2;
  return from_trits(t);
}

int cube_cell_dim(int cell) {
  const auto t = trits(cell);
  return (t[0] == 2) + (t[1] == 2) + (t[2] == 2);
}

int CubeSym::cell(int c) const {
  const auto t = trits(c);
  std::array<int, 3> u{};
  for (int i = 0; i < 3; ++i) u[i] = t[perm[i]] == 2 ? 2 : t[perm[i]] ^ flip[i];
  return from_trits(u);
}

int CubeSym::face(int f) const {
  for (int i = 0; i < 3; ++i)
    if (perm[i] == f / 2) return 2 * i + ((f % 2) ^ flip[i]);
  return -1;
}

CubeSym CubeSym::compose(const CubeSym& rhs) const {
  CubeSym out;
  for (int i = 0; i < 3; ++i) {
    out.perm[i] = rhs.perm[perm[i]];
    out.flip[i] = rhs.flip[perm[i]] ^ flip[i];
  }
  return out;
}

CubeSym CubeSym::inverse() const {
  CubeSym out;
  for (int i = 0; i < 3; ++i) {
    out.perm[perm[i]] = i;
    out.flip[perm[i]] = flip[i];
  }
  return out;
}

int CubeSym::determinant() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += perm[i] > perm[j];
  const int flips = flip[0] + flip[1] + flip[2];
  return (inversions + flips) % 2 ? -1 : 1;
}

std::string CubeSym::text() const {
  static const char* names = "xyz";
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += ",";
    if (flip[i]) out += "1-";
    out += names[perm[i]];
  }
  return out;
}

const std::vector<CubeSym>& cube_symmetries() {
  static const std::vector<CubeSym> all = [] {
    std::vector<CubeSym> out;
    std::array<int, 3> p{0, 1, 2};
    do {
      for (int f = 0; f < 8; ++f) out.push_back({p, {f & 1, (f >> 1) & 1, (f >> 2) & 1}});
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

const LocalPoset& cube_poset() {
  static const LocalPoset p = [] {
    LocalPoset out;
    for (int c = 0; c < 27; ++c) {
      out.dim.push_back(cube_cell_dim(c));
      std::vector<int> below;
      for (int d = 0; d < 27; ++d)
        if (d != c && cell_le(d, c)) below.push_back(d);
      out.below.push_back(below);
    }
    return out;
  }();
  return p;
}

void CubeComplex::glue(int a, int fa, int b, int fb, const CubeSym& map) {
  if (a < 0 || b < 0 || a >= size() || b >= size() || fa < 0 || fa > 5 || fb < 0 || fb > 5)
    throw EngineError(ErrorCode::InvalidArgument, "gluing outside the complex");
  if (map.face(fa) != fb) throw EngineError(ErrorCode::InvalidArgument, "gluing map does not match faces");
  auto set = [&](int c, int f, const CubeGlue& g) {
    auto& slot = glues_[c][f];
    if (slot && (slot->target != g.target || slot->target_face != g.target_face || slot->map != g.map))
      throw EngineError(ErrorCode::DoublePairing,
                        "face " + std::to_string(f) + " of cube " + std::to_string(c) + " is already glued");
    slot = g;
  };
  set(a, fa, {b, fb, map});
  set(b, fb, {a, fa, map.inverse()});
}

int CubeComplex::free_faces() const {
  int n = 0;
  for (const auto& row : glues_)
    for (const auto& g : row) n += !g.has_value();
  return n;
}

std::array<int, 6> vertex_cube_facets(int vertex) {
  const auto& model = cell24();
  std::vector<int> fs = model.vertex_facets[vertex];
  std::sort(fs.begin(), fs.end());
  auto adjacent = [&](int f, int g) {
    for (int t : model.vertex_triangles[vertex]) {
      const auto& tf = model.triangle_facets[t];
      if ((tf[0] == f && tf[1] == g) || (tf[0] == g && tf[1] == f)) return true;
    }
    return false;
  };
  std::vector<std::array<int, 2>> pairs;
  std::vector<char> used(fs.size(), 0);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!used[j] && !adjacent(fs[i], fs[j])) {
        pairs.push_back({fs[i], fs[j]});
        used[i] = used[j] = 1;
        break;
      }
  }
  if (pairs.size() != 3) throw EngineError(ErrorCode::InvalidArgument, "vertex figure is not a cube");
  return {pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1], pairs[2][0], pairs[2][1]};
}

CubeSym induced_cube_map(const Isometry& m, int vertex) {
  const CellAction& act = cell_action(m);
  const auto src = vertex_cube_facets(vertex);
  const auto dst = vertex_cube_facets(act.vertex(vertex));
  CubeSym g;
  for (int a = 0; a < 3; ++a) {
    const int q = static_cast<int>(std::find(dst.begin(), dst.end(), act.facet(src[2 * a])) - dst.begin());
    g.perm[q / 2] = a;
    g.flip[q / 2] = q % 2;
  }
  return g;
}

CubeComplex cusp_complex(const QuotientComplex& qc, int cusp) {
  const auto& model = cell24();
  const auto classes = cusp_classes(qc);
  if (cusp < 0 || cusp >= static_cast<int>(classes.size()))
    throw EngineError(ErrorCode::InvalidArgument, "no cusp " + std::to_string(cusp));
  const auto& members = classes[cusp].members;
  CubeComplex cc(static_cast<int>(members.size()));
  cc.members = members;
  std::map<CuspMember, int> index;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) index[members[i]] = i;
  for (const auto& m : members) {
    const auto f = vertex_cube_facets(m.vertex);
    cc.face_facets.push_back(f);
    std::array<Color, 6> colors{};
    for (int k = 0; k < 6; ++k) colors[k] = model.color(f[k]);
    cc.face_colors.push_back(colors);
  }
  for (int i = 0; i < cc.size(); ++i) {
    const auto& m = members[i];
    for (int k = 0; k < 6; ++k) {
      const Pairing* p = qc.pairing_at(m.copy, cc.face_facets[i][k]);
      if (!p) continue;
      const CellAction& act = cell_action(p->map);
      const int j = index.at({p->target.copy, act.vertex(m.vertex)});
      const CubeSym g = induced_cube_map(p->map, m.vertex);
      cc.glue(i, k, j, g.face(k), g);
    }
  }
  return cc;
}

namespace {

/// The two faces containing an edge cell.
std::array<int, 2> edge_faces(int edge) {
  const auto f = faces_of(edge);
  return {f[0], f[1]};
}

struct EdgeWalk {
  bool closed = false;
  int length = 0;
  CubeSym map;
  std::vector<std::array<int, 2>> visited;  // (cube, edge)
  std::array<int, 2> end{-1, -1};  // (cube, free face) for open walks
  int end_edge = -1;
};

EdgeWalk walk_edge(const CubeComplex& cc, int cube, int edge, int exit) {
  EdgeWalk w;
  int c = cube, e = edge, x = exit;
  const int guard = cc.size() * 12 * 2 + 4;
  while (w.length < guard) {
    w.visited.push_back({c, e});
    ++w.length;
    const auto& g = cc.glue_at(c, x);
    if (!g) {
      w.end = {c, x};
      w.end_edge = e;
      return w;
    }
    const int e2 = g->map.cell(e);
    const auto ef = edge_faces(e2);
    const int next = ef[0] == g->target_face ? ef[1] : ef[0];
    w.map = g->map.compose(w.map);
    c = g->target;
    e = e2;
    x = next;
    if (c == cube && e == edge && x == exit) {
      w.closed = true;
      return w;
    }
  }
  throw EngineError(ErrorCode::InvalidArgument, "edge walk did not terminate");
}

struct CellOrbits {
  std::array<int, 4> count{};
  std::vector<int> label;  // cube*27 + cell
};

CellOrbits cell_orbits(const CubeComplex& cc) {
  UnionFind uf(cc.size() * 27);
  for (int c = 0; c < cc.size(); ++c)
    for (int f = 0; f < 6; ++f)
      if (const auto& g = cc.glue_at(c, f)) {
        const int fc = cube_face_cell(f);
        for (int x = 0; x < 27; ++x)
          if (cell_le(x, fc)) uf.unite(c * 27 + x, g->target * 27 + g->map.cell(x));
      }
  CellOrbits out;
  uf.labels(out.label);
  std::set<int> seen;
  for (int i = 0; i < cc.size() * 27; ++i)
    if (seen.insert(out.label[i]).second) ++out.count[cube_cell_dim(i % 27)];
  return out;
}

}  // namespace

FlatReport verify_flat_structure(const CubeComplex& cc) {
  FlatReport rep;
  const int n = cc.size();
  rep.cubes = n;
  rep.free_faces = cc.free_faces();
  rep.closed = rep.free_faces == 0;
  for (int c = 0; c < n; ++c)
    for (int f = 0; f < 6; ++f) {
      const auto& g = cc.glue_at(c, f);
      if (!g) continue;
      const auto& back = cc.glue_at(g->target, g->target_face);
      if (!back || back->target != c || back->target_face != f || !back->map.compose(g->map).is_identity())
        rep.problems.push_back("face gluing is not involutive at cube " + std::to_string(c));
    }
  for (int c = 0; c < static_cast<int>(cc.face_colors.size()); ++c)
    for (int a = 0; a < 3; ++a)
      if (cc.face_colors[c][2 * a] != cc.face_colors[c][2 * a + 1])
        rep.problems.push_back("opposite faces of cube " + std::to_string(c) + " differ in colour");
  if (!rep.problems.empty()) return rep;

  // edge classes
  std::vector<char> seen(n * 27, 0);
  for (int c = 0; c < n; ++c)
    for (int e = 0; e < 27; ++e) {
      if (cube_cell_dim(e) != 1 || seen[c * 27 + e]) continue;
      const auto ef = edge_faces(e);
      EdgeWalk fwd = walk_edge(cc, c, e, ef[0]);
      std::vector<std::array<int, 2>> visited = fwd.visited;
      int length = fwd.length;
      if (!fwd.closed) {
        EdgeWalk bwd = walk_edge(cc, c, e, ef[1]);
        visited.insert(visited.end(), bwd.visited.begin() + 1, bwd.visited.end());
        length += bwd.length - 1;
      }
      std::sort(visited.begin(), visited.end());
      const bool repeats = std::adjacent_find(visited.begin(), visited.end()) != visited.end();
      for (const auto& v : visited) seen[v[0] * 27 + v[1]] = 1;
      const std::string where = "edge class at cube " + std::to_string(c);
      if (fwd.closed) {
        ++rep.interior_edge_classes;
        if (length != 4 || repeats)
          rep.problems.push_back(where + " has " + std::to_string(length) + " corners");
        else if (!fwd.map.is_identity())
          rep.problems.push_back(where + " has nontrivial return " + fwd.map.text());
      } else {
        ++rep.boundary_edge_classes;
        if (length != 2 || repeats) rep.problems.push_back("boundary " + where + " has " + std::to_string(length) + " corners");
      }
    }

  // vertex links: triangles (cube, corner), sides (cube, corner, face), corners (cube, corner, edge)
  auto side_id = [](int c, int x, int f) { return (c * 27 + x) * 6 + f; };
  auto corner_id = [](int c, int x, int e) { return (c * 27 + x) * 27 + e; };
  UnionFind verts(n * 27), sides(n * 27 * 6), corners(n * 27 * 27);
  for (int c = 0; c < n; ++c)
    for (int f = 0; f < 6; ++f) {
      const auto& g = cc.glue_at(c, f);
      if (!g) continue;
      const int fc = cube_face_cell(f);
      for (int x = 0; x < 27; ++x) {
        if (cube_cell_dim(x) != 0 || !cell_le(x, fc)) continue;
        const int gx = g->map.cell(x);
        verts.unite(c * 27 + x, g->target * 27 + gx);
        sides.unite(side_id(c, x, f), side_id(g->target, gx, g->target_face));
        for (int e = 0; e < 27; ++e)
          if (cube_cell_dim(e) == 1 && cell_le(x, e) && cell_le(e, fc))
            corners.unite(corner_id(c, x, e), corner_id(g->target, gx, g->map.cell(e)));
      }
    }
  std::map<int, std::vector<std::array<int, 2>>> classes;
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < 27; ++x)
      if (cube_cell_dim(x) == 0) classes[verts.find(c * 27 + x)].push_back({c, x});
  for (const auto& [root, tris] : classes) {
    std::set<int> side_roots, corner_roots;
    bool boundary = false;
    for (const auto& [c, x] : tris) {
      for (int f : faces_of(x)) {
        side_roots.insert(sides.find(side_id(c, x, f)));
        boundary |= !cc.glue_at(c, f).has_value();
      }
      for (int e = 0; e < 27; ++e)
        if (cube_cell_dim(e) == 1 && cell_le(x, e)) corner_roots.insert(corners.find(corner_id(c, x, e)));
    }
    const int chi = static_cast<int>(corner_roots.size()) - static_cast<int>(side_roots.size()) +
                    static_cast<int>(tris.size());
    const std::string where = "vertex link at cube " + std::to_string(tris.front()[0]);
    if (boundary) {
      ++rep.boundary_vertex_classes;
      if (chi != 1) rep.problems.push_back(where + " is not a disk (chi " + std::to_string(chi) + ")");
    } else {
      ++rep.interior_vertex_classes;
      if (tris.size() != 8 || chi != 2)
        rep.problems.push_back(where + " is not a sphere (" + std::to_string(tris.size()) + " corners, chi " +
                               std::to_string(chi) + ")");
    }
  }

  const CellOrbits orb = cell_orbits(cc);
  rep.euler_characteristic = orb.count[0] - orb.count[1] + orb.count[2] - orb.count[3];
  if (rep.closed && rep.euler_characteristic != 0)
    rep.problems.push_back("closed section with Euler characteristic " + std::to_string(rep.euler_characteristic));
  rep.ok = rep.problems.empty();
  return rep;
}

std::vector<BoundarySurface> boundary_surfaces(const CubeComplex& cc) {
  const int n = cc.size();
  const CellOrbits orb = cell_orbits(cc);
  std::vector<std::array<int, 2>> squares;
  std::map<std::array<int, 2>, int> square_index;
  for (int c = 0; c < n; ++c)
    for (int f = 0; f < 6; ++f)
      if (!cc.glue_at(c, f)) {
        square_index[{c, f}] = static_cast<int>(squares.size());
        squares.push_back({c, f});
      }

  // boundary direction of an edge of a face, in the face's reference orientation (u, v)
  auto direction = [](int face, int edge) {
    const int a = face / 2;
    const int u = a == 0 ? 1 : 0, v = a == 2 ? 1 : 2;
    const auto t = trits(edge);
    if (t[u] == 2) return t[v] == 0 ? 1 : -1;
    return t[u] == 0 ? -1 : 1;
  };
  auto free_axis = [](int edge) {
    const auto t = trits(edge);
    for (int i = 0; i < 3; ++i)
      if (t[i] == 2) return i;
    return -1;
  };

  struct Link {
    int other;
    int sign;  // orientation of the neighbour relative to this square when coherent
  };
  std::vector<std::vector<Link>> links(squares.size());
  for (int s = 0; s < static_cast<int>(squares.size()); ++s) {
    const auto [c, f] = squares[s];
    const int fc = cube_face_cell(f);
    for (int e = 0; e < 27; ++e) {
      if (cube_cell_dim(e) != 1 || !cell_le(e, fc)) continue;
      const auto ef = edge_faces(e);
      const int exit = ef[0] == f ? ef[1] : ef[0];
      const EdgeWalk w = walk_edge(cc, c, e, exit);
      if (w.closed) continue;  // reported by verify_flat_structure
      const int t = square_index.at(w.end);
      const int e2 = w.end_edge;
      const int k = free_axis(e);
      int k2 = 0;
      while (w.map.perm[k2] != k) ++k2;
      const int carried = direction(f, e) * (w.map.flip[k2] ? -1 : 1);
      links[s].push_back({t, -carried * direction(w.end[1], e2)});
    }
  }

  std::vector<int> comp(squares.size(), -1), sigma(squares.size(), 0);
  std::vector<BoundarySurface> out;
  for (int s0 = 0; s0 < static_cast<int>(squares.size()); ++s0) {
    if (comp[s0] >= 0) continue;
    BoundarySurface surf;
    surf.orientable = true;
    const int id = static_cast<int>(out.size());
    std::queue<int> q;
    q.push(s0);
    comp[s0] = id;
    sigma[s0] = 1;
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      surf.faces.push_back(squares[s]);
      for (const auto& l : links[s]) {
        const int want = sigma[s] * l.sign;
        if (comp[l.other] < 0) {
          comp[l.other] = id;
          sigma[l.other] = want;
          q.push(l.other);
        } else if (sigma[l.other] != want) {
          surf.orientable = false;
        }
      }
    }
    std::sort(surf.faces.begin(), surf.faces.end());
    std::set<int> vs, es;
    for (const auto& [c, f] : surf.faces) {
      const int fc = cube_face_cell(f);
      for (int x = 0; x < 27; ++x) {
        if (!cell_le(x, fc) || x == fc) continue;
        (cube_cell_dim(x) == 0 ? vs : es).insert(orb.label[c * 27 + x]);
      }
    }
    surf.squares = static_cast<int>(surf.faces.size());
    surf.euler_characteristic = static_cast<int>(vs.size()) - static_cast<int>(es.size()) + surf.squares;
    if (surf.euler_characteristic != 0)
      throw EngineError(ErrorCode::NonFlatBoundary, "boundary surface with Euler characteristic " +
                                                        std::to_string(surf.euler_characteristic));
    out.push_back(std::move(surf));
  }
  return out;
}

Orientability cusp_orientability(const CubeComplex& cc) {
  const int n = cc.size();
  std::vector<int> eps(n, 0);
  for (int root = 0; root < n; ++root) {
    if (eps[root]) continue;
    eps[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int a = q.front();
      q.pop();
      for (int f = 0; f < 6; ++f) {
        const auto& g = cc.glue_at(a, f);
        if (!g) continue;
        const int want = -g->map.determinant() * eps[a];
        if (eps[g->target] == 0) {
          eps[g->target] = want;
          q.push(g->target);
        } else if (eps[g->target] != want) {
          return Orientability::NonOrientable;
        }
      }
    }
  }
  return Orientability::Orientable;
}

FlagModel order_complex_model(const CubeComplex& cc) {
  std::vector<FaceGlue> glues;
  for (int c = 0; c < cc.size(); ++c)
    for (int f = 0; f < 6; ++f)
      if (const auto& g = cc.glue_at(c, f)) {
        FaceGlue fg{c, g->target, cube_face_cell(f), std::vector<int>(27)};
        for (int x = 0; x < 27; ++x) fg.cell_map[x] = g->map.cell(x);
        glues.push_back(std::move(fg));
      }
  return order_complex_model(cube_poset(), cc.size(), glues);
}

AbelianGroup cube_h1(const CubeComplex& cc) {
  std::vector<FaceGlue> glues;
  for (int c = 0; c < cc.size(); ++c)
    for (int f = 0; f < 6; ++f)
      if (const auto& g = cc.glue_at(c, f)) {
        FaceGlue fg{c, g->target, cube_face_cell(f), std::vector<int>(27)};
        for (int x = 0; x < 27; ++x) fg.cell_map[x] = g->map.cell(x);
        glues.push_back(std::move(fg));
      }
  FlagOptions opt;
  opt.max_simplex_dim = 2;
  return homology_groups(order_complex_model(cube_poset(), cc.size(), glues, opt).complex, 1).at(1);
}

const char* flat_closed_name(FlatClosedType t) {
  static const char* names[] = {"G1", "G2", "G3", "G4", "G5", "G6", "B1", "B2", "B3", "B4"};
  return names[static_cast<int>(t)];
}

const char* flat_compact_name(FlatCompactType t) {
  switch (t) {
    case FlatCompactType::TxI: return "TxI";
    case FlatCompactType::TwistedIBundleOverKlein: return "TwistedIBundleOverKlein";
    case FlatCompactType::MoebiusTimesCircle: return "MoebiusTimesCircle";
    case FlatCompactType::Other: return "Other";
  }
  return "?";
}

namespace {

DenseMatrix minus_identity(const std::vector<std::vector<int>>& a) {
  DenseMatrix d(a.size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d[i][j] = a[i][j] - (i == j ? 1 : 0);
  return d;
}

std::string matrix_text(const std::vector<std::vector<int>>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < a[i].size(); ++j) s += (j ? "," : "") + std::to_string(a[i][j]);
    s += "]";
  }
  return s + "]";
}

/// Z + coker(A - I) on H1 of the torus.
AbelianGroup torus_mapping_torus(const std::vector<std::vector<int>>& a) {
  AbelianGroup g = AbelianGroup::cokernel(minus_identity(a), 2);
  g.rank += 1;
  return g;
}

/// Z + coker(A - I) on H1(K) = <b> + <a | 2a>, generators ordered (b, a);
/// A is any integer lift of the induced map.
AbelianGroup klein_mapping_torus(const std::vector<std::vector<int>>& a) {
  DenseMatrix rel = minus_identity(a);
  rel[0].push_back(0);
  rel[1].push_back(2);
  AbelianGroup g = AbelianGroup::cokernel(rel, 2);
  g.rank += 1;
  return g;
}

}  // namespace

const std::vector<FlatTypeEntry>& flat_type_table() {
  static const std::vector<FlatTypeEntry> table = [] {
    using M = std::vector<std::vector<int>>;
    std::vector<FlatTypeEntry> t;
    auto torus = [&](FlatClosedType type, Orientability o, const M& a) {
      t.push_back({type, o, torus_mapping_torus(a), "mapping torus of T^2, monodromy " + matrix_text(a)});
    };
    auto klein = [&](FlatClosedType type, const M& a) {
      t.push_back({type, Orientability::NonOrientable, klein_mapping_torus(a),
                   "mapping torus of K, action " + matrix_text(a) + " on (b, a)"});
    };
    torus(FlatClosedType::G1, Orientability::Orientable, {{1, 0}, {0, 1}});
    torus(FlatClosedType::G2, Orientability::Orientable, {{-1, 0}, {0, -1}});
    torus(FlatClosedType::G3, Orientability::Orientable, {{0, -1}, {1, -1}});
    torus(FlatClosedType::G4, Orientability::Orientable, {{0, -1}, {1, 0}});
    torus(FlatClosedType::G5, Orientability::Orientable, {{1, -1}, {1, 0}});
    t.push_back({FlatClosedType::G6, Orientability::Orientable, AbelianGroup::from_cyclic({4, 4}),
                 "Hantzsche-Wendt manifold"});
    klein(FlatClosedType::B1, {{1, 0}, {0, 1}});
    torus(FlatClosedType::B2, Orientability::NonOrientable, {{0, 1}, {1, 0}});
    klein(FlatClosedType::B3, {{-1, 0}, {0, 1}});
    klein(FlatClosedType::B4, {{-1, 0}, {1, 1}});
    return t;
  }();
  return table;
}

bool flat_table_injective(const std::vector<FlatTypeEntry>& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table[i].orientability == table[j].orientability && table[i].h1 == table[j].h1) return false;
  return true;
}

FlatClosedType classify_closed(Orientability o, const AbelianGroup& h1) {
  std::vector<FlatClosedType> hits;
  for (const auto& e : flat_type_table())
    if (e.orientability == o && e.h1 == h1) hits.push_back(e.type);
  if (hits.size() != 1)
    throw EngineError(ErrorCode::UnclassifiedFlatType,
                      std::string(orientability_name(o)) + " section with H1 = " + h1.text() + " matches " +
                          std::to_string(hits.size()) + " flat types");
  return hits.front();
}

FlatCompactType classify_compact(Orientability o, int boundary_components, const AbelianGroup& h1) {
  const AbelianGroup z2 = AbelianGroup::free(2);
  const AbelianGroup z_z2{1, {2}};
  if (o == Orientability::Orientable && boundary_components == 2 && h1 == z2) return FlatCompactType::TxI;
  if (o == Orientability::Orientable && boundary_components == 1 && h1 == z_z2)
    return FlatCompactType::TwistedIBundleOverKlein;
  if (o == Orientability::NonOrientable && boundary_components == 1 && h1 == z2)
    return FlatCompactType::MoebiusTimesCircle;
  throw EngineError(ErrorCode::UnclassifiedCompactType,
                    std::string(orientability_name(o)) + " section with " + std::to_string(boundary_components) +
                        " boundary components and H1 = " + h1.text());
}

FlatClosedType classify_closed(const CubeComplex& cc) {
  if (cc.free_faces() != 0) throw EngineError(ErrorCode::UnclassifiedFlatType, "section has boundary");
  return classify_closed(cusp_orientability(cc), cube_h1(cc));
}

FlatCompactType classify_compact(const CubeComplex& cc) {
  if (cc.free_faces() == 0) throw EngineError(ErrorCode::UnclassifiedCompactType, "section is closed");
  return classify_compact(cusp_orientability(cc), static_cast<int>(boundary_surfaces(cc).size()), cube_h1(cc));
}

namespace {

CubeSym flip_axes(int mask) { return {{0, 1, 2}, {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}}; }

/// One cube with y and z faces glued by translation and x faces by `x_map`.
CubeComplex one_cube(const CubeSym& x_map) {
  CubeComplex cc(1);
  cc.glue(0, 0, 0, 1, x_map);
  cc.glue(0, 2, 0, 3, flip_axes(2));
  cc.glue(0, 4, 0, 5, flip_axes(4));
  return cc;
}

}  // namespace

// A translation x -> x + e_a is stored as the flip of axis a: reflecting the
// translated cube back across the target face lands on the flip.
CubeComplex three_torus() { return one_cube(flip_axes(1)); }
CubeComplex dicosm_g2() { return one_cube(flip_axes(7)); }
CubeComplex quarter_turn_g4() { return one_cube({{0, 2, 1}, {1, 1, 0}}); }
CubeComplex klein_times_circle() { return one_cube(flip_axes(3)); }

}  // namespace ideal24
