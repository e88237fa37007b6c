#include "ideal24/cell24.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "ideal24/error.hpp"

namespace ideal24 {

const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
  }
  return "?";
}

FacetLabel FacetLabel::green(int axis, int sign) {
  if (axis < 0 || axis > 3 || (sign != 1 && sign != -1))
    throw EngineError(ErrorCode::InvalidArgument, "bad green facet");
  FacetLabel f;
  f.kind_ = Kind::Green;
  f.axis_ = axis;
  f.sign_ = sign;
  return f;
}

FacetLabel FacetLabel::sign_vector(const std::array<int, 4>& signs) {
  for (int s : signs)
    if (s != 1 && s != -1) throw EngineError(ErrorCode::InvalidArgument, "bad sign vector");
  FacetLabel f;
  f.kind_ = Kind::SignVector;
  f.signs_ = signs;
  return f;
}

FacetLabel FacetLabel::parse(const std::string& text) {
  if (text.size() == 3 && text[0] == 'x' && text[1] >= '1' && text[1] <= '4' && (text[2] == '+' || text[2] == '-'))
    return green(text[1] - '1', text[2] == '+' ? 1 : -1);
  if (text.size() == 4 && std::all_of(text.begin(), text.end(), [](char c) { return c == '+' || c == '-'; })) {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = text[i] == '+' ? 1 : -1;
    return sign_vector(s);
  }
  throw EngineError(ErrorCode::InvalidArgument, "invalid facet label '" + text + "'");
}

Vector4 FacetLabel::normal() const {
  if (kind_ == Kind::Green) {
    Vector4 n{0, 0, 0, 0};
    n[axis_] = 2 * sign_;
    return n;
  }
  return signs_;
}

std::string FacetLabel::text() const {
  if (kind_ == Kind::Green) return std::string("x") + char('1' + axis_) + (sign_ > 0 ? '+' : '-');
  std::string s;
  for (int v : signs_) s += v > 0 ? '+' : '-';
  return s;
}

std::strong_ordering operator<=>(const FacetLabel& a, const FacetLabel& b) {
  if (a.kind_ != b.kind_) return a.kind_ == FacetLabel::Kind::Green ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.kind_ == FacetLabel::Kind::Green) {
    if (auto c = a.axis_ <=> b.axis_; c != 0) return c;
    return b.sign_ <=> a.sign_;  // + before -
  }
  for (int i = 0; i < 4; ++i)
    if (a.signs_[i] != b.signs_[i]) return b.signs_[i] <=> a.signs_[i];
  return std::strong_ordering::equal;
}

Color facet_color(const FacetLabel& label) {
  if (label.kind() == FacetLabel::Kind::Green) return Color::Green;
  int minus = 0;
  for (int s : label.signs()) minus += s < 0;
  return minus % 2 == 0 ? Color::Red : Color::Blue;
}

std::string CuspLabel::text() const {
  std::string s = "[(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ',';
    s += pattern[i] > 0 ? "+" : pattern[i] < 0 ? "-" : "0";
  }
  return s + ")]";
}

std::string CuspLabel::compact() const {
  std::string s;
  for (int v : pattern) s += v > 0 ? '+' : v < 0 ? '-' : '0';
  return s;
}

CuspLabel canonical_cusp_label(const Vector4& v) {
  CuspLabel l;
  int flip = 0;
  for (int x : v)
    if (x != 0) {
      flip = x > 0 ? 1 : -1;
      break;
    }
  for (int i = 0; i < 4; ++i) l.pattern[i] = (v[i] > 0) - (v[i] < 0);
  for (int& x : l.pattern) x *= flip;
  return l;
}

CuspLabel parse_cusp_label(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c == '+' || c == '-' || c == '0') s += c;
    else if (c != '[' && c != ']' && c != '(' && c != ')' && c != ',')
      throw EngineError(ErrorCode::InvalidArgument, "invalid cusp label '" + text + "'");
  if (s.size() != 4) throw EngineError(ErrorCode::InvalidArgument, "invalid cusp label '" + text + "'");
  Vector4 v{};
  int nonzero = 0;
  for (int i = 0; i < 4; ++i) {
    v[i] = s[i] == '+' ? 1 : s[i] == '-' ? -1 : 0;
    nonzero += v[i] != 0;
  }
  if (nonzero != 2) throw EngineError(ErrorCode::InvalidArgument, "cusp label needs two nonzero entries: '" + text + "'");
  return canonical_cusp_label(v);
}

int Cell24Model::count(int dim) const {
  switch (dim) {
    case 0: return static_cast<int>(vertices.size());
    case 1: return static_cast<int>(edges.size());
    case 2: return static_cast<int>(triangles.size());
    case 3: return static_cast<int>(facets.size());
    default: throw EngineError(ErrorCode::InvalidArgument, "cell dimension out of range");
  }
}

std::vector<int> Cell24Model::cell_vertices(CellRef c) const {
  if (c.index < 0 || c.index >= count(c.dim)) throw EngineError(ErrorCode::InvalidArgument, "cell index out of range");
  switch (c.dim) {
    case 0: return {c.index};
    case 1: return {edges[c.index].begin(), edges[c.index].end()};
    case 2: return {triangles[c.index].begin(), triangles[c.index].end()};
    default: return {facet_vertices[c.index].begin(), facet_vertices[c.index].end()};
  }
}

int Cell24Model::vertex_index(const Vector4& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

int Cell24Model::facet_index(const FacetLabel& f) const {
  auto it = std::lower_bound(facets.begin(), facets.end(), f);
  if (it == facets.end() || *it != f) return -1;
  return static_cast<int>(it - facets.begin());
}

CellRef Cell24Model::find_cell(const std::vector<int>& sorted_vertices) const {
  auto it = by_vertices_.find(sorted_vertices);
  return it == by_vertices_.end() ? CellRef{-1, -1} : it->second;
}

Cell24Model build_24cell() {
  Cell24Model m;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          Vector4 v{0, 0, 0, 0};
          v[i] = si;
          v[j] = sj;
          m.vertices.push_back(v);
        }
  std::sort(m.vertices.begin(), m.vertices.end());
  const int nv = static_cast<int>(m.vertices.size());

  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (dot(m.vertices[a], m.vertices[b]) == 1) m.edges.push_back({a, b});
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b) {
      if (dot(m.vertices[a], m.vertices[b]) != 1) continue;
      for (int c = b + 1; c < nv; ++c)
        if (dot(m.vertices[a], m.vertices[c]) == 1 && dot(m.vertices[b], m.vertices[c]) == 1)
          m.triangles.push_back({a, b, c});
    }

  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) m.facets.push_back(FacetLabel::green(axis, sign));
  for (int mask = 0; mask < 16; ++mask) {
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) s[i] = (mask >> (3 - i)) & 1 ? -1 : 1;
    m.facets.push_back(FacetLabel::sign_vector(s));
  }
  std::sort(m.facets.begin(), m.facets.end());
  for (const auto& f : m.facets) {
    std::array<int, 6> vs{};
    int k = 0;
    for (int v = 0; v < nv; ++v)
      if (f.contains(m.vertices[v])) vs[k++] = v;
    if (k != 6) throw EngineError(ErrorCode::InvalidArgument, "facet without six vertices");
    m.facet_vertices.push_back(vs);
  }

  for (int v = 0; v < nv; ++v) m.by_vertices_[{v}] = {0, v};
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
    m.by_vertices_[{m.edges[e][0], m.edges[e][1]}] = {1, e};
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t) {
    const auto& tr = m.triangles[t];
    m.by_vertices_[{tr[0], tr[1], tr[2]}] = {2, t};
  }
  for (int f = 0; f < static_cast<int>(m.facets.size()); ++f) {
    const auto& fv = m.facet_vertices[f];
    m.by_vertices_[std::vector<int>(fv.begin(), fv.end())] = {3, f};
  }

  m.vertex_edges.assign(nv, {});
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
    for (int v : m.edges[e]) m.vertex_edges[v].push_back(e);

  m.edge_triangles.assign(m.edges.size(), {});
  m.vertex_triangles.assign(nv, {});
  m.triangle_edges.resize(m.triangles.size());
  for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t) {
    const auto& tr = m.triangles[t];
    const std::array<std::vector<int>, 3> sides{{{tr[0], tr[1]}, {tr[0], tr[2]}, {tr[1], tr[2]}}};
    for (int k = 0; k < 3; ++k) {
      const int e = m.by_vertices_.at(sides[k]).index;
      m.triangle_edges[t][k] = e;
      m.edge_triangles[e].push_back(t);
    }
    for (int v : tr) m.vertex_triangles[v].push_back(t);
  }

  auto subset = [](const auto& small, const auto& big) {
    return std::all_of(small.begin(), small.end(),
                       [&](int x) { return std::find(big.begin(), big.end(), x) != big.end(); });
  };
  m.triangle_facets.assign(m.triangles.size(), {-1, -1});
  m.facet_triangles.resize(m.facets.size());
  m.facet_edges.resize(m.facets.size());
  m.vertex_facets.assign(nv, {});
  for (int f = 0; f < static_cast<int>(m.facets.size()); ++f) {
    int kt = 0, ke = 0;
    for (int t = 0; t < static_cast<int>(m.triangles.size()); ++t)
      if (subset(m.triangles[t], m.facet_vertices[f])) {
        if (kt == 8) throw EngineError(ErrorCode::InvalidArgument, "facet with more than 8 triangles");
        m.facet_triangles[f][kt++] = t;
        auto& slot = m.triangle_facets[t];
        (slot[0] < 0 ? slot[0] : slot[1]) = f;
      }
    for (int e = 0; e < static_cast<int>(m.edges.size()); ++e)
      if (subset(m.edges[e], m.facet_vertices[f])) {
        if (ke == 12) throw EngineError(ErrorCode::InvalidArgument, "facet with more than 12 edges");
        m.facet_edges[f][ke++] = e;
      }
    for (int v : m.facet_vertices[f]) m.vertex_facets[v].push_back(f);
  }
  return m;
}

const Cell24Model& cell24() {
  static const Cell24Model model = build_24cell();
  return model;
}

CellRef apply_isometry(const Isometry& m, CellRef c, const Cell24Model& model) {
  std::vector<int> image;
  for (int v : model.cell_vertices(c)) image.push_back(model.vertex_index(m.apply(model.vertices[v])));
  std::sort(image.begin(), image.end());
  return model.find_cell(image);
}

FacetLabel facet_image(const Isometry& m, const FacetLabel& f) {
  const auto& model = cell24();
  const int idx = model.facet_index(f);
  std::vector<int> image;
  for (int v : model.facet_vertices[idx]) {
    const int w = model.vertex_index(m.apply(model.vertices[v]));
    if (w < 0) throw EngineError(ErrorCode::NonFacetImage, "vertex of " + f.text() + " leaves the 24-cell");
    image.push_back(w);
  }
  std::sort(image.begin(), image.end());
  const CellRef c = model.find_cell(image);
  if (c.dim != 3) throw EngineError(ErrorCode::NonFacetImage, "image of " + f.text() + " is not a facet");
  return model.facets[c.index];
}

const CellAction& cell_action(const Isometry& m) {
  static std::mutex mu;
  static std::unordered_map<Isometry, std::unique_ptr<CellAction>, IsometryHash> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  const auto& model = cell24();
  auto act = std::make_unique<CellAction>();
  for (int d = 0; d < 4; ++d) {
    act->cells[d].resize(model.count(d));
    for (int i = 0; i < model.count(d); ++i) {
      const CellRef img = apply_isometry(m, {d, i}, model);
      if (img.dim != d) throw EngineError(ErrorCode::NonFacetImage, "symmetry does not preserve cells");
      act->cells[d][i] = img.index;
    }
  }
  return *cache.emplace(m, std::move(act)).first->second;
}

}  // namespace ideal24
