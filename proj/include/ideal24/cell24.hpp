#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ideal24/isometry.hpp"

namespace ideal24 {

enum class Color { Red, Green, Blue };

const char* color_name(Color c);

/// Support hyperplane of a facet: x_axis = sign (Green) or sum s_i x_i = 2.
class FacetLabel {
 public:
  enum class Kind { Green, SignVector };

  /// axis is 0-based here; text forms use 1-based axes ("x1+").
  static FacetLabel green(int axis, int sign);
  static FacetLabel sign_vector(const std::array<int, 4>& signs);
  /// Parses "x1+" / "x3-" / "+++-".
  static FacetLabel parse(const std::string& text);

  Kind kind() const { return kind_; }
  int axis() const { return axis_; }
  int sign() const { return sign_; }
  const std::array<int, 4>& signs() const { return signs_; }

  /// n with the hyperplane written n.x = 2.
  Vector4 normal() const;
  bool contains(const Vector4& v) const { return dot(normal(), v) == 2; }
  std::string text() const;

  friend bool operator==(const FacetLabel&, const FacetLabel&) = default;
  friend std::strong_ordering operator<=>(const FacetLabel& a, const FacetLabel& b);

 private:
  Kind kind_ = Kind::Green;
  int axis_ = 0;
  int sign_ = 1;
  std::array<int, 4> signs_{};
};

Color facet_color(const FacetLabel& label);

/// Sign pattern of a vertex up to global sign; first nonzero entry is +.
struct CuspLabel {
  std::array<int, 4> pattern{};
  std::string text() const;  // "[(+,+,0,0)]"
  std::string compact() const;  // "++00"
  auto operator<=>(const CuspLabel&) const = default;
};

CuspLabel canonical_cusp_label(const Vector4& v);
/// Parses "++00", "0+-0", optionally wrapped as "[(+,+,0,0)]"; result is canonical.
CuspLabel parse_cusp_label(const std::string& text);

struct CellRef {
  int dim = 0;
  int index = 0;
  auto operator<=>(const CellRef&) const = default;
};

/// Image of every cell under one symmetry. cells[d][i] is the image index.
struct CellAction {
  std::array<std::vector<int>, 4> cells;
  int vertex(int v) const { return cells[0][v]; }
  int facet(int f) const { return cells[3][f]; }
};

/// Exact incidence model of the 24-cell. Cells of each dimension are sorted
/// lexicographically (vertices by coordinates, edges/triangles by vertex index
/// tuples, facets by label).
class Cell24Model {
 public:
  std::vector<Vector4> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<FacetLabel> facets;
  std::vector<std::array<int, 6>> facet_vertices;

  // incidence between consecutive dimensions
  std::vector<std::vector<int>> vertex_edges;
  std::vector<std::array<int, 3>> triangle_edges;
  std::vector<std::vector<int>> edge_triangles;
  std::vector<std::array<int, 2>> triangle_facets;
  std::vector<std::array<int, 8>> facet_triangles;
  std::vector<std::array<int, 12>> facet_edges;
  std::vector<std::vector<int>> vertex_facets;
  std::vector<std::vector<int>> vertex_triangles;

  int count(int dim) const;
  std::vector<int> cell_vertices(CellRef c) const;
  int vertex_index(const Vector4& v) const;
  int facet_index(const FacetLabel& f) const;
  /// Cell with exactly this (sorted) vertex set, or dim -1 if none.
  CellRef find_cell(const std::vector<int>& sorted_vertices) const;
  Color color(int facet) const { return facet_color(facets[facet]); }

 private:
  friend Cell24Model build_24cell();
  std::map<std::vector<int>, CellRef> by_vertices_;
};

Cell24Model build_24cell();
/// Shared immutable instance.
const Cell24Model& cell24();

CellRef apply_isometry(const Isometry& m, CellRef c, const Cell24Model& model);
/// Throws EngineError(NonFacetImage) if the image vertex set is not a facet.
FacetLabel facet_image(const Isometry& m, const FacetLabel& f);
/// Cached action of m on all cells of the shared model.
const CellAction& cell_action(const Isometry& m);

}  // namespace ideal24
