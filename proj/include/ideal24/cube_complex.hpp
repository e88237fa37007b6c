#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideal24/homology.hpp"
#include "ideal24/quotient.hpp"

namespace ideal24 {

/// Symmetry of [0,1]^3: coordinate i of the image is x[perm[i]], flipped
/// (x -> 1 - x) when flip[i] is set.
///
/// Cells of the cube are trit vectors t in {0,1,2}^3 (2 = free coordinate),
/// indexed t0 + 3 t1 + 9 t2. Faces are numbered axis*2 + side.
struct CubeSym {
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> flip{0, 0, 0};

  static CubeSym identity() { return {}; }
  int cell(int c) const;
  int face(int f) const;
  CubeSym compose(const CubeSym& rhs) const;  // this after rhs
  CubeSym inverse() const;
  int determinant() const;
  bool is_identity() const { return *this == CubeSym{}; }
  std::string text() const;  // image coordinates, e.g. "1-x,z,y"
  auto operator<=>(const CubeSym&) const = default;
};

const std::vector<CubeSym>& cube_symmetries();  // all 48, sorted

int cube_face_cell(int face);
int cube_cell_dim(int cell);
/// Local face poset of the cube (27 cells).
const LocalPoset& cube_poset();

struct CubeGlue {
  int target = -1;
  int target_face = -1;
  CubeSym map;  // carries the source cube onto the target cube, face to face
};

/// Cubes glued along square faces. A gluing map sends the source cube to the
/// target cube with the glued faces matched; the actual attaching map is its
/// restriction to the face.
class CubeComplex {
 public:
  explicit CubeComplex(int count = 0) : glues_(count) {}

  int size() const { return static_cast<int>(glues_.size()); }
  void glue(int a, int fa, int b, int fb, const CubeSym& map);
  const std::optional<CubeGlue>& glue_at(int cube, int face) const { return glues_[cube][face]; }
  int free_faces() const;

  // provenance when built from a cusp
  std::vector<CuspMember> members;
  std::vector<std::array<int, 6>> face_facets;  // 24-cell facet behind each face
  std::vector<std::array<Color, 6>> face_colors;

 private:
  std::vector<std::array<std::optional<CubeGlue>, 6>> glues_;
};

/// Frame of the vertex-figure cube at 24-cell vertex v: axis k is the k-th
/// pair of opposite facets at v (ordered by smaller facet index); side 0 is
/// the smaller facet.
std::array<int, 6> vertex_cube_facets(int vertex);
/// Cube symmetry induced by a 24-cell symmetry from the cube at v to the cube at m(v).
CubeSym induced_cube_map(const Isometry& m, int vertex);

CubeComplex cusp_complex(const QuotientComplex& qc, int cusp);

struct FlatReport {
  bool ok = false;
  bool closed = false;
  int cubes = 0;
  int free_faces = 0;
  int interior_edge_classes = 0;
  int boundary_edge_classes = 0;
  int interior_vertex_classes = 0;
  int boundary_vertex_classes = 0;
  long euler_characteristic = 0;  // cells of the quotient
  std::vector<std::string> problems;
};

FlatReport verify_flat_structure(const CubeComplex& cc);

struct BoundarySurface {
  int squares = 0;
  int euler_characteristic = 0;
  bool orientable = false;
  std::vector<std::array<int, 2>> faces;  // (cube, face)
  std::string type() const { return orientable ? "torus" : "Klein bottle"; }
};

/// Components of the free-face square complex. Throws NonFlatBoundary if chi != 0.
std::vector<BoundarySurface> boundary_surfaces(const CubeComplex& cc);

Orientability cusp_orientability(const CubeComplex& cc);

/// Flag model of the cube complex (all cells).
FlagModel order_complex_model(const CubeComplex& cc);
AbelianGroup cube_h1(const CubeComplex& cc);

enum class FlatClosedType { G1, G2, G3, G4, G5, G6, B1, B2, B3, B4 };
enum class FlatCompactType { TxI, TwistedIBundleOverKlein, MoebiusTimesCircle, Other };
const char* flat_closed_name(FlatClosedType t);
const char* flat_compact_name(FlatCompactType t);

struct FlatTypeEntry {
  FlatClosedType type;
  Orientability orientability;
  AbelianGroup h1;
  std::string source;  // how the entry was derived
};

/// Ten-row table built from the standard holonomy descriptions:
/// H1 = Z + coker(A - I) for mapping tori of the torus and of the Klein bottle,
/// and Z/4 + Z/4 for the Hantzsche-Wendt manifold.
const std::vector<FlatTypeEntry>& flat_type_table();
bool flat_table_injective(const std::vector<FlatTypeEntry>& table);

/// Lookup in the table. Throws UnclassifiedFlatType.
FlatClosedType classify_closed(Orientability o, const AbelianGroup& h1);
/// Throws UnclassifiedCompactType.
FlatCompactType classify_compact(Orientability o, int boundary_components, const AbelianGroup& h1);

FlatClosedType classify_closed(const CubeComplex& cc);
FlatCompactType classify_compact(const CubeComplex& cc);

/// Single-cube fundamental domains of some flat manifolds, for cross-checks.
CubeComplex three_torus();
CubeComplex dicosm_g2();
CubeComplex quarter_turn_g4();
CubeComplex klein_times_circle();

}  // namespace ideal24
