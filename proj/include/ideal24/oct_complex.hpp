#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideal24/quotient.hpp"

namespace ideal24 {

/// Symmetry of an octahedron with local vertices 0..5, where 2k and 2k+1 are
/// opposite. image[i] is the image of local vertex i; opposite pairs go to
/// opposite pairs.
struct OctSym {
  std::array<int, 6> image{0, 1, 2, 3, 4, 5};

  static OctSym identity() { return {}; }
  /// Validates the opposite-pair condition.
  static std::optional<OctSym> from_images(const std::array<int, 6>& image);

  int vertex(int v) const { return image[v]; }
  int triangle(int t) const;  // local triangle ids 0..7, see oct_triangle_vertices
  OctSym compose(const OctSym& rhs) const;  // this after rhs
  OctSym inverse() const;
  bool is_identity() const { return *this == OctSym{}; }
  auto operator<=>(const OctSym&) const = default;
};

/// All 48 octahedral symmetries, sorted.
const std::vector<OctSym>& oct_symmetries();

/// Local triangle t picks vertex 2k + bit_k(t) from each opposite pair k.
std::array<int, 3> oct_triangle_vertices(int t);
int oct_triangle_of(int a, int b, int c);
/// 12 local edges (pairs of non-opposite vertices), sorted.
const std::vector<std::array<int, 2>>& oct_edges();

struct OctGlue {
  int target = -1;  // octahedron
  int target_triangle = -1;
  OctSym map;  // source local vertices -> target local vertices
};

/// Ideal octahedra glued along triangles.
class OctComplex {
 public:
  explicit OctComplex(int count = 0) : glues_(count) {}

  int size() const { return static_cast<int>(glues_.size()); }
  /// Glues (a, ta) to (b, tb) via map and the reverse via its inverse. Throws on conflicts.
  void glue(int a, int ta, int b, int tb, const OctSym& map);
  const std::optional<OctGlue>& glue_at(int oct, int triangle) const { return glues_[oct][triangle]; }

  // provenance when built from a quotient
  std::vector<FacetSlot> slots;
  std::vector<std::array<int, 6>> local_vertices;  // local vertex -> 24-cell vertex index
  std::vector<std::array<Color, 8>> triangle_colors;

 private:
  std::vector<std::array<std::optional<OctGlue>, 8>> glues_;
};

/// Local vertex order of a facet: opposite pairs ordered by their smaller vertex index.
std::array<int, 6> facet_local_vertices(int facet);

/// Throws NoBoundary if the quotient has no such component.
OctComplex boundary_complex(const QuotientComplex& qc, int component);
OctComplex boundary_complex(const BoundaryComponent& comp);

struct OctahedralReport {
  bool ok = false;
  int edge_classes = 0;
  int vertex_classes = 0;
  std::vector<int> edge_class_lengths;
  std::vector<int> vertex_link_euler;
  std::vector<std::string> problems;
};

OctahedralReport verify_octahedral(const OctComplex& oc);
int cusp_count3(const OctComplex& oc);
/// Ideal-vertex class of each (octahedron, local vertex), numbered by first appearance.
std::vector<std::array<int, 6>> ideal_vertex_classes(const OctComplex& oc);

/// Octahedron permutation with a local symmetry per octahedron.
struct Automorphism3 {
  std::vector<int> oct_image;
  std::vector<OctSym> maps;

  static Automorphism3 identity(int n);
  Automorphism3 compose(const Automorphism3& rhs) const;  // this after rhs
  Automorphism3 inverse() const;
  bool is_identity() const;
  auto operator<=>(const Automorphism3&) const = default;
};

/// True when the map sends every gluing of `from` onto a gluing of `to`.
bool commutes_with_gluings(const OctComplex& from, const OctComplex& to, const Automorphism3& iso);

/// Propagates the seed across triangle gluings. Throws SeedDoesNotExtend.
Automorphism3 extend_isometry(const OctComplex& x, const OctComplex& y, int source_oct, int target_oct,
                              const OctSym& seed);
/// Non-throwing variant.
std::optional<Automorphism3> try_extend(const OctComplex& x, const OctComplex& y, int source_oct, int target_oct,
                                        const OctSym& seed);

/// All automorphisms, found from seeds on octahedron 0; sorted.
std::vector<Automorphism3> automorphism_group(const OctComplex& oc);

/// Automorphism induced by (copy permutation, symmetry) acting on the 4-dimensional
/// complex. An empty copy permutation means the identity. Throws NotBoundaryPreserving.
Automorphism3 induced_boundary_automorphism(const QuotientComplex& qc, const Isometry& map, int component,
                                            const std::vector<int>& copy_perm = {});

struct ExactSequenceReport {
  bool ok = false;
  int group_order = 0;
  int kernel_order = 0;
  int stabilizer_order = 0;
  bool involutions = false;
  bool commute = false;
  bool normal = false;
  bool trivial_intersection = false;
  std::vector<std::string> problems;
};

/// Checks that W, V generate a normal Z2+Z2 meeting the stabilizer of
/// octahedron 0 trivially, with |G| = 4 * |Stab|.
ExactSequenceReport verify_exact_sequence(const std::vector<Automorphism3>& group, const Automorphism3& w,
                                          const Automorphism3& v);

}  // namespace ideal24
