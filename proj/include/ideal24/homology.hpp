#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ideal24 {

using BigInt = boost::multiprecision::cpp_int;
using DenseMatrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  std::vector<BigInt> factors;  // nonzero invariant factors, d1 | d2 | ...
  int rows = 0;
  int cols = 0;
  int rank() const { return static_cast<int>(factors.size()); }
};

/// Dense Smith normal form with smallest-pivot elimination.
SNFResult smith_normal_form(DenseMatrix m);

/// Integer matrix stored by columns. Entries are small in every complex built here.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> columns;  // sorted by row

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  DenseMatrix dense() const;
};

/// Unit-pivot sparse elimination followed by dense SNF on what is left.
SNFResult smith_normal_form(const SparseMatrix& m);

/// Z^rank + Z/t1 + ... with t1 | t2 | ... and every ti > 1.
struct AbelianGroup {
  int rank = 0;
  std::vector<BigInt> torsion;

  static AbelianGroup free(int rank) { return {rank, {}}; }
  /// Normalizes an arbitrary list of cyclic orders (0 means Z, 1 is dropped).
  static AbelianGroup from_cyclic(const std::vector<BigInt>& orders);
  /// Cokernel of an integer relation matrix (columns are relations among `rows` generators).
  static AbelianGroup cokernel(const DenseMatrix& relations, int generators);

  std::string text() const;  // "Z^2 + Z/2", "0"
  std::vector<std::int64_t> torsion_int() const;
  auto operator<=>(const AbelianGroup&) const = default;
};

/// boundary[d] maps C_d to C_{d-1}; boundary[0] is an empty 0-row matrix.
struct ChainComplex {
  std::vector<int> cells;
  std::vector<SparseMatrix> boundary;
  int top_dim() const { return static_cast<int>(cells.size()) - 1; }
};

bool boundary_squared_zero(const ChainComplex& c);
/// H_0 .. H_top. Throws BoundarySquareNonzero when some composite is nonzero.
/// With max_dim >= 0 only H_0..H_max_dim are computed.
std::vector<AbelianGroup> homology_groups(const ChainComplex& c, int max_dim = -1);

/// Face poset of one model cell (polytope, cube, octahedron): dims and, for
/// every cell, all of its proper faces.
struct LocalPoset {
  std::vector<int> dim;
  std::vector<std::vector<int>> below;
};

/// Face `face` of copy `from` is identified with its image in copy `to`;
/// cell_map sends each local cell of the face to a local cell of the image.
struct FaceGlue {
  int from = 0;
  int to = 0;
  int face = 0;
  std::vector<int> cell_map;
};

struct FlagOptions {
  int min_cell_dim = 0;  // 1 drops ideal vertices
  int max_simplex_dim = -1;  // -1: all flags
  std::function<bool(int copy, int cell)> keep;  // subcomplex selector; every cell when empty
};

/// Order complex of the quotient face poset: simplices are orbits of local
/// flags under the gluings, vertices ordered by cell dimension.
struct FlagModel {
  ChainComplex complex;
  int components = 0;  // connected components of the 1-skeleton
  long euler_characteristic() const;
};

FlagModel order_complex_model(const LocalPoset& poset, int copies, const std::vector<FaceGlue>& glues,
                              const FlagOptions& opt = {});

}  // namespace ideal24
