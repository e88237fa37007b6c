#pragma once

#include "ideal24/homology.hpp"
#include "ideal24/oct_complex.hpp"
#include "ideal24/quotient.hpp"

namespace ideal24 {

/// Face poset of the 24-cell: vertices, edges, triangles, facets, then the
/// polytope itself (241 cells).
const LocalPoset& cell24_poset();
/// Offset of dimension d in cell24_poset numbering.
int cell24_poset_offset(int dim);

/// Flag model of the glued copies. The default drops the ideal vertices, so the
/// result is homotopy equivalent to the manifold itself.
FlagModel order_complex_model(const QuotientComplex& qc, const FlagOptions& opt = {1, -1, {}});

/// H_0 .. H_max_dim of the manifold (ideal vertices removed).
std::vector<AbelianGroup> manifold_homology(const QuotientComplex& qc, int max_dim = 1);

/// Face poset of the octahedron (local vertices, edges, triangles, solid; 27 cells).
const LocalPoset& oct_poset();
FlagModel order_complex_model(const OctComplex& oc, const FlagOptions& opt = {1, -1, {}});

}  // namespace ideal24
