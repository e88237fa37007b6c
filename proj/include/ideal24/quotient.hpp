#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideal24/pairing.hpp"

namespace ideal24 {

/// Copies of the 24-cell with the identifications generated by a pairing table.
///
/// Orbit ids are dense and numbered by first appearance in (copy, cell) order.
class QuotientComplex {
 public:
  const PairingTable& table() const { return table_; }
  int copies() const { return table_.copies(); }

  /// Orbit of cell `index` of dimension `dim` (0-3) in copy `copy`.
  int orbit(int dim, CopyId copy, int index) const { return orbit_[dim][copy * cell24().count(dim) + index]; }
  int orbit_count(int dim) const { return orbit_count_[dim]; }

  /// Pairing whose source is (copy, facet), or nullptr when the facet is unpaired.
  const Pairing* pairing_at(CopyId copy, int facet) const {
    const int i = slot_pairing_[copy * 24 + facet];
    return i < 0 ? nullptr : &table_.pairings()[i];
  }
  const std::vector<FacetSlot>& unpaired() const { return unpaired_; }

 private:
  friend QuotientComplex build_quotient(const PairingTable& t);
  PairingTable table_;
  std::vector<int> slot_pairing_;
  std::array<std::vector<int>, 4> orbit_;
  std::array<int, 4> orbit_count_{};
  std::vector<FacetSlot> unpaired_;
};

QuotientComplex build_quotient(const PairingTable& t);

/// One polytope corner of a ridge class.
struct RidgeCorner {
  CopyId copy;
  int triangle;
  auto operator<=>(const RidgeCorner&) const = default;
};

struct RidgeClassReport {
  enum class Kind { InteriorCycle, BoundaryChain };
  int orbit = 0;
  Kind kind = Kind::InteriorCycle;
  int length = 0;
  std::vector<RidgeCorner> corners;  // in walk order
  std::optional<Isometry> return_map;  // cycles only
  std::array<FacetSlot, 2> end_facets{};  // chains only: unpaired facets at the two ends
  /// Composite of the pairing maps along a chain, from the first end to the second.
  std::optional<Isometry> chain_map;
  bool ok = false;
  std::string problem;
};

/// Classifies every triangle orbit. Interior cycles need length 4 and identity
/// return; boundary chains need length 2.
std::vector<RidgeClassReport> ridge_check(const QuotientComplex& qc);
bool ridges_ok(const std::vector<RidgeClassReport>& reports);

/// Triangle of one unpaired facet glued to a triangle of another along a boundary chain.
struct BoundaryTriangleGlue {
  FacetSlot from;
  int from_triangle;
  FacetSlot to;
  int to_triangle;
  Isometry map;  // from copy frame -> to copy frame
};

struct BoundaryComponent {
  std::vector<FacetSlot> facets;  // sorted
  std::vector<BoundaryTriangleGlue> glues;  // both directions
};

/// Unpaired facets grouped along boundary-chain identifications; sorted by smallest facet.
std::vector<BoundaryComponent> boundary_strata(const QuotientComplex& qc);
/// Index of the component holding `slot`, or -1.
int component_of(const std::vector<BoundaryComponent>& comps, const FacetSlot& slot);

enum class Orientability { Orientable, NonOrientable };
const char* orientability_name(Orientability o);

/// Propagates copy orientations with eps(target) = -det(map) * eps(source).
Orientability orientability(const QuotientComplex& qc);

struct CuspMember {
  CopyId copy;
  int vertex;
  auto operator<=>(const CuspMember&) const = default;
};

struct CuspClass {
  int id = 0;
  std::vector<CuspMember> members;
  std::vector<CuspLabel> labels;  // distinct canonical labels of the members, sorted
};

std::vector<CuspClass> cusp_classes(const QuotientComplex& qc);

/// Number of copies (volume in units of 4*pi^2/3). Throws HasBoundary if a facet is unpaired.
int volume_multiple(const QuotientComplex& qc);

/// Copy (a, sign) of the cover has index 2a (sign +) or 2a+1 (sign -).
/// Throws AlreadyOrientable.
QuotientComplex orientation_double_cover(const QuotientComplex& qc);
PairingTable orientation_double_cover_table(const PairingTable& t);

}  // namespace ideal24
