#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ideal24/cell24.hpp"

namespace ideal24 {

using CopyId = int;

/// One facet of one copy of the 24-cell.
struct FacetSlot {
  CopyId copy = 0;
  int facet = 0;  // index into cell24().facets
  auto operator<=>(const FacetSlot&) const = default;
  std::string text() const;  // "(0,+++-)"
};

/// Identifies facet `source` with `target`: a point x of the source facet is glued to map(x).
struct Pairing {
  FacetSlot source;
  FacetSlot target;
  Isometry map;
  bool operator==(const Pairing&) const = default;
};

/// Facet pairings over a fixed number of copies. The list may be malformed;
/// `validate_table` reports what is wrong with it.
class PairingTable {
 public:
  explicit PairingTable(int copies = 1) : copies_(copies) {}

  int copies() const { return copies_; }
  const std::vector<Pairing>& pairings() const { return pairings_; }

  /// Appends without checks.
  void add_raw(const Pairing& p) { pairings_.push_back(p); }
  /// Adds a -> b and its inverse b -> a (once, for a self-pairing).
  /// Throws DoublePairing if either facet already has a pairing.
  void add_pair(const FacetSlot& a, const FacetSlot& b, const Isometry& map);

  bool is_paired(const FacetSlot& s) const;
  /// First pairing with this source, or nullptr.
  const Pairing* find(const FacetSlot& s) const;

  /// Dense lookup: entry copy*24+facet holds the pairing index or -1.
  std::vector<int> slot_index() const;

  bool operator==(const PairingTable&) const = default;

 private:
  int copies_;
  std::vector<Pairing> pairings_;
};

enum class Violation { DoublePairing, MissingInverse, MapMismatch, FixedPointOnFacet, CopyOutOfRange };

const char* violation_name(Violation v);

struct ValidationReport {
  struct Entry {
    Violation kind;
    FacetSlot slot;
    std::string detail;
  };
  std::vector<Entry> violations;
  bool valid() const { return violations.empty(); }
  bool has(Violation v) const;
};

ValidationReport validate_table(const PairingTable& t);

}  // namespace ideal24
