#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideal24/pipeline.hpp"

namespace ideal24 {

/// Restricted census: one uniform map per colour, then boundary components glued
/// in pairs by every seed (4 x 48 per pair).
///
/// Text form, one directive per line:
///   copies 1|2
///   mirror <color>              pair that colour of copy 0 with copy 1 (two copies)
///   candidates <color> <map>... maps tried for that colour; colours without a line stay unpaired
///   boundary seedsearch|none
///   cap <N>                     stop after N enumerated assignments
struct CensusScheme {
  int copies = 1;
  std::optional<Color> mirrored;
  std::array<std::optional<std::vector<Isometry>>, 3> candidates;  // indexed by Color
  bool seed_search = false;
  long cap = 200000;
};

CensusScheme parse_census_scheme(const std::string& text);
CensusScheme load_census_scheme(const std::string& path);

struct CensusEntry {
  long assignment = 0;  // enumeration index where the signature first appeared
  std::string description;
  ConstructionScript script;  // reproduces the table with colour and explicit pair stages
  Signature signature;
};

struct CensusResult {
  std::vector<CensusEntry> entries;  // first occurrence of each signature, in enumeration order
  long enumerated = 0;
  long verified = 0;  // assignments whose signature was computed
  long symmetric_skips = 0;  // assignments equivalent to an earlier one
  bool capped = false;
};

/// Deterministic. Keeps closed manifolds only and dedups by signature. The cap
/// bounds enumerated assignments (`cap_override` replaces the scheme's cap).
CensusResult census_enumerate(const CensusScheme& scheme, std::optional<long> cap_override = std::nullopt);

/// Copy permutations (index 0) and 24-cell symmetries preserving every pairing of the table.
std::vector<std::pair<std::vector<int>, Isometry>> table_symmetries(const PairingTable& t);

}  // namespace ideal24
