#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ideal24/oct_complex.hpp"
#include "ideal24/pairing.hpp"

namespace ideal24 {

/// Pairs every facet of one colour in scope with its image under `map`.
/// Facets already paired by earlier stages are left out of the scope.
struct PairColorStage {
  std::optional<CopyId> copy;  // nullopt: every copy
  Color color = Color::Green;
  Isometry map;
  std::optional<CopyId> to;  // target copy; default is the source copy
  bool operator==(const PairColorStage&) const = default;
};

struct PairExplicitStage {
  std::vector<Pairing> pairs;  // one direction each; inverses are added
  bool operator==(const PairExplicitStage&) const = default;
};

/// Glues boundary component `src` onto `dst` by the isomorphism extending a
/// seed between two of their octahedra. Component ids refer to the boundary
/// left after all non-boundary stages.
struct BoundaryGlueStage {
  int src = 0;
  int dst = 0;
  FacetSlot seed_src;
  FacetSlot seed_dst;
  std::vector<std::pair<std::string, std::string>> vertices;  // cusp names, source -> target
  bool operator==(const BoundaryGlueStage&) const = default;
};

using Stage = std::variant<PairColorStage, PairExplicitStage, BoundaryGlueStage>;

/// A name for a set of cusp labels, e.g. "a" for [(+,0,+,0)] and [(+,0,-,0)].
struct CuspAlias {
  std::string name;
  std::vector<CuspLabel> labels;
  bool operator==(const CuspAlias&) const = default;
};

struct ConstructionScript {
  std::string name;
  int copies = 1;
  std::vector<CuspAlias> aliases;
  std::vector<Stage> stages;
  bool operator==(const ConstructionScript&) const = default;
};

/// Vertex of `facet` whose cusp label is named by `token` (an alias or a
/// label such as "+0-0"). Throws InvalidArgument unless exactly one matches.
int resolve_seed_vertex(const ConstructionScript& s, int facet, const std::string& token);

/// Local symmetry between the seed octahedra described by a boundary stage.
/// Throws SeedDoesNotExtend when the vertex table is not an octahedral map.
OctSym seed_symmetry(const ConstructionScript& s, const BoundaryGlueStage& st);

/// Throws DoublePairing, SeedDoesNotExtend, ColorScopeEmpty, InvalidArgument.
PairingTable compile_script(const ConstructionScript& s);

/// Pairings realizing an isomorphism between two boundary complexes.
std::vector<Pairing> pairings_from_isomorphism(const OctComplex& x, const OctComplex& y, const Automorphism3& iso);

}  // namespace ideal24
