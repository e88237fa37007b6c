#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideal24/cube_complex.hpp"
#include "ideal24/script.hpp"

namespace ideal24 {

struct VerifyOptions {
  bool double_cover = false;
  bool boundary_auts = false;
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SurfaceReport {
  std::string type;  // "torus" or "Klein bottle"
  int squares = 0;
  int component = -1;  // boundary 3-stratum carrying the surface
};

struct CuspReport {
  int id = 0;
  std::vector<std::string> labels;  // canonical labels, e.g. "[(+,+,0,0)]"
  std::vector<std::string> names;  // construction aliases covering the labels
  int cubes = 0;
  bool closed = false;
  bool flat_ok = false;
  std::vector<SurfaceReport> boundary_surfaces;
  Orientability orientability = Orientability::Orientable;
  AbelianGroup h1;
  std::string classification;
};

struct BoundaryReport {
  int id = 0;
  std::vector<std::string> facets;
  int octahedra = 0;
  int cusps = 0;
  int edge_classes = 0;
  bool octahedral_ok = false;
  std::optional<int> automorphism_order;
};

struct RidgeSummary {
  int interior_cycles = 0;
  int boundary_chains = 0;
  int failures = 0;
  std::vector<std::string> problems;  // first few
};

/// Census dedup key. Equal for relabelled constructions; not an isometry invariant.
struct Signature {
  int volume_multiple = 0;
  Orientability orientability = Orientability::Orientable;
  int cusp_count = 0;
  std::vector<std::string> classifications;  // sorted
  std::vector<AbelianGroup> cusp_h1;  // sorted
  AbelianGroup h1;

  std::string text() const;
  auto operator<=>(const Signature&) const = default;
};

struct ReportDocument;

struct DoubleCoverSummary {
  bool applicable = false;  // false when the manifold is already orientable
  bool pass = false;
  int copies = 0;
  Orientability orientability = Orientability::Orientable;
  std::vector<CuspReport> cusps;
  std::string note;
};

struct ReportDocument {
  std::string name;
  int copies = 0;
  bool pass = false;
  int volume_multiple = 0;  // copies, in units of the ideal 24-cell volume 4*pi^2/3
  bool has_boundary = false;
  std::optional<Orientability> orientability;
  std::vector<AbelianGroup> homology;  // H0, H1 of the manifold
  std::optional<long> euler_characteristic;
  RidgeSummary ridges;
  std::vector<CuspReport> cusps;
  std::vector<BoundaryReport> boundary;
  std::vector<CheckResult> checks;
  std::optional<DoubleCoverSummary> double_cover;
  std::optional<Signature> signature;
  std::string error;  // set when a stage threw
  std::string error_code;
};

/// Full pipeline on a compiled table. Never throws for structural failures;
/// they are recorded in the report.
ReportDocument analyze_table(const PairingTable& table, const std::string& name,
                             const std::vector<CuspAlias>& aliases = {}, const VerifyOptions& opt = {});
/// compile + analyze. Compile errors are recorded in the report.
ReportDocument run_verify(const ConstructionScript& script, const VerifyOptions& opt = {});

/// Signature of a closed table (every facet paired). Cheaper than analyze_table.
/// Returns nullopt when the quotient is not a manifold or a cusp is unclassified.
std::optional<Signature> closed_signature(const PairingTable& table);

enum class ReportFormat { Human, Json };
inline constexpr int kReportSchemaVersion = 1;
/// Json output is a single line.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

}  // namespace ideal24
