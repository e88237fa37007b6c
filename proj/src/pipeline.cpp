#include "ideal24/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ideal24/complex_models.hpp"
#include "ideal24/error.hpp"

namespace ideal24 {

namespace {

using nlohmann::json;

void record_error(ReportDocument& doc, const std::exception& e) {
  doc.error = e.what();
  if (const auto* ee = dynamic_cast<const EngineError*>(&e)) doc.error_code = error_code_name(ee->code());
  doc.pass = false;
}

void check(ReportDocument& doc, const std::string& name, bool ok, const std::string& detail = {}) {
  doc.checks.push_back({name, ok, detail});
}

std::vector<std::string> alias_names(const std::vector<CuspAlias>& aliases, const std::vector<CuspLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& a : aliases)
    for (const auto& l : a.labels)
      if (std::binary_search(labels.begin(), labels.end(), l)) {
        out.push_back(a.name);
        break;
      }
  return out;
}

CuspReport analyze_cusp(const QuotientComplex& qc, const CuspClass& cls, const std::vector<BoundaryComponent>& comps,
                        const std::vector<CuspAlias>& aliases) {
  CuspReport r;
  r.id = cls.id;
  for (const auto& l : cls.labels) r.labels.push_back(l.text());
  r.names = alias_names(aliases, cls.labels);
  const CubeComplex cc = cusp_complex(qc, cls.id);
  r.cubes = cc.size();
  const FlatReport flat = verify_flat_structure(cc);
  r.flat_ok = flat.ok;
  r.closed = flat.closed;
  if (!flat.ok) {
    r.classification = "unverified";
    return r;
  }
  r.orientability = cusp_orientability(cc);
  r.h1 = cube_h1(cc);
  if (r.closed) {
    r.classification = flat_closed_name(classify_closed(r.orientability, r.h1));
    return r;
  }
  const auto surfaces = boundary_surfaces(cc);
  for (const auto& s : surfaces) {
    const auto [cube, face] = s.faces.front();
    const FacetSlot slot{cc.members[cube].copy, cc.face_facets[cube][face]};
    r.boundary_surfaces.push_back({s.type(), s.squares, component_of(comps, slot)});
  }
  r.classification = flat_compact_name(classify_compact(r.orientability, static_cast<int>(surfaces.size()), r.h1));
  return r;
}

Signature make_signature(const ReportDocument& doc) {
  Signature s;
  s.volume_multiple = doc.volume_multiple;
  s.orientability = *doc.orientability;
  s.cusp_count = static_cast<int>(doc.cusps.size());
  for (const auto& c : doc.cusps) {
    s.classifications.push_back(c.classification);
    s.cusp_h1.push_back(c.h1);
  }
  std::sort(s.classifications.begin(), s.classifications.end());
  std::sort(s.cusp_h1.begin(), s.cusp_h1.end());
  s.h1 = doc.homology.at(1);
  return s;
}

void analyze_into(ReportDocument& doc, const PairingTable& table, const std::vector<CuspAlias>& aliases,
                  const VerifyOptions& opt) {
  doc.copies = table.copies();
  doc.volume_multiple = table.copies();

  const ValidationReport vr = validate_table(table);
  std::string vdetail;
  for (const auto& v : vr.violations) {
    if (!vdetail.empty()) vdetail += "; ";
    vdetail += std::string(violation_name(v.kind)) + " at " + v.slot.text();
  }
  check(doc, "pairing_table", vr.valid(), vdetail);
  if (!vr.valid()) return;

  const QuotientComplex qc = build_quotient(table);
  doc.has_boundary = !qc.unpaired().empty();

  const auto ridges = ridge_check(qc);
  for (const auto& r : ridges) {
    (r.kind == RidgeClassReport::Kind::InteriorCycle ? doc.ridges.interior_cycles : doc.ridges.boundary_chains)++;
    if (!r.ok) {
      ++doc.ridges.failures;
      if (doc.ridges.problems.size() < 5) doc.ridges.problems.push_back(r.problem);
    }
  }
  const bool ridges_good = doc.ridges.failures == 0;
  check(doc, "ridges", ridges_good,
        ridges_good ? "" : std::to_string(doc.ridges.failures) + " bad ridge classes");

  doc.orientability = orientability(qc);

  FlagOptions fo;
  fo.min_cell_dim = 1;
  const FlagModel model = order_complex_model(qc, fo);
  const bool dd = boundary_squared_zero(model.complex);
  check(doc, "boundary_squared_zero", dd);
  if (!dd) return;
  doc.euler_characteristic = model.euler_characteristic();
  FlagOptions h1opt = fo;
  h1opt.max_simplex_dim = 2;
  doc.homology = homology_groups(order_complex_model(qc, h1opt).complex, 1);
  check(doc, "connected", doc.homology[0] == AbelianGroup::free(1), "H0 = " + doc.homology[0].text());
  if (!ridges_good) return;

  // Gauss-Bonnet: vol = (4 pi^2 / 3) chi, and one ideal 24-cell has that volume
  if (!doc.has_boundary)
    check(doc, "euler_characteristic", *doc.euler_characteristic == doc.volume_multiple,
          "chi = " + std::to_string(*doc.euler_characteristic));

  const auto comps = boundary_strata(qc);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    BoundaryReport b;
    b.id = i;
    for (const auto& f : comps[i].facets) b.facets.push_back(f.text());
    const OctComplex oc = boundary_complex(comps[i]);
    const OctahedralReport orep = verify_octahedral(oc);
    b.octahedra = oc.size();
    b.octahedral_ok = orep.ok;
    b.edge_classes = orep.edge_classes;
    if (orep.ok) {
      b.cusps = cusp_count3(oc);
      if (opt.boundary_auts) b.automorphism_order = static_cast<int>(automorphism_group(oc).size());
    }
    check(doc, "boundary_" + std::to_string(i) + "_octahedral", orep.ok,
          orep.problems.empty() ? "" : orep.problems.front());
    doc.boundary.push_back(std::move(b));
  }

  bool cusps_ok = true;
  for (const auto& cls : cusp_classes(qc)) {
    try {
      doc.cusps.push_back(analyze_cusp(qc, cls, comps, aliases));
      cusps_ok = cusps_ok && doc.cusps.back().flat_ok;
    } catch (const EngineError& e) {
      cusps_ok = false;
      check(doc, "cusp_" + std::to_string(cls.id), false, e.what());
    }
  }
  check(doc, "cusp_sections", cusps_ok);

  if (opt.double_cover) {
    DoubleCoverSummary dc;
    if (*doc.orientability == Orientability::Orientable) {
      dc.note = "already orientable";
      dc.pass = true;
    } else {
      dc.applicable = true;
      ReportDocument cover;
      analyze_into(cover, orientation_double_cover_table(table), aliases, {});
      cover.pass = !cover.checks.empty() &&
                   std::all_of(cover.checks.begin(), cover.checks.end(), [](const auto& c) { return c.ok; });
      dc.pass = cover.pass;
      dc.copies = cover.copies;
      dc.orientability = cover.orientability.value_or(Orientability::NonOrientable);
      dc.cusps = std::move(cover.cusps);
    }
    check(doc, "double_cover", dc.pass, dc.note);
    doc.double_cover = std::move(dc);
  }
}

}  // namespace

std::string Signature::text() const {
  std::ostringstream out;
  out << "vol=" << volume_multiple << " " << orientability_name(orientability) << " cusps=" << cusp_count << " [";
  for (std::size_t i = 0; i < classifications.size(); ++i) out << (i ? "," : "") << classifications[i];
  out << "] cuspH1=[";
  for (std::size_t i = 0; i < cusp_h1.size(); ++i) out << (i ? "; " : "") << cusp_h1[i].text();
  out << "] H1=" << h1.text();
  return out.str();
}

ReportDocument analyze_table(const PairingTable& table, const std::string& name, const std::vector<CuspAlias>& aliases,
                             const VerifyOptions& opt) {
  ReportDocument doc;
  doc.name = name;
  try {
    analyze_into(doc, table, aliases, opt);
    doc.pass = !doc.checks.empty() &&
               std::all_of(doc.checks.begin(), doc.checks.end(), [](const auto& c) { return c.ok; });
    if (doc.pass) doc.signature = make_signature(doc);
  } catch (const std::exception& e) {
    record_error(doc, e);
  }
  return doc;
}

ReportDocument run_verify(const ConstructionScript& script, const VerifyOptions& opt) {
  PairingTable table(script.copies);
  try {
    table = compile_script(script);
  } catch (const std::exception& e) {
    ReportDocument doc;
    doc.name = script.name;
    doc.copies = script.copies;
    doc.volume_multiple = script.copies;
    record_error(doc, e);
    check(doc, "compile", false, e.what());
    return doc;
  }
  return analyze_table(table, script.name, script.aliases, opt);
}

std::optional<Signature> closed_signature(const PairingTable& table) {
  if (!validate_table(table).valid()) return std::nullopt;
  const QuotientComplex qc = build_quotient(table);
  if (!qc.unpaired().empty() || !ridges_ok(ridge_check(qc))) return std::nullopt;
  Signature s;
  s.volume_multiple = table.copies();
  s.orientability = orientability(qc);
  try {
    for (const auto& cls : cusp_classes(qc)) {
      const CubeComplex cc = cusp_complex(qc, cls.id);
      if (!verify_flat_structure(cc).ok) return std::nullopt;
      const Orientability o = cusp_orientability(cc);
      const AbelianGroup h1 = cube_h1(cc);
      s.classifications.push_back(flat_closed_name(classify_closed(o, h1)));
      s.cusp_h1.push_back(h1);
    }
  } catch (const EngineError&) {
    return std::nullopt;
  }
  s.cusp_count = static_cast<int>(s.classifications.size());
  std::sort(s.classifications.begin(), s.classifications.end());
  std::sort(s.cusp_h1.begin(), s.cusp_h1.end());
  s.h1 = manifold_homology(qc, 1).at(1);
  return s;
}

namespace {

std::string display_type(const std::string& c) { return c == "TxI" ? "T×I" : c; }

json group_json(const AbelianGroup& g) {
  return {{"rank", g.rank}, {"torsion", g.torsion_int()}, {"text", g.text()}};
}

json cusp_json(const CuspReport& c) {
  json surfaces = json::array();
  for (const auto& s : c.boundary_surfaces)
    surfaces.push_back({{"type", s.type}, {"squares", s.squares}, {"component", s.component}});
  return {{"id", c.id},
          {"labels", c.labels},
          {"names", c.names},
          {"cubes", c.cubes},
          {"closed", c.closed},
          {"flat_ok", c.flat_ok},
          {"orientable", c.orientability == Orientability::Orientable},
          {"h1", group_json(c.h1)},
          {"classification", c.classification},
          {"boundary_surfaces", surfaces}};
}

json report_json(const ReportDocument& d) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["name"] = d.name;
  j["status"] = d.pass ? "PASS" : "FAIL";
  j["copies"] = d.copies;
  j["volume_multiple"] = d.volume_multiple;
  j["has_boundary"] = d.has_boundary;
  j["orientable"] = d.orientability ? json(*d.orientability == Orientability::Orientable) : json(nullptr);
  j["euler_characteristic"] = d.euler_characteristic ? json(*d.euler_characteristic) : json(nullptr);
  json hom = json::array();
  for (const auto& g : d.homology) hom.push_back(group_json(g));
  j["homology"] = hom;
  j["ridges"] = {{"interior_cycles", d.ridges.interior_cycles},
                 {"boundary_chains", d.ridges.boundary_chains},
                 {"failures", d.ridges.failures},
                 {"problems", d.ridges.problems}};
  j["cusps"] = static_cast<int>(d.cusps.size());
  json sections = json::array();
  for (const auto& c : d.cusps) sections.push_back(cusp_json(c));
  j["cusp_sections"] = sections;
  json boundary = json::array();
  for (const auto& b : d.boundary)
    boundary.push_back({{"id", b.id},
                        {"facets", b.facets},
                        {"octahedra", b.octahedra},
                        {"cusps", b.cusps},
                        {"edge_classes", b.edge_classes},
                        {"octahedral_ok", b.octahedral_ok},
                        {"automorphism_order", b.automorphism_order ? json(*b.automorphism_order) : json(nullptr)}});
  j["boundary_components"] = boundary;
  json checks = json::array();
  for (const auto& c : d.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = checks;
  if (d.double_cover) {
    const auto& dc = *d.double_cover;
    json cs = json::array();
    for (const auto& c : dc.cusps) cs.push_back(cusp_json(c));
    j["double_cover"] = {{"applicable", dc.applicable},
                         {"status", dc.pass ? "PASS" : "FAIL"},
                         {"copies", dc.copies},
                         {"orientable", dc.orientability == Orientability::Orientable},
                         {"cusps", static_cast<int>(dc.cusps.size())},
                         {"cusp_sections", cs},
                         {"note", dc.note}};
  } else {
    j["double_cover"] = nullptr;
  }
  j["signature"] = d.signature ? json(d.signature->text()) : json(nullptr);
  j["error"] = d.error.empty() ? json(nullptr) : json({{"code", d.error_code}, {"message", d.error}});
  return j;
}

void cusp_lines(std::ostream& out, const std::vector<CuspReport>& cusps, const std::string& indent) {
  for (const auto& c : cusps) {
    out << indent << "cusp " << c.id;
    if (!c.names.empty()) {
      out << " (";
      for (std::size_t i = 0; i < c.names.size(); ++i) out << (i ? "," : "") << c.names[i];
      out << ")";
    }
    out << ": " << c.cubes << " cubes, " << (c.closed ? "closed" : "with boundary") << ", "
        << orientability_name(c.orientability) << ", H1 = " << c.h1.text() << ", " << display_type(c.classification);
    for (const auto& s : c.boundary_surfaces) out << "; " << s.type << " on component " << s.component;
    out << "  " << (c.labels.size() == 1 ? c.labels[0] : c.labels[0] + " ...") << "\n";
  }
}

}  // namespace

std::string emit_report(const ReportDocument& d, ReportFormat format) {
  if (format == ReportFormat::Json) return report_json(d).dump() + "\n";
  std::ostringstream out;
  out << d.name << ": " << (d.pass ? "PASS" : "FAIL") << "\n";
  out << "  copies " << d.copies << ", volume multiple " << d.volume_multiple
      << (d.has_boundary ? ", totally geodesic boundary" : "") << "\n";
  if (d.orientability) out << "  " << orientability_name(*d.orientability) << "\n";
  if (!d.homology.empty()) {
    out << "  H1 = " << d.homology[1].text();
    if (d.euler_characteristic) out << ", chi = " << *d.euler_characteristic;
    out << "\n";
  }
  out << "  ridges: " << d.ridges.interior_cycles << " interior cycles, " << d.ridges.boundary_chains
      << " boundary chains, " << d.ridges.failures << " failures\n";
  for (const auto& p : d.ridges.problems) out << "    " << p << "\n";
  out << "  " << d.cusps.size() << " cusps\n";
  cusp_lines(out, d.cusps, "    ");
  if (!d.boundary.empty()) out << "  " << d.boundary.size() << " boundary components\n";
  for (const auto& b : d.boundary) {
    out << "    component " << b.id << ": " << b.octahedra << " octahedra, " << b.cusps << " cusps, " << b.edge_classes
        << " edge classes" << (b.octahedral_ok ? "" : ", NOT octahedral");
    if (b.automorphism_order) out << ", |Aut| = " << *b.automorphism_order;
    out << "\n";
  }
  if (d.double_cover) {
    const auto& dc = *d.double_cover;
    if (!dc.applicable) {
      out << "  double cover: " << dc.note << "\n";
    } else {
      out << "  double cover: " << (dc.pass ? "PASS" : "FAIL") << ", " << dc.copies << " copies, "
          << orientability_name(dc.orientability) << ", " << dc.cusps.size() << " cusps\n";
      cusp_lines(out, dc.cusps, "    ");
    }
  }
  for (const auto& c : d.checks)
    if (!c.ok) out << "  failed check " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (!d.error.empty()) out << "  error: " << d.error << "\n";
  if (d.signature) out << "  signature: " << d.signature->text() << "\n";
  return out.str();
}

}  // namespace ideal24
