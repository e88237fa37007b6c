#include "ideal24/pairing.hpp"

#include <algorithm>
#include <map>

#include "ideal24/error.hpp"

namespace ideal24 {

std::string FacetSlot::text() const {
  return "(" + std::to_string(copy) + "," + cell24().facets.at(facet).text() + ")";
}

void PairingTable::add_pair(const FacetSlot& a, const FacetSlot& b, const Isometry& map) {
  if (is_paired(a)) throw EngineError(ErrorCode::DoublePairing, "facet " + a.text() + " is already paired");
  if (a != b && is_paired(b)) throw EngineError(ErrorCode::DoublePairing, "facet " + b.text() + " is already paired");
  pairings_.push_back({a, b, map});
  if (a != b) pairings_.push_back({b, a, map.inverse()});
}

bool PairingTable::is_paired(const FacetSlot& s) const { return find(s) != nullptr; }

const Pairing* PairingTable::find(const FacetSlot& s) const {
  for (const auto& p : pairings_)
    if (p.source == s) return &p;
  return nullptr;
}

std::vector<int> PairingTable::slot_index() const {
  std::vector<int> idx(static_cast<std::size_t>(copies_) * 24, -1);
  for (int i = 0; i < static_cast<int>(pairings_.size()); ++i) {
    const auto& s = pairings_[i].source;
    if (s.copy < 0 || s.copy >= copies_) continue;
    int& slot = idx[s.copy * 24 + s.facet];
    if (slot < 0) slot = i;
  }
  return idx;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::DoublePairing: return "DoublePairing";
    case Violation::MissingInverse: return "MissingInverse";
    case Violation::MapMismatch: return "MapMismatch";
    case Violation::FixedPointOnFacet: return "FixedPointOnFacet";
    case Violation::CopyOutOfRange: return "CopyOutOfRange";
  }
  return "?";
}

bool ValidationReport::has(Violation v) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Entry& e) { return e.kind == v; });
}

ValidationReport validate_table(const PairingTable& t) {
  ValidationReport r;
  const auto& model = cell24();
  std::map<FacetSlot, int> sources;
  for (const auto& p : t.pairings()) {
    for (const FacetSlot& s : {p.source, p.target})
      if (s.copy < 0 || s.copy >= t.copies() || s.facet < 0 || s.facet >= 24)
        r.violations.push_back({Violation::CopyOutOfRange, s, "slot outside the declared copies"});
  }
  if (!r.valid()) return r;

  for (const auto& p : t.pairings()) {
    if (++sources[p.source] == 2)
      r.violations.push_back({Violation::DoublePairing, p.source, "facet is the source of two pairings"});
    const FacetLabel image = facet_image(p.map, model.facets[p.source.facet]);
    if (image != model.facets[p.target.facet])
      r.violations.push_back({Violation::MapMismatch, p.source,
                              "map sends " + model.facets[p.source.facet].text() + " to " + image.text() +
                                  ", not " + model.facets[p.target.facet].text()});
    const bool inverse_present = std::any_of(t.pairings().begin(), t.pairings().end(), [&](const Pairing& q) {
      return q.source == p.target && q.target == p.source && q.map == p.map.inverse();
    });
    if (!inverse_present)
      r.violations.push_back({Violation::MissingInverse, p.source, "reverse pairing with the inverse map is absent"});
    if (p.source == p.target) {
      const bool involution = p.map.compose(p.map).is_identity();
      bool fixed = false;
      for (int v : model.facet_vertices[p.source.facet])
        fixed |= p.map.apply(model.vertices[v]) == model.vertices[v];
      if (!involution || fixed)
        r.violations.push_back({Violation::FixedPointOnFacet, p.source,
                                involution ? "self-pairing fixes a vertex of the facet"
                                           : "self-pairing map is not an involution"});
    }
  }
  return r;
}

}  // namespace ideal24
