#include "ideal24/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ideal24/construction_file.hpp"
#include "ideal24/error.hpp"

namespace ideal24 {

namespace {

std::optional<Color> color_from(const std::string& s) {
  if (s == "green") return Color::Green;
  if (s == "red") return Color::Red;
  if (s == "blue") return Color::Blue;
  return std::nullopt;
}

std::string lower_color(Color c) {
  std::string s = color_name(c);
  std::transform(s.begin(), s.end(), s.begin(), ::tolower);
  return s;
}

std::string map_name(const Isometry& m) {
  if (m.is_identity()) return "identity";
  if (m == Isometry::antipodal()) return "antipodal";
  if (m == map_h()) return "H";
  return m.mapspec();
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 step over the running value
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h += 0x9e3779b97f4a7c15ULL;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

using PairKey = std::array<int, 20>;
using OrbitHash = std::pair<std::uint64_t, std::uint64_t>;

struct OrbitHashOf {
  std::size_t operator()(const OrbitHash& h) const noexcept { return h.first ^ (h.second * 31); }
};

PairKey key_of(const FacetSlot& s, const FacetSlot& t, const Isometry& m) {
  PairKey k{s.copy, s.facet, t.copy, t.facet};
  std::copy(m.twice_matrix().begin(), m.twice_matrix().end(), k.begin() + 4);
  return k;
}

OrbitHash hash_keys(std::vector<PairKey> keys) {
  std::sort(keys.begin(), keys.end());
  std::uint64_t a = 1, b = 0x12345;
  for (const auto& k : keys)
    for (int v : k) {
      a = mix(a, static_cast<std::uint64_t>(v + 7));
      b = mix(b ^ 0x5555, static_cast<std::uint64_t>(v * 3 + 11));
    }
  return {a, b};
}

/// Every pairing with its inverse.
std::vector<Pairing> both_directions(const std::vector<Pairing>& ps) {
  std::vector<Pairing> out;
  for (const auto& p : ps) {
    out.push_back(p);
    if (p.source != p.target) out.push_back({p.target, p.source, p.map.inverse()});
  }
  return out;
}

struct Transform {
  std::vector<int> copy_perm;
  Isometry g;
  Isometry g_inv;
  const CellAction* action;
};

OrbitHash transformed_hash(const std::vector<Pairing>& ps, const Transform& tr) {
  std::vector<PairKey> keys;
  keys.reserve(ps.size());
  for (const auto& p : ps)
    keys.push_back(key_of({tr.copy_perm[p.source.copy], tr.action->cells[3][p.source.facet]},
                          {tr.copy_perm[p.target.copy], tr.action->cells[3][p.target.facet]},
                          tr.g.compose(p.map).compose(tr.g_inv)));
  return hash_keys(std::move(keys));
}

/// Perfect matchings of 0..n-1 as (smaller, larger) pairs, lexicographic.
void matchings(std::vector<int> rest, std::vector<std::array<int, 2>>& cur,
               std::vector<std::vector<std::array<int, 2>>>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  const int a = rest.front();
  for (std::size_t i = 1; i < rest.size(); ++i) {
    std::vector<int> next;
    for (std::size_t j = 1; j < rest.size(); ++j)
      if (j != i) next.push_back(rest[j]);
    cur.push_back({a, rest[i]});
    matchings(next, cur, out);
    cur.pop_back();
  }
}

struct Seed {
  int target_oct;
  int sym;
  std::vector<Pairing> pairs;  // source -> target only
};

class Enumerator {
 public:
  Enumerator(const CensusScheme& s, long cap) : scheme_(s), cap_(cap) {}

  CensusResult run() {
    std::vector<Color> listed;
    for (Color c : {Color::Green, Color::Red, Color::Blue})
      if (scheme_.candidates[static_cast<int>(c)]) listed.push_back(c);
    for (Color c : listed)
      if (scheme_.candidates[static_cast<int>(c)]->empty()) return std::move(result_);
    std::vector<std::size_t> choice(listed.size(), 0);
    while (!stop_) {
      ConstructionScript script;
      script.copies = scheme_.copies;
      std::string desc;
      for (std::size_t i = 0; i < listed.size(); ++i) {
        const Color c = listed[i];
        const Isometry& m = (*scheme_.candidates[static_cast<int>(c)])[choice[i]];
        PairColorStage st;
        st.color = c;
        st.map = m;
        if (scheme_.mirrored == c) {
          st.copy = 0;
          st.to = 1;
        }
        script.stages.push_back(st);
        desc += (desc.empty() ? "" : " ") + lower_color(c) + "=" + map_name(m);
      }
      colour_assignment(script, desc);
      // odometer, last colour fastest
      std::size_t k = listed.size();
      while (k > 0 && ++choice[k - 1] == scheme_.candidates[static_cast<int>(listed[k - 1])]->size()) choice[--k] = 0;
      if (k == 0) break;
    }
    return std::move(result_);
  }

 private:
  bool count_assignment() {
    if (result_.enumerated >= cap_) {
      result_.capped = true;
      stop_ = true;
      return false;
    }
    ++result_.enumerated;
    return true;
  }

  void record(const PairingTable& table, const ConstructionScript& script, const std::string& desc) {
    ++result_.verified;
    const auto sig = closed_signature(table);
    if (!sig || !signatures_.insert(*sig).second) return;
    CensusEntry e;
    e.assignment = result_.enumerated - 1;
    e.description = desc;
    e.script = script;
    e.script.name = "census_" + std::to_string(result_.entries.size());
    e.signature = *sig;
    result_.entries.push_back(std::move(e));
  }

  void colour_assignment(const ConstructionScript& script, const std::string& desc) {
    PairingTable base(scheme_.copies);
    try {
      base = compile_script(script);
    } catch (const EngineError&) {
      count_assignment();
      return;
    }
    if (!validate_table(base).valid()) {
      count_assignment();
      return;
    }
    const QuotientComplex qc = build_quotient(base);
    if (qc.unpaired().empty()) {
      if (count_assignment()) record(base, script, desc);
      return;
    }
    if (!scheme_.seed_search || !ridges_ok(ridge_check(qc))) {
      count_assignment();
      return;
    }
    const auto comps = boundary_strata(qc);
    std::vector<OctComplex> ocs;
    for (const auto& c : comps) {
      ocs.push_back(boundary_complex(c));
      if (!verify_octahedral(ocs.back()).ok) {
        count_assignment();
        return;
      }
    }
    if (comps.size() % 2) {
      count_assignment();
      return;
    }
    std::vector<Transform> group;
    for (auto& [perm, g] : table_symmetries(base))
      group.push_back({perm, g, g.inverse(), &cell_action(g)});

    std::vector<int> ids(comps.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::vector<std::vector<std::array<int, 2>>> all;
    std::vector<std::array<int, 2>> cur;
    matchings(ids, cur, all);

    std::unordered_set<OrbitHash, OrbitHashOf> seen;
    for (const auto& matching : all) {
      std::vector<std::vector<Seed>> seeds;
      for (const auto& [a, b] : matching) {
        std::vector<Seed> list;
        const auto& syms = oct_symmetries();
        for (int t = 0; t < ocs[b].size(); ++t)
          for (int k = 0; k < static_cast<int>(syms.size()); ++k)
            if (const auto iso = try_extend(ocs[a], ocs[b], 0, t, syms[k]))
              list.push_back({t, k, pairings_from_isomorphism(ocs[a], ocs[b], *iso)});
        seeds.push_back(std::move(list));
      }
      if (std::any_of(seeds.begin(), seeds.end(), [](const auto& l) { return l.empty(); })) continue;
      std::vector<std::size_t> pick(seeds.size(), 0);
      while (true) {
        if (!count_assignment()) return;
        std::vector<Pairing> glue;
        std::string gdesc = desc;
        for (std::size_t i = 0; i < seeds.size(); ++i) {
          const Seed& s = seeds[i][pick[i]];
          glue.insert(glue.end(), s.pairs.begin(), s.pairs.end());
          gdesc += " glue " + std::to_string(matching[i][0]) + ">" + std::to_string(matching[i][1]) + " oct " +
                   std::to_string(s.target_oct) + " sym " + std::to_string(s.sym);
        }
        const auto full = both_directions(glue);
        std::vector<PairKey> keys;
        for (const auto& p : full) keys.push_back(key_of(p.source, p.target, p.map));
        if (seen.count(hash_keys(keys))) {
          ++result_.symmetric_skips;
        } else {
          for (const auto& tr : group) seen.insert(transformed_hash(full, tr));
          PairingTable table = base;
          for (const auto& p : glue) table.add_pair(p.source, p.target, p.map);
          ConstructionScript s = script;
          s.stages.push_back(PairExplicitStage{glue});
          record(table, s, gdesc);
        }
        std::size_t k = seeds.size();
        while (k > 0 && ++pick[k - 1] == seeds[k - 1].size()) pick[--k] = 0;
        if (k == 0) break;
      }
    }
  }

  const CensusScheme& scheme_;
  long cap_;
  CensusResult result_;
  std::set<Signature> signatures_;
  bool stop_ = false;
};

}  // namespace

std::vector<std::pair<std::vector<int>, Isometry>> table_symmetries(const PairingTable& t) {
  std::map<std::pair<FacetSlot, FacetSlot>, Isometry> index;
  for (const auto& p : t.pairings()) index[{p.source, p.target}] = p.map;
  std::vector<int> perm(t.copies());
  for (int i = 0; i < t.copies(); ++i) perm[i] = i;
  std::vector<std::pair<std::vector<int>, Isometry>> out;
  do {
    for (const auto& g : full_symmetry_group()) {
      const CellAction& act = cell_action(g);
      const Isometry gi = g.inverse();
      const bool keeps = std::all_of(t.pairings().begin(), t.pairings().end(), [&](const Pairing& p) {
        const FacetSlot s{perm[p.source.copy], act.cells[3][p.source.facet]};
        const FacetSlot u{perm[p.target.copy], act.cells[3][p.target.facet]};
        const auto it = index.find({s, u});
        return it != index.end() && it->second == g.compose(p.map).compose(gi);
      });
      if (keeps) out.emplace_back(perm, g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CensusScheme parse_census_scheme(const std::string& text) {
  CensusScheme s;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::set<std::string> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w.empty()) continue;
    auto fail = [&](const std::string& what) -> void { throw ParseError(line_no, 1, what); };
    const std::string key = w[0] == "candidates" && w.size() > 1 ? "candidates " + w[1] : w[0];
    if (!seen.insert(key).second) fail("repeated directive '" + key + "'");
    if (w[0] == "copies") {
      if (w.size() != 2 || (w[1] != "1" && w[1] != "2")) fail("copies must be 1 or 2");
      s.copies = std::stoi(w[1]);
    } else if (w[0] == "mirror") {
      if (w.size() != 2 || !color_from(w[1])) fail("mirror takes one colour");
      s.mirrored = color_from(w[1]);
    } else if (w[0] == "candidates") {
      if (w.size() < 2 || !color_from(w[1])) fail("candidates takes a colour and a list of maps");
      std::vector<Isometry> maps;
      for (std::size_t i = 2; i < w.size(); ++i) {
        try {
          maps.push_back(parse_named_map(w[i]));
        } catch (const EngineError& e) {
          fail(e.what());
        }
      }
      s.candidates[static_cast<int>(*color_from(w[1]))] = maps;
    } else if (w[0] == "boundary") {
      if (w.size() != 2 || (w[1] != "seedsearch" && w[1] != "none")) fail("boundary takes seedsearch or none");
      s.seed_search = w[1] == "seedsearch";
    } else if (w[0] == "cap") {
      if (w.size() != 2 || w[1].find_first_not_of("0123456789") != std::string::npos || w[1].size() > 12)
        fail("cap takes a non-negative integer");
      s.cap = std::stol(w[1]);
    } else {
      fail("unknown directive '" + w[0] + "'");
    }
  }
  if (s.mirrored && s.copies != 2) throw ParseError(line_no, 1, "mirror needs two copies");
  return s;
}

CensusScheme load_census_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_census_scheme(buf.str());
}

CensusResult census_enumerate(const CensusScheme& scheme, std::optional<long> cap_override) {
  return Enumerator(scheme, cap_override.value_or(scheme.cap)).run();
}

}  // namespace ideal24
