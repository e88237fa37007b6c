#include "ideal24/construction_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ideal24/error.hpp"

namespace ideal24 {

namespace {

struct Token {
  std::string text;
  int column = 1;
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

/// Message of an EngineError without its code prefix.
std::string bare_message(const EngineError& e) {
  const std::string w = e.what();
  const auto p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

class LineParser {
 public:
  LineParser(int line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(const Token& t, const std::string& what) const { throw ParseError(line_, t.column, what); }

  template <typename F>
  auto guarded(const Token& t, F&& f) const {
    try {
      return f();
    } catch (const ParseError&) {
      throw;
    } catch (const EngineError& e) {
      fail(t, bare_message(e));
    }
  }

  const std::vector<Token>& tokens() const { return tokens_; }

  /// key=value arguments after the keyword; rejects unknown and repeated keys.
  std::map<std::string, Token> keyed(std::size_t first, const std::vector<std::string>& allowed,
                                     const std::vector<std::string>& required) const {
    std::map<std::string, Token> out;
    for (std::size_t i = first; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      const auto eq = t.text.find('=');
      if (eq == std::string::npos) fail(t, "expected key=value, got '" + t.text + "'");
      const std::string key = t.text.substr(0, eq);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) fail(t, "unknown key '" + key + "'");
      if (out.count(key)) fail(t, "repeated key '" + key + "'");
      out[key] = {t.text.substr(eq + 1), t.column + static_cast<int>(eq) + 1};
    }
    for (const auto& k : required)
      if (!out.count(k)) fail(tokens_.front(), "missing key '" + k + "'");
    return out;
  }

  int integer(const Token& t) const {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), ::isdigit) || t.text.size() > 6)
      fail(t, "expected a non-negative integer, got '" + t.text + "'");
    return std::stoi(t.text);
  }

  Isometry map(const Token& t) const {
    return guarded(t, [&] { return parse_named_map(t.text); });
  }

  /// "(c,label)" or a bare facet label meaning copy 0.
  FacetSlot slot(const Token& t) const {
    std::string s = t.text;
    int copy = 0;
    if (!s.empty() && s.front() == '(') {
      const auto comma = s.find(',');
      if (s.back() != ')' || comma == std::string::npos) fail(t, "expected (copy,facet), got '" + s + "'");
      copy = integer({s.substr(1, comma - 1), t.column + 1});
      s = s.substr(comma + 1, s.size() - comma - 2);
    }
    const FacetLabel f = guarded(t, [&] { return FacetLabel::parse(s); });
    return {copy, cell24().facet_index(f)};
  }

  Color color(const Token& t) const {
    if (t.text == "green") return Color::Green;
    if (t.text == "red") return Color::Red;
    if (t.text == "blue") return Color::Blue;
    fail(t, "unknown color '" + t.text + "'");
  }

 private:
  int line_;
  std::vector<Token> tokens_;
};

std::string slot_text(const FacetSlot& s) {
  return s.copy == 0 ? cell24().facets[s.facet].text() : s.text();
}

}  // namespace

Isometry parse_named_map(const std::string& text) {
  if (text == "identity") return Isometry::identity();
  if (text == "antipodal") return Isometry::antipodal();
  if (text == "H") return map_h();
  return parse_mapspec(text);
}

ConstructionScript parse_construction(const std::string& text) {
  ConstructionScript s;
  bool have_copies = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_line(raw);
    if (tokens.empty()) continue;
    const LineParser lp(line_no, tokens);
    const Token& kw = tokens.front();
    if (kw.text == "name") {
      if (tokens.size() != 2) lp.fail(kw, "name takes one word");
      s.name = tokens[1].text;
    } else if (kw.text == "copies") {
      if (tokens.size() != 2) lp.fail(kw, "copies takes one integer");
      if (!s.stages.empty()) lp.fail(kw, "copies must precede the stages");
      s.copies = lp.integer(tokens[1]);
      if (s.copies < 1) lp.fail(tokens[1], "copies must be at least 1");
      have_copies = true;
    } else if (kw.text == "cusp") {
      if (tokens.size() < 3) lp.fail(kw, "cusp takes a name and at least one label");
      CuspAlias a{tokens[1].text, {}};
      for (std::size_t i = 2; i < tokens.size(); ++i)
        a.labels.push_back(lp.guarded(tokens[i], [&] { return parse_cusp_label(tokens[i].text); }));
      std::sort(a.labels.begin(), a.labels.end());
      s.aliases.push_back(std::move(a));
    } else if (kw.text == "paircolor") {
      const auto kv = lp.keyed(1, {"scope", "color", "map", "to"}, {"scope", "color", "map"});
      PairColorStage st;
      const Token& scope = kv.at("scope");
      if (scope.text != "all") st.copy = lp.integer(scope);
      st.color = lp.color(kv.at("color"));
      st.map = lp.map(kv.at("map"));
      if (kv.count("to")) st.to = lp.integer(kv.at("to"));
      s.stages.push_back(st);
    } else if (kw.text == "pair") {
      if (tokens.size() != 4) lp.fail(kw, "pair takes two facet slots and map=...");
      const auto kv = lp.keyed(3, {"map"}, {"map"});
      Pairing p{lp.slot(tokens[1]), lp.slot(tokens[2]), lp.map(kv.at("map"))};
      if (!s.stages.empty())
        if (auto* e = std::get_if<PairExplicitStage>(&s.stages.back())) {
          e->pairs.push_back(p);
          continue;
        }
      s.stages.push_back(PairExplicitStage{{p}});
    } else if (kw.text == "boundaryglue") {
      const auto kv = lp.keyed(1, {"src", "dst", "seed_src", "seed_dst", "vertices"},
                               {"src", "dst", "seed_src", "seed_dst", "vertices"});
      BoundaryGlueStage st;
      st.src = lp.integer(kv.at("src"));
      st.dst = lp.integer(kv.at("dst"));
      st.seed_src = lp.slot(kv.at("seed_src"));
      st.seed_dst = lp.slot(kv.at("seed_dst"));
      const Token& vt = kv.at("vertices");
      std::size_t pos = 0;
      while (pos <= vt.text.size()) {
        auto end = vt.text.find(',', pos);
        if (end == std::string::npos) end = vt.text.size();
        const std::string entry = vt.text.substr(pos, end - pos);
        const auto colon = entry.find(':');
        const Token et{entry, vt.column + static_cast<int>(pos)};
        if (colon == std::string::npos || colon == 0 || colon + 1 == entry.size())
          lp.fail(et, "expected source:target, got '" + entry + "'");
        st.vertices.emplace_back(entry.substr(0, colon), entry.substr(colon + 1));
        pos = end + 1;
      }
      s.stages.push_back(st);
    } else {
      lp.fail(kw, "unknown directive '" + kw.text + "'");
    }
  }
  if (!have_copies && s.stages.empty() && s.name.empty())
    throw ParseError(std::max(line_no, 1), 1, "empty construction");
  for (const auto& stage : s.stages) {
    auto check = [&](const FacetSlot& slot) {
      if (slot.copy >= s.copies)
        throw ParseError(line_no, 1, "copy " + std::to_string(slot.copy) + " exceeds the declared copies");
    };
    if (const auto* e = std::get_if<PairExplicitStage>(&stage))
      for (const auto& p : e->pairs) {
        check(p.source);
        check(p.target);
      }
    if (const auto* g = std::get_if<BoundaryGlueStage>(&stage)) {
      check(g->seed_src);
      check(g->seed_dst);
    }
  }
  return s;
}

std::string print_construction(const ConstructionScript& s) {
  const auto& model = cell24();
  std::ostringstream out;
  if (!s.name.empty()) out << "name " << s.name << "\n";
  out << "copies " << s.copies << "\n";
  for (const auto& a : s.aliases) {
    out << "cusp " << a.name;
    for (const auto& l : a.labels) out << " " << l.compact();
    out << "\n";
  }
  for (const auto& stage : s.stages) {
    if (const auto* c = std::get_if<PairColorStage>(&stage)) {
      out << "paircolor scope=" << (c->copy ? std::to_string(*c->copy) : "all") << " color=";
      std::string col = color_name(c->color);
      std::transform(col.begin(), col.end(), col.begin(), ::tolower);
      out << col << " map=" << c->map.mapspec();
      if (c->to) out << " to=" << *c->to;
      out << "\n";
    } else if (const auto* e = std::get_if<PairExplicitStage>(&stage)) {
      for (const auto& p : e->pairs)
        out << "pair " << p.source.text() << " " << p.target.text() << " map=" << p.map.mapspec() << "\n";
    } else if (const auto* g = std::get_if<BoundaryGlueStage>(&stage)) {
      out << "boundaryglue src=" << g->src << " dst=" << g->dst << " seed_src=" << slot_text(g->seed_src)
          << " seed_dst=" << slot_text(g->seed_dst) << " vertices=";
      for (std::size_t i = 0; i < g->vertices.size(); ++i)
        out << (i ? "," : "") << g->vertices[i].first << ":" << g->vertices[i].second;
      out << "\n";
    }
  }
  (void)model;
  return out.str();
}

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> table = [] {
    const std::string c_mod =
        "copies 1\n"
        "paircolor scope=all color=green map=-x,-y,-z,-w\n";
    const std::string a_body = c_mod + "paircolor scope=all color=red map=-x,-y,z,w\n";
    const std::string a_cusps =
        "cusp m1 ++00\n"
        "cusp n1 +-00\n"
        "cusp m2 00+-\n"
        "cusp n2 00++\n"
        "cusp a +0+0 -0+0\n"
        "cusp d 0+0+ 0-0+\n"
        "cusp b +00+ -00+\n"
        "cusp c 0++0 0-+0\n";
    const std::string s_body =
        "copies 2\n"
        "paircolor scope=0 color=green map=x,y,z,w to=1\n";
    const std::string d_body = s_body + "paircolor scope=all color=red map=-x,-y,-z,-w\n";
    const std::string d_cusps =
        "cusp a1 ++00\n"
        "cusp a2 +-00\n"
        "cusp d1 00++\n"
        "cusp d2 00+-\n"
        "cusp b1 +0+0\n"
        "cusp b2 +0-0\n"
        "cusp e1 0+0+\n"
        "cusp e2 0+0-\n"
        "cusp c1 +00+\n"
        "cusp c2 +00-\n"
        "cusp f1 0++0\n"
        "cusp f2 0+-0\n";
    // boundary components are numbered by their smallest facet:
    // A: 0 = X (holds +++-), 1 = Y (holds +-++); D: 0 = B4, 1 = B3, 2 = B2, 3 = B1
    return std::map<std::string, std::string>{
        {"C_mod_antipodal", "name C_mod_antipodal\n" + c_mod},
        {"A", "name A\n" + a_cusps + a_body},
        {"G", "name G\n" + a_cusps + a_body +
                  "boundaryglue src=0 dst=1 seed_src=+++- seed_dst=+-++ vertices=m1:b,m2:c,b:d,c:a,a:n1,d:n2\n"},
        {"S", "name S\n" + s_body},
        {"D", "name D\n" + d_cusps + d_body},
        {"H", "name H\n" + d_cusps + d_body +
                  "boundaryglue src=1 dst=3 seed_src=++-+ seed_dst=-+++ vertices=a1:b2,d2:e1,b2:f1,e1:c2,f2:a2,c1:d1\n"
                  "boundaryglue src=0 dst=2 seed_src=+++- seed_dst=+-++ vertices=a1:c1,d2:f2,c2:e2,f1:b1,b1:a2,e2:d1\n"},
    };
  }();
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"C_mod_antipodal", "A", "G", "S", "D", "H"};
  return names;
}

const std::string& preset_text(const std::string& name) {
  const auto& t = presets();
  auto it = t.find(name);
  if (it == t.end()) throw EngineError(ErrorCode::InvalidArgument, "unknown preset '" + name + "'");
  return it->second;
}

ConstructionScript preset(const std::string& name) { return parse_construction(preset_text(name)); }

ConstructionScript load_construction(const std::string& arg) {
  if (arg.rfind("preset:", 0) == 0) return preset(arg.substr(7));
  std::ifstream in(arg);
  if (!in) throw EngineError(ErrorCode::InvalidArgument, "cannot read '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_construction(buf.str());
}

}  // namespace ideal24
