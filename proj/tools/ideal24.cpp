// Command line front end: verify, census, selftest.
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ideal24/census.hpp"
#include "ideal24/construction_file.hpp"
#include "ideal24/error.hpp"
#include "ideal24/selftest.hpp"

using namespace ideal24;

namespace {

constexpr int kPass = 0;
constexpr int kStructural = 1;
constexpr int kUsage = 2;

int cmd_verify(const std::string& target, bool json, const VerifyOptions& opt) {
  ConstructionScript script;
  try {
    script = load_construction(target);
  } catch (const EngineError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  if (script.name.empty()) script.name = target;
  const ReportDocument doc = run_verify(script, opt);
  std::cout << emit_report(doc, json ? ReportFormat::Json : ReportFormat::Human);
  return doc.pass ? kPass : kStructural;
}

int cmd_census(const std::string& path, std::optional<long> cap, bool json) {
  CensusScheme scheme;
  try {
    scheme = load_census_scheme(path);
  } catch (const EngineError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  const CensusResult r = census_enumerate(scheme, cap);
  for (const auto& e : r.entries) {
    if (json) {
      nlohmann::json j{{"assignment", e.assignment},
                       {"description", e.description},
                       {"signature", e.signature.text()},
                       {"construction", print_construction(e.script)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "#" << e.assignment << "  " << e.signature.text() << "\n    " << e.description << "\n";
    }
  }
  if (json) {
    nlohmann::json j{{"summary", true},
                     {"entries", r.entries.size()},
                     {"enumerated", r.enumerated},
                     {"verified", r.verified},
                     {"symmetric_skips", r.symmetric_skips},
                     {"capped", r.capped}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << r.entries.size() << " signatures from " << r.enumerated << " assignments (" << r.verified
              << " verified, " << r.symmetric_skips << " skipped by symmetry" << (r.capped ? ", capped" : "")
              << ")\n";
  }
  return kPass;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& c : run_selftest()) {
    std::cout << (c.ok ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    ok = ok && c.ok;
  }
  return ok ? kPass : kStructural;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact gluing engine for copies of the regular ideal 24-cell"};
  app.require_subcommand(1);

  std::string target;
  bool json = false;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run the verification pipeline on a construction");
  verify->add_option("construction", target, "construction file or preset:NAME")->required();
  verify->add_flag("--json", json, "single-line JSON report");
  verify->add_flag("--double-cover", vopt.double_cover, "also analyse the orientation double cover");
  verify->add_flag("--boundary-auts", vopt.boundary_auts, "compute automorphism groups of boundary components");

  std::string scheme;
  long cap = -1;
  bool census_json = false;
  auto* census = app.add_subcommand("census", "Enumerate a restricted census scheme");
  census->add_option("scheme", scheme, "census scheme file")->required();
  census->add_option("--cap", cap, "maximum number of enumerated assignments")->check(CLI::NonNegativeNumber);
  census->add_flag("--json", census_json, "one JSON object per line");

  auto* selftest = app.add_subcommand("selftest", "Oracle table build and invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(target, json, vopt);
    if (*census) return cmd_census(scheme, cap >= 0 ? std::optional<long>(cap) : std::nullopt, census_json);
    if (*selftest) return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStructural;
  }
  return kUsage;
}
