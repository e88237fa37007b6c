#include "ideal24/selftest.hpp"

#include "ideal24/complex_models.hpp"
#include "ideal24/construction_file.hpp"
#include "ideal24/error.hpp"

namespace ideal24 {

namespace {

template <typename F>
void run(std::vector<CheckResult>& out, const std::string& name, F&& f) {
  try {
    std::string detail;
    const bool ok = f(detail);
    out.push_back({name, ok, detail});
  } catch (const std::exception& e) {
    out.push_back({name, false, e.what()});
  }
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  run(out, "cell24_counts", [](std::string& d) {
    const auto& m = cell24();
    d = std::to_string(m.count(0)) + "/" + std::to_string(m.count(1)) + "/" + std::to_string(m.count(2)) + "/" +
        std::to_string(m.count(3));
    return m.count(0) == 24 && m.count(1) == 96 && m.count(2) == 96 && m.count(3) == 24;
  });
  run(out, "symmetry_groups", [](std::string& d) {
    d = std::to_string(signed_perm_group().size()) + " signed permutations, " +
        std::to_string(full_symmetry_group().size()) + " symmetries";
    return signed_perm_group().size() == 384 && full_symmetry_group().size() == 1152;
  });
  run(out, "flat_table_injective", [](std::string& d) {
    d = std::to_string(flat_type_table().size()) + " rows";
    return flat_type_table().size() == 10 && flat_table_injective(flat_type_table());
  });
  run(out, "flat_oracle_cubes", [](std::string& d) {
    const bool ok = classify_closed(three_torus()) == FlatClosedType::G1 &&
                    classify_closed(dicosm_g2()) == FlatClosedType::G2 &&
                    classify_closed(quarter_turn_g4()) == FlatClosedType::G4 &&
                    classify_closed(klein_times_circle()) == FlatClosedType::B1;
    d = "T3, G2, G4 and Klein x S1 single-cube domains";
    return ok;
  });
  run(out, "snf_oracle", [](std::string& d) {
    const auto r = smith_normal_form(DenseMatrix{{2, 4}, {6, 8}});
    d = "[[2,4],[6,8]]";
    return r.factors == std::vector<BigInt>{2, 4};
  });
  for (const auto& name : preset_names()) {
    run(out, "roundtrip_" + name, [&](std::string&) {
      const auto s = preset(name);
      return parse_construction(print_construction(s)) == s;
    });
    run(out, "boundary_squared_zero_" + name, [&](std::string&) {
      const auto qc = build_quotient(compile_script(preset(name)));
      return boundary_squared_zero(order_complex_model(qc).complex);
    });
  }
  for (const std::string name : {"G", "H", "A", "D"}) {
    run(out, "verify_" + name, [&](std::string& d) {
      const auto doc = run_verify(preset(name));
      if (doc.signature) d = doc.signature->text();
      return doc.pass;
    });
  }
  return out;
}

}  // namespace ideal24
