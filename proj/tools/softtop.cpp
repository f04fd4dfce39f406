#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "softtop/claims.hpp"
#include "softtop/errors.hpp"
#include "softtop/fuzz.hpp"
#include "softtop/repro.hpp"
#include "softtop/semi_ops.hpp"
#include "softtop/space_file.hpp"

namespace {

// Commands other than `validate` need a well-formed topology; a family that
// breaks the axioms is an input error for them.
softtop::SpaceFile load_valid(const std::string& path) {
  softtop::SpaceFile file = softtop::load_space_file(path);
  if (!file.validation.ok())
    throw softtop::Error("'" + path + "' is not a topology:\n" +
                         file.validation.to_string());
  return file;
}

bool any_failures(const std::vector<softtop::Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.passed()) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive operator and claim checker for finite soft topological spaces"};
  app.require_subcommand(1);

  std::string file;
  std::string op_name;
  std::string set_expr;
  std::string which;
  std::vector<std::string> claim_ids;
  std::size_t limit = 3;
  int enum_cap = softtop::kDefaultEnumBitCap;
  std::uint64_t case_cap = softtop::kDefaultCaseCap;
  bool tsv = false;
  softtop::FuzzConfig fuzz_config;

  auto* cmd_validate =
      app.add_subcommand("validate", "check the topology axioms of a space file");
  cmd_validate->add_option("file", file, "space file")->required();

  auto* cmd_op = app.add_subcommand("op", "apply an operator to a soft set");
  cmd_op->add_option("file", file, "space file")->required();
  cmd_op->add_option("--op", op_name, "one of: int cl ints cls exts bds")->required();
  cmd_op->add_option("--set", set_expr, "soft set expression, e.g. \"e1=h1,h2; e2=\"")
      ->required();
  cmd_op->add_option("--enum-cap", enum_cap, "bit cap for semi-open enumeration");

  auto* cmd_family =
      app.add_subcommand("family", "enumerate all semi-open sets of a space");
  cmd_family->add_option("file", file, "space file")->required();
  cmd_family->add_option("--enum-cap", enum_cap, "bit cap for semi-open enumeration");

  auto* cmd_check = app.add_subcommand("check", "check catalog claims exhaustively");
  cmd_check->add_option("file", file, "space file")->required();
  cmd_check->add_option("--claims", claim_ids, "claim ids (default: whole catalog)")
      ->delimiter(',');
  cmd_check->add_option("--limit", limit, "counterexamples kept per claim");
  cmd_check->add_option("--case-cap", case_cap, "max assignments per claim");
  cmd_check->add_option("--enum-cap", enum_cap, "bit cap for semi-open enumeration");
  cmd_check->add_flag("--tsv", tsv, "machine-readable output");

  auto* cmd_fuzz =
      app.add_subcommand("fuzz", "check claims over seeded random spaces");
  cmd_fuzz->add_option("--seed", fuzz_config.seed, "base seed");
  cmd_fuzz->add_option("--spaces", fuzz_config.spaces, "number of spaces");
  cmd_fuzz->add_option("--min-universe", fuzz_config.min_universe, "min |X|");
  cmd_fuzz->add_option("--max-universe", fuzz_config.max_universe, "max |X|");
  cmd_fuzz->add_option("--min-params", fuzz_config.min_params, "min |E|");
  cmd_fuzz->add_option("--max-params", fuzz_config.max_params, "max |E|");
  cmd_fuzz->add_option("--min-generators", fuzz_config.min_generators,
                       "min generator count");
  cmd_fuzz->add_option("--max-generators", fuzz_config.max_generators,
                       "max generator count");
  cmd_fuzz->add_option("--closure-cap", fuzz_config.closure_cap,
                       "max members while closing a generated family");
  cmd_fuzz->add_option("--case-cap", fuzz_config.case_cap, "max assignments per claim");
  cmd_fuzz->add_option("--claims", claim_ids, "claim ids (default: whole catalog)")
      ->delimiter(',');
  cmd_fuzz->add_flag("--tsv", tsv, "machine-readable output");

  auto* cmd_repro =
      app.add_subcommand("repro", "recompute the built-in worked examples");
  cmd_repro->add_option("which", which, "ex38 or ex310")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cmd_validate->parsed()) {
      softtop::SpaceFile space = softtop::load_space_file(file);
      std::cout << space.validation.to_string();
      return space.validation.ok() ? 0 : 1;
    }

    if (cmd_op->parsed()) {
      softtop::SpaceFile space = load_valid(file);
      softtop::SoftSet input = softtop::parse_set_expr(space.context, set_expr);
      const softtop::SoftTopology& topology = *space.topology;
      softtop::SoftSet result = [&] {
        if (op_name == "int") return topology.interior(input);
        if (op_name == "cl") return topology.closure(input);
        auto family = softtop::SemiFamily::enumerate(topology, enum_cap);
        if (op_name == "ints") return family.semi_interior(input);
        if (op_name == "cls") return family.semi_closure(input);
        if (op_name == "exts") return family.semi_exterior(input);
        if (op_name == "bds") return family.semi_boundary(input);
        throw softtop::UnknownNameError(
            "unknown operator '" + op_name + "'; available: int cl ints cls exts bds");
      }();
      std::cout << result.to_string() << "\n";
      return 0;
    }

    if (cmd_family->parsed()) {
      softtop::SpaceFile space = load_valid(file);
      auto family = softtop::SemiFamily::enumerate(*space.topology, enum_cap);
      std::cout << "semi-open sets: " << family.size() << "\n";
      for (const auto& s : family.semi_open_sets()) std::cout << s.to_string() << "\n";
      return 0;
    }

    if (cmd_check->parsed()) {
      softtop::SpaceFile space = load_valid(file);
      auto view = softtop::SpaceView::analyze(*space.topology, enum_cap);
      auto claims = softtop::select_claims(claim_ids);
      auto verdicts = softtop::check_all(view, claims, limit, case_cap);
      std::cout << (tsv ? softtop::report_tsv(view, verdicts)
                        : softtop::report_text(view, verdicts));
      return any_failures(verdicts) ? 1 : 0;
    }

    if (cmd_fuzz->parsed()) {
      auto claims = softtop::select_claims(claim_ids);
      auto report = softtop::run_fuzz(fuzz_config, claims);
      std::cout << (tsv ? softtop::report_tsv(report) : softtop::report_text(report));
      for (const auto& agg : report.aggregates)
        if (agg.failures > 0) return 1;
      return 0;
    }

    if (cmd_repro->parsed()) {
      auto result = softtop::run_repro(which);
      std::cout << softtop::render(result);
      return result.all_match() ? 0 : 1;
    }
  } catch (const softtop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
