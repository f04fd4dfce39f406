#include "softtop/repro.hpp"

#include "softtop/errors.hpp"

namespace softtop {

namespace {

struct NamedSlices {
  const char* name;
  std::vector<std::vector<std::string>> slices;
};

const std::vector<NamedSlices>& ex38_table() {
  static const std::vector<NamedSlices> table = {
      {"G1", {{"h1", "h2"}, {"h1", "h2"}}},
      {"G2", {{"h2"}, {"h1", "h3"}}},
      {"G3", {{"h2", "h3"}, {"h1"}}},
      {"G4", {{"h2"}, {"h1"}}},
      {"G5", {{"h1", "h2"}, {"h1", "h2", "h3"}}},
      {"G6", {{"h1", "h2", "h3"}, {"h1", "h2"}}},
      {"G7", {{"h2", "h3"}, {"h1", "h3"}}},
  };
  return table;
}

}  // namespace

SpaceView ex38_space() {
  ContextPtr ctx = SoftContext::make({"h1", "h2", "h3"}, {"e1", "e2"});
  std::vector<SoftSet> family{SoftSet::empty(ctx), SoftSet::full(ctx)};
  for (const auto& entry : ex38_table())
    family.push_back(SoftSet::from_slices(ctx, entry.slices));
  return SpaceView::analyze(SoftTopology::from_family(ctx, std::move(family)));
}

SoftSet ex38_set(const SpaceView& space, std::string_view name) {
  for (const auto& entry : ex38_table())
    if (name == entry.name) return SoftSet::from_slices(space.context(), entry.slices);
  throw UnknownNameError("unknown reference set '" + std::string(name) + "'");
}

bool ReproResult::all_match() const {
  for (const auto& line : lines)
    if (!line.match()) return false;
  return true;
}

namespace {

void expect_set(ReproResult& result, const char* label, const char* expected,
                const SoftSet& actual) {
  result.lines.push_back({label, expected, actual.to_string()});
}

void expect_bool(ReproResult& result, const char* label, const char* expected,
                 bool actual) {
  result.lines.push_back({label, expected, actual ? "true" : "false"});
}

ReproResult repro_ex38() {
  ReproResult result;
  result.name = "ex38";
  SpaceView space = ex38_space();
  SoftSet f = SoftSet::from_slices(space.context(), {{"h1"}, {"h3"}});

  expect_set(result, "F", "(e1:{h1}, e2:{h3})", f);
  expect_set(result, "F'", "(e1:{h2,h3}, e2:{h1,h2})", ~f);
  expect_bool(result, "F' is semi-open", "true", space.family.contains(~f));
  expect_set(result, "exts(F)", "(e1:{h2,h3}, e2:{h1,h2})",
             space.family.semi_exterior(f));
  return result;
}

ReproResult repro_ex310() {
  ReproResult result;
  result.name = "ex310";
  SpaceView space = ex38_space();
  SoftSet f = SoftSet::from_slices(space.context(), {{"h3"}, {"h3"}});
  SoftSet g = ex38_set(space, "G1");

  SoftSet ef = space.family.semi_exterior(f);
  SoftSet eg = space.family.semi_exterior(g);
  SoftSet e_inter = space.family.semi_exterior(f & g);

  expect_set(result, "F & G", "(e1:{}, e2:{})", f & g);
  expect_set(result, "exts(F & G)", "(e1:{h1,h2,h3}, e2:{h1,h2,h3})", e_inter);
  expect_set(result, "exts(F)", "(e1:{h1,h2}, e2:{h1,h2})", ef);
  expect_set(result, "exts(G)", "(e1:{}, e2:{})", eg);
  expect_set(result, "exts(F) | exts(G)", "(e1:{h1,h2}, e2:{h1,h2})", ef | eg);
  expect_bool(result, "exts(F) | exts(G) equals exts(F & G)", "false",
              (ef | eg) == e_inter);
  return result;
}

}  // namespace

ReproResult run_repro(std::string_view which) {
  if (which == "ex38") return repro_ex38();
  if (which == "ex310") return repro_ex310();
  throw UnknownNameError("unknown repro case '" + std::string(which) +
                         "'; available: ex38, ex310");
}

std::string render(const ReproResult& result) {
  std::string out = "repro " + result.name + "\n";
  std::size_t matched = 0;
  for (const auto& line : result.lines) {
    if (line.match()) {
      ++matched;
      out += "MATCH    " + line.label + " = " + line.actual + "\n";
    } else {
      out += "MISMATCH " + line.label + " = " + line.actual + " (expected " +
             line.expected + ")\n";
    }
  }
  out += "result: " + std::to_string(matched) + "/" +
         std::to_string(result.lines.size()) + " match\n";
  return out;
}

}  // namespace softtop
