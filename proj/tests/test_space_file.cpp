#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixture.hpp"
#include "softtop/errors.hpp"
#include "softtop/space_file.hpp"

using namespace softtop;

namespace {

const char* kRefSpace = R"(# reference space
universe h1 h2 h3
params e1 e2

set G1
  e1 = h1 h2
  e2 = h1 h2
set G2
  e1 = h2
  e2 = h1 h3
set G3
  e1 = h2 h3
  e2 = h1
set G4
  e1 = h2
  e2 = h1
set G5
  e1 = h1 h2
  e2 = h1 h2 h3
set G6
  e1 = h1 h2 h3
  e2 = h1 h2
set G7
  e1 = h2 h3
  e2 = h1 h3

topology G1 G2 G3 G4 G5 G6 G7
)";

}  // namespace

TEST_CASE("parsing the reference space") {
  auto file = parse_space_file(kRefSpace);
  CHECK(file.context->universe_size() == 3);
  CHECK(file.context->param_count() == 2);
  CHECK(file.named_sets.size() == 7);
  CHECK(file.named_sets[0].first == "G1");
  CHECK(file.set_by_name("G4").key() == 20);
  CHECK_THROWS_AS(file.set_by_name("G9"), UnknownNameError);
  CHECK(file.topology_names.size() == 7);
  CHECK(file.validation.ok());
  REQUIRE(file.topology.has_value());
  CHECK(file.topology->member_count() == 9);
  CHECK(file.topology->fingerprint() == fixture::ref_topology().fingerprint());
  // family includes the implicit ends, sorted by key.
  CHECK(file.family.size() == 9);
  CHECK(file.family.front().is_empty());
  CHECK(file.family.back().is_full());
}

TEST_CASE("slices default to empty and '=' needs no spaces") {
  auto file = parse_space_file(
      "universe h1 h2\nparams e1 e2\nset A\ne1=h2 h1\ntopology A\n");
  const auto& a = file.set_by_name("A");
  CHECK(a.slice_elements(0) == std::vector<std::string>{"h1", "h2"});
  CHECK(a.slice_elements(1).empty());
  // {Phi, A, full} happens to be a topology.
  CHECK(file.validation.ok());
  CHECK(file.topology->member_count() == 3);
}

TEST_CASE("missing topology directive gives the indiscrete space") {
  auto file = parse_space_file("universe h1\nparams e1\nset A\ne1 = h1\n");
  CHECK(file.named_sets.size() == 1);
  CHECK(file.topology_names.empty());
  REQUIRE(file.topology.has_value());
  CHECK(file.topology->member_count() == 2);
}

TEST_CASE("axiom violations are reported, not thrown") {
  std::string text =
      "universe h1 h2 h3\nparams e1 e2\n"
      "set G2\n e1 = h2\n e2 = h1 h3\n"
      "set G3\n e1 = h2 h3\n e2 = h1\n"
      "topology G2 G3\n";
  auto file = parse_space_file(text);
  CHECK_FALSE(file.validation.ok());
  CHECK(file.validation.violations.size() == 2);
  CHECK_FALSE(file.topology.has_value());
  CHECK(file.family.size() == 4);
}

TEST_CASE("parse errors carry the offending line") {
  auto line_of = [](const char* text) {
    try {
      parse_space_file(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("universe h1\nuniverse h2\nparams e1\n") == 2);
  CHECK(line_of("params e1\nuniverse h1\n") == 1);
  CHECK(line_of("universe h1\nparams e1\nparams e2\n") == 3);
  CHECK(line_of("universe h1\nset A\nparams e1\n") == 2);
  CHECK(line_of("universe h1\nparams e1\ne1 = h1\n") == 3);  // slice outside set
  CHECK(line_of("universe h1\nparams e1\nset A\nset A\n") == 4);
  CHECK(line_of("universe h1\nparams e1\nset A\ne1 = h1\ne1 = h1\n") == 5);
  CHECK(line_of("universe h1\nparams e1\nset A\ne2 = h1\n") == 3);  // unknown param
  CHECK(line_of("universe h1\nparams e1\nset A\ne1 h1\n") == 4);    // missing '='
  CHECK(line_of("universe h1\nparams e1\nset set\n") == 3);
  CHECK(line_of("universe h1\nparams e1\ntopology B\n") == 3);
  CHECK(line_of("universe h1\nparams e1\nset A\ntopology A A\n") == 4);
  CHECK(line_of("universe h1\nparams e1\ntopology\ntopology\n") == 4);
  CHECK(line_of("universe h1\nparams e1\ntopology\nset A\n") == 4);
  CHECK(line_of("universe h1\nparams e1\ntopology\ne1 = h1\n") == 4);
  CHECK(line_of("universe h1 h1\nparams e1\n") == 1);  // duplicate element
  CHECK(line_of("universe h1\nparams e1 e1\n") == 1);  // context error points at universe
  CHECK(line_of("universe\nparams e1\n") == 1);
  CHECK(line_of("params e1\n") == 1);   // params before universe
  CHECK(line_of("universe h1\n") == 1); // missing params reported at EOF
  CHECK(line_of("") == 0);              // empty input has no line to blame
  CHECK(line_of("universe h1\nparams e1\nset A\ne1 = h9\n") == 3);  // at set line
}

TEST_CASE("comments and blank lines are ignored") {
  auto file = parse_space_file(
      "# leading comment\n\nuniverse h1 h2 # trailing\nparams e1\n\n"
      "set A # named\n  e1 = h1 # slice\n\ntopology A # done\n");
  CHECK(file.context->universe_size() == 2);
  CHECK(file.set_by_name("A").slice_elements(0) == std::vector<std::string>{"h1"});
  CHECK(file.validation.ok());
}

TEST_CASE("render round-trips") {
  auto file = parse_space_file(kRefSpace);
  std::string rendered = render_space_file(file);
  auto again = parse_space_file(rendered);
  CHECK(again.topology->fingerprint() == file.topology->fingerprint());
  CHECK(again.named_sets.size() == file.named_sets.size());
  for (std::size_t i = 0; i < file.named_sets.size(); ++i) {
    CHECK(again.named_sets[i].first == file.named_sets[i].first);
    CHECK(again.named_sets[i].second.key() == file.named_sets[i].second.key());
  }
  CHECK(render_space_file(again) == rendered);

  CHECK(render_space_file(
            parse_space_file("universe h1\nparams e1 e2\nset A\ne1=h1\n")) ==
        "universe h1\nparams e1 e2\nset A\n  e1 = h1\ntopology\n");
}

TEST_CASE("load_space_file") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "softtop_test_space.txt";
  {
    std::ofstream out(path);
    out << kRefSpace;
  }
  auto file = load_space_file(path.string());
  CHECK(file.topology->member_count() == 9);
  fs::remove(path);
  CHECK_THROWS_AS(load_space_file(path.string()), Error);
}

TEST_CASE("set expressions") {
  auto ctx = fixture::ref_context();
  CHECK(parse_set_expr(ctx, "e1=h1,h2; e2=").key() == 48);
  CHECK(parse_set_expr(ctx, " e1 = h1 , h2 ; e2 = h3 ").key() == 49);
  CHECK(parse_set_expr(ctx, "").is_empty());
  CHECK(parse_set_expr(ctx, "   ").is_empty());
  CHECK(parse_set_expr(ctx, "e2=h1").key() == 4);  // omitted e1 is empty
  CHECK(parse_set_expr(ctx, "e2=h1,h3; e1=h2") ==
        fixture::ref_set(ctx, {{"h2"}, {"h1", "h3"}}));

  CHECK_THROWS_AS(parse_set_expr(ctx, "e1"), ParseError);
  CHECK_THROWS_AS(parse_set_expr(ctx, "=h1"), ParseError);
  CHECK_THROWS_AS(parse_set_expr(ctx, "e1=h1; e1=h2"), ParseError);
  CHECK_THROWS_AS(parse_set_expr(ctx, "e1=h1;"), ParseError);   // empty clause
  CHECK_THROWS_AS(parse_set_expr(ctx, "e1=h1,,h2"), ParseError);
  CHECK_THROWS_AS(parse_set_expr(ctx, "e3=h1"), UnknownNameError);
  CHECK_THROWS_AS(parse_set_expr(ctx, "e1=h9"), UnknownNameError);

  // Expression errors carry no line number.
  try {
    parse_set_expr(ctx, "e1");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 0);
  }
}

TEST_CASE("expression round-trip over every soft set") {
  auto ctx = fixture::ref_context();
  for (std::uint32_t k = 0; k <= 63; ++k) {
    SoftSet f = SoftSet::from_key(ctx, k);
    CHECK(parse_set_expr(ctx, f.to_expr()) == f);
  }
}
