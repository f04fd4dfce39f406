#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "softtop/claims.hpp"

namespace softtop {

// The built-in reference space used by the worked examples: X = {h1,h2,h3},
// E = {e1,e2}, topology {Phi, full, G1..G7}.
SpaceView ex38_space();
SoftSet ex38_set(const SpaceView& space, std::string_view name);  // "G1".."G7"

// One computed value measured against its frozen expectation.
struct ReproLine {
  std::string label;
  std::string expected;
  std::string actual;
  bool match() const { return expected == actual; }
};

struct ReproResult {
  std::string name;
  std::vector<ReproLine> lines;
  bool all_match() const;
};

// which = "ex38" (semi-exterior of a single set, with its complement check)
// or "ex310" (semi-exterior of an intersection vs union of semi-exteriors).
ReproResult run_repro(std::string_view which);

std::string render(const ReproResult& result);

}  // namespace softtop
