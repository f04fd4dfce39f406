#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

// Parsed form of the line-oriented space format:
//
//   # comment
//   universe h1 h2 h3
//   params e1 e2
//   set G1
//     e1 = h1 h2
//     e2 = h1 h2
//   topology G1 G2
//
// Inside a set block each line assigns one parameter's slice; omitted
// parameters default to the empty slice. The empty and full soft sets are
// implicit topology members and need not be declared. A missing topology
// directive yields the indiscrete space. The declared family is validated
// but an axiom violation is reported, not thrown, so callers can surface it.
struct SpaceFile {
  ContextPtr context;
  std::vector<std::pair<std::string, SoftSet>> named_sets;  // declaration order
  std::vector<std::string> topology_names;  // as listed on the directive
  std::vector<SoftSet> family;              // implicit members included, deduped
  ValidationReport validation;
  std::optional<SoftTopology> topology;     // present iff validation.ok()

  const SoftSet& set_by_name(std::string_view name) const;  // UnknownNameError
};

// Both throw ParseError with a 1-based line number on syntax errors and
// UnknownNameError / Error on name problems.
SpaceFile parse_space_file(std::string_view text);
SpaceFile load_space_file(const std::string& path);

// Canonical text that parses back to an equivalent SpaceFile.
std::string render_space_file(const SpaceFile& file);

// Inline soft-set expression: "e1=h1,h2; e2=" (omitted params are empty).
SoftSet parse_set_expr(const ContextPtr& ctx, std::string_view expr);

}  // namespace softtop
