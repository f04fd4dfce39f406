#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "softtop/fuzz.hpp"
#include "softtop/soft_set.hpp"
#include "softtop/topology.hpp"

namespace fixture {

// The reference space shared by most tests: X = {h1,h2,h3}, E = {e1,e2}.
inline softtop::ContextPtr ref_context() {
  return softtop::SoftContext::make({"h1", "h2", "h3"}, {"e1", "e2"});
}

inline softtop::SoftSet ref_set(const softtop::ContextPtr& ctx,
                                std::vector<std::vector<std::string>> slices) {
  return softtop::SoftSet::from_slices(ctx, slices);
}

// G1..G7 of the reference topology, keys 54, 21, 28, 20, 55, 62, 29.
inline std::vector<softtop::SoftSet> ref_generators(const softtop::ContextPtr& ctx) {
  return {
      ref_set(ctx, {{"h1", "h2"}, {"h1", "h2"}}),
      ref_set(ctx, {{"h2"}, {"h1", "h3"}}),
      ref_set(ctx, {{"h2", "h3"}, {"h1"}}),
      ref_set(ctx, {{"h2"}, {"h1"}}),
      ref_set(ctx, {{"h1", "h2"}, {"h1", "h2", "h3"}}),
      ref_set(ctx, {{"h1", "h2", "h3"}, {"h1", "h2"}}),
      ref_set(ctx, {{"h2", "h3"}, {"h1", "h3"}}),
  };
}

inline softtop::SoftTopology ref_topology() {
  auto ctx = ref_context();
  auto family = ref_generators(ctx);
  family.push_back(softtop::SoftSet::empty(ctx));
  family.push_back(softtop::SoftSet::full(ctx));
  return softtop::SoftTopology::from_family(ctx, std::move(family));
}

// Every context shape with universe_size * param_count <= max_bits.
inline std::vector<std::pair<int, int>> shapes_up_to(int max_bits) {
  std::vector<std::pair<int, int>> shapes;
  for (int nx = 1; nx <= max_bits; ++nx)
    for (int ne = 1; ne <= max_bits; ++ne)
      if (nx * ne <= max_bits) shapes.push_back({nx, ne});
  return shapes;
}

inline softtop::ContextPtr make_context(int nx, int ne) {
  std::vector<std::string> universe;
  for (int x = 1; x <= nx; ++x) universe.push_back("x" + std::to_string(x));
  std::vector<std::string> params;
  for (int e = 1; e <= ne; ++e) params.push_back("e" + std::to_string(e));
  return softtop::SoftContext::make(std::move(universe), std::move(params));
}

// Deterministic small topology: close `gens` seeded random keys.
inline softtop::SoftTopology seeded_topology(const softtop::ContextPtr& ctx,
                                             std::uint64_t seed, int gens) {
  softtop::SplitMix64 rng(seed);
  std::vector<softtop::SoftSet> generators;
  for (int i = 0; i < gens; ++i) {
    std::uint32_t key = static_cast<std::uint32_t>(rng.next()) & ctx->full_set_mask();
    generators.push_back(softtop::SoftSet::from_key(ctx, key));
  }
  return softtop::SoftTopology::generate(ctx, generators);
}

}  // namespace fixture
