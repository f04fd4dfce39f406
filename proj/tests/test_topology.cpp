#include <algorithm>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fixture.hpp"
#include "softtop/errors.hpp"
#include "softtop/topology.hpp"

using namespace softtop;

TEST_CASE("reference family validates and builds") {
  auto ctx = fixture::ref_context();
  auto family = fixture::ref_generators(ctx);
  family.push_back(SoftSet::empty(ctx));
  family.push_back(SoftSet::full(ctx));

  auto report = SoftTopology::validate(ctx, family);
  CHECK(report.ok());
  CHECK(report.to_string() == "ok\n");

  auto topo = SoftTopology::from_family(ctx, family);
  CHECK(topo.member_count() == 9);
  // Members come back sorted by key.
  std::vector<std::uint32_t> keys;
  for (const auto& m : topo.members()) keys.push_back(m.key());
  CHECK(keys == std::vector<std::uint32_t>{0, 20, 21, 28, 29, 54, 55, 62, 63});
  CHECK(topo.is_open(SoftSet::from_key(ctx, 20)));
  CHECK_FALSE(topo.is_open(SoftSet::from_key(ctx, 1)));
  CHECK(topo.is_closed(~SoftSet::from_key(ctx, 54)));

  // Duplicated members are deduplicated, not an error.
  family.push_back(fixture::ref_generators(ctx)[0]);
  CHECK(SoftTopology::from_family(ctx, family).member_count() == 9);
}

TEST_CASE("validate reports every broken axiom deterministically") {
  auto ctx = fixture::ref_context();
  auto gens = fixture::ref_generators(ctx);
  const auto& g2 = gens[1];
  const auto& g3 = gens[2];

  // {Phi, G2, G3, full} lacks G2|G3 = G7 and G2&G3 = G4.
  std::vector<SoftSet> family{SoftSet::empty(ctx), g2, g3, SoftSet::full(ctx)};
  auto report = SoftTopology::validate(ctx, family);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0].axiom == TopologyViolation::Axiom::UnionEscapes);
  CHECK(report.violations[0].missing->key() == 29);
  CHECK(report.violations[1].axiom == TopologyViolation::Axiom::IntersectionEscapes);
  CHECK(report.violations[1].missing->key() == 20);
  CHECK(report.violations[0].pair[0] == g2);
  CHECK(report.violations[0].pair[1] == g3);
  CHECK(report.to_string() ==
        "violation: union of (e1:{h2}, e2:{h1,h3}) and (e1:{h2,h3}, e2:{h1}) gives "
        "non-member (e1:{h2,h3}, e2:{h1,h3})\n"
        "violation: intersection of (e1:{h2}, e2:{h1,h3}) and (e1:{h2,h3}, e2:{h1}) "
        "gives non-member (e1:{h2}, e2:{h1})\n");

  CHECK_THROWS_AS(SoftTopology::from_family(ctx, family), Error);

  auto missing_ends = SoftTopology::validate(ctx, {g2});
  REQUIRE(missing_ends.violations.size() == 2);
  CHECK(missing_ends.violations[0].axiom == TopologyViolation::Axiom::MissingEmpty);
  CHECK(missing_ends.violations[1].axiom == TopologyViolation::Axiom::MissingFull);
}

TEST_CASE("generate closes a family and is idempotent") {
  auto ctx = fixture::ref_context();
  auto gens = fixture::ref_generators(ctx);
  auto topo = SoftTopology::generate(ctx, {gens[1], gens[2]});
  std::vector<std::uint32_t> keys;
  for (const auto& m : topo.members()) keys.push_back(m.key());
  CHECK(keys == std::vector<std::uint32_t>{0, 20, 21, 28, 29, 63});

  auto again = SoftTopology::generate(ctx, topo.members());
  CHECK(again.fingerprint() == topo.fingerprint());

  CHECK(SoftTopology::generate(ctx, {}).member_count() == 2);
  CHECK_THROWS_AS(SoftTopology::generate(ctx, {gens[1], gens[2]}, 4),
                  CapExceededError);
}

TEST_CASE("indiscrete and discrete") {
  auto small = fixture::make_context(2, 1);
  CHECK(SoftTopology::indiscrete(small).member_count() == 2);
  auto disc = SoftTopology::discrete(small);
  CHECK(disc.member_count() == 4);
  for (std::uint32_t k = 0; k < 4; ++k)
    CHECK(disc.is_open(SoftSet::from_key(small, k)));
}

TEST_CASE("interior and closure on the reference space") {
  auto topo = fixture::ref_topology();
  auto ctx = topo.context();
  auto gens = fixture::ref_generators(ctx);

  CHECK(topo.interior(fixture::ref_set(ctx, {{"h2", "h3"}, {"h1", "h2"}})) ==
        gens[2]);
  CHECK(topo.interior(fixture::ref_set(ctx, {{"h3"}, {"h3"}})).is_empty());
  CHECK(topo.interior(gens[0]) == gens[0]);  // open sets are fixed points
  CHECK(topo.closure(gens[2]).is_full());
  CHECK(topo.closure(fixture::ref_set(ctx, {{"h3"}, {}})) ==
        fixture::ref_set(ctx, {{"h3"}, {}}));  // complement of open G5
  CHECK(topo.closure(SoftSet::empty(ctx)).is_empty());
}

TEST_CASE("interior and closure laws, exhaustive per shape") {
  for (auto [nx, ne] : fixture::shapes_up_to(6)) {
    auto ctx = fixture::make_context(nx, ne);
    std::vector<SoftTopology> topologies{SoftTopology::indiscrete(ctx),
                                         SoftTopology::discrete(ctx)};
    for (std::uint64_t seed : {3u, 4u, 5u})
      topologies.push_back(fixture::seeded_topology(ctx, seed, 3));

    const std::uint32_t full = ctx->full_set_mask();
    for (const auto& t : topologies) {
      for (std::uint32_t fk = 0;; ++fk) {
        SoftSet f = SoftSet::from_key(ctx, fk);
        SoftSet i = t.interior(f);
        SoftSet c = t.closure(f);
        CHECK(i.is_subset_of(f));
        CHECK(f.is_subset_of(c));
        CHECK(t.interior(i) == i);
        CHECK(t.closure(c) == c);
        CHECK(t.is_open(i));
        CHECK(t.is_closed(c));
        CHECK(c == ~t.interior(~f));
        CHECK(i == ~t.closure(~f));
        // Extremality against a direct scan over the members.
        for (const auto& o : t.members()) {
          if (o.is_subset_of(f)) CHECK(o.is_subset_of(i));
          SoftSet closed = ~o;
          if (f.is_subset_of(closed)) CHECK(c.is_subset_of(closed));
        }
        // Monotonicity against the sub-keys of f.
        SoftSet fi = t.interior(f);
        for (std::uint32_t gk = fk & (fk - 1); gk; gk = fk & (gk - 1)) {
          SoftSet g = SoftSet::from_key(ctx, gk);
          CHECK(t.interior(g).is_subset_of(fi));
          CHECK(t.closure(g).is_subset_of(c));
        }
        if (fk == full) break;
      }
    }
  }
}

TEST_CASE("fingerprint is stable and input-order independent") {
  auto ctx = fixture::ref_context();
  auto family = fixture::ref_generators(ctx);
  family.push_back(SoftSet::empty(ctx));
  family.push_back(SoftSet::full(ctx));
  auto a = SoftTopology::from_family(ctx, family);
  std::reverse(family.begin(), family.end());
  auto b = SoftTopology::from_family(ctx, family);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.fingerprint() != SoftTopology::indiscrete(ctx).fingerprint());
  CHECK(a.fingerprint() != SoftTopology::discrete(ctx).fingerprint());
}

TEST_CASE("operations reject foreign contexts") {
  auto topo = fixture::ref_topology();
  auto other = SoftSet::full(fixture::make_context(2, 2));
  CHECK_THROWS_AS(topo.interior(other), ContextMismatchError);
  CHECK_THROWS_AS(topo.closure(other), ContextMismatchError);
  CHECK_THROWS_AS(topo.is_open(other), ContextMismatchError);
  CHECK_THROWS_AS(
      SoftTopology::from_family(topo.context(), std::vector<SoftSet>{other}),
      ContextMismatchError);
}
