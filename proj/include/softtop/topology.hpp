#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softtop/soft_set.hpp"

namespace softtop {

// Default cap on the member count reached while closing a generating
// family under pairwise union/intersection.
inline constexpr std::size_t kDefaultClosureCap = 4096;

// One broken axiom found by SoftTopology::validate.
struct TopologyViolation {
  enum class Axiom { MissingEmpty, MissingFull, UnionEscapes, IntersectionEscapes };

  Axiom axiom;
  std::vector<SoftSet> pair;       // offending pair for the closure axioms
  std::optional<SoftSet> missing;  // the set that should be a member but is not

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<TopologyViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// A soft topology: finite family of soft sets containing the empty and the
// full soft set and closed under pairwise union and intersection. Members
// are deduplicated and kept in canonical (ascending key) order. Immutable.
class SoftTopology {
 public:
  // Checks every axiom on the given family and reports all violations in a
  // deterministic order. Does not throw on axiom failures.
  static ValidationReport validate(const ContextPtr& ctx,
                                   const std::vector<SoftSet>& family);

  // Builds a topology from a family that must already satisfy the axioms;
  // throws Error (with the first violation) otherwise.
  static SoftTopology from_family(ContextPtr ctx, std::vector<SoftSet> family);

  // Smallest topology containing the generators: adds empty/full and closes
  // under pairwise union/intersection. Throws CapExceededError if the member
  // count would exceed member_cap.
  static SoftTopology generate(ContextPtr ctx, const std::vector<SoftSet>& generators,
                               std::size_t member_cap = kDefaultClosureCap);

  static SoftTopology indiscrete(ContextPtr ctx);
  static SoftTopology discrete(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<SoftSet>& members() const { return members_; }
  std::size_t member_count() const { return members_.size(); }

  bool is_open(const SoftSet& f) const;
  bool is_closed(const SoftSet& f) const;  // complement is open

  // Union of all open subsets of f (largest open soft set inside f).
  SoftSet interior(const SoftSet& f) const;
  // Intersection of all closed supersets of f (smallest closed superset).
  SoftSet closure(const SoftSet& f) const;

  // Stable 64-bit digest of (|X|, |E|, member keys); used to tie check
  // reports and counterexample certificates to a specific space.
  std::uint64_t fingerprint() const;

 private:
  SoftTopology(ContextPtr ctx, std::vector<SoftSet> members);

  ContextPtr ctx_;
  std::vector<SoftSet> members_;          // canonical order
  std::vector<std::uint32_t> member_keys_;  // sorted, for O(log m) lookup
};

}  // namespace softtop
