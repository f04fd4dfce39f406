#pragma once

#include <string_view>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

// Default cap on |X|*|E| for enumerating all 2^(|X|*|E|) candidate sets.
inline constexpr int kDefaultEnumBitCap = 16;

// F is semi-open iff some open O satisfies O <= F <= closure(O).
bool is_semi_open(const SoftTopology& topology, const SoftSet& f);

// F is semi-closed iff its complement is semi-open; equivalently iff some
// closed C satisfies interior(C) <= F <= C. Both characterizations are
// evaluated and must agree.
bool is_semi_closed(const SoftTopology& topology, const SoftSet& f);

// The family of all semi-open soft sets of a space, found by exhaustive
// enumeration of every candidate key. All derived operators scan this
// family directly rather than using any closed-form shortcut, so the family
// itself stays the single source of truth. Immutable once built.
class SemiFamily {
 public:
  // Enumerates all candidates; requires bit_count <= bit_cap (and bit_cap
  // <= 20), else throws CapExceededError / ConfigError.
  static SemiFamily enumerate(SoftTopology topology, int bit_cap = kDefaultEnumBitCap);

  const SoftTopology& topology() const { return topology_; }
  const ContextPtr& context() const { return topology_.context(); }
  const std::vector<SoftSet>& semi_open_sets() const { return semi_open_; }
  std::size_t size() const { return semi_open_.size(); }

  bool contains(const SoftSet& f) const;          // f is semi-open
  bool contains_complement(const SoftSet& f) const;  // f is semi-closed

  // Union of all semi-open subsets of f.
  SoftSet semi_interior(const SoftSet& f) const;
  // Intersection of all semi-closed supersets of f.
  SoftSet semi_closure(const SoftSet& f) const;
  // Semi-interior of the complement.
  SoftSet semi_exterior(const SoftSet& f) const;
  // Complement of semi_interior(f) | semi_exterior(f).
  SoftSet semi_boundary(const SoftSet& f) const;

  // G is a semi-neighborhood of x iff some semi-open S has x as a point
  // and S <= G.
  bool is_semi_nbd(int element, const SoftSet& g) const;
  bool is_semi_nbd(std::string_view element, const SoftSet& g) const;

  // All semi-open sets having x as a point, in canonical order.
  std::vector<SoftSet> nbd_system(int element) const;
  std::vector<SoftSet> nbd_system(std::string_view element) const;

 private:
  SemiFamily(SoftTopology topology, std::vector<SoftSet> semi_open,
             std::vector<bool> member_by_key);

  SoftTopology topology_;
  std::vector<SoftSet> semi_open_;   // canonical order
  std::vector<bool> member_by_key_;  // indexed by key, size 2^bit_count
};

}  // namespace softtop
