#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/context.hpp"

namespace softtop {

// A soft set over a fixed context: one subset of the universe per parameter.
// Stored as a single bit-packed key (see SoftContext for the layout), so all
// slice-wise algebra is plain word arithmetic. Values are immutable; every
// operation returns a fresh SoftSet.
class SoftSet {
 public:
  static SoftSet empty(ContextPtr ctx);  // every slice empty
  static SoftSet full(ContextPtr ctx);   // every slice = X
  static SoftSet from_key(ContextPtr ctx, std::uint32_t key);
  // One element-name list per parameter, in context parameter order.
  static SoftSet from_slices(ContextPtr ctx,
                             const std::vector<std::vector<std::string>>& slices);
  // The soft set whose every slice is {element}.
  static SoftSet singleton(ContextPtr ctx, std::string_view element);

  const ContextPtr& context() const { return ctx_; }
  std::uint32_t key() const { return key_; }
  std::string key_string() const;  // '0'/'1' per slot, params-major

  bool contains(int param, int element) const;
  std::uint32_t slice_mask(int param) const;
  std::vector<std::string> slice_elements(int param) const;

  bool is_empty() const { return key_ == 0; }
  bool is_full() const { return key_ == ctx_->full_set_mask(); }
  bool is_subset_of(const SoftSet& other) const;

  // Membership of a point: x belongs to the soft set iff x lies in the
  // slice of every parameter.
  bool has_point(int element) const;
  std::uint32_t point_mask() const;
  std::vector<std::string> point_elements() const;

  // Slice-wise intersection with a subset Y of the universe.
  SoftSet restricted_to(std::uint32_t universe_mask) const;
  SoftSet restricted_to(const std::vector<std::string>& elements) const;

  friend SoftSet operator|(const SoftSet& a, const SoftSet& b);   // union
  friend SoftSet operator&(const SoftSet& a, const SoftSet& b);   // intersection
  friend SoftSet operator-(const SoftSet& a, const SoftSet& b);   // difference
  SoftSet operator~() const;                                      // complement

  friend bool operator==(const SoftSet& a, const SoftSet& b);
  friend bool operator!=(const SoftSet& a, const SoftSet& b) { return !(a == b); }
  // Canonical order: ascending key, i.e. lexicographic on the bit string.
  friend bool operator<(const SoftSet& a, const SoftSet& b);

  // Rendering: "(e1:{h1,h2}, e2:{})".
  std::string to_string() const;
  // Expression form accepted back by parse_set_expr: "e1=h1,h2; e2=".
  std::string to_expr() const;

 private:
  SoftSet(ContextPtr ctx, std::uint32_t key) : ctx_(std::move(ctx)), key_(key) {}

  ContextPtr ctx_;
  std::uint32_t key_;
};

}  // namespace softtop
