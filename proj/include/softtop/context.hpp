#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

// Hard cap on universe_size * param_count so every soft set fits one
// uint32_t and the full lattice of 2^(|X|*|E|) sets stays enumerable.
inline constexpr int kMaxBits = 20;

// Immutable pair (universe X, parameter list E) with fixed name order.
// All soft sets and topologies hold a shared_ptr to their context; two
// contexts are interchangeable iff both name lists match exactly.
class SoftContext {
 public:
  SoftContext(std::vector<std::string> universe, std::vector<std::string> params);

  static std::shared_ptr<const SoftContext> make(std::vector<std::string> universe,
                                                 std::vector<std::string> params);

  int universe_size() const { return static_cast<int>(universe_.size()); }
  int param_count() const { return static_cast<int>(params_.size()); }
  int bit_count() const { return universe_size() * param_count(); }

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& element_name(int x) const { return universe_.at(x); }
  const std::string& param_name(int e) const { return params_.at(e); }

  std::optional<int> find_element(std::string_view name) const;
  std::optional<int> find_param(std::string_view name) const;
  int element_index(std::string_view name) const;  // throws UnknownNameError
  int param_index(std::string_view name) const;    // throws UnknownNameError

  // Bit layout. Soft-set keys are params-major: slot(e,x) = e*|X| + x, and
  // slot i sits at bit (bit_count()-1-i) so that the integer order of keys
  // equals lexicographic order of the printed bit strings. Universe masks
  // (plain subsets of X) use the same convention over |X| bits.
  std::uint32_t set_bit(int param, int element) const;
  std::uint32_t full_set_mask() const;
  std::uint32_t element_bit(int element) const;
  std::uint32_t full_universe_mask() const;
  std::uint32_t universe_mask(const std::vector<std::string>& elements) const;
  std::vector<std::string> mask_elements(std::uint32_t universe_mask) const;

  bool operator==(const SoftContext& other) const {
    return universe_ == other.universe_ && params_ == other.params_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> params_;
};

using ContextPtr = std::shared_ptr<const SoftContext>;

// True when the two handles denote interchangeable contexts.
bool same_context(const ContextPtr& a, const ContextPtr& b);

// Throws ContextMismatchError unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace softtop
