#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softtop/claims.hpp"

namespace softtop {

// splitmix64: tiny, seedable, platform-independent. Same stream for the
// same seed everywhere, which is what makes fuzz runs replayable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [lo, hi] via modulo; fine for test-case generation.
  std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t spaces = 100;
  int min_universe = 1;
  int max_universe = 3;
  int min_params = 1;
  int max_params = 2;
  int min_generators = 0;
  int max_generators = 3;
  std::size_t closure_cap = kDefaultClosureCap;
  std::uint64_t case_cap = kDefaultCaseCap;

  // Rejects empty ranges, contexts over kMaxBits, and shapes whose
  // worst-case two-set-plus-point claim would exceed case_cap. Throws
  // ConfigError.
  void validate() const;
};

// Draws one random space from the rng: universe and parameter sizes, then a
// generator count, then that many random soft-set keys, closed into a
// topology. Throws CapExceededError when the closure overflows closure_cap.
SoftTopology generate_space(SplitMix64& rng, const FuzzConfig& config);

// The space of run index i (0-based), independent of any other index: space
// seeds are drawn upfront from the base stream, one per index.
SoftTopology nth_space(const FuzzConfig& config, std::size_t index);

struct FuzzFailure {
  std::size_t space_index = 0;
  std::uint64_t space_fingerprint = 0;
  Counterexample counterexample;
  std::string assignment_key;  // rendered at capture time, for reports
};

// Per-claim totals across all checked spaces.
struct ClaimAggregate {
  std::string claim_id;
  std::uint64_t spaces = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::uint64_t failing_spaces = 0;
  std::optional<FuzzFailure> first_failure;
};

struct FuzzReport {
  FuzzConfig config;
  std::size_t spaces_checked = 0;
  std::size_t overflow_skipped = 0;
  std::vector<ClaimAggregate> aggregates;  // catalog order of `claims` arg
};

FuzzReport run_fuzz(const FuzzConfig& config, const std::vector<const Claim*>& claims);

std::string report_text(const FuzzReport& report);
std::string report_tsv(const FuzzReport& report);

}  // namespace softtop
