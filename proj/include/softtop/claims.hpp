#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/semi_ops.hpp"

namespace softtop {

// Default cap on the number of (set..., point) assignments per claim check.
inline constexpr std::uint64_t kDefaultCaseCap = std::uint64_t{1} << 20;

// A topology together with its enumerated semi-open family; the unit every
// claim is checked against.
struct SpaceView {
  SoftTopology topology;
  SemiFamily family;

  static SpaceView analyze(SoftTopology topology, int bit_cap = kDefaultEnumBitCap);

  const ContextPtr& context() const { return topology.context(); }
  SoftSet from_key(std::uint32_t key) const {
    return SoftSet::from_key(topology.context(), key);
  }
  std::uint64_t fingerprint() const { return topology.fingerprint(); }
};

enum class ClaimStatus { BelievedTrue, Suspect, Ambiguous, CorrectedTypo };
enum class ClaimForm { Equality, Inclusion, Iff, Existence };
enum class Guard { None, Open, SemiOpen };  // candidate pool for set variables

std::string_view to_string(ClaimStatus status);
std::string_view to_string(ClaimForm form);
std::string_view to_string(Guard guard);

// One concrete binding of a claim's quantified variables. Set variables are
// stored as keys (F first, then G); the point variable as an element index.
struct Assignment {
  std::vector<std::uint32_t> set_keys;
  std::optional<int> point;

  // Replayable form, e.g. "F=010100;G=000011;x=h2"; "-" when no variables.
  std::string key_string(const SpaceView& space) const;
};

// Outcome of evaluating a claim on one assignment. The side strings are
// only guaranteed to be filled in when holds is false (hot loops skip
// formatting on success).
struct ClaimEval {
  bool holds;
  std::string lhs;
  std::string rhs;
};

struct Claim {
  std::string id;
  ClaimStatus status;
  ClaimForm form;
  Guard guard = Guard::None;
  int set_arity = 0;    // quantified soft-set variables, 0..2
  bool has_point = false;  // extra quantified point variable
  std::string statement;   // human-readable formula
  std::string note;        // reading/typo commentary, may be empty
  std::function<ClaimEval(const SpaceView&, const Assignment&)> eval;
};

// The fixed claim catalog, in a deterministic order.
const std::vector<Claim>& catalog();
const Claim& find_claim(std::string_view id);         // throws UnknownNameError
std::vector<const Claim*> select_claims(const std::vector<std::string>& ids);

// A recorded failing assignment plus the rendered sides at failure time.
struct Counterexample {
  Assignment assignment;
  std::string lhs;
  std::string rhs;
};

// Result of exhaustively checking one claim on one space.
struct Verdict {
  std::string claim_id;
  std::uint64_t space_fingerprint = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;  // first few, canonical order
  double wall_seconds = 0;  // measured but never rendered in reports
  bool passed() const { return failures == 0; }
};

// Exhaustively evaluates the claim over every assignment in canonical order
// (ascending F key, then G key, then element index; guards restrict the set
// candidate pool). Records the first `limit` counterexamples. Throws
// CapExceededError if the assignment count exceeds case_cap.
Verdict check(const SpaceView& space, const Claim& claim, std::size_t limit = 3,
              std::uint64_t case_cap = kDefaultCaseCap);

std::vector<Verdict> check_all(const SpaceView& space,
                               const std::vector<const Claim*>& claims,
                               std::size_t limit = 3,
                               std::uint64_t case_cap = kDefaultCaseCap);

// Re-evaluates one recorded counterexample; true iff the claim still fails
// on that assignment with identical rendered sides.
bool replay(const SpaceView& space, const Claim& claim, const Counterexample& cex);

// Deterministic plain-text / TSV reports. Byte-identical across reruns on
// the same space and claim selection.
std::string report_text(const SpaceView& space, const std::vector<Verdict>& verdicts);
std::string report_tsv(const SpaceView& space, const std::vector<Verdict>& verdicts);

}  // namespace softtop
