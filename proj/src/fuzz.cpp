#include "softtop/fuzz.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

#include "softtop/errors.hpp"

namespace softtop {

void FuzzConfig::validate() const {
  if (spaces == 0) throw ConfigError("spaces must be positive");
  if (min_universe < 1 || min_universe > max_universe)
    throw ConfigError("universe range is empty or starts below 1");
  if (min_params < 1 || min_params > max_params)
    throw ConfigError("params range is empty or starts below 1");
  if (min_generators < 0 || min_generators > max_generators)
    throw ConfigError("generators range is empty or starts below 0");
  if (max_universe * max_params > kMaxBits)
    throw ConfigError("max universe*params exceeds the context cap of " +
                      std::to_string(kMaxBits));
  if (closure_cap < 2) throw ConfigError("closure cap below 2 cannot hold a topology");
  // The worst claim shape is two set variables plus a point; reject configs
  // that could blow the per-claim case cap mid-run.
  int bits = max_universe * max_params;
  std::uint64_t pool = std::uint64_t{1} << bits;
  std::uint64_t worst = pool * pool * static_cast<std::uint64_t>(max_universe);
  if (worst > case_cap)
    throw ConfigError("worst-case space needs " + std::to_string(worst) +
                      " cases per claim, above the cap of " + std::to_string(case_cap));
}

SoftTopology generate_space(SplitMix64& rng, const FuzzConfig& config) {
  int nx = static_cast<int>(rng.in_range(config.min_universe, config.max_universe));
  int ne = static_cast<int>(rng.in_range(config.min_params, config.max_params));
  int ng = static_cast<int>(rng.in_range(config.min_generators, config.max_generators));

  std::vector<std::string> universe;
  for (int x = 1; x <= nx; ++x) universe.push_back("x" + std::to_string(x));
  std::vector<std::string> params;
  for (int e = 1; e <= ne; ++e) params.push_back("e" + std::to_string(e));
  ContextPtr ctx = SoftContext::make(std::move(universe), std::move(params));

  std::vector<SoftSet> generators;
  generators.reserve(ng);
  for (int i = 0; i < ng; ++i) {
    std::uint32_t key = static_cast<std::uint32_t>(rng.next()) & ctx->full_set_mask();
    generators.push_back(SoftSet::from_key(ctx, key));
  }
  return SoftTopology::generate(ctx, generators, config.closure_cap);
}

namespace {

std::vector<std::uint64_t> space_seeds(const FuzzConfig& config) {
  // All per-space seeds come off the base stream up front, so space i is
  // the same no matter which other spaces get generated or skipped.
  SplitMix64 base(config.seed);
  std::vector<std::uint64_t> seeds(config.spaces);
  for (auto& s : seeds) s = base.next();
  return seeds;
}

}  // namespace

SoftTopology nth_space(const FuzzConfig& config, std::size_t index) {
  config.validate();
  if (index >= config.spaces)
    throw ConfigError("space index " + std::to_string(index) +
                      " out of range for a run of " + std::to_string(config.spaces));
  SplitMix64 rng(space_seeds(config)[index]);
  return generate_space(rng, config);
}

FuzzReport run_fuzz(const FuzzConfig& config, const std::vector<const Claim*>& claims) {
  config.validate();
  auto seeds = space_seeds(config);

  FuzzReport report;
  report.config = config;
  report.aggregates.reserve(claims.size());
  for (const Claim* c : claims) {
    ClaimAggregate agg;
    agg.claim_id = c->id;
    report.aggregates.push_back(std::move(agg));
  }

  for (std::size_t i = 0; i < config.spaces; ++i) {
    SplitMix64 rng(seeds[i]);
    std::optional<SoftTopology> topology;
    try {
      topology = generate_space(rng, config);
    } catch (const CapExceededError&) {
      ++report.overflow_skipped;
      continue;
    }
    SpaceView space = SpaceView::analyze(std::move(*topology), kMaxBits);
    ++report.spaces_checked;

    for (std::size_t j = 0; j < claims.size(); ++j) {
      Verdict v = check(space, *claims[j], 1, config.case_cap);
      ClaimAggregate& agg = report.aggregates[j];
      ++agg.spaces;
      agg.cases += v.cases;
      agg.failures += v.failures;
      if (v.failures == 0) continue;
      ++agg.failing_spaces;
      if (!agg.first_failure) {
        FuzzFailure failure;
        failure.space_index = i;
        failure.space_fingerprint = v.space_fingerprint;
        failure.counterexample = v.counterexamples.front();
        failure.assignment_key =
            failure.counterexample.assignment.key_string(space);
        agg.first_failure = std::move(failure);
      }
    }
  }
  return report;
}

namespace {

std::string format_fingerprint(std::uint64_t fp) {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << fp;
  return out.str();
}

}  // namespace

std::string report_text(const FuzzReport& report) {
  const FuzzConfig& c = report.config;
  std::ostringstream out;
  out << "fuzz seed=" << c.seed << " spaces=" << c.spaces << " universe=["
      << c.min_universe << "," << c.max_universe << "] params=[" << c.min_params
      << "," << c.max_params << "] generators=[" << c.min_generators << ","
      << c.max_generators << "] closure-cap=" << c.closure_cap << '\n';
  out << "checked=" << report.spaces_checked
      << " overflow-skipped=" << report.overflow_skipped << "\n\n";

  for (const auto& agg : report.aggregates) {
    const Claim& claim = find_claim(agg.claim_id);
    out << std::left << std::setw(18) << agg.claim_id << ' ' << std::setw(15)
        << to_string(claim.status) << ' '
        << (agg.failures == 0 ? "PASS" : "FAIL") << " spaces=" << agg.spaces
        << " cases=" << agg.cases << " failures=" << agg.failures
        << " failing-spaces=" << agg.failing_spaces << '\n';
    if (agg.first_failure) {
      const FuzzFailure& f = *agg.first_failure;
      out << "  first-failure space=" << f.space_index
          << " fingerprint=" << format_fingerprint(f.space_fingerprint) << '\n';
      out << "    " << f.assignment_key << '\n';
      if (!f.counterexample.lhs.empty()) out << "    " << f.counterexample.lhs << '\n';
      if (!f.counterexample.rhs.empty()) out << "    " << f.counterexample.rhs << '\n';
    }
  }
  return out.str();
}

std::string report_tsv(const FuzzReport& report) {
  std::ostringstream out;
  out << "claim\tstatus\tspaces\tcases\tfailures\tfailing_spaces\t"
         "first_failure_space\tfirst_failure_key\n";
  for (const auto& agg : report.aggregates) {
    const Claim& claim = find_claim(agg.claim_id);
    out << agg.claim_id << '\t' << to_string(claim.status) << '\t' << agg.spaces
        << '\t' << agg.cases << '\t' << agg.failures << '\t' << agg.failing_spaces
        << '\t';
    if (agg.first_failure) {
      out << agg.first_failure->space_index << '\t'
          << agg.first_failure->assignment_key;
    } else {
      out << "-\t-";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace softtop
