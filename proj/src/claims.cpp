#include "softtop/claims.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "softtop/errors.hpp"

namespace softtop {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::BelievedTrue: return "believed-true";
    case ClaimStatus::Suspect: return "suspect";
    case ClaimStatus::Ambiguous: return "ambiguous";
    case ClaimStatus::CorrectedTypo: return "corrected-typo";
  }
  return "?";
}

std::string_view to_string(ClaimForm form) {
  switch (form) {
    case ClaimForm::Equality: return "equality";
    case ClaimForm::Inclusion: return "inclusion";
    case ClaimForm::Iff: return "iff";
    case ClaimForm::Existence: return "existence";
  }
  return "?";
}

std::string_view to_string(Guard guard) {
  switch (guard) {
    case Guard::None: return "none";
    case Guard::Open: return "open";
    case Guard::SemiOpen: return "semi-open";
  }
  return "?";
}

SpaceView SpaceView::analyze(SoftTopology topology, int bit_cap) {
  SemiFamily family = SemiFamily::enumerate(topology, bit_cap);
  return SpaceView{std::move(topology), std::move(family)};
}

std::string Assignment::key_string(const SpaceView& space) const {
  static const char* kSetNames[] = {"F", "G"};
  std::string out;
  for (std::size_t i = 0; i < set_keys.size(); ++i) {
    if (!out.empty()) out += ";";
    out += kSetNames[i];
    out += "=";
    out += SoftSet::from_key(space.context(), set_keys[i]).key_string();
  }
  if (point) {
    if (!out.empty()) out += ";";
    out += "x=";
    out += space.context()->element_name(*point);
  }
  return out.empty() ? "-" : out;
}

const Claim& find_claim(std::string_view id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw UnknownNameError("unknown claim '" + std::string(id) + "'");
}

std::vector<const Claim*> select_claims(const std::vector<std::string>& ids) {
  std::vector<const Claim*> out;
  if (ids.empty()) {
    for (const auto& c : catalog()) out.push_back(&c);
    return out;
  }
  for (const auto& id : ids) out.push_back(&find_claim(id));
  return out;
}

namespace {

// Candidate keys for one quantified set variable under a guard. Guard::None
// is returned empty and iterated densely (0 .. full key) by the caller.
std::vector<std::uint32_t> guard_keys(const SpaceView& space, Guard guard) {
  std::vector<std::uint32_t> keys;
  if (guard == Guard::Open) {
    for (const auto& m : space.topology.members()) keys.push_back(m.key());
  } else if (guard == Guard::SemiOpen) {
    for (const auto& s : space.family.semi_open_sets()) keys.push_back(s.key());
  }
  return keys;
}

}  // namespace

Verdict check(const SpaceView& space, const Claim& claim, std::size_t limit,
              std::uint64_t case_cap) {
  auto start = std::chrono::steady_clock::now();

  const int bits = space.context()->bit_count();
  const std::uint64_t dense_count = std::uint64_t{1} << bits;
  std::vector<std::uint32_t> keys = guard_keys(space, claim.guard);
  const std::uint64_t pool =
      claim.guard == Guard::None ? dense_count : static_cast<std::uint64_t>(keys.size());

  std::uint64_t cases = 1;
  for (int i = 0; i < claim.set_arity; ++i) cases *= pool;
  if (claim.has_point) cases *= static_cast<std::uint64_t>(space.context()->universe_size());
  if (cases > case_cap)
    throw CapExceededError("claim '" + claim.id + "' needs " + std::to_string(cases) +
                           " cases, above the cap of " + std::to_string(case_cap));

  if (claim.guard == Guard::None) {
    keys.resize(dense_count);
    for (std::uint64_t k = 0; k < dense_count; ++k)
      keys[k] = static_cast<std::uint32_t>(k);
  }

  Verdict verdict;
  verdict.claim_id = claim.id;
  verdict.space_fingerprint = space.fingerprint();
  verdict.cases = cases;

  Assignment a;
  a.set_keys.assign(static_cast<std::size_t>(claim.set_arity), 0);

  auto eval_one = [&]() {
    ClaimEval r = claim.eval(space, a);
    if (!r.holds) {
      ++verdict.failures;
      if (verdict.counterexamples.size() < limit)
        verdict.counterexamples.push_back({a, std::move(r.lhs), std::move(r.rhs)});
    }
  };
  auto point_loop = [&]() {
    if (!claim.has_point) {
      eval_one();
      return;
    }
    for (int x = 0; x < space.context()->universe_size(); ++x) {
      a.point = x;
      eval_one();
    }
  };

  switch (claim.set_arity) {
    case 0:
      point_loop();
      break;
    case 1:
      for (std::uint32_t f : keys) {
        a.set_keys[0] = f;
        point_loop();
      }
      break;
    case 2:
      for (std::uint32_t f : keys) {
        a.set_keys[0] = f;
        for (std::uint32_t g : keys) {
          a.set_keys[1] = g;
          point_loop();
        }
      }
      break;
    default:
      throw Error("claim '" + claim.id + "' has unsupported arity");
  }

  verdict.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

std::vector<Verdict> check_all(const SpaceView& space,
                               const std::vector<const Claim*>& claims,
                               std::size_t limit, std::uint64_t case_cap) {
  std::vector<Verdict> out;
  out.reserve(claims.size());
  for (const Claim* c : claims) out.push_back(check(space, *c, limit, case_cap));
  return out;
}

bool replay(const SpaceView& space, const Claim& claim, const Counterexample& cex) {
  if (static_cast<int>(cex.assignment.set_keys.size()) != claim.set_arity) return false;
  if (cex.assignment.point.has_value() != claim.has_point) return false;
  std::uint32_t full = space.context()->full_set_mask();
  for (std::uint32_t k : cex.assignment.set_keys)
    if (k & ~full) return false;
  if (cex.assignment.point &&
      (*cex.assignment.point < 0 ||
       *cex.assignment.point >= space.context()->universe_size()))
    return false;
  ClaimEval r = claim.eval(space, cex.assignment);
  return !r.holds && r.lhs == cex.lhs && r.rhs == cex.rhs;
}

namespace {

void append_verdict_line(std::ostringstream& out, const Verdict& v) {
  const Claim& claim = find_claim(v.claim_id);
  out << std::left << std::setw(18) << v.claim_id << ' ' << std::setw(15)
      << to_string(claim.status) << ' ' << (v.passed() ? "PASS" : "FAIL")
      << " cases=" << std::setw(8) << v.cases << " failures=" << v.failures << '\n';
}

}  // namespace

std::string report_text(const SpaceView& space, const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  std::size_t failing = 0;
  for (const auto& v : verdicts)
    if (!v.passed()) ++failing;

  out << "space fingerprint=" << std::hex << std::setfill('0') << std::setw(16)
      << space.fingerprint() << std::dec << std::setfill(' ')
      << " universe=" << space.context()->universe_size()
      << " params=" << space.context()->param_count()
      << " open=" << space.topology.member_count()
      << " semi-open=" << space.family.size() << '\n';
  out << "claims=" << verdicts.size() << " failing=" << failing << "\n\n";

  for (const auto& v : verdicts) {
    append_verdict_line(out, v);
    for (const auto& cex : v.counterexamples) {
      out << "  counterexample " << cex.assignment.key_string(space) << '\n';
      if (!cex.lhs.empty()) out << "    " << cex.lhs << '\n';
      if (!cex.rhs.empty()) out << "    " << cex.rhs << '\n';
    }
  }
  return out.str();
}

std::string report_tsv(const SpaceView& space, const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  out << "claim\tstatus\tcases\tfailures\tfirst_counterexample\n";
  for (const auto& v : verdicts) {
    const Claim& claim = find_claim(v.claim_id);
    out << v.claim_id << '\t' << to_string(claim.status) << '\t' << v.cases << '\t'
        << v.failures << '\t';
    if (v.counterexamples.empty()) {
      out << '-';
    } else {
      out << v.counterexamples.front().assignment.key_string(space);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace softtop
