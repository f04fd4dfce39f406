#include "softtop/topology.hpp"

#include <algorithm>
#include <set>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

std::vector<SoftSet> normalize(const ContextPtr& ctx, std::vector<SoftSet> family) {
  for (const auto& f : family) require_same_context(ctx, f.context());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool key_member(const std::vector<std::uint32_t>& keys, std::uint32_t key) {
  return std::binary_search(keys.begin(), keys.end(), key);
}

}  // namespace

std::string TopologyViolation::to_string() const {
  switch (axiom) {
    case Axiom::MissingEmpty:
      return "the empty soft set is not a member";
    case Axiom::MissingFull:
      return "the full soft set is not a member";
    case Axiom::UnionEscapes:
      return "union of " + pair[0].to_string() + " and " + pair[1].to_string() +
             " gives non-member " + missing->to_string();
    case Axiom::IntersectionEscapes:
      return "intersection of " + pair[0].to_string() + " and " +
             pair[1].to_string() + " gives non-member " + missing->to_string();
  }
  return "unknown violation";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok\n";
  std::string out;
  for (const auto& v : violations) {
    out += "violation: ";
    out += v.to_string();
    out += "\n";
  }
  return out;
}

ValidationReport SoftTopology::validate(const ContextPtr& ctx,
                                        const std::vector<SoftSet>& family) {
  auto members = normalize(ctx, family);
  std::vector<std::uint32_t> keys;
  keys.reserve(members.size());
  for (const auto& m : members) keys.push_back(m.key());

  ValidationReport report;
  if (!key_member(keys, 0))
    report.violations.push_back({TopologyViolation::Axiom::MissingEmpty, {}, {}});
  if (!key_member(keys, ctx->full_set_mask()))
    report.violations.push_back({TopologyViolation::Axiom::MissingFull, {}, {}});
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      SoftSet u = members[i] | members[j];
      if (!key_member(keys, u.key()))
        report.violations.push_back(
            {TopologyViolation::Axiom::UnionEscapes, {members[i], members[j]}, u});
      SoftSet n = members[i] & members[j];
      if (!key_member(keys, n.key()))
        report.violations.push_back({TopologyViolation::Axiom::IntersectionEscapes,
                                     {members[i], members[j]},
                                     n});
    }
  }
  return report;
}

SoftTopology::SoftTopology(ContextPtr ctx, std::vector<SoftSet> members)
    : ctx_(std::move(ctx)), members_(std::move(members)) {
  member_keys_.reserve(members_.size());
  for (const auto& m : members_) member_keys_.push_back(m.key());
}

SoftTopology SoftTopology::from_family(ContextPtr ctx, std::vector<SoftSet> family) {
  auto members = normalize(ctx, std::move(family));
  auto report = validate(ctx, members);
  if (!report.ok())
    throw Error("family is not a topology: " + report.violations.front().to_string());
  return SoftTopology(std::move(ctx), std::move(members));
}

SoftTopology SoftTopology::generate(ContextPtr ctx,
                                    const std::vector<SoftSet>& generators,
                                    std::size_t member_cap) {
  for (const auto& g : generators) require_same_context(ctx, g.context());
  std::set<std::uint32_t> keys{0, ctx->full_set_mask()};
  for (const auto& g : generators) keys.insert(g.key());
  if (keys.size() > member_cap)
    throw CapExceededError("closure exceeds member cap of " +
                           std::to_string(member_cap));

  // Fixpoint: add pairwise unions/intersections until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> snapshot(keys.begin(), keys.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        for (std::uint32_t k : {snapshot[i] | snapshot[j], snapshot[i] & snapshot[j]}) {
          if (keys.insert(k).second) {
            grew = true;
            if (keys.size() > member_cap)
              throw CapExceededError("closure exceeds member cap of " +
                                     std::to_string(member_cap));
          }
        }
      }
    }
  }

  std::vector<SoftSet> members;
  members.reserve(keys.size());
  for (std::uint32_t k : keys) members.push_back(SoftSet::from_key(ctx, k));
  return SoftTopology(std::move(ctx), std::move(members));
}

SoftTopology SoftTopology::indiscrete(ContextPtr ctx) {
  return generate(ctx, {});
}

SoftTopology SoftTopology::discrete(ContextPtr ctx) {
  std::vector<SoftSet> members;
  std::uint32_t full = ctx->full_set_mask();
  members.reserve(std::size_t{1} << ctx->bit_count());
  for (std::uint32_t k = 0;; ++k) {
    members.push_back(SoftSet::from_key(ctx, k));
    if (k == full) break;
  }
  return SoftTopology(std::move(ctx), std::move(members));
}

bool SoftTopology::is_open(const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  return key_member(member_keys_, f.key());
}

bool SoftTopology::is_closed(const SoftSet& f) const { return is_open(~f); }

SoftSet SoftTopology::interior(const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  std::uint32_t acc = 0;
  for (std::uint32_t k : member_keys_)
    if ((k & ~f.key()) == 0) acc |= k;
  return SoftSet::from_key(ctx_, acc);
}

SoftSet SoftTopology::closure(const SoftSet& f) const {
  require_same_context(ctx_, f.context());
  std::uint32_t full = ctx_->full_set_mask();
  std::uint32_t acc = full;
  for (std::uint32_t k : member_keys_) {
    std::uint32_t closed = k ^ full;
    if ((f.key() & ~closed) == 0) acc &= closed;
  }
  return SoftSet::from_key(ctx_, acc);
}

std::uint64_t SoftTopology::fingerprint() const {
  // FNV-1a over the shape and the sorted member keys.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t value, int bytes) {
    for (int i = 0; i < bytes; ++i) {
      h ^= (value >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint64_t>(ctx_->universe_size()), 1);
  mix(static_cast<std::uint64_t>(ctx_->param_count()), 1);
  mix(static_cast<std::uint64_t>(member_keys_.size()), 4);
  for (std::uint32_t k : member_keys_) mix(k, 4);
  return h;
}

}  // namespace softtop
