#include "softtop/semi_ops.hpp"

#include <stdexcept>

#include "softtop/errors.hpp"

namespace softtop {

bool is_semi_open(const SoftTopology& topology, const SoftSet& f) {
  require_same_context(topology.context(), f.context());
  for (const auto& open : topology.members()) {
    if (!open.is_subset_of(f)) continue;
    if (f.is_subset_of(topology.closure(open))) return true;
  }
  return false;
}

bool is_semi_closed(const SoftTopology& topology, const SoftSet& f) {
  require_same_context(topology.context(), f.context());
  // Route one: the complement is semi-open.
  bool via_complement = is_semi_open(topology, ~f);
  // Route two: some closed C satisfies interior(C) <= f <= C.
  bool via_closed = false;
  for (const auto& open : topology.members()) {
    SoftSet closed = ~open;
    if (!f.is_subset_of(closed)) continue;
    if (topology.interior(closed).is_subset_of(f)) {
      via_closed = true;
      break;
    }
  }
  if (via_complement != via_closed)
    throw std::logic_error("semi-closed characterizations disagree");
  return via_closed;
}

SemiFamily::SemiFamily(SoftTopology topology, std::vector<SoftSet> semi_open,
                       std::vector<bool> member_by_key)
    : topology_(std::move(topology)),
      semi_open_(std::move(semi_open)),
      member_by_key_(std::move(member_by_key)) {}

SemiFamily SemiFamily::enumerate(SoftTopology topology, int bit_cap) {
  if (bit_cap < 1 || bit_cap > kMaxBits)
    throw ConfigError("enumeration bit cap must be between 1 and " +
                      std::to_string(kMaxBits));
  const ContextPtr& ctx = topology.context();
  int n = ctx->bit_count();
  if (n > bit_cap)
    throw CapExceededError("context has " + std::to_string(n) +
                           " slots, above the enumeration cap of " +
                           std::to_string(bit_cap));

  // One closure per open member, computed once up front.
  std::vector<std::uint32_t> open_keys;
  std::vector<std::uint32_t> closure_keys;
  open_keys.reserve(topology.member_count());
  closure_keys.reserve(topology.member_count());
  for (const auto& open : topology.members()) {
    open_keys.push_back(open.key());
    closure_keys.push_back(topology.closure(open).key());
  }

  std::uint32_t full = ctx->full_set_mask();
  std::vector<SoftSet> semi_open;
  std::vector<bool> member_by_key(std::size_t{1} << n, false);
  for (std::uint32_t key = 0;; ++key) {
    for (std::size_t i = 0; i < open_keys.size(); ++i) {
      if ((open_keys[i] & ~key) == 0 && (key & ~closure_keys[i]) == 0) {
        semi_open.push_back(SoftSet::from_key(ctx, key));
        member_by_key[key] = true;
        break;
      }
    }
    if (key == full) break;
  }
  return SemiFamily(std::move(topology), std::move(semi_open),
                    std::move(member_by_key));
}

bool SemiFamily::contains(const SoftSet& f) const {
  require_same_context(context(), f.context());
  return member_by_key_[f.key()];
}

bool SemiFamily::contains_complement(const SoftSet& f) const {
  return contains(~f);
}

SoftSet SemiFamily::semi_interior(const SoftSet& f) const {
  require_same_context(context(), f.context());
  std::uint32_t acc = 0;
  for (const auto& s : semi_open_)
    if ((s.key() & ~f.key()) == 0) acc |= s.key();
  return SoftSet::from_key(context(), acc);
}

SoftSet SemiFamily::semi_closure(const SoftSet& f) const {
  require_same_context(context(), f.context());
  std::uint32_t full = context()->full_set_mask();
  std::uint32_t acc = full;
  for (const auto& s : semi_open_) {
    std::uint32_t semi_closed = s.key() ^ full;
    if ((f.key() & ~semi_closed) == 0) acc &= semi_closed;
  }
  return SoftSet::from_key(context(), acc);
}

SoftSet SemiFamily::semi_exterior(const SoftSet& f) const {
  return semi_interior(~f);
}

SoftSet SemiFamily::semi_boundary(const SoftSet& f) const {
  return ~(semi_interior(f) | semi_exterior(f));
}

bool SemiFamily::is_semi_nbd(int element, const SoftSet& g) const {
  require_same_context(context(), g.context());
  std::uint32_t xbit = context()->element_bit(element);
  for (const auto& s : semi_open_) {
    if (!(s.point_mask() & xbit)) continue;
    if ((s.key() & ~g.key()) == 0) return true;
  }
  return false;
}

bool SemiFamily::is_semi_nbd(std::string_view element, const SoftSet& g) const {
  return is_semi_nbd(context()->element_index(element), g);
}

std::vector<SoftSet> SemiFamily::nbd_system(int element) const {
  std::uint32_t xbit = context()->element_bit(element);
  std::vector<SoftSet> out;
  for (const auto& s : semi_open_)
    if (s.point_mask() & xbit) out.push_back(s);
  return out;
}

std::vector<SoftSet> SemiFamily::nbd_system(std::string_view element) const {
  return nbd_system(context()->element_index(element));
}

}  // namespace softtop
