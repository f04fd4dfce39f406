#include "softtop/soft_set.hpp"

#include <stdexcept>

#include "softtop/errors.hpp"

namespace softtop {

SoftSet SoftSet::empty(ContextPtr ctx) { return SoftSet(std::move(ctx), 0); }

SoftSet SoftSet::full(ContextPtr ctx) {
  std::uint32_t mask = ctx->full_set_mask();
  return SoftSet(std::move(ctx), mask);
}

SoftSet SoftSet::from_key(ContextPtr ctx, std::uint32_t key) {
  if (key & ~ctx->full_set_mask())
    throw Error("key has bits outside the context's " +
                std::to_string(ctx->bit_count()) + " slots");
  return SoftSet(std::move(ctx), key);
}

SoftSet SoftSet::from_slices(ContextPtr ctx,
                             const std::vector<std::vector<std::string>>& slices) {
  if (static_cast<int>(slices.size()) != ctx->param_count())
    throw Error("expected " + std::to_string(ctx->param_count()) +
                " slices, got " + std::to_string(slices.size()));
  std::uint32_t key = 0;
  for (int e = 0; e < ctx->param_count(); ++e)
    for (const auto& name : slices[e]) key |= ctx->set_bit(e, ctx->element_index(name));
  return SoftSet(std::move(ctx), key);
}

SoftSet SoftSet::singleton(ContextPtr ctx, std::string_view element) {
  int x = ctx->element_index(element);
  std::uint32_t key = 0;
  for (int e = 0; e < ctx->param_count(); ++e) key |= ctx->set_bit(e, x);
  return SoftSet(std::move(ctx), key);
}

std::string SoftSet::key_string() const {
  int n = ctx_->bit_count();
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (key_ & (std::uint32_t{1} << (n - 1 - i))) s[i] = '1';
  return s;
}

bool SoftSet::contains(int param, int element) const {
  return (key_ & ctx_->set_bit(param, element)) != 0;
}

std::uint32_t SoftSet::slice_mask(int param) const {
  int nx = ctx_->universe_size();
  int shift = ctx_->bit_count() - (param + 1) * nx;
  return (key_ >> shift) & ctx_->full_universe_mask();
}

std::vector<std::string> SoftSet::slice_elements(int param) const {
  return ctx_->mask_elements(slice_mask(param));
}

bool SoftSet::is_subset_of(const SoftSet& other) const {
  require_same_context(ctx_, other.ctx_);
  return (key_ & ~other.key_) == 0;
}

bool SoftSet::has_point(int element) const {
  for (int e = 0; e < ctx_->param_count(); ++e)
    if (!contains(e, element)) return false;
  return true;
}

std::uint32_t SoftSet::point_mask() const {
  std::uint32_t mask = ctx_->full_universe_mask();
  for (int e = 0; e < ctx_->param_count(); ++e) mask &= slice_mask(e);
  return mask;
}

std::vector<std::string> SoftSet::point_elements() const {
  return ctx_->mask_elements(point_mask());
}

SoftSet SoftSet::restricted_to(std::uint32_t universe_mask) const {
  std::uint32_t key = 0;
  int nx = ctx_->universe_size();
  for (int e = 0; e < ctx_->param_count(); ++e) {
    std::uint32_t slice = slice_mask(e) & universe_mask;
    key |= slice << (ctx_->bit_count() - (e + 1) * nx);
  }
  return SoftSet(ctx_, key);
}

SoftSet SoftSet::restricted_to(const std::vector<std::string>& elements) const {
  return restricted_to(ctx_->universe_mask(elements));
}

SoftSet operator|(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  return SoftSet(a.ctx_, a.key_ | b.key_);
}

SoftSet operator&(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  return SoftSet(a.ctx_, a.key_ & b.key_);
}

SoftSet operator-(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  return SoftSet(a.ctx_, a.key_ & ~b.key_);
}

SoftSet SoftSet::operator~() const {
  return SoftSet(ctx_, key_ ^ ctx_->full_set_mask());
}

bool operator==(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.key_ == b.key_;
}

bool operator<(const SoftSet& a, const SoftSet& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.key_ < b.key_;
}

std::string SoftSet::to_string() const {
  std::string out = "(";
  for (int e = 0; e < ctx_->param_count(); ++e) {
    if (e > 0) out += ", ";
    out += ctx_->param_name(e);
    out += ":{";
    bool first = true;
    for (int x = 0; x < ctx_->universe_size(); ++x) {
      if (!contains(e, x)) continue;
      if (!first) out += ",";
      out += ctx_->element_name(x);
      first = false;
    }
    out += "}";
  }
  out += ")";
  return out;
}

std::string SoftSet::to_expr() const {
  std::string out;
  for (int e = 0; e < ctx_->param_count(); ++e) {
    if (e > 0) out += "; ";
    out += ctx_->param_name(e);
    out += "=";
    bool first = true;
    for (int x = 0; x < ctx_->universe_size(); ++x) {
      if (!contains(e, x)) continue;
      if (!first) out += ",";
      out += ctx_->element_name(x);
      first = false;
    }
  }
  return out;
}

}  // namespace softtop
