#include "softtop/context.hpp"

#include <algorithm>
#include <cctype>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

// Characters with structural meaning in the rendered/expression syntax, plus
// the directive keywords of the space format. Keeping them out of names makes
// every rendering parse back unambiguously.
bool reserved_char(char c) {
  switch (c) {
    case '(': case ')': case '{': case '}':
    case ':': case ',': case ';': case '=': case '#':
      return true;
    default:
      return false;
  }
}

bool reserved_word(const std::string& name) {
  return name == "universe" || name == "params" || name == "set" ||
         name == "topology";
}

void check_names(const std::vector<std::string>& names, const char* what) {
  if (names.empty())
    throw Error(std::string(what) + " list must be non-empty");
  for (const auto& name : names) {
    if (name.empty())
      throw Error(std::string(what) + " name must be non-empty");
    if (reserved_word(name))
      throw Error(std::string(what) + " name '" + name + "' is a reserved word");
    for (char c : name) {
      if (std::isspace(static_cast<unsigned char>(c)))
        throw Error(std::string(what) + " name '" + name + "' contains whitespace");
      if (reserved_char(c))
        throw Error(std::string(what) + " name '" + name +
                    "' contains reserved character '" + c + "'");
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw Error(std::string(what) + " name '" + names[i] + "' is duplicated");
}

}  // namespace

SoftContext::SoftContext(std::vector<std::string> universe,
                         std::vector<std::string> params)
    : universe_(std::move(universe)), params_(std::move(params)) {
  check_names(universe_, "universe");
  check_names(params_, "parameter");
  if (bit_count() > kMaxBits)
    throw Error("context too large: " + std::to_string(universe_.size()) + "*" +
                std::to_string(params_.size()) + " slots exceeds the cap of " +
                std::to_string(kMaxBits));
}

std::shared_ptr<const SoftContext> SoftContext::make(
    std::vector<std::string> universe, std::vector<std::string> params) {
  return std::make_shared<const SoftContext>(std::move(universe), std::move(params));
}

std::optional<int> SoftContext::find_element(std::string_view name) const {
  auto it = std::find(universe_.begin(), universe_.end(), name);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<int>(it - universe_.begin());
}

std::optional<int> SoftContext::find_param(std::string_view name) const {
  auto it = std::find(params_.begin(), params_.end(), name);
  if (it == params_.end()) return std::nullopt;
  return static_cast<int>(it - params_.begin());
}

int SoftContext::element_index(std::string_view name) const {
  if (auto i = find_element(name)) return *i;
  throw UnknownNameError("unknown element '" + std::string(name) + "'");
}

int SoftContext::param_index(std::string_view name) const {
  if (auto i = find_param(name)) return *i;
  throw UnknownNameError("unknown parameter '" + std::string(name) + "'");
}

std::uint32_t SoftContext::set_bit(int param, int element) const {
  int slot = param * universe_size() + element;
  return std::uint32_t{1} << (bit_count() - 1 - slot);
}

std::uint32_t SoftContext::full_set_mask() const {
  int n = bit_count();
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

std::uint32_t SoftContext::element_bit(int element) const {
  return std::uint32_t{1} << (universe_size() - 1 - element);
}

std::uint32_t SoftContext::full_universe_mask() const {
  return (std::uint32_t{1} << universe_size()) - 1;
}

std::uint32_t SoftContext::universe_mask(const std::vector<std::string>& elements) const {
  std::uint32_t mask = 0;
  for (const auto& name : elements) mask |= element_bit(element_index(name));
  return mask;
}

std::vector<std::string> SoftContext::mask_elements(std::uint32_t universe_mask) const {
  std::vector<std::string> out;
  for (int x = 0; x < universe_size(); ++x)
    if (universe_mask & element_bit(x)) out.push_back(universe_[x]);
  return out;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b))
    throw ContextMismatchError("operands belong to different contexts");
}

}  // namespace softtop
