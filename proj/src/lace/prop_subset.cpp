#include "lace/prop_subset.hpp"

#include <algorithm>

#include "lace/error.hpp"

namespace lace {

PropSubset PropSubset::from_indices(const std::vector<int>& indices, int universe_size) {
  std::uint64_t bits = 0;
  for (int p : indices) {
    if (p < 0 || p >= universe_size) {
      throw Error(ErrorCode::out_of_range, "property index " + std::to_string(p) +
                                               " outside universe of size " +
                                               std::to_string(universe_size));
    }
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (bits & bit) {
      throw Error(ErrorCode::invalid_argument, "duplicate property index " + std::to_string(p));
    }
    bits |= bit;
  }
  return PropSubset(bits);
}

std::optional<int> PropSubset::min() const {
  if (bits_ == 0) return std::nullopt;
  return std::countr_zero(bits_);
}

std::optional<int> PropSubset::max() const {
  if (bits_ == 0) return std::nullopt;
  return 63 - std::countl_zero(bits_);
}

std::vector<int> PropSubset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool canonical_less(PropSubset a, PropSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

std::string to_string(PropSubset s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace lace
