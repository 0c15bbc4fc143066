#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lace {

/// Largest property universe representable by a PropSubset.
inline constexpr int kMaxProperties = 64;

/// A subset of property indices 0..63, stored as a bitmask.
///
/// PropSubset carries no universe size; operations that take a LaceMap or a
/// WeightedInstance check membership against their universe.
class PropSubset {
public:
  constexpr PropSubset() = default;
  constexpr explicit PropSubset(std::uint64_t bits) : bits_(bits) {}

  /// Builds a subset from indices. Throws lace::Error on an index outside
  /// [0, universe_size) or on duplicates.
  static PropSubset from_indices(const std::vector<int>& indices, int universe_size);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1U; }

  constexpr bool subset_of(PropSubset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(PropSubset other) const { return (bits_ & other.bits_) == 0; }

  constexpr PropSubset with(int p) const { return PropSubset(bits_ | (std::uint64_t{1} << p)); }
  constexpr PropSubset without(int p) const { return PropSubset(bits_ & ~(std::uint64_t{1} << p)); }

  constexpr PropSubset operator|(PropSubset o) const { return PropSubset(bits_ | o.bits_); }
  constexpr PropSubset operator&(PropSubset o) const { return PropSubset(bits_ & o.bits_); }
  constexpr PropSubset minus(PropSubset o) const { return PropSubset(bits_ & ~o.bits_); }

  /// Smallest / largest member; nullopt when empty.
  std::optional<int> min() const;
  std::optional<int> max() const;

  /// Ascending member list (the canonical serialized order).
  std::vector<int> members() const;

  /// True when every member is below universe_size.
  bool within(int universe_size) const { return subset_of(full(universe_size)); }

  static constexpr PropSubset full(int universe_size) {
    return universe_size >= 64 ? PropSubset(~std::uint64_t{0})
                               : PropSubset((std::uint64_t{1} << universe_size) - 1);
  }

  friend constexpr bool operator==(PropSubset, PropSubset) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Canonical lace order: cardinality, then lexicographic on ascending lists.
bool canonical_less(PropSubset a, PropSubset b);

/// "{0,3,5}" for diagnostics.
std::string to_string(PropSubset s);

/// Calls fn(sub) for every sub with lo ⊆ sub ⊆ hi, in increasing mask order
/// of the free bits. Requires lo ⊆ hi.
template <class Fn>
void for_each_in_interval(PropSubset lo, PropSubset hi, Fn&& fn) {
  const std::uint64_t free = hi.bits() & ~lo.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(PropSubset(lo.bits() | sub));
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

}  // namespace lace
