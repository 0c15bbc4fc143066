#pragma once

// Test-only oracles and generators. Nothing here calls the lace enumeration,
// expansion or compatible-set code it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lace/expansion.hpp"

namespace lace::testing {

/// Sum over all S of (-1)^|S| times the weight of elements whose property
/// set contains S.
inline Rational inclusion_exclusion(const WeightedInstance& inst) {
  const int n = inst.universe().size();
  Rational total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    Rational covered = 0;
    for (const Element& e : inst.elements()) {
      if ((e.properties.bits() & s) == s) covered += e.weight;
    }
    total += (std::popcount(s) % 2 == 0) ? covered : Rational(-covered);
  }
  return total;
}

/// {p not in L : l(L + p) = L}, straight from the definition.
inline PropSubset compatible_oracle(const LaceMap& map, PropSubset lace) {
  std::uint64_t out = 0;
  for (int p = 0; p < map.size(); ++p) {
    const std::uint64_t bit = std::uint64_t{1} << p;
    if (!(lace.bits() & bit) && map.apply(PropSubset(lace.bits() | bit)) == lace) out |= bit;
  }
  return PropSubset(out);
}

/// Fixed points of the map by full scan.
inline std::vector<std::uint64_t> fixed_points(const LaceMap& map) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << map.size()); ++s) {
    if (map.apply(PropSubset(s)).bits() == s) out.push_back(s);
  }
  return out;
}

/// Count permutations of {0..n-1} fixing every point of `fixed` and no point of `moved`.
inline long long count_permutations(int n, std::uint64_t fixed, std::uint64_t moved) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const bool fixes = perm[static_cast<std::size_t>(i)] == i;
      if ((fixed >> i) & 1U) ok = fixes;
      if ((moved >> i) & 1U) ok = ok && !fixes;
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Random instance: up to max_elements elements, random property sets,
/// integer weights in [lo, hi].
inline WeightedInstance random_instance(std::mt19937_64& rng, int n, int max_elements, int lo,
                                        int hi) {
  std::uniform_int_distribution<int> count_dist(0, max_elements);
  std::uniform_int_distribution<int> weight_dist(lo, hi);
  std::uniform_real_distribution<double> density_dist(0.05, 0.6);
  const double density = density_dist(rng);
  std::bernoulli_distribution has(density);
  std::vector<Element> elements;
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    std::uint64_t props = 0;
    for (int p = 0; p < n; ++p) {
      if (has(rng)) props |= std::uint64_t{1} << p;
    }
    elements.push_back({Rational(weight_dist(rng)), PropSubset(props)});
  }
  return WeightedInstance(PropertyUniverse(n), std::move(elements));
}

/// Random valid Brun chain n >= N_1 >= ... >= N_n >= 1.
inline BrunThresholds random_brun_chain(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(1, n);
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int& x : v) x = dist(rng);
  std::sort(v.rbegin(), v.rend());
  return BrunThresholds(std::move(v));
}

/// Random lace-map from a greedy partition of the Boolean lattice into
/// intervals [L, L + C]: each unassigned subset (random order) becomes a
/// bottom L and grows C by random properties while the interval stays free.
inline LaceMap random_interval_map(std::mt19937_64& rng, int n) {
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::int64_t> image(count, -1);
  std::vector<std::uint64_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution take(0.7);
  for (std::uint64_t bottom : order) {
    if (image[bottom] >= 0) continue;
    std::vector<int> free_props;
    for (int p = 0; p < n; ++p) {
      if (!((bottom >> p) & 1U)) free_props.push_back(p);
    }
    std::shuffle(free_props.begin(), free_props.end(), rng);
    std::uint64_t compat = 0;
    for (int p : free_props) {
      if (!take(rng)) continue;
      const std::uint64_t bit = std::uint64_t{1} << p;
      bool free_interval = true;
      for (std::uint64_t sub = compat;; sub = (sub - 1) & compat) {
        if (image[bottom | bit | sub] >= 0) free_interval = false;
        if (sub == 0 || !free_interval) break;
      }
      if (free_interval) compat |= bit;
    }
    for (std::uint64_t sub = compat;; sub = (sub - 1) & compat) {
      image[bottom | sub] = static_cast<std::int64_t>(bottom);
      if (sub == 0) break;
    }
  }
  return LaceMap::table(n, [&](PropSubset s) {
    return PropSubset(static_cast<std::uint64_t>(image[s.bits()]));
  });
}

/// The three broken maps: each violates exactly the named axiom first.
inline LaceMap broken_containment_map() {  // (i): l(S) = S + {0}, n = 2
  return LaceMap::table(2, [](PropSubset s) { return s.with(0); });
}
inline LaceMap broken_interval_map() {  // (ii): l(S) = S minus its maximum, n = 3
  return LaceMap::table(3, [](PropSubset s) { return s.empty() ? s : s.without(*s.max()); });
}
inline LaceMap broken_union_map() {  // (iii): l({0,1}) = {0,1}, else empty, n = 2
  return LaceMap::table(2, [](PropSubset s) { return s.bits() == 3 ? s : PropSubset(); });
}

}  // namespace lace::testing
