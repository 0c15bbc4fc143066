#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "lace/prop_subset.hpp"

namespace lace {

/// Brun threshold chain n >= N_1 >= N_2 >= ... >= N_n >= 1 over labels 1..n.
/// Property index p carries label p + 1.
class BrunThresholds {
public:
  /// Throws Error(invalid_argument) unless the chain is non-increasing with
  /// every value in [1, n], n = values.size().
  explicit BrunThresholds(std::vector<int> values);

  int universe_size() const { return static_cast<int>(values_.size()); }
  /// N_j for 1-based position j.
  int at(int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const BrunThresholds&, const BrunThresholds&) = default;

private:
  std::vector<int> values_;
};

/// An arc joining dots s < t.
struct Arc {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Number of arcs over dots 0..dots, i.e. (dots+1 choose 2).
int arc_universe_size(int dots);
/// Lexicographic (s, t) index of an arc; the property index in the BS universe.
int arc_index(int dots, Arc arc);
Arc arc_at(int dots, int index);

/// A set of arcs on dots 0..dots, kept sorted and duplicate-free.
class ArcSet {
public:
  /// Throws on endpoints outside [0, dots], s >= t, or duplicates.
  ArcSet(int dots, std::vector<Arc> arcs);

  static ArcSet from_subset(int dots, PropSubset s);
  PropSubset to_subset() const;

  int dots() const { return dots_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

private:
  int dots_;
  std::vector<Arc> arcs_;
};

/// The k smallest members of s, or s itself when |s| < k. Requires k >= 1.
PropSubset bonferroni_apply(int k, PropSubset s);

/// Cuts s (read in decreasing label order i_1 > i_2 > ...) after the first
/// position j with i_j > N_j; returns s when no position violates.
PropSubset brun_apply(const BrunThresholds& thresholds, PropSubset s);

/// Brydges-Spencer lace of an arc set.
///
/// A component starting at dot d takes s_1 = d and t_1 = max{t : dt in G}.
/// It then repeats t_{i+1} = max{t : st in G, s < t_i} and
/// s_{i+1} = min{s : s t_{i+1} in G} while t_{i+1} > t_i and t_i < dots.
/// The next component starts at min{s : st in G, s >= t_last}. The first
/// component starts at the smallest left endpoint in G, and l(empty) = empty.
ArcSet brydges_spencer_apply(const ArcSet& arcs);
PropSubset brydges_spencer_apply(int dots, PropSubset arcs);

/// True iff within each geometric component of `lace` (arcs sorted by s,
/// a new component begins when s >= the running max t) consecutive arcs
/// satisfy s_{i+1} < t_i < t_{i+1}. Throws Error(not_a_lace) unless
/// `lace` is a fixed point of brydges_spencer_apply.
bool interlace_check(const ArcSet& lace);

// Closed-form lace enumerators. Each throws Error(limit_exceeded) once the
// number of laces would exceed `cap`. Output order is unspecified.
std::vector<PropSubset> identity_laces(int n, std::size_t cap);
std::vector<PropSubset> bonferroni_laces(int n, int k, std::size_t cap);
std::vector<PropSubset> brun_laces(const BrunThresholds& thresholds, std::size_t cap);
std::vector<PropSubset> brydges_spencer_laces(int dots, std::size_t cap);

// Closed-form compatible sets; `lace` must be a lace of the map.
PropSubset bonferroni_compatible(int n, int k, PropSubset lace);
PropSubset brun_compatible(const BrunThresholds& thresholds, PropSubset lace);

}  // namespace lace
