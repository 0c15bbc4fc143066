#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lace/lace_maps.hpp"
#include "lace/prop_subset.hpp"

namespace lace {

/// Size limits for exhaustive work. Operations refuse (Error with
/// limit_exceeded or budget_exceeded) rather than truncate.
struct Limits {
  int exhaustive = 12;       ///< verify_axioms, fiber check, generic enumeration
  int polynomial = 14;       ///< polynomial_identity_check
  int table = 16;            ///< explicit table maps
  std::size_t max_laces = std::size_t{1} << 22;
  std::size_t budget = std::size_t{1} << 16;  ///< elements in application instances

  /// Defaults overridden by LACE_EXHAUSTIVE_LIMIT and LACE_BUDGET when set.
  static Limits from_environment();
};

/// Properties 0..size-1 with optional labels (exactly `size` of them).
class PropertyUniverse {
public:
  explicit PropertyUniverse(int size, std::vector<std::string> labels = {});

  int size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Throws Error(out_of_range) if s has a member >= size().
  void check(PropSubset s) const;

private:
  int size_;
  std::vector<std::string> labels_;
};

namespace kind {
struct Identity {};
struct Bonferroni {
  int k;
};
struct Brun {
  BrunThresholds thresholds;
};
struct BrydgesSpencer {
  int dots;
};
/// image[mask] = l(mask); total over all 2^n subsets.
struct Table {
  std::vector<std::uint64_t> image;
};
}  // namespace kind

/// A total map S -> l(S) on subsets of a universe. Construction does not
/// check the lace axioms; see verify_axioms.
class LaceMap {
public:
  using Kind = std::variant<kind::Identity, kind::Bonferroni, kind::Brun, kind::BrydgesSpencer,
                            kind::Table>;

  static LaceMap identity(int n);
  /// Universe labels are "1".."n".
  static LaceMap bonferroni(int n, int k);
  /// Universe labels are "1".."n".
  static LaceMap brun(BrunThresholds thresholds);
  /// Universe is the arcs over dots 0..dots, lexicographic; labels "s-t".
  static LaceMap brydges_spencer(int dots);
  /// Explicit mapping; every subset of the n-universe must appear exactly once.
  static LaceMap table(int n, const std::vector<std::pair<PropSubset, PropSubset>>& entries,
                       const Limits& limits = {});
  static LaceMap table(int n, const std::function<PropSubset(PropSubset)>& fn,
                       const Limits& limits = {});

  const PropertyUniverse& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  const Kind& kind() const { return kind_; }
  const char* kind_name() const;
  bool is_builtin() const { return !std::holds_alternative<kind::Table>(kind_); }

  /// l(s). Throws Error(out_of_range) when s leaves the universe.
  PropSubset apply(PropSubset s) const;

private:
  LaceMap(PropertyUniverse universe, Kind kind)
      : universe_(std::move(universe)), kind_(std::move(kind)) {}

  PropertyUniverse universe_;
  Kind kind_;
};

/// A fixed point L of a lace-map with its compatible set C(L).
struct Lace {
  PropSubset members;
  PropSubset compatible;

  bool saturated() const { return compatible.empty(); }
  friend bool operator==(const Lace&, const Lace&) = default;
};

enum class Axiom { containment, interval, union_closure };  // (i), (ii), (iii)

/// "i", "ii", "iii".
const char* axiom_label(Axiom a);

struct AxiomReport {
  bool pass = true;
  std::optional<Axiom> violated;
  /// Named subsets of the first violation: ("S", ...), ("l(S)", ...), ...
  std::vector<std::pair<std::string, PropSubset>> witness;
};

PropSubset apply(const LaceMap& map, PropSubset s);
bool is_lace(const LaceMap& map, PropSubset s);

/// {p not in lace : l(lace + p) = lace}; closed forms for Identity,
/// Bonferroni and Brun. Throws Error(not_a_lace) if l(lace) != lace.
PropSubset compatible_set(const LaceMap& map, PropSubset lace);
/// The definitional scan, regardless of kind.
PropSubset compatible_set_by_scan(const LaceMap& map, PropSubset lace);

/// Exhaustive check of the three axioms, scanning subsets in increasing
/// mask order; reports the first violation found.
AxiomReport verify_axioms(const LaceMap& map, const Limits& limits = {});

/// Throws Error(axiom_violation) with the witness when a table map fails
/// verify_axioms. Builtin maps pass through unchecked.
void require_lace_map(const LaceMap& map, const Limits& limits = {});

/// All laces in canonical order (cardinality, then lexicographic). Builtins
/// use closed-form enumerators; tables use the generic scan.
std::vector<Lace> enumerate_laces(const LaceMap& map, const Limits& limits = {});
/// Fixed-point scan over all 2^n subsets, definitional compatible sets.
std::vector<Lace> enumerate_laces_generic(const LaceMap& map, const Limits& limits = {});

/// True iff every fiber {S : l(S) = L} is exactly the interval [L, L + C(L)].
bool fiber_interval_check(const LaceMap& map, const Limits& limits = {});

/// Sorts laces canonically by members.
void sort_canonical(std::vector<Lace>& laces);

}  // namespace lace
