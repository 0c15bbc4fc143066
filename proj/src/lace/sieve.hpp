#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lace/expansion.hpp"

namespace lace {

enum class Parity { odd, even };
enum class Direction { upper, lower, exact };

const char* to_string(Parity p);
const char* to_string(Direction d);

struct ParityAnalysis {
  bool all_unsaturated_same_parity = true;
  /// Set iff all unsaturated laces share a parity and at least one exists.
  std::optional<Parity> parity;
  std::size_t unsaturated_count = 0;
  std::size_t saturated_count = 0;
  /// Unsaturated lace count per cardinality.
  std::map<int, std::size_t> unsaturated_by_size;
};

/// Sum over saturated laces only, with the side on which it bounds N_0.
struct SieveBound {
  Rational value;
  Direction direction = Direction::exact;
  std::vector<LaceTerm> terms;  ///< saturated laces, canonical order
};

struct SieveBracket {
  SieveBound lower;
  SieveBound upper;
};

ParityAnalysis analyze_parity(const LaceMap& map, const Limits& limits = {});

/// Upper when every unsaturated lace has odd cardinality, lower when even,
/// exact when there are none. Requires nonnegative weights
/// (Error negative_weight) and uniform parity (Error mixed_parity, detail
/// carries the histogram).
SieveBound sieve_bound(const WeightedInstance& inst, const LaceMap& map,
                       const Limits& limits = {});

/// Pairs a lower and an upper sieve; an exact bound serves either side.
/// Throws Error(direction_mismatch) when both maps bound the same side.
SieveBracket sieve_bracket(const WeightedInstance& inst, const LaceMap& first,
                           const LaceMap& second, const Limits& limits = {});

}  // namespace lace
