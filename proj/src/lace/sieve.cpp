#include "lace/sieve.hpp"

#include <string>
#include <utility>

#include "lace/error.hpp"

namespace lace {

namespace {

ParityAnalysis classify(const std::vector<Lace>& laces) {
  ParityAnalysis a;
  for (const Lace& l : laces) {
    if (l.saturated()) {
      ++a.saturated_count;
    } else {
      ++a.unsaturated_count;
      ++a.unsaturated_by_size[l.members.size()];
    }
  }
  bool has_odd = false;
  bool has_even = false;
  for (const auto& [size, count] : a.unsaturated_by_size) {
    (size % 2 ? has_odd : has_even) = true;
  }
  a.all_unsaturated_same_parity = !(has_odd && has_even);
  if (a.all_unsaturated_same_parity && a.unsaturated_count > 0) {
    a.parity = has_odd ? Parity::odd : Parity::even;
  }
  return a;
}

nlohmann::ordered_json histogram_json(const ParityAnalysis& a) {
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (const auto& [size, count] : a.unsaturated_by_size) h[std::to_string(size)] = count;
  return h;
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

const char* to_string(Direction d) {
  switch (d) {
    case Direction::upper: return "upper";
    case Direction::lower: return "lower";
    case Direction::exact: return "exact";
  }
  return "exact";
}

ParityAnalysis analyze_parity(const LaceMap& map, const Limits& limits) {
  require_lace_map(map, limits);
  return classify(enumerate_laces(map, limits));
}

SieveBound sieve_bound(const WeightedInstance& inst, const LaceMap& map, const Limits& limits) {
  if (!inst.nonnegative()) {
    throw Error(ErrorCode::negative_weight,
                "directional sieve bounds require nonnegative weights");
  }
  if (inst.universe().size() != map.size()) {
    throw Error(ErrorCode::invalid_argument, "instance and map universes differ in size");
  }
  require_lace_map(map, limits);
  std::vector<Lace> laces = enumerate_laces(map, limits);
  const ParityAnalysis parity = classify(laces);
  if (!parity.all_unsaturated_same_parity) {
    throw Error(ErrorCode::mixed_parity,
                "unsaturated laces have mixed cardinality parity; no sieve direction",
                {{"unsaturated_by_size", histogram_json(parity)}});
  }
  std::erase_if(laces, [](const Lace& l) { return !l.saturated(); });
  SieveBound bound;
  bound.terms = lace_terms(inst, laces);
  bound.value = 0;
  for (const LaceTerm& t : bound.terms) bound.value += t.signed_value;
  if (!parity.parity) {
    bound.direction = Direction::exact;
  } else {
    bound.direction = *parity.parity == Parity::odd ? Direction::upper : Direction::lower;
  }
  return bound;
}

SieveBracket sieve_bracket(const WeightedInstance& inst, const LaceMap& first,
                           const LaceMap& second, const Limits& limits) {
  SieveBound a = sieve_bound(inst, first, limits);
  SieveBound b = sieve_bound(inst, second, limits);
  const bool a_low = a.direction != Direction::upper;
  const bool a_high = a.direction != Direction::lower;
  const bool b_low = b.direction != Direction::upper;
  const bool b_high = b.direction != Direction::lower;

  SieveBracket bracket;
  if (a_low && b_high) {
    bracket = {std::move(a), std::move(b)};
  } else if (b_low && a_high) {
    bracket = {std::move(b), std::move(a)};
  } else {
    throw Error(ErrorCode::direction_mismatch,
                std::string("both maps bound the same side (") + to_string(a.direction) + ", " +
                    to_string(b.direction) + ")");
  }
  if (bracket.lower.value > bracket.upper.value) {
    throw Error(ErrorCode::internal, "lower sieve exceeds upper sieve");
  }
  return bracket;
}

}  // namespace lace
