#include "lace/expansion.hpp"

#include <string>

#include "lace/error.hpp"

namespace lace {

namespace {

void require_same_universe(const WeightedInstance& inst, const LaceMap& map) {
  if (inst.universe().size() != map.size()) {
    throw Error(ErrorCode::invalid_argument,
                "instance universe size " + std::to_string(inst.universe().size()) +
                    " does not match map universe size " + std::to_string(map.size()));
  }
}

Rational sum_over_histogram(const std::map<std::uint64_t, Rational>& hist, const Lace& lace) {
  Rational total = 0;
  for (const auto& [mask, weight] : hist) {
    const PropSubset props(mask);
    if (lace.members.subset_of(props) && props.disjoint(lace.compatible)) total += weight;
  }
  return total;
}

}  // namespace

WeightedInstance::WeightedInstance(PropertyUniverse universe, std::vector<Element> elements)
    : universe_(std::move(universe)), elements_(std::move(elements)) {
  for (const Element& e : elements_) universe_.check(e.properties);
}

bool WeightedInstance::nonnegative() const {
  for (const Element& e : elements_) {
    if (e.weight < 0) return false;
  }
  return true;
}

std::map<std::uint64_t, Rational> WeightedInstance::histogram() const {
  std::map<std::uint64_t, Rational> hist;
  for (const Element& e : elements_) hist[e.properties.bits()] += e.weight;
  std::erase_if(hist, [](const auto& kv) { return kv.second == 0; });
  return hist;
}

Rational n_of_lace(const WeightedInstance& inst, const LaceMap& map, const Lace& lace) {
  require_same_universe(inst, map);
  map.universe().check(lace.members | lace.compatible);
  Rational total = 0;
  for (const Element& e : inst.elements()) {
    if (lace.members.subset_of(e.properties) && e.properties.disjoint(lace.compatible)) {
      total += e.weight;
    }
  }
  return total;
}

std::vector<LaceTerm> lace_terms(const WeightedInstance& inst, const std::vector<Lace>& laces) {
  const auto hist = inst.histogram();
  std::vector<LaceTerm> terms;
  terms.reserve(laces.size());
  for (const Lace& l : laces) {
    Rational n = sum_over_histogram(hist, l);
    Rational signed_value = (l.members.size() % 2 == 0) ? n : Rational(-n);
    terms.push_back({l, std::move(n), std::move(signed_value)});
  }
  return terms;
}

ExpansionReport lace_expansion_sum(const WeightedInstance& inst, const LaceMap& map,
                                   const Limits& limits) {
  require_same_universe(inst, map);
  require_lace_map(map, limits);
  ExpansionReport report;
  report.terms = lace_terms(inst, enumerate_laces(map, limits));
  report.n0 = 0;
  for (const LaceTerm& t : report.terms) report.n0 += t.signed_value;
  return report;
}

Rational n_zero_bruteforce(const WeightedInstance& inst) {
  Rational total = 0;
  for (const Element& e : inst.elements()) {
    if (e.properties.empty()) total += e.weight;
  }
  return total;
}

MultilinearPoly MultilinearPoly::constant(const BigInt& c) {
  MultilinearPoly p;
  p.add_term(0, c);
  return p;
}

MultilinearPoly MultilinearPoly::variable(int v) {
  return monomial(PropSubset().with(v));
}

MultilinearPoly MultilinearPoly::monomial(PropSubset support) {
  MultilinearPoly p;
  p.add_term(support.bits(), 1);
  return p;
}

BigInt MultilinearPoly::coefficient(PropSubset support) const {
  auto it = coeffs_.find(support.bits());
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void MultilinearPoly::add_term(std::uint64_t support, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(support, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& other) {
  for (const auto& [support, c] : other.coeffs_) add_term(support, c);
  return *this;
}

MultilinearPoly MultilinearPoly::operator*(const MultilinearPoly& other) const {
  MultilinearPoly out;
  for (const auto& [a, ca] : coeffs_) {
    for (const auto& [b, cb] : other.coeffs_) {
      if (a & b) {
        throw Error(ErrorCode::invalid_argument, "product of monomials sharing a variable");
      }
      out.add_term(a | b, ca * cb);
    }
  }
  return out;
}

MultilinearPoly boolean_product(int n) {
  MultilinearPoly out = MultilinearPoly::constant(1);
  for (int p = 0; p < n; ++p) {
    MultilinearPoly factor = MultilinearPoly::constant(1);
    factor += MultilinearPoly::variable(p);
    out = out * factor;
  }
  return out;
}

MultilinearPoly lace_polynomial(const LaceMap& map, const Limits& limits) {
  MultilinearPoly out;
  for (const Lace& l : enumerate_laces(map, limits)) {
    MultilinearPoly term = MultilinearPoly::monomial(l.members);
    for (int c : l.compatible.members()) {
      MultilinearPoly factor = MultilinearPoly::constant(1);
      factor += MultilinearPoly::variable(c);
      term = term * factor;
    }
    out += term;
  }
  return out;
}

bool polynomial_identity_check(const LaceMap& map, const Limits& limits) {
  if (map.size() > limits.polynomial) {
    throw Error(ErrorCode::limit_exceeded,
                "polynomial identity check limited to " + std::to_string(limits.polynomial) +
                    " properties, map has " + std::to_string(map.size()));
  }
  return boolean_product(map.size()) == lace_polynomial(map, limits);
}

}  // namespace lace
