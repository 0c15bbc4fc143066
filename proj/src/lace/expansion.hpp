#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lace/lace_core.hpp"
#include "lace/numeric.hpp"

namespace lace {

/// One element x of X: its weight wt(x) and the properties it has
/// (chi_p(x) = -1 iff p is in `properties`).
struct Element {
  Rational weight;
  PropSubset properties;
};

class WeightedInstance {
public:
  /// Throws Error(out_of_range) if an element's properties leave the universe.
  WeightedInstance(PropertyUniverse universe, std::vector<Element> elements);

  const PropertyUniverse& universe() const { return universe_; }
  const std::vector<Element>& elements() const { return elements_; }
  bool nonnegative() const;

  /// Total weight per distinct property set, zero totals dropped.
  std::map<std::uint64_t, Rational> histogram() const;

private:
  PropertyUniverse universe_;
  std::vector<Element> elements_;
};

struct LaceTerm {
  Lace lace;
  Rational n_of_l;        ///< N(L)
  Rational signed_value;  ///< (-1)^|L| N(L)
};

struct ExpansionReport {
  Rational n0;
  std::vector<LaceTerm> terms;  ///< canonical lace order
};

/// Sum of wt(x) over x having every property of lace.members and none of
/// lace.compatible.
Rational n_of_lace(const WeightedInstance& inst, const LaceMap& map, const Lace& lace);

/// Terms for the given laces, computed from the instance histogram.
std::vector<LaceTerm> lace_terms(const WeightedInstance& inst, const std::vector<Lace>& laces);

/// Every lace term and the exact sum of the signed terms.
ExpansionReport lace_expansion_sum(const WeightedInstance& inst, const LaceMap& map,
                                   const Limits& limits = {});

/// Sum of wt(x) over x with no properties. Touches no lace machinery.
Rational n_zero_bruteforce(const WeightedInstance& inst);

/// A polynomial in variables Y_p, p < 64, each of degree at most one.
/// Monomials are keyed by their support; zero coefficients are never stored.
class MultilinearPoly {
public:
  static MultilinearPoly constant(const BigInt& c);
  /// Y_p
  static MultilinearPoly variable(int p);
  /// prod_{s in support} Y_s
  static MultilinearPoly monomial(PropSubset support);

  const std::map<std::uint64_t, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(PropSubset support) const;

  MultilinearPoly& operator+=(const MultilinearPoly& other);
  /// Throws Error(invalid_argument) if two monomials share a variable.
  MultilinearPoly operator*(const MultilinearPoly& other) const;

  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
  void add_term(std::uint64_t support, const BigInt& c);
  std::map<std::uint64_t, BigInt> coeffs_;
};

/// prod_{p in P} (1 + Y_p)
MultilinearPoly boolean_product(int n);
/// sum_L prod_{s in L} Y_s prod_{s in C(L)} (1 + Y_s)
MultilinearPoly lace_polynomial(const LaceMap& map, const Limits& limits = {});

/// Exact coefficient equality of boolean_product and lace_polynomial.
bool polynomial_identity_check(const LaceMap& map, const Limits& limits = {});

}  // namespace lace
