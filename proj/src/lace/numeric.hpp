#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lace {

using BigInt = boost::multiprecision::cpp_int;
/// Element weights and N(L) values. Integers in every counting application.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "12", "-3", "7/4". Rejects decimals and zero denominators.
Rational parse_rational(const std::string& text);

/// Canonical text form: "5", "-1/2".
std::string to_string(const Rational& r);

}  // namespace lace
