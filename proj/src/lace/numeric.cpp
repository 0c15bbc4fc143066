#include "lace/numeric.hpp"

#include <cctype>

#include "lace/error.hpp"

namespace lace {

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::parse_error, "malformed rational weight \"" + text + "\"");
  }
  BigInt d(den);
  if (d == 0) throw Error(ErrorCode::parse_error, "zero denominator in \"" + text + "\"");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace lace
