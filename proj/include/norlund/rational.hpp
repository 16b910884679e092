#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace norlund {

/// Arbitrary-precision integer and rational scalars. All sequence
/// computations run on Rational; doubles appear only after an explicit
/// one-shot conversion at the limit-detection boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A finite sequence indexed 0..M (length M+1).
using Sequence = std::vector<Rational>;

/// Raised when user-supplied text (weight specs, rationals, CSV input,
/// config files) fails to parse or violates a constraint. The message
/// names the offending token.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant fails (e.g. a row of C_pq not
/// summing to 1 in exact arithmetic). Maps to exit status 2 in the CLI.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Canonical rendering: "a/b" with b > 0 and gcd(a,b) = 1, "/b" omitted
/// when b = 1. cpp_rational keeps values normalized, so this is direct.
inline std::string to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += '/';
    s += denominator(x).str();
  }
  return s;
}

/// One-shot conversion to double. Values outside double range come back
/// as +/-inf; callers that care (the limit detectors) check finiteness.
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::vector<double> to_doubles(const Sequence& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Rational& x : xs) out.push_back(to_double(x));
  return out;
}

/// Parse `a` or `a/b` (decimal digits, optional leading sign on a,
/// b > 0). Anything else, including decimals, is rejected.
inline Rational parse_rational(std::string_view token) {
  auto fail = [&](const char* why) {
    throw InputError(std::string("bad rational '") + std::string(token) + "': " + why);
  };
  if (token.empty()) fail("empty token");

  std::size_t i = 0;
  if (token[i] == '+' || token[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
  if (i == num_begin) fail("expected digits");
  BigInt num(std::string(token.substr(0, i)));

  if (i == token.size()) return Rational(num);

  if (token[i] != '/') fail("expected '/' or end of token");
  ++i;
  std::size_t den_begin = i;
  while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
  if (i == den_begin || i != token.size()) fail("denominator must be decimal digits");
  BigInt den(std::string(token.substr(den_begin)));
  if (den == 0) fail("denominator is zero");
  return Rational(num, den);
}

/// Split on a separator, keeping empty fields (so "1,,2" reports the
/// empty token instead of silently skipping it).
inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.emplace_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline Sequence parse_rational_list(std::string_view text) {
  Sequence values;
  for (const std::string& tok : split(text, ',')) values.push_back(parse_rational(tok));
  return values;
}

} // namespace norlund
