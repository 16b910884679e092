#pragma once

#include "norlund/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace norlund {

/// Weight families accepted by the spec grammar
/// `u | cesaro:<int> | const:<rat> | geom:<rat> | list:<rat>,<rat>,...`.
enum class WeightFamily { unit, cesaro, constant, geometric, explicit_list };

struct WeightSpec {
  WeightFamily family = WeightFamily::unit;
  unsigned order = 1;            ///< cesaro only, >= 1
  Rational value = 1;            ///< constant value or geometric ratio
  std::vector<Rational> values;  ///< explicit list

  /// Constraint checks shared by the parser and programmatic construction.
  void validate() const {
    switch (family) {
      case WeightFamily::unit:
        break;
      case WeightFamily::cesaro:
        if (order < 1) throw InputError("cesaro order must be >= 1");
        break;
      case WeightFamily::constant:
        if (value <= 0) throw InputError("constant weight must be positive, got " + norlund::to_string(value));
        break;
      case WeightFamily::geometric:
        if (value <= 0) throw InputError("geometric ratio must be positive, got " + norlund::to_string(value));
        break;
      case WeightFamily::explicit_list:
        if (values.empty()) throw InputError("explicit weight list must be non-empty");
        if (values.front() <= 0)
          throw InputError("first weight must be positive, got " + norlund::to_string(values.front()));
        for (std::size_t n = 1; n < values.size(); ++n)
          if (values[n] < 0)
            throw InputError("weight " + std::to_string(n) + " must be >= 0, got " +
                             norlund::to_string(values[n]));
        break;
    }
  }

  std::string to_string() const;
};

/// A weight sequence p_0..p_M with p_0 > 0, p_n >= 0, together with its
/// partial sums P_n = p_0 + ... + p_n. Immutable after construction.
struct WeightSequence {
  Sequence values;        ///< p_0..p_M
  Sequence partial_sums;  ///< P_0..P_M, positive and nondecreasing

  std::size_t horizon() const { return values.size() - 1; }
};

/// Parse the weight-spec grammar. Errors name the offending token.
inline WeightSpec parse_weight_spec(std::string_view text) {
  WeightSpec spec;
  if (text == "u") {
    spec.family = WeightFamily::unit;
    return spec;
  }

  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InputError("bad weight spec '" + std::string(text) +
                     "': expected u | cesaro:<int> | const:<rat> | geom:<rat> | list:<rat>,...");
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);

  if (head == "cesaro") {
    spec.family = WeightFamily::cesaro;
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string_view::npos)
      throw InputError("bad cesaro order '" + std::string(arg) + "': expected a positive integer");
    unsigned long v = std::stoul(std::string(arg));
    spec.order = static_cast<unsigned>(v);
  } else if (head == "const") {
    spec.family = WeightFamily::constant;
    spec.value = parse_rational(arg);
  } else if (head == "geom") {
    spec.family = WeightFamily::geometric;
    spec.value = parse_rational(arg);
  } else if (head == "list") {
    spec.family = WeightFamily::explicit_list;
    spec.values = parse_rational_list(arg);
  } else {
    throw InputError("bad weight spec '" + std::string(text) + "': unknown family '" +
                     std::string(head) + "'");
  }
  spec.validate();
  return spec;
}

/// Materialize a spec at a horizon.
///
/// unit        -> (1, 0, ..., 0)
/// cesaro(a)   -> p_n = C(n + a - 1, a - 1)
/// constant(c) -> all c
/// geometric(t)-> t^n
/// list        -> given values, zero-padded or truncated to length M+1
inline WeightSequence generate_weights(const WeightSpec& spec, std::size_t horizon) {
  spec.validate();
  WeightSequence w;
  w.values.reserve(horizon + 1);

  switch (spec.family) {
    case WeightFamily::unit:
      w.values.push_back(1);
      for (std::size_t n = 1; n <= horizon; ++n) w.values.push_back(0);
      break;
    case WeightFamily::cesaro: {
      // C(n + a - 1, a - 1) via the ratio recurrence, exact in integers.
      BigInt num = 1, den = 1;
      for (std::size_t n = 0; n <= horizon; ++n) {
        if (n > 0) {
          num *= BigInt(n) + spec.order - 1;
          den *= BigInt(n);
        }
        w.values.emplace_back(num / boost::multiprecision::gcd(num, den) *
                              0 + Rational(num, den));
      }
      break;
    }
    case WeightFamily::constant:
      for (std::size_t n = 0; n <= horizon; ++n) w.values.push_back(spec.value);
      break;
    case WeightFamily::geometric: {
      Rational power = 1;
      for (std::size_t n = 0; n <= horizon; ++n) {
        w.values.push_back(power);
        power *= spec.value;
      }
      break;
    }
    case WeightFamily::explicit_list:
      for (std::size_t n = 0; n <= horizon; ++n)
        w.values.push_back(n < spec.values.size() ? spec.values[n] : Rational(0));
      break;
  }

  w.partial_sums.reserve(horizon + 1);
  Rational running = 0;
  for (const Rational& p : w.values) {
    running += p;
    w.partial_sums.push_back(running);
  }
  return w;
}

inline std::string WeightSpec::to_string() const {
  switch (family) {
    case WeightFamily::unit: return "u";
    case WeightFamily::cesaro: return "cesaro:" + std::to_string(order);
    case WeightFamily::constant: return "const:" + norlund::to_string(value);
    case WeightFamily::geometric: return "geom:" + norlund::to_string(value);
    case WeightFamily::explicit_list: {
      std::string s = "list:";
      for (std::size_t n = 0; n < values.size(); ++n) {
        if (n > 0) s += ',';
        s += norlund::to_string(values[n]);
      }
      return s;
    }
  }
  return {};
}

} // namespace norlund
