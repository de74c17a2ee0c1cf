#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kcut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised on malformed user input (files, flags, out-of-range ids).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool rat_is_integer(const Rational& r) { return rat_den(r) == 1; }

/// "5", "-3/4" or "1.25" (decimal converted exactly).
Rational parse_rational(const std::string& text);

/// Canonical form: "n" when integral, "n/d" otherwise.
std::string rat_to_string(const Rational& r);

}  // namespace kcut
