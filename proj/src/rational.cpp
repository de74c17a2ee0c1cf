#include "kcut/rational.hpp"

#include <cctype>

namespace kcut {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty number");
  auto bad = [&] { throw InputError("bad number: '" + text + "'"); };
  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) bad();
    try {
      BigInt n(num), d(den);
      if (d == 0) throw InputError("zero denominator: '" + text + "'");
      return Rational(n, d);
    } catch (const std::runtime_error&) {
      bad();
    }
  }
  std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg) whole = whole.substr(1);
    if (whole.empty()) whole = "0";
    for (char c : whole)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    if (frac.empty()) frac = "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt n = BigInt(whole) * scale + BigInt(frac);
    Rational r(n, scale);
    return neg ? -r : r;
  }
  try {
    return Rational(BigInt(text));
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

std::string rat_to_string(const Rational& r) {
  if (rat_is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

}  // namespace kcut
