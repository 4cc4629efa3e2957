#include "actcond/rational.hpp"

#include <cctype>

#include "actcond/errors.hpp"

namespace actcond {

namespace mp = boost::multiprecision;

std::string to_fraction_string(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

std::string to_compact_string(const Rational& value) {
  if (mp::denominator(value) == 1) return mp::numerator(value).str();
  return to_fraction_string(value);
}

std::string to_decimal_string(const Rational& value, int places) {
  mp::cpp_int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const Rational scaled = magnitude * scale + Rational(1, 2);
  const mp::cpp_int rounded = mp::numerator(scaled) / mp::denominator(scaled);

  std::string digits = rounded.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && rounded != 0) digits.insert(0, "-");
  return digits;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int reads a leading 0 as an octal prefix.
mp::cpp_int decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return mp::cpp_int(std::string(digits.substr(first)));
}

[[noreturn]] void malformed(std::string_view text) {
  throw RangeError("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    const mp::cpp_int d = decimal_integer(den);
    if (d == 0) throw RangeError("zero denominator in '" + std::string(text) + "'");
    result = Rational(decimal_integer(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) malformed(text);
    mp::cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(decimal_integer(whole) * scale + decimal_integer(frac), scale);
  } else {
    if (!all_digits(body)) malformed(text);
    result = Rational(decimal_integer(body));
  }
  return negative ? Rational(-result) : result;
}

}  // namespace actcond
