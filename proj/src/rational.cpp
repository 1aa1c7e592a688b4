#include "cubetight/rational.hpp"

#include <cmath>
#include <cstdint>

#include "cubetight/errors.hpp"

namespace cubetight {

namespace {

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  // b > 0
  BigInt q = a / b;
  if ((a % b != 0) && (a < 0)) q -= 1;
  return q;
}

Rational floor_of(const Rational& r) {
  return Rational(floor_div(numerator(r), denominator(r)));
}

// Simplest rational in [lo, hi] with 0 <= lo, by continued fractions.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
  Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // lo and hi share the integer part and lo is not an integer.
  Rational frac_lo = lo - fl;
  Rational frac_hi = hi - fl;
  if (frac_hi == 0) return fl;
  // 1/frac_hi <= 1/x <= 1/frac_lo
  Rational inner = simplest_nonneg(1 / frac_hi, 1 / frac_lo);
  return fl + 1 / inner;
}

// cpp_int reads a leading 0 as an octal prefix
BigInt decimal_int(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits.empty() ? "0" : digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  const std::string original(text);
  if (s.empty()) throw InputError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("malformed rational '" + original + "'");
    BigInt d = decimal_int(den);
    if (d == 0) throw InputError("zero denominator in '" + original + "'");
    value = Rational(decimal_int(num), d);
  } else {
    long long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) throw InputError("malformed number '" + original + "'");
      exponent = std::stoll(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw InputError("malformed number '" + original + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      throw InputError("malformed number '" + original + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long long>(frac_part.size());
    if (exponent > 4000 || exponent < -4000) throw InputError("exponent out of range in '" + original + "'");
    BigInt mantissa = decimal_int(digits);
    if (exponent >= 0)
      value = Rational(mantissa * pow10(static_cast<unsigned>(exponent)));
    else
      value = Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_decimal(const Rational& r, int digits) {
  const bool negative = r < 0;
  Rational a = negative ? Rational(-r) : r;
  BigInt scale = pow10(static_cast<unsigned>(digits));
  // round half away from zero
  BigInt scaled = (numerator(a) * scale * 2 + denominator(a)) / (denominator(a) * 2);
  std::string s = scaled.str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (negative && scaled != 0) out.insert(0, "-");
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp > 0) {
    BigInt p = 1;
    p <<= exp;
    r *= p;
  } else if (exp < 0) {
    BigInt p = 1;
    p <<= -exp;
    r /= p;
  }
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw InputError("simplest_between: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace cubetight
