#include "tristoch/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tristoch {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("cannot convert non-finite double to rational");
  return Rational(x);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// signed integer string -> BigInt, rejecting junk
BigInt parse_bigint(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (!all_digits(s)) throw std::invalid_argument("malformed integer: '" + s + "'");
  while (s.size() > 1 && s.front() == '0') s.erase(s.begin());  // no octal prefix
  BigInt v(s);
  return neg ? -v : v;
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty scalar");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }

  // decimal literal, optional exponent
  std::string mantissa = s;
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string es = s.substr(epos + 1);
    if (es.empty()) throw std::invalid_argument("malformed exponent in '" + text + "'");
    exp10 = std::strtol(es.c_str(), nullptr, 10);
    bool esigned = es[0] == '+' || es[0] == '-';
    if (!all_digits(esigned ? es.substr(1) : es))
      throw std::invalid_argument("malformed exponent in '" + text + "'");
  }

  auto dot = mantissa.find('.');
  long frac_digits = 0;
  if (dot != std::string::npos) {
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  if (mantissa == "+" || mantissa == "-" || mantissa.empty())
    throw std::invalid_argument("malformed scalar: '" + text + "'");
  BigInt num = parse_bigint(mantissa);
  long e = exp10 - frac_digits;
  if (e >= 0) return Rational(num * pow10(e), BigInt(1));
  return Rational(num, pow10(-e));
}

}  // namespace tristoch
