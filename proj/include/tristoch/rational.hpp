#ifndef TRISTOCH_RATIONAL_HPP
#define TRISTOCH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tristoch {

// Exact scalar type for the rational numeric mode. All arithmetic on
// Rational values is exact; float mode (plain double) rounds as usual.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

// Every finite double is a dyadic rational; the conversion is exact.
Rational rational_from_double(double x);

// Canonical "p/q" form with an explicit denominator, e.g. "3/4", "-1/2", "0/1".
std::string format_rational(const Rational& r);

// Accepts "p/q", integer, and decimal literals ("0.25", "-3", "1e-3", "2/7").
// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace tristoch

#endif
