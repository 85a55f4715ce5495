#pragma once

// Exact rational scalar used for all divisor coefficients. Everything in the
// exact layer computes with these; floating point is confined to the Monte
// Carlo oracle.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace pairsing {

using BigInt = boost::multiprecision::cpp_int;

// Always canonical: lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return numerator(q); }
inline BigInt rational_den(const Rational& q) { return denominator(q); }

// Largest integer <= q.
inline BigInt floor_int(const Rational& q) {
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt t = n / d;  // truncates toward zero
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Rational floor_rational(const Rational& q) { return Rational(floor_int(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Canonical "num/den" form, e.g. "3/2", "-1/3", "2/1".
std::string to_fraction_string(const Rational& q);

// Accepts "num/den" or a bare integer "num". Returns nullopt on malformed
// input (empty, junk characters, zero denominator).
std::optional<Rational> parse_fraction(const std::string& text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace pairsing
