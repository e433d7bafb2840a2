#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polygame {

// Exact rational scalar used throughout: arbitrary-precision, always kept
// in lowest terms with a positive denominator (mpq_class canonical form).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Fixed 17-significant-digit rendering for float-mode output.
std::string format_double(double x);

}  // namespace polygame
