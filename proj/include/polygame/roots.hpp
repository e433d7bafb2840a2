#pragma once

#include <vector>

#include "polygame/interval.hpp"
#include "polygame/rational.hpp"

namespace polygame {

// Distinct real roots isolated in an open interval: pairwise disjoint
// rational isolating intervals, each refined until its midpoint is within
// 1e-14 of the root. Multiple roots are reported once (the isolation runs
// on the square-free part).
struct RootList {
    struct Root {
        Interval isolating;
        Rational midpoint;
        double approx = 0.0;
    };
    std::vector<Root> roots;  // ascending

    std::size_t count() const { return roots.size(); }
};

// Roots in the open interval (lo, hi) of alpha_0 + alpha_1 x + ... by
// sign-variation counting on a Sturm sequence plus bisection. Throws on
// the zero polynomial.
RootList roots_in_open_interval(const std::vector<Rational>& coeffs, const Rational& lo,
                                const Rational& hi);

inline RootList roots_in_unit_interval(const std::vector<Rational>& coeffs) {
    return roots_in_open_interval(coeffs, Rational(0), Rational(1));
}

}  // namespace polygame
