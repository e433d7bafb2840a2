#pragma once

#include <vector>

#include "polygame/polynomial.hpp"

namespace polygame {

// Change of variables used to move an arbitrary variety into the open box
// {0 < y_i, sum y_i < 1}: x_i = u_i / (1 - u_i^2) with u_i = 2*delta*y_i - 1
// and delta = n. The map is a semialgebraic bijection from the open cube
// piece (u in (-1,1)^n) onto the original space.
struct CoordinateMap {
    int n = 0;
    Rational delta;

    // Exact forward map y -> x. Requires every u_i = 2*delta*y_i - 1 to be
    // strictly inside (-1, 1).
    std::vector<Rational> to_original(const std::vector<Rational>& y) const;

    // Numeric inverse x -> y, picking the u-branch inside (-1, 1).
    std::vector<double> to_normalized(const std::vector<double>& x) const;
};

struct NormalizedSystem {
    PolySystem system;  // over y_1..y_n
    CoordinateMap map;
};

// Substitutes the change of variables into every equation and clears
// denominators by multiplying equation j with prod_i (1 - u_i^2)^{d_ij}.
// Solutions with u in (-1,1)^n land bijectively on solutions of the
// returned system; the clearing can introduce extra zeros at u_i = +-1,
// which for a univariate system lie on the box boundary.
NormalizedSystem normalize_to_box(const PolySystem& sys);

}  // namespace polygame
