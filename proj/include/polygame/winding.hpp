#pragma once

#include "polygame/polynomial.hpp"

namespace polygame {

// Topological degree of the planar map F = (fx, fy) at an isolated zero:
// the winding number of F around the circle of the given radius about
// center, accumulated from angle increments each kept below pi/2 (the
// sample count doubles, up to 2^16, until that holds). fx and fy must be
// bivariate. Throws when F vanishes (within 1e-12) at a sample point or
// when the refinement does not converge.
int local_degree(const Polynomial& fx, const Polynomial& fy, double center_x, double center_y,
                 double radius, int samples = 256);

}  // namespace polygame
