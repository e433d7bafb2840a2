#pragma once

#include <array>

#include "polygame/polynomial.hpp"

namespace polygame {

// Auxiliary-variable count and player formats for the 3-player encoding.
// D counts the gadget equations: one per Horner multiply-add, summed over
// all source equations, i.e. D = sum_j (prod_i (1 + d_ij) - 1). With a
// uniform degree d this is m((1+d)^n - 1).
struct ThreePlayerCapacity {
    long long D = 0;
    std::array<long long, 3> formats{};  // (n+1, D-m+1, D+1)
};

ThreePlayerCapacity capacity_3p(const DegreeProfile& profile);

// Chain-variable count D' = sum_i max_j d_ij and the reduced player count
// D' + m for the binary-game encoding (uniform degree: N = nd + m).
struct BinaryCapacity {
    long long Dprime = 0;
    long long players = 0;
};

BinaryCapacity capacity_np(const DegreeProfile& profile);

}  // namespace polygame
