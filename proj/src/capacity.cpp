#include "polygame/capacity.hpp"

#include <stdexcept>

namespace polygame {

namespace {
constexpr long long kCapacityLimit = 1LL << 40;
}

ThreePlayerCapacity capacity_3p(const DegreeProfile& profile) {
    ThreePlayerCapacity out;
    for (int j = 0; j < profile.m; ++j) {
        long long prod = 1;
        for (int i = 0; i < profile.n; ++i) {
            prod *= 1 + profile.d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (prod > kCapacityLimit) throw std::overflow_error("capacity D is too large to build");
        }
        out.D += prod - 1;
    }
    if (out.D - profile.m + 1 < 1)
        throw std::domain_error("degenerate system: an equation has no variable occurrence");
    out.formats = {profile.n + 1, out.D - profile.m + 1, out.D + 1};
    return out;
}

BinaryCapacity capacity_np(const DegreeProfile& profile) {
    BinaryCapacity out;
    for (int i = 0; i < profile.n; ++i) out.Dprime += profile.d_i[static_cast<std::size_t>(i)];
    out.players = out.Dprime + profile.m;
    return out;
}

}  // namespace polygame
