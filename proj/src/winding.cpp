#include "polygame/winding.hpp"

#include <cmath>
#include <stdexcept>

namespace polygame {

int local_degree(const Polynomial& fx, const Polynomial& fy, double center_x, double center_y,
                 double radius, int samples) {
    if (fx.n != 2 || fy.n != 2) throw std::invalid_argument("local degree needs a bivariate map");
    if (radius <= 0) throw std::invalid_argument("radius must be positive");
    if (samples < 64) throw std::invalid_argument("need at least 64 samples");

    constexpr double kZeroTol = 1e-12;
    constexpr int kMaxSamples = 1 << 16;
    const double two_pi = 2.0 * M_PI;

    for (int k = samples; k <= kMaxSamples; k *= 2) {
        double total = 0.0;
        bool refine = false;
        double px = 0.0, py = 0.0;
        double first_x = 0.0, first_y = 0.0;
        for (int i = 0; i <= k; ++i) {
            double vx, vy;
            if (i == k) {
                vx = first_x;
                vy = first_y;
            } else {
                const double theta = two_pi * static_cast<double>(i) / static_cast<double>(k);
                const std::vector<double> point = {center_x + radius * std::cos(theta),
                                                   center_y + radius * std::sin(theta)};
                vx = fx.eval_double(point);
                vy = fy.eval_double(point);
                if (std::hypot(vx, vy) < kZeroTol)
                    throw std::runtime_error("circle radius hits the zero set of the map");
            }
            if (i == 0) {
                first_x = vx;
                first_y = vy;
            } else {
                const double increment = std::atan2(px * vy - py * vx, px * vx + py * vy);
                if (std::fabs(increment) > M_PI / 2.0) {
                    refine = true;
                    break;
                }
                total += increment;
            }
            px = vx;
            py = vy;
        }
        if (refine) continue;
        const double turns = total / two_pi;
        const long rounded = std::lround(turns);
        if (std::fabs(turns - static_cast<double>(rounded)) > 0.05)
            throw std::runtime_error("winding number did not converge to an integer");
        return static_cast<int>(rounded);
    }
    throw std::runtime_error("angle increments stay too large even at the sample limit");
}

}  // namespace polygame
