#include "polygame/normalize.hpp"

#include <cmath>
#include <stdexcept>

namespace polygame {

std::vector<Rational> CoordinateMap::to_original(const std::vector<Rational>& y) const {
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("point has wrong dimension");
    std::vector<Rational> x;
    x.reserve(y.size());
    for (const Rational& yi : y) {
        Rational u = 2 * delta * yi - 1;
        Rational den = 1 - u * u;
        if (den == 0) throw std::domain_error("coordinate map singular at u = +-1");
        x.push_back(u / den);
    }
    return x;
}

std::vector<double> CoordinateMap::to_normalized(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point has wrong dimension");
    std::vector<double> y;
    y.reserve(x.size());
    const double d = to_double(delta);
    for (double xi : x) {
        // x = u/(1-u^2)  <=>  x*u^2 + u - x = 0; the root in (-1,1).
        double u = xi == 0.0 ? 0.0 : (-1.0 + std::sqrt(1.0 + 4.0 * xi * xi)) / (2.0 * xi);
        double t = (u + 1.0) / 2.0;
        y.push_back(t / d);
    }
    return y;
}

NormalizedSystem normalize_to_box(const PolySystem& sys) {
    const DegreeProfile profile = degree_profile(sys);
    const int n = sys.n;
    const Rational delta = rat(n);

    // Substitution polynomials over y: u_i = 2*delta*y_i - 1 and 1 - u_i^2.
    std::vector<Polynomial> u(static_cast<std::size_t>(n), Polynomial(n));
    std::vector<Polynomial> one_minus_u2(static_cast<std::size_t>(n), Polynomial(n));
    for (int i = 0; i < n; ++i) {
        Polynomial ui = Polynomial::variable(n, i).scaled(2 * delta) +
                        Polynomial::constant(n, rat(-1));
        one_minus_u2[static_cast<std::size_t>(i)] =
            Polynomial::constant(n, rat(1)) - ui * ui;
        u[static_cast<std::size_t>(i)] = std::move(ui);
    }

    NormalizedSystem out;
    out.map.n = n;
    out.map.delta = delta;
    out.system.n = n;
    for (int j = 0; j < profile.m; ++j) {
        const Polynomial& f = sys.polys[static_cast<std::size_t>(j)];
        Polynomial cleared(n);
        for (const auto& [mono, c] : f.terms) {
            // c * prod_i u_i^{e_i} * (1 - u_i^2)^{d_ij - e_i}
            Polynomial term = Polynomial::constant(n, c);
            for (int i = 0; i < n; ++i) {
                int e = mono.degree_of(i);
                int clear = profile.d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - e;
                if (e > 0) term = term * u[static_cast<std::size_t>(i)].pow(e);
                if (clear > 0) term = term * one_minus_u2[static_cast<std::size_t>(i)].pow(clear);
            }
            cleared += term;
        }
        out.system.polys.push_back(std::move(cleared));
    }
    return out;
}

}  // namespace polygame
