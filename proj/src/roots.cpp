#include "polygame/roots.hpp"

#include <stdexcept>

namespace polygame {

namespace {

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
using UniPoly = std::vector<Rational>;

UniPoly trim(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Rational eval_at(const UniPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

UniPoly derivative(const UniPoly& p) {
    UniPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * rat(static_cast<long>(i)));
    return trim(std::move(out));
}

// Coefficient rescaling by a positive constant keeps every sign pattern.
UniPoly tame(UniPoly p) {
    Rational biggest(0);
    for (const Rational& c : p) {
        Rational a = abs(c);
        if (a > biggest) biggest = a;
    }
    if (biggest == 0) return {};
    for (Rational& c : p) c /= biggest;
    return p;
}

UniPoly remainder(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        a = trim(std::move(a));
    }
    return a;
}

UniPoly quotient(const UniPoly& a, const UniPoly& b) {
    UniPoly rem = a;
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (rem.size() >= b.size() && !rem.empty()) {
        Rational factor = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
        rem.pop_back();
        rem = trim(std::move(rem));
    }
    return trim(std::move(q));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = tame(trim(std::move(a)));
    b = tame(trim(std::move(b)));
    while (!b.empty()) {
        UniPoly r = tame(remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly square_free_part(const UniPoly& p) {
    if (p.size() <= 2) return p;
    UniPoly g = poly_gcd(p, derivative(p));
    if (g.size() <= 1) return p;
    return quotient(p, g);
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    UniPoly d = derivative(p);
    if (d.empty()) return chain;
    chain.push_back(d);
    while (chain.back().size() > 1) {
        UniPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (Rational& c : r) c = -c;
        chain.push_back(tame(std::move(r)));
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const UniPoly& p : chain) {
        Rational v = eval_at(p, x);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

RootList roots_in_open_interval(const std::vector<Rational>& coeffs, const Rational& lo,
                                const Rational& hi) {
    UniPoly p = trim(coeffs);
    if (p.empty()) throw std::invalid_argument("zero polynomial has no isolated roots");
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    RootList out;
    if (p.size() == 1) return out;

    const UniPoly sf = square_free_part(p);
    const std::vector<UniPoly> chain = sturm_chain(sf);
    const bool root_at_hi = eval_at(sf, hi) == 0;

    // Count on half-open (a, b], discounting a root sitting exactly on the
    // interval's upper end.
    auto count_open = [&](const Rational& a, const Rational& b) -> int {
        int c = sign_variations(chain, a) - sign_variations(chain, b);
        if (b == hi && root_at_hi) --c;
        return c;
    };

    const Rational width_limit = rat(1, 1L << 48);
    // Depth-first, left half first, so the roots come out ascending.
    std::vector<std::pair<Rational, Rational>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int c = count_open(a, b);
        if (c == 0) continue;
        if (c == 1) {
            while (b - a > width_limit) {
                Rational mid = (a + b) / 2;
                if (count_open(a, mid) == 1)
                    b = mid;
                else
                    a = mid;
            }
            RootList::Root root;
            root.isolating = Interval(a, b);
            root.midpoint = (a + b) / 2;
            root.approx = to_double(root.midpoint);
            out.roots.push_back(std::move(root));
            continue;
        }
        Rational mid = (a + b) / 2;
        work.emplace_back(mid, b);  // popped after the left half
        work.emplace_back(a, mid);
    }
    return out;
}

}  // namespace polygame
