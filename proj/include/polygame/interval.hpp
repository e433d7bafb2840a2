#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polygame/rational.hpp"

namespace polygame {

// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    static Interval point(const Rational& v) { return Interval(v, v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator+(const Interval& a, const Rational& c) {
    return Interval(a.lo + c, a.hi + c);
}

// Naive product: min/max over the four endpoint products.
inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return Interval(std::min(std::min(p1, p2), std::min(p3, p4)),
                    std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator*(const Rational& c, const Interval& a) {
    return c >= 0 ? Interval(c * a.lo, c * a.hi) : Interval(c * a.hi, c * a.lo);
}

// Per-coordinate intervals within [0,1], plus an optional cap on the
// coordinate sum (the cap is carried as data; the naive arithmetic here
// does not exploit it).
struct Box {
    std::vector<Interval> coords;
    std::optional<Rational> sum_cap;

    static Box unit(int n, std::optional<Rational> cap = std::nullopt) {
        Box b;
        b.coords.assign(static_cast<std::size_t>(n), Interval(rat(0), rat(1)));
        b.sum_cap = std::move(cap);
        b.validate();
        return b;
    }

    int dim() const { return static_cast<int>(coords.size()); }

    void validate() const {
        for (const Interval& iv : coords)
            if (iv.lo < 0 || iv.hi > 1) throw std::invalid_argument("box coordinate outside [0,1]");
        if (sum_cap && *sum_cap > rat(static_cast<long>(coords.size())))
            throw std::invalid_argument("box sum cap exceeds coordinate count");
    }

    bool contains(const std::vector<Rational>& point) const {
        if (point.size() != coords.size()) return false;
        Rational sum(0);
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (!coords[i].contains(point[i])) return false;
            sum += point[i];
        }
        return !sum_cap || sum <= *sum_cap;
    }
};

}  // namespace polygame
