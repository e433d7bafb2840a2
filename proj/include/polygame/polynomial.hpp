#pragma once

#include <map>
#include <string>
#include <vector>

#include "polygame/rational.hpp"

namespace polygame {

// Exponent vector of length n; Monomial{2,0,1} over x1,x2,x3 is x1^2*x3.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int degree_of(int var) const { return exponents[static_cast<std::size_t>(var)]; }
    bool is_constant() const {
        for (int e : exponents)
            if (e != 0) return false;
        return true;
    }

    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
};

// Multivariate polynomial with exact rational coefficients over x1..xn.
// Zero coefficients are never stored.
struct Polynomial {
    int n = 0;
    std::map<Monomial, Rational> terms;

    Polynomial() = default;
    explicit Polynomial(int vars) : n(vars) {}

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int var);  // x_{var+1}, 0-based var index

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    // Highest power of x_{var+1} across all terms (0 when absent).
    int degree_in(int var) const;

    void add_term(const Monomial& m, const Rational& c);

    Rational eval(const std::vector<Rational>& point) const;
    double eval_double(const std::vector<double>& point) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n == b.n && a.terms == b.terms;
    }

    std::string to_string() const;
};

struct PolySystem {
    int n = 0;
    std::vector<Polynomial> polys;

    int m() const { return static_cast<int>(polys.size()); }
};

// d[j][i] = highest power of x_{i+1} in equation j; d_i = column maxima;
// d_max = global maximum.
struct DegreeProfile {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> d;
    std::vector<int> d_i;
    int d_max = 0;
};

DegreeProfile degree_profile(const PolySystem& sys);

}  // namespace polygame
