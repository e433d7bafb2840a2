#include "polygame/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace polygame {

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    if (c != 0) p.terms.emplace(Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)), c);
    return p;
}

Polynomial Polynomial::variable(int n, int var) {
    if (var < 0 || var >= n) throw std::out_of_range("variable index out of range");
    Polynomial p(n);
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p.terms.emplace(Monomial(std::move(e)), rat(1));
    return p;
}

bool Polynomial::is_constant() const {
    for (const auto& [m, c] : terms)
        if (!m.is_constant()) return false;
    return true;
}

Rational Polynomial::constant_term() const {
    Monomial zero(std::vector<int>(static_cast<std::size_t>(n), 0));
    auto it = terms.find(zero);
    return it == terms.end() ? Rational(0) : it->second;
}

int Polynomial::degree_in(int var) const {
    int deg = 0;
    for (const auto& [m, c] : terms) deg = std::max(deg, m.degree_of(var));
    return deg;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.exponents.size()) != n)
        throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational total(0);
    for (const auto& [m, c] : terms) {
        Rational term = c;
        for (int i = 0; i < n; ++i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            for (int k = 0; k < m.exponents[ui]; ++k) term *= point[ui];
        }
        total += term;
    }
    return total;
}

double Polynomial::eval_double(const std::vector<double>& point) const {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("evaluation point has wrong dimension");
    double total = 0.0;
    for (const auto& [m, c] : terms) {
        double term = to_double(c);
        for (int i = 0; i < n; ++i) {
            const std::size_t ui = static_cast<std::size_t>(i);
            for (int k = 0; k < m.exponents[ui]; ++k) term *= point[ui];
        }
        total += term;
    }
    return total;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (n != rhs.n) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : rhs.terms) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (n != rhs.n) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : rhs.terms) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n != b.n) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial out(a.n);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> e(ma.exponents);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += mb.exponents[i];
            out.add_term(Monomial(std::move(e)), ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(n);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms) out.terms.emplace(m, coeff * c);
    return out;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::constant(n, rat(1));
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

std::string Polynomial::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "- ";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool printed_coeff = false;
        if (coeff != 1 || m.is_constant()) {
            os << polygame::to_string(coeff);
            printed_coeff = true;
        }
        for (int i = 0; i < n; ++i) {
            int e = m.exponents[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (printed_coeff) os << "*";
            os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
            printed_coeff = true;
        }
    }
    return os.str();
}

DegreeProfile degree_profile(const PolySystem& sys) {
    DegreeProfile out;
    out.m = sys.m();
    out.n = sys.n;
    out.d.assign(static_cast<std::size_t>(out.m), std::vector<int>(static_cast<std::size_t>(out.n), 0));
    out.d_i.assign(static_cast<std::size_t>(out.n), 0);
    for (int j = 0; j < out.m; ++j) {
        for (int i = 0; i < out.n; ++i) {
            int dij = sys.polys[static_cast<std::size_t>(j)].degree_in(i);
            out.d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = dij;
            out.d_i[static_cast<std::size_t>(i)] = std::max(out.d_i[static_cast<std::size_t>(i)], dij);
            out.d_max = std::max(out.d_max, dij);
        }
    }
    return out;
}

}  // namespace polygame
