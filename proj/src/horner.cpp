#include "polygame/horner.hpp"

#include <numeric>
#include <stdexcept>

namespace polygame {

namespace {

HornerNode build(const Polynomial& poly, const std::vector<int>& order,
                 const std::vector<int>& degrees, std::size_t depth) {
    if (depth == order.size()) {
        if (!poly.is_constant()) throw std::logic_error("non-constant polynomial at leaf depth");
        HornerNode leaf;
        leaf.value = poly.constant_term();
        return leaf;
    }
    const int var = order[depth];
    const int deg = degrees[depth];
    // Split poly into coefficient polynomials of var^t, t = 0..deg.
    std::vector<Polynomial> coeff(static_cast<std::size_t>(deg) + 1, Polynomial(poly.n));
    for (const auto& [mono, c] : poly.terms) {
        int t = mono.degree_of(var);
        Monomial reduced = mono;
        reduced.exponents[static_cast<std::size_t>(var)] = 0;
        coeff[static_cast<std::size_t>(t)].add_term(reduced, c);
    }
    HornerNode node;
    node.children.reserve(coeff.size());
    for (const Polynomial& cp : coeff) node.children.push_back(build(cp, order, degrees, depth + 1));
    return node;
}

Polynomial expand_node(const HornerNode& node, const HornerForm& form, std::size_t depth) {
    if (node.is_leaf()) return Polynomial::constant(form.n, node.value);
    Polynomial var = Polynomial::variable(form.n, form.order[depth]);
    Polynomial out(form.n);
    Polynomial power = Polynomial::constant(form.n, rat(1));
    for (std::size_t t = 0; t < node.children.size(); ++t) {
        out += expand_node(node.children[t], form, depth + 1) * power;
        power = power * var;
    }
    return out;
}

Rational eval_node(const HornerNode& node, const HornerForm& form, std::size_t depth,
                   const std::vector<Rational>& point) {
    if (node.is_leaf()) return node.value;
    const Rational& x = point[static_cast<std::size_t>(form.order[depth])];
    Rational acc = eval_node(node.children.back(), form, depth + 1, point);
    for (std::size_t t = node.children.size() - 1; t-- > 0;)
        acc = acc * x + eval_node(node.children[t], form, depth + 1, point);
    return acc;
}

Interval interval_node(const HornerNode& node, const HornerForm& form, std::size_t depth,
                       const Box& box) {
    if (node.is_leaf()) return Interval::point(node.value);
    const Interval& x = box.coords[static_cast<std::size_t>(form.order[depth])];
    Interval acc = interval_node(node.children.back(), form, depth + 1, box);
    for (std::size_t t = node.children.size() - 1; t-- > 0;)
        acc = acc * x + interval_node(node.children[t], form, depth + 1, box);
    return acc;
}

}  // namespace

HornerForm horner_decompose(const Polynomial& poly, std::vector<int> order) {
    HornerForm form;
    form.n = poly.n;
    if (order.empty()) {
        order.resize(static_cast<std::size_t>(poly.n));
        std::iota(order.begin(), order.end(), 0);
    }
    if (static_cast<int>(order.size()) != poly.n)
        throw std::invalid_argument("variable order has wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(poly.n), false);
    for (int v : order) {
        if (v < 0 || v >= poly.n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("variable order is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    form.order = order;
    form.degrees.reserve(order.size());
    for (int v : order) form.degrees.push_back(poly.degree_in(v));
    form.root = build(poly, form.order, form.degrees, 0);
    return form;
}

Polynomial expand(const HornerForm& form) { return expand_node(form.root, form, 0); }

Rational eval(const HornerForm& form, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != form.n)
        throw std::invalid_argument("evaluation point has wrong dimension");
    return eval_node(form.root, form, 0, point);
}

Interval interval_eval(const HornerForm& form, const Box& box) {
    if (box.dim() != form.n) throw std::invalid_argument("box has wrong dimension");
    return interval_node(form.root, form, 0, box);
}

}  // namespace polygame
