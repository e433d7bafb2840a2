#pragma once

#include <vector>

#include "polygame/interval.hpp"
#include "polygame/polynomial.hpp"

namespace polygame {

// Node of the recursive coefficient tree. An internal node at depth k holds
// one child per power 0..deg of the variable processed at that depth (the
// tree is complete: zero coefficient polynomials still get nodes). A leaf
// holds a rational constant.
struct HornerNode {
    Rational value;
    std::vector<HornerNode> children;

    bool is_leaf() const { return children.empty(); }
};

// Complete nested form of a polynomial with respect to a variable order.
// order[0] is the outermost variable; degrees[k] is the maximal power of
// order[k] in the source polynomial, so internal nodes at depth k have
// exactly degrees[k] + 1 children.
struct HornerForm {
    int n = 0;
    std::vector<int> order;
    std::vector<int> degrees;
    HornerNode root;
};

// Decomposes poly along the given variable order (default: x1 outermost,
// identity order). Expanding the result reproduces poly exactly.
HornerForm horner_decompose(const Polynomial& poly, std::vector<int> order = {});

Polynomial expand(const HornerForm& form);

Rational eval(const HornerForm& form, const std::vector<Rational>& point);

// Sound enclosure of the form's value over the box (naive interval
// arithmetic on the nested multiply-adds, no subdivision).
Interval interval_eval(const HornerForm& form, const Box& box);

}  // namespace polygame
