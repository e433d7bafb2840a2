#pragma once

#include <stdexcept>
#include <string>

#include "polygame/polynomial.hpp"

namespace polygame {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// Parses a polynomial-system description:
//
//   # comment
//   vars: x1 x2
//   eq: 1/2*x1^2*x2 - x1 + 3/16 = 0
//
// The vars line names x1..xn consecutively; each eq line is a sum of signed
// terms, a term being an optional rational coefficient and '*'-separated
// variable powers. Zero polynomials are rejected.
PolySystem parse_system(const std::string& text);

// Parses a single polynomial expression (the <expr> part of an eq line)
// over n variables x1..xn.
Polynomial parse_poly_expr(const std::string& text, int n);

}  // namespace polygame
