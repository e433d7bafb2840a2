#include "polygame/parser.hpp"

#include <cctype>
#include <sstream>

namespace polygame {

namespace {

// Single-line cursor with 1-based column reporting.
class LineScanner {
  public:
    LineScanner(const std::string& text, int line) : text_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of line");
        return text_[pos_++];
    }
    int column() const { return static_cast<int>(pos_) + 1; }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, column(), msg); }

    // Unsigned integer literal.
    std::string integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return text_.substr(start, pos_ - start);
    }

    bool looks_like_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }
    bool looks_like_var() { return peek() == 'x'; }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_;
};

// factor := x<k> [^ <exp>], exp >= 1
void parse_factor(LineScanner& sc, int n, Monomial& mono) {
    int col = sc.column();
    if (sc.get() != 'x') throw std::logic_error("parse_factor called off a variable");
    std::string idx = sc.integer();
    long k = std::stol(idx);
    if (k < 1 || k > n) sc.fail("unknown variable x" + idx);
    int exp = 1;
    if (sc.peek() == '^') {
        sc.get();
        exp = static_cast<int>(std::stol(sc.integer()));
        if (exp < 1) sc.fail("exponent must be positive");
    }
    (void)col;
    mono.exponents[static_cast<std::size_t>(k - 1)] += exp;
}

// term := coef ('*' factor)* | factor ('*' factor)*
void parse_term(LineScanner& sc, int n, int sign, Polynomial& poly) {
    Rational coeff = rat(sign);
    Monomial mono(std::vector<int>(static_cast<std::size_t>(n), 0));
    bool any = false;
    if (sc.looks_like_digit()) {
        std::string num = sc.integer();
        std::string lit = num;
        if (sc.peek() == '/') {
            sc.get();
            lit += "/" + sc.integer();
        }
        coeff *= parse_rational(lit);
        any = true;
        if (sc.peek() == '*') {
            sc.get();
            if (!sc.looks_like_var()) sc.fail("expected a variable after '*'");
            parse_factor(sc, n, mono);
            while (sc.peek() == '*') {
                sc.get();
                parse_factor(sc, n, mono);
            }
        }
    } else if (sc.looks_like_var()) {
        parse_factor(sc, n, mono);
        any = true;
        while (sc.peek() == '*') {
            sc.get();
            parse_factor(sc, n, mono);
        }
    }
    if (!any) sc.fail("expected a term");
    poly.add_term(mono, coeff);
}

// expr := ['+'|'-'] term (('+'|'-') term)*
Polynomial parse_expr(LineScanner& sc, int n) {
    Polynomial poly(n);
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') sign = (sc.get() == '-') ? -1 : 1;
    parse_term(sc, n, sign, poly);
    while (sc.peek() == '+' || sc.peek() == '-') {
        sign = (sc.get() == '-') ? -1 : 1;
        parse_term(sc, n, sign, poly);
    }
    return poly;
}

Polynomial parse_equation_line(const std::string& body, int n, int line_no, int col_offset) {
    LineScanner sc(body, line_no);
    (void)col_offset;
    Polynomial poly = parse_expr(sc, n);
    if (sc.peek() != '=') sc.fail("expected '= 0' after the expression");
    sc.get();
    if (sc.at_end()) sc.fail("missing right side of the equation");
    if (sc.get() != '0') sc.fail("right side must be 0");
    if (!sc.at_end()) sc.fail("trailing input after '= 0'");
    if (poly.is_zero()) throw ParseError(line_no, 1, "zero polynomial equation rejected");
    return poly;
}

}  // namespace

Polynomial parse_poly_expr(const std::string& text, int n) {
    LineScanner sc(text, 1);
    Polynomial poly = parse_expr(sc, n);
    if (!sc.at_end()) sc.fail("trailing input after the expression");
    return poly;
}

PolySystem parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_vars = false;
    PolySystem sys;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line.compare(first, 5, "vars:") == 0) {
            if (have_vars) throw ParseError(line_no, static_cast<int>(first) + 1, "duplicate vars line");
            LineScanner sc(line, line_no);
            // consume "vars:"
            for (int i = 0; i < 4; ++i) sc.get();
            sc.get();
            int expect = 1;
            while (!sc.at_end()) {
                if (sc.get() != 'x') sc.fail("variable names must look like x<k>");
                long k = std::stol(sc.integer());
                if (k != expect)
                    sc.fail("variables must be x1..xn in ascending order (expected x" +
                            std::to_string(expect) + ")");
                ++expect;
            }
            sys.n = expect - 1;
            if (sys.n < 1) throw ParseError(line_no, 1, "vars line names no variables");
            have_vars = true;
        } else if (line.compare(first, 3, "eq:") == 0) {
            if (!have_vars) throw ParseError(line_no, static_cast<int>(first) + 1, "eq before vars line");
            std::string body = line.substr(first + 3);
            sys.polys.push_back(parse_equation_line(body, sys.n, line_no, static_cast<int>(first) + 4));
        } else {
            throw ParseError(line_no, static_cast<int>(first) + 1,
                             "expected a 'vars:' or 'eq:' line");
        }
    }
    if (!have_vars) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing vars line");
    if (sys.polys.empty()) throw ParseError(line_no, 1, "system has no equations");
    return sys;
}

}  // namespace polygame
