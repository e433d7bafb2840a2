#include "polygame/rational.hpp"

#include <cctype>
#include <cstdio>

namespace polygame {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') ++pos;
    bool digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        digits = true;
    }
    if (!digits) throw std::invalid_argument("bad rational literal: " + text);
    if (pos < text.size()) {
        if (text[pos] != '/') throw std::invalid_argument("bad rational literal: " + text);
        ++pos;
        bool den_digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            den_digits = true;
        }
        if (!den_digits || pos != text.size())
            throw std::invalid_argument("bad rational literal: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace polygame
