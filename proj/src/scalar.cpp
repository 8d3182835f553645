#include "crkit/scalar.hpp"

#include "crkit/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace crkit::exact {

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw invalid_input("Scalar division by zero");
    const Rational n = b.norm();
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace {

std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << '/' << denominator(r);
    return os.str();
}

} // namespace

std::string Scalar::str() const {
    std::string out = rat_str(re);
    out += (im < 0) ? "-" : "+";
    out += rat_str(abs(im));
    out += "*i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
};

[[noreturn]] void bad(const std::string& text) {
    throw invalid_input("cannot parse scalar: \"" + text + "\"");
}

// Parses [sign] (digits[/digits] [*i] | i). Returns the term as a Scalar.
Scalar parse_term(Cursor& c) {
    c.skip_ws();
    Rational sign = 1;
    while (c.peek() == '+' || c.peek() == '-') {
        if (c.peek() == '-') sign = -sign;
        ++c.pos;
        c.skip_ws();
    }
    if (c.peek() == 'i') {
        ++c.pos;
        return {Rational(0), sign};
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek()))) bad(c.s);
    size_t start = c.pos;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    Rational num(c.s.substr(start, c.pos - start));
    if (c.peek() == '/') {
        ++c.pos;
        if (!std::isdigit(static_cast<unsigned char>(c.peek()))) bad(c.s);
        size_t dstart = c.pos;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        Rational den(c.s.substr(dstart, c.pos - dstart));
        if (den == 0) bad(c.s);
        num /= den;
    }
    c.skip_ws();
    bool imag = false;
    if (c.peek() == '*') {
        ++c.pos;
        c.skip_ws();
        if (c.peek() != 'i') bad(c.s);
        ++c.pos;
        imag = true;
    } else if (c.peek() == 'i') {
        ++c.pos;
        imag = true;
    }
    num *= sign;
    return imag ? Scalar(Rational(0), num) : Scalar(num);
}

} // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) bad(text);
    Scalar acc = parse_term(c);
    c.skip_ws();
    while (!c.done()) {
        if (c.peek() != '+' && c.peek() != '-') bad(text);
        acc += parse_term(c);
        c.skip_ws();
    }
    return acc;
}

} // namespace crkit::exact
