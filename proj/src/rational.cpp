#include "pcov/rational.hpp"

#include "pcov/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace pcov {

namespace {

long long parse_ll(const std::string& s) {
    if (s.empty()) throw SyntaxError(0, 0, "empty number");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (i == 0 && (c == '-' || c == '+')) continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SyntaxError(0, 0, "bad digit in number '" + s + "'");
    }
    if (s == "-" || s == "+") throw SyntaxError(0, 0, "bad number '" + s + "'");
    return std::stoll(s);
}

} // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = parse_ll(text.substr(0, slash));
        long long den = parse_ll(text.substr(slash + 1));
        if (den == 0) throw SyntaxError(0, 0, "zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_ll(text));
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw SyntaxError(0, 0, "trailing decimal point in '" + text + "'");
    bool neg = !whole.empty() && whole[0] == '-';
    long long ipart = (whole == "-" || whole == "+" || whole.empty()) ? 0 : parse_ll(whole);
    long long den = 1;
    long long num = 0;
    for (char c : frac) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw SyntaxError(0, 0, "bad digit in number '" + text + "'");
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r = Rational(ipart < 0 ? -ipart : ipart) + Rational(num, den);
    return neg ? -r : r;
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

long long rational_ceil(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

long long rational_floor(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

} // namespace pcov
