#include "ellfib/rational.hpp"

#include <cctype>

#include "ellfib/errors.hpp"

namespace ellfib {

std::string rational_str(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_parse(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) throw ValidationError("invalid rational literal: '" + text + "'");
    BigInt num(text.substr(num_begin, i - num_begin));
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin) throw ValidationError("invalid rational literal: '" + text + "'");
        den = BigInt(text.substr(den_begin, i - den_begin));
        if (den == 0) throw ValidationError("rational literal with zero denominator: '" + text + "'");
    }
    if (i != text.size()) throw ValidationError("invalid rational literal: '" + text + "'");
    Rational value(num, den);
    return negative ? Rational(-value) : value;
}

Rational rational_pow(const Rational& r, std::int64_t e) {
    if (e < 0) throw PolyError("rational_pow: negative exponent");
    Rational result = 1;
    Rational base = r;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace ellfib
