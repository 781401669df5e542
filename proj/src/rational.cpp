#include "moranslice/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace moran {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("sign without digits");
        BigInt v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad character in rational literal: " +
                                            std::string(s));
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double log_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log of nonpositive integer");
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x));
    if (bits < 900) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 512;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt pow_big(unsigned base, unsigned exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

}  // namespace moran
