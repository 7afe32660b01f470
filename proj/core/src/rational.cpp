#include "stieltjes/rational.hpp"

#include <cctype>

namespace stieltjes {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_integer_token(num))
        throw error("parse-error", "bad rational '" + text + "'");
    if (slash == std::string::npos) {
        Rational r(mpz_class(num), 1);
        r.canonicalize();
        return r;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
        throw error("parse-error", "bad rational '" + text + "'");
    mpz_class d(den);
    if (d == 0)
        throw error("parse-error", "zero denominator in '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& x) {
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    if (b.is_zero())
        throw error("division-by-zero", "complex division by zero");
    const Rational n = b.norm2();
    const GaussRational c = b.conj();
    GaussRational p = a * c;
    return {p.re / n, p.im / n};
}

GaussRational pow(const GaussRational& x, unsigned long n) {
    GaussRational acc(1);
    GaussRational base = x;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

GaussRational pinv(const GaussRational& x) {
    if (x.is_zero())
        return GaussRational(0);
    return GaussRational(1) / x;
}

std::string to_string(const GaussRational& x) {
    if (x.im == 0)
        return rational_to_string(x.re);
    return rational_to_string(x.re) + (x.im >= 0 ? "+" : "") + rational_to_string(x.im) + "i";
}

} // namespace stieltjes
