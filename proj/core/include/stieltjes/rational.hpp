#ifndef STIELTJES_RATIONAL_HPP
#define STIELTJES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "stieltjes/error.hpp"

namespace stieltjes {

using Rational = mpq_class;

// Parses "a", "-a", "a/b" into a canonical rational (lowest terms, positive
// denominator).  Rejects anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "a" for integers, "a/b" otherwise, sign on the
// numerator.  parse_rational(rational_to_string(x)) == x.
std::string rational_to_string(const Rational& x);

// Exact complex scalar with rational real and imaginary parts.  mpq_class
// keeps each part in lowest terms with a positive denominator, so equality
// is structural.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(long n) : re(n), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRational conj() const { return {re, -im}; }

    // Squared modulus re^2 + im^2; rational and nonnegative.
    Rational norm2() const { return re * re + im * im; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) {
        return !(a == b);
    }

    GaussRational operator-() const { return {-re, -im}; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussRational& operator+=(const GaussRational& b) { *this = *this + b; return *this; }
    GaussRational& operator-=(const GaussRational& b) { *this = *this - b; return *this; }
    GaussRational& operator*=(const GaussRational& b) { *this = *this * b; return *this; }
};

// Exact complex division; throws division-by-zero on a zero divisor.
GaussRational operator/(const GaussRational& a, const GaussRational& b);

// x^n for n >= 0 with the convention x^0 = 1 (including x = 0).
GaussRational pow(const GaussRational& x, unsigned long n);

// Scalar pseudoinverse: 1/x for nonzero x, 0 for x = 0.
GaussRational pinv(const GaussRational& x);

std::string to_string(const GaussRational& x);

} // namespace stieltjes

#endif
