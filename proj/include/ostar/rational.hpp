#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ostar {

using Rational = mpq_class;

/// Gaussian rational: re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational imaginary() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n2 = o.norm2();
        if (sgn(n2) == 0) throw std::domain_error("division by zero scalar");
        Rational r = (re * o.re + im * o.im) / n2;
        Rational i = (im * o.re - re * o.im) / n2;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Wire form "p/q+r/s i", denominators always written.
    std::string wire_string() const;
    static GaussianRational from_wire(const std::string& s);

    /// Compact display form: "0", "1", "-2/3", "i", "1/2-i", ...
    std::string display_string() const;
};

/// Parse "p" or "p/q" into an exact rational; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

std::string rational_wire(const Rational& r);
std::string rational_display(const Rational& r);

/// n^k for integer k (k may be negative; n >= 1).
Rational rational_pow(unsigned long base, long exp);

}  // namespace ostar
