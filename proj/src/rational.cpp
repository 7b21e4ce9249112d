#include "ostar/rational.hpp"

#include <sstream>

namespace ostar {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_wire(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_display(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string GaussianRational::wire_string() const {
    return rational_wire(re) + "+" + rational_wire(im) + " i";
}

GaussianRational GaussianRational::from_wire(const std::string& s) {
    // format: p/q+r/s i   (the middle '+' separates the two "num/den" fields)
    auto pos = s.find("/");
    if (pos == std::string::npos) throw std::invalid_argument("bad scalar wire form: " + s);
    auto plus = s.find('+', pos);
    if (plus == std::string::npos) throw std::invalid_argument("bad scalar wire form: " + s);
    auto isuf = s.rfind(" i");
    if (isuf == std::string::npos || isuf < plus) throw std::invalid_argument("bad scalar wire form: " + s);
    Rational re = parse_rational(s.substr(0, plus));
    Rational im = parse_rational(s.substr(plus + 1, isuf - plus - 1));
    return {re, im};
}

std::string GaussianRational::display_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool have_re = sgn(re) != 0;
    if (have_re) out << rational_display(re);
    if (sgn(im) != 0) {
        Rational a = abs(im);
        if (have_re) out << (sgn(im) > 0 ? "+" : "-");
        else if (sgn(im) < 0) out << "-";
        if (a != 1) out << rational_display(a);
        out << "i";
    }
    return out.str();
}

Rational rational_pow(unsigned long base, long exp) {
    mpz_class b(base);
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp >= 0) return Rational(p);
    return Rational(1) / Rational(p);
}

}  // namespace ostar
