#include "hodgeforge/rational.hpp"

#include <ostream>

namespace hodgeforge {

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        BigInt n(s);
        return Rational(n);
    }
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    if (d.is_zero()) throw std::domain_error("Rational: zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: zero to a negative power");
        return Rational(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational r(numerator().pow(a), denominator().pow(a));
    if (e < 0) return Rational(1) / r;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }
std::ostream& operator<<(std::ostream& os, const BigInt& z) { return os << z.str(); }

}  // namespace hodgeforge
