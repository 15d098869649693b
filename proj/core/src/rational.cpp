#include "kfl/rational.hpp"

namespace kfl {

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    auto parse_int = [](std::string_view t) {
        if (t.empty()) throw Error(ErrorCode::BadIndex, "empty integer literal");
        mpz_class z;
        if (z.set_str(std::string(t), 10) != 0)
            throw Error(ErrorCode::BadIndex, "malformed integer literal: " + std::string(t));
        return z;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    mpz_class num = parse_int(s.substr(0, slash));
    mpz_class den = parse_int(s.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "0 raised to a negative power");
        return (Rational(1) / *this).pow(-e);
    }
    Rational result(1);
    Rational base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

} // namespace kfl
