#include "kfl/quadext.hpp"

namespace kfl {

std::optional<Rational> rational_sqrt(const Rational& d) {
    if (d.sign() < 0) return std::nullopt;
    mpz_class pq = d.numerator() * d.denominator();
    if (mpz_perfect_square_p(pq.get_mpz_t()) == 0) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
    // sqrt(p/q) = sqrt(p*q)/q
    return Rational(root, d.denominator());
}

QuadExt QuadExt::pow(unsigned long n) const {
    QuadExt result(Rational(1), Rational(0), d_);
    QuadExt base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::optional<Rational> QuadExt::as_rational() const {
    if (y_.is_zero()) return x_;
    if (auto s = rational_sqrt(d_)) return x_ + y_ * *s;
    return std::nullopt;
}

std::string QuadExt::str() const {
    return x_.str() + " + " + y_.str() + "*sqrt(" + d_.str() + ")";
}

} // namespace kfl
