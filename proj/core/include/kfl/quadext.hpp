#pragma once

#include <optional>
#include <string>

#include "kfl/rational.hpp"

namespace kfl {

/// Returns the positive rational square root of d when d is a square of a
/// rational, absent otherwise. With d = p/q canonical, d is a rational square
/// iff p*q is a perfect integer square.
std::optional<Rational> rational_sqrt(const Rational& d);

/// Element x + y*sqrt(D) of Q adjoined a formal square root of D. Arithmetic
/// never collapses sqrt(D), even when D is a rational square; as_rational()
/// is the single collapse point.
class QuadExt {
public:
    QuadExt(Rational rational_part, Rational radical_part, Rational radicand)
        : x_(std::move(rational_part)), y_(std::move(radical_part)), d_(std::move(radicand)) {}

    const Rational& rational_part() const { return x_; }
    const Rational& radical_part() const { return y_; }
    const Rational& radicand() const { return d_; }

    QuadExt operator+(const QuadExt& o) const {
        check_radicand(o);
        return QuadExt(x_ + o.x_, y_ + o.y_, d_);
    }
    QuadExt operator-(const QuadExt& o) const {
        check_radicand(o);
        return QuadExt(x_ - o.x_, y_ - o.y_, d_);
    }
    QuadExt operator*(const QuadExt& o) const {
        check_radicand(o);
        return QuadExt(x_ * o.x_ + d_ * o.y_ * y_, x_ * o.y_ + o.x_ * y_, d_);
    }
    QuadExt operator*(const Rational& s) const { return QuadExt(x_ * s, y_ * s, d_); }

    QuadExt conjugate() const { return QuadExt(x_, -y_, d_); }

    bool operator==(const QuadExt& o) const = default;

    QuadExt pow(unsigned long n) const;

    /// Collapse to a rational value: either the radical part is zero, or the
    /// radicand is a rational square s^2 (positive root s is used).
    std::optional<Rational> as_rational() const;

    std::string str() const;

private:
    void check_radicand(const QuadExt& o) const {
        if (!(d_ == o.d_))
            throw Error(ErrorCode::RadicandMismatch,
                        "mixed radicands " + d_.str() + " and " + o.d_.str());
    }

    Rational x_, y_, d_;
};

} // namespace kfl
