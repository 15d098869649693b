#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kfl/rational.hpp"

namespace kfl {

/// Dense integer-coefficient polynomial in one variable T, index = degree,
/// trailing zeros trimmed (zero polynomial has an empty coefficient list).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs); // low degree first

    static IntPoly constant(mpz_class v);
    static IntPoly variable(); // T

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;
    IntPoly operator-() const { return *this * mpz_class(-1); }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /// Multiplication by T (degree shift by one).
    IntPoly shift_mul() const;

    Rational eval(const Rational& x) const;
    mpz_class eval_int(const mpz_class& x) const;

    IntPoly derivative() const;
    /// Content-free copy with positive leading coefficient.
    IntPoly primitive_part() const;

    std::string str() const; // human-readable, variable named T

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Isolating interval (lo, hi) for a single real root of `source`;
/// source changes sign across the interval.
struct RootInterval {
    Rational lo, hi;
    IntPoly source;
};

struct RootSet {
    std::vector<Rational> rational_roots;       // sorted ascending
    std::vector<RootInterval> irrational_roots; // sorted by lo, pairwise disjoint
    std::vector<IntPoly> source_polys;
    std::size_t count() const { return rational_roots.size() + irrational_roots.size(); }
};

/// The unique f_n, g_n with S_{k,n} = f_n(k) a + g_n(k) b. Seeds f_1 = 1,
/// g_1 = T; the recurrence is h_n = T h_{n-1} + h_{n-2}. n = 0 is admitted
/// as the extension f_0 = 0, g_0 = 2 (consistent with S_0 = 2b).
std::pair<IntPoly, IntPoly> fg_pair(std::size_t n);

struct FgpqPolys {
    IntPoly f; // F_n = f_{n+1} - f_n, degree n, monic
    IntPoly g; // G_n = g_{n+1} - g_n, degree n+1, monic
    IntPoly p; // P_n = f_{n+1} + f_n, degree n, monic
    IntPoly q; // Q_n = g_{n+1} + g_n, degree n+1, monic
};

/// Coefficient polynomials of S_{n+1} -+ S_n = F_n(k) a + G_n(k) b and
/// S_{n+1} + S_n = P_n(k) a + Q_n(k) b.
FgpqPolys fgpq(std::size_t n);

/// Exact real roots: rational roots found by candidate testing and deflation,
/// remaining simple real roots isolated by Sturm-sequence bisection and
/// refined to intervals of width <= precision.
RootSet real_roots(const IntPoly& p, const Rational& precision);

enum class ExceptionalKind { A, B, C };

/// The two defining polynomials of A_n / B_n / C_n:
///   A: F_n + 1        and G_n + (T - 2)
///   B: F_n - 1        and G_n - (T - 2)
///   C: P_n - 1        and Q_n - (T + 2)
std::pair<IntPoly, IntPoly> exceptional_polys(ExceptionalKind kind, std::size_t n);

/// Union of the real roots of the two defining polynomials, deduplicated.
RootSet exceptional_set(ExceptionalKind kind, std::size_t n, const Rational& precision);

/// Exact membership of a rational k: true iff a defining polynomial vanishes at k.
bool member(ExceptionalKind kind, std::size_t n, const Rational& k);

} // namespace kfl
