#include "kfl/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace kfl {

KflMatrix KflMatrix::build(MatrixKind kind, const KflParams& params, std::size_t n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "matrix size must be >= 1");
    auto prefix = gen_prefix(params, SeqKind::KFL, n);
    std::vector<Rational> row(prefix.terms.begin() + 1, prefix.terms.end());
    return KflMatrix(kind, params, std::move(row));
}

KflMatrix KflMatrix::from_first_row(MatrixKind kind, const KflParams& params,
                                    std::vector<Rational> first_row) {
    if (first_row.empty()) throw Error(ErrorCode::BadIndex, "matrix size must be >= 1");
    return KflMatrix(kind, params, std::move(first_row));
}

Rational KflMatrix::entry(std::size_t i, std::size_t j) const {
    std::size_t nn = n();
    std::size_t idx = (j + nn - i % nn) % nn;
    const Rational& v = first_row_[idx];
    if (kind_ == MatrixKind::SkewCirculant && j < i % nn) return -v;
    return v;
}

namespace {

// Denominator-cleared integer copy; det(M) = det(intM) / scale^n,
// rank(M) = rank(intM).
std::pair<std::vector<std::vector<mpz_class>>, mpz_class> integer_grid(const KflMatrix& m) {
    std::size_t n = m.n();
    mpz_class scale(1);
    for (const auto& v : m.first_row())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<std::vector<mpz_class>> grid(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational e = m.entry(i, j) * Rational(scale);
            grid[i][j] = e.numerator(); // denominator is 1 by construction
        }
    return {std::move(grid), std::move(scale)};
}

} // namespace

Rational det_exact(const KflMatrix& m) {
    auto [a, scale] = integer_grid(m);
    std::size_t n = m.n();
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpz_class det = a[n - 1][n - 1] * sign;
    mpz_class denom;
    mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(det, denom);
}

std::size_t rank_exact(const KflMatrix& m) {
    std::size_t n = m.n();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.entry(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rational factor = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Invertible: return "invertible";
    case Verdict::Singular: return "singular";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

InvertibilityVerdict theorem_verdict(const KflMatrix& m) {
    const KflParams& p = m.params();
    if (p.k.is_zero())
        throw Error(ErrorCode::ZeroK, "invertibility criteria assume k != 0");
    std::size_t n = m.n();
    auto prefix = gen_prefix(p, SeqKind::KFL, n + 1);
    Rational diff = prefix.terms[n + 1] - prefix.terms[n];
    Rational sum = prefix.terms[n + 1] + prefix.terms[n];
    Rational diff_bound = -p.b * p.k + Rational(2) * p.b - p.a; // -bk + 2b - a
    Rational diff_bound_pos = p.b * p.k - Rational(2) * p.b + p.a; // bk - 2b + a
    Rational sum_bound = p.b * p.k + Rational(2) * p.b + p.a; // bk + 2b + a
    bool odd = (n % 2 == 1);

    if (m.kind() == MatrixKind::SkewCirculant) {
        if (odd) {
            if (diff == diff_bound)
                return {Verdict::Singular,
                        "skew-circulant, odd n: S_{n+1} - S_n = -bk + 2b - a"};
            return {Verdict::Invertible,
                    "skew-circulant, odd n: S_{n+1} - S_n != -bk + 2b - a"};
        }
        if (!(diff == diff_bound))
            return {Verdict::Invertible,
                    "skew-circulant, even n: S_{n+1} - S_n != -bk + 2b - a"};
        return {Verdict::Inconclusive,
                "skew-circulant, even n: criterion is only sufficient"};
    }
    // Circulant.
    if (odd) {
        if (sum == sum_bound)
            return {Verdict::Singular, "circulant, odd n: S_{n+1} + S_n = bk + 2b + a"};
        return {Verdict::Invertible, "circulant, odd n: S_{n+1} + S_n != bk + 2b + a"};
    }
    if (diff == diff_bound_pos)
        return {Verdict::Singular, "circulant, even n: S_{n+1} - S_n = bk - 2b + a"};
    if (sum == sum_bound)
        return {Verdict::Singular, "circulant, even n: S_{n+1} + S_n = bk + 2b + a"};
    return {Verdict::Invertible,
            "circulant, even n: both difference and sum conditions hold"};
}

bool spectral_check(const KflMatrix& m, double tol) {
    if (tol <= 0) throw Error(ErrorCode::BadIndex, "tolerance must be positive");
    std::size_t n = m.n();
    double maxnorm = 0;
    std::vector<double> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) {
        coeffs[j] = m.first_row()[j].to_double();
        maxnorm = std::max(maxnorm, std::abs(coeffs[j]));
    }
    if (maxnorm == 0) return false;
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double angle = (m.kind() == MatrixKind::SkewCirculant)
                           ? std::numbers::pi * (2.0 * static_cast<double>(i) + 1.0) /
                                 static_cast<double>(n)
                           : 2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(n);
        std::complex<double> x = std::polar(1.0, angle);
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = n; j-- > 0;) acc = acc * x + coeffs[j];
        min_abs = std::min(min_abs, std::abs(acc));
    }
    return min_abs / maxnorm > tol;
}

} // namespace kfl
