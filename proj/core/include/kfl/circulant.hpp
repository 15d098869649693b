#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kfl/sequences.hpp"

namespace kfl {

enum class MatrixKind { SkewCirculant, Circulant };

/// n x n matrix whose first row is (S_1, ..., S_n); each further row is the
/// previous row rotated right, with the wrapped entry negated in the
/// skew-circulant case. Only the first row is stored.
class KflMatrix {
public:
    static KflMatrix build(MatrixKind kind, const KflParams& params, std::size_t n);

    /// Matrix with an explicit first row (for cross-checks against hand data).
    static KflMatrix from_first_row(MatrixKind kind, const KflParams& params,
                                    std::vector<Rational> first_row);

    MatrixKind kind() const { return kind_; }
    std::size_t n() const { return first_row_.size(); }
    const KflParams& params() const { return params_; }
    const std::vector<Rational>& first_row() const { return first_row_; }

    Rational entry(std::size_t i, std::size_t j) const;

private:
    KflMatrix(MatrixKind kind, KflParams params, std::vector<Rational> first_row)
        : kind_(kind), params_(std::move(params)), first_row_(std::move(first_row)) {}

    MatrixKind kind_;
    KflParams params_;
    std::vector<Rational> first_row_;
};

/// Exact determinant (fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix).
Rational det_exact(const KflMatrix& m);

/// Exact rank (fraction-free row reduction with full pivoting).
std::size_t rank_exact(const KflMatrix& m);

enum class Verdict { Invertible, Singular, Inconclusive };

const char* verdict_name(Verdict v);

/// Invertibility classification from the closed-form criteria on
/// S_{n+1} - S_n and S_{n+1} + S_n. The skew-circulant even-n case only has
/// a sufficient condition; its negative branch is Inconclusive. Requires k != 0.
struct InvertibilityVerdict {
    Verdict verdict;
    std::string reason;
};

InvertibilityVerdict theorem_verdict(const KflMatrix& m);

/// Floating-point probe: evaluates f(x) = sum_j S_j x^{j-1} at the n spectral
/// points (roots of x^n = -1 for skew, roots of x^n = 1 for circulant) and
/// reports whether min |f| exceeds tol after scaling by the first row's
/// max-norm. Advisory only; det_exact is authoritative.
bool spectral_check(const KflMatrix& m, double tol = 1e-9);

} // namespace kfl
