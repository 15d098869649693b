#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kfl/circulant.hpp"
#include "kfl/polynomial.hpp"

namespace kfl {

enum class PairType { Type1 = 1, Type2 = 2, Type3 = 3 };

/// The unique (a, b) != (0, 0) with 4a^3 + 27b^2 = 0 on the singularity line
/// of the given type and level:
///   Type1: (F_n(k)+1) a + (G_n(k)+k-2) b = 0
///   Type2: (F_n(k)-1) a + (G_n(k)-k+2) b = 0
///   Type3: (P_n(k)-1) a + (Q_n(k)-k-2) b = 0
struct SingularPair {
    PairType type;
    std::size_t level;
    Rational k, a, b;
};

/// Closed form a = -27u^2/(4v^2), b = 27u^3/(4v^3) with (u, v) the two linear
/// coefficients above. Requires k outside the matching exceptional set
/// (A_n / B_n / C_n); both defining invariants are verified before returning.
SingularPair singular_pair(PairType type, std::size_t n, const Rational& k);

/// 4a^3 + 27b^2; y^2 = x^3 + ax + b is singular iff this vanishes.
Rational cubic_discriminant(const Rational& a, const Rational& b);

/// The defining ratio u/v of the pair; rational for every rational admissible k.
Rational rationality_ratio(PairType type, std::size_t n, const Rational& k);

/// Real roots of q*G_n - p*F_n - q*T + (2q + p), the k-locus where the Type-2
/// defining ratio equals q/p. Requires gcd(p, q) = 1 and (p, q) != (0, 0);
/// at most n+1 roots by the degree law.
RootSet s2_slope_roots(std::size_t n, const mpz_class& p, const mpz_class& q,
                       const Rational& precision);

struct VarietyPoint {
    Rational k, a, b;
    MatrixKind kind;
    std::size_t n;
    PairType type;
    std::size_t rank;
};

/// Constructs the singular pair(s) matching the matrix kind and parity
/// (skew/odd: Type1; circulant/odd: Type3; circulant/even: Type2 and Type3),
/// builds the matrix, and reports its exact rank (asserted <= n-1).
std::vector<VarietyPoint> variety_classify(MatrixKind kind, std::size_t n, const Rational& k);

struct ScanIssue {
    Rational k;
    std::string reason;
};

struct ScanReport {
    std::map<std::size_t, std::size_t> histogram; // rank -> count
    std::vector<ScanIssue> skipped;               // inadmissible k values
    std::vector<VarietyPoint> below_generic;      // points with rank < n-1
};

/// Pointwise classification over a list of k values; inadmissible values are
/// collected, not fatal.
ScanReport variety_scan(MatrixKind kind, std::size_t n, const std::vector<Rational>& k_values);

} // namespace kfl
