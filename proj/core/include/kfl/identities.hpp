#pragma once

#include "kfl/sequences.hpp"

namespace kfl {

enum class IdentityId {
    Catalan,
    Cassini,
    DOcagne,
    SumAll,
    SumEven,
    SumOdd,
    SumAlternating,
    Binomial,
    Livio,
    Geometric,
};

const char* identity_name(IdentityId id);

/// Both sides of an identity evaluated exactly at concrete parameters.
struct IdentityReport {
    IdentityId id;
    Rational lhs;
    Rational rhs;
    Rational residual; // lhs - rhs
    bool holds() const { return residual.is_zero(); }
};

/// S_{n-r} * S_{n+r} - S_n^2 = (-1)^{n-r+1} * (a^2 - (k^2+4) b^2) * F_{k,r}^2, n >= r >= 0.
IdentityReport check_catalan(const KflParams& params, long n, long r);

/// S_{n-1} * S_{n+1} - S_n^2 = (-1)^n * (a^2 - (k^2+4) b^2), n >= 1.
IdentityReport check_cassini(const KflParams& params, long n);

/// S_m * S_{n+1} - S_{m+1} * S_n = (-1)^n * (a^2 - (k^2+4) b^2) * F_{k,m-n}, m >= n >= 0.
IdentityReport check_docagne(const KflParams& params, long m, long n);

enum class SumKind { All, Even, Odd, Alternating };

/// Finite-sum identities; all four closed forms divide by k, so k != 0.
///   All:         sum_{i=1..n} S_i
///   Even:        sum_{i=1..n} S_{2i}
///   Odd:         sum_{i=1..n} S_{2i-1}
///   Alternating: sum_{i=1..n} (-1)^i S_i, with r = floor(n/2)
IdentityReport check_sum(SumKind kind, const KflParams& params, long n);

/// sum_{i=0..n} C(n,i) k^i S_i = S_{2n}, n >= 0.
IdentityReport check_binomial(const KflParams& params, long n);

/// sum_{i=1..n} S_i / p^i closed form; requires p != 0 and p^2 - p k - 1 != 0.
IdentityReport check_livio(const KflParams& params, const Rational& p, long n);

/// True iff a^2 = (k^2+4) b^2, i.e. the sequence is geometric. When true the
/// constancy of consecutive ratios is verified internally on terms 0..20.
bool check_geometric(const KflParams& params);

} // namespace kfl
