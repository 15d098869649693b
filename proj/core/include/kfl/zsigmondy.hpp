#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kfl/sequences.hpp"

namespace kfl {

/// Deterministic primality test: trial division, then Miller-Rabin with a
/// fixed witness set (proves primality below 3.3e24; fixed-witness strong
/// probable-prime test above).
bool is_prime(const mpz_class& n);

/// Prime factorization of |m| with multiplicity, sorted ascending.
/// Trial division to 1e6, then Pollard rho (Brent) with a fixed,
/// deterministic parameter schedule. Requires |m| >= 2.
std::vector<mpz_class> factorize(const mpz_class& m);

/// Number of positive divisors.
long sigma0(unsigned long r);

/// Integer sequence prefix, index 0 upward.
struct IntSeqPrefix {
    std::vector<mpz_class> terms;
    std::string label;
};

/// Builds an integer prefix from rational sequence parameters; any
/// non-integer term signals BadSequence.
IntSeqPrefix integer_prefix(const KflParams& params, SeqKind kind, std::size_t n_max,
                            std::string label);

/// Distinct primes dividing term n but no earlier nonzero term.
/// Requires term n nonzero and |term| factorable.
std::vector<mpz_class> primitive_primes(const IntSeqPrefix& seq, std::size_t n);

struct IndexReport {
    std::size_t index;
    mpz_class term;
    std::vector<mpz_class> prime_factors; // of |term|, when factored
    bool fully_factored;                  // false when |term| exceeded the cap
    std::vector<mpz_class> primitive_primes;
    mpz_class primitive_cofactor; // part of |term| coprime to all earlier nonzero terms
    bool in_z;
    bool zero_term;
};

struct ZsigmondyOptions {
    /// Carmichael's convention: a primitive prime must additionally not
    /// divide the discriminant. Off by default (plain definition).
    bool carmichael = false;
    mpz_class discriminant = 0;
    /// Terms above this magnitude are not fully factored for the report;
    /// membership in the Zsigmondy set is still decided exactly via
    /// gcd-stripping against earlier terms.
    mpz_class factor_cap;
    ZsigmondyOptions();
};

struct ZsigmondyReport {
    std::size_t bound;
    std::vector<IndexReport> per_index;
    std::vector<std::size_t> z_set; // indices with no primitive prime divisor
};

/// Per-index primitive-prime analysis of terms 0..bound. Conventions:
/// zero terms are never members; |term| = 1 is always a member.
ZsigmondyReport zsigmondy_set(const IntSeqPrefix& seq, std::size_t bound,
                              const ZsigmondyOptions& options = ZsigmondyOptions());

/// Parameters of a generalized k-FL sequence whose Zsigmondy set has at
/// least N elements: r minimal with sigma0(r) >= floor(N/2) + 1, and
/// a = (-1)^r (F_{k,r-1} + k F_{k,r}/2), b = (-1)^{r+1} F_{k,r}/2, which
/// makes S_n = (-1)^{r+1-n} F_{k,r-n} for n <= r and S_n = F_{k,n-r} above.
struct HighZConstruction {
    unsigned long k;
    unsigned long target; // N
    unsigned long r;
    Rational a, b;
    long sigma0_r;
};

/// r_override = 0 picks the minimal admissible r.
HighZConstruction construct_high_z(unsigned long k, unsigned long target,
                                   unsigned long r_override = 0);

struct HighZVerification {
    ZsigmondyReport report;
    std::vector<std::size_t> predicted;     // {r - d, r + d : d | r} within bound
    std::vector<std::size_t> predicted_hit; // predicted indices that landed in Z
    std::size_t z_count;
    bool ok; // |Z| >= N
};

/// Generates the sequence, runs the Zsigmondy analysis up to `bound`
/// (must be >= 2r), and checks |Z| >= N; failure signals ConstructionFailure.
HighZVerification verify_high_z(const HighZConstruction& c, std::size_t bound);

} // namespace kfl
