#pragma once

#include <cstddef>
#include <vector>

#include "kfl/rational.hpp"

namespace kfl {

/// Parameters (k, a, b) of a generalized k-FL sequence
/// S_0 = 2b, S_1 = bk + a, S_n = k*S_{n-1} + S_{n-2}.
struct KflParams {
    Rational k, a, b;
};

enum class SeqKind { KFib, KLucas, KFL };

struct SeqPrefix {
    KflParams params;
    SeqKind kind;
    std::vector<Rational> terms; // index 0 upward
};

/// Terms 0..n_max by direct recurrence.
SeqPrefix gen_prefix(const KflParams& params, SeqKind kind, std::size_t n_max);

/// Single term by recurrence (convenience over gen_prefix).
Rational seq_term(const KflParams& params, SeqKind kind, std::size_t n);

/// Term n via the closed form ((a+sqrt(D)b)*alpha^n - (a-sqrt(D)b)*beta^n)/sqrt(D)
/// with alpha, beta = (k +- sqrt(D))/2, D = k^2+4, evaluated exactly in the
/// quadratic extension. The radical part always cancels; a failed collapse
/// signals InternalInconsistency.
Rational binet_eval(const KflParams& params, std::size_t n);

struct Decomposition {
    Rational fib;   // F_{k,n}
    Rational lucas; // L_{k,n}
    bool consistent; // S_n == a*F_{k,n} + b*L_{k,n}
};

Decomposition decompose_check(const KflParams& params, std::size_t n);

} // namespace kfl
