#include "kfl/sequences.hpp"

#include "kfl/quadext.hpp"

namespace kfl {

namespace {

std::pair<Rational, Rational> seeds(const KflParams& p, SeqKind kind) {
    switch (kind) {
    case SeqKind::KFib: return {Rational(0), Rational(1)};
    case SeqKind::KLucas: return {Rational(2), p.k};
    case SeqKind::KFL: return {p.b * Rational(2), p.b * p.k + p.a};
    }
    throw Error(ErrorCode::BadShape, "unknown sequence kind");
}

} // namespace

SeqPrefix gen_prefix(const KflParams& params, SeqKind kind, std::size_t n_max) {
    auto [s0, s1] = seeds(params, kind);
    std::vector<Rational> terms;
    terms.reserve(n_max + 1);
    terms.push_back(s0);
    if (n_max >= 1) terms.push_back(s1);
    for (std::size_t n = 2; n <= n_max; ++n)
        terms.push_back(params.k * terms[n - 1] + terms[n - 2]);
    return SeqPrefix{params, kind, std::move(terms)};
}

Rational seq_term(const KflParams& params, SeqKind kind, std::size_t n) {
    return gen_prefix(params, kind, n).terms[n];
}

Rational binet_eval(const KflParams& params, std::size_t n) {
    const Rational& k = params.k;
    Rational d = k * k + Rational(4);
    Rational half(1, 2);
    QuadExt alpha(k * half, half, d);
    QuadExt beta(k * half, -half, d);
    QuadExt x(params.a, params.b, d);  // a + sqrt(D) b
    QuadExt y(params.a, -params.b, d); // a - sqrt(D) b
    QuadExt numerator = x * alpha.pow(n) - y * beta.pow(n);
    // divide by alpha - beta = sqrt(D): multiply by sqrt(D)/D
    QuadExt value = numerator * QuadExt(Rational(0), Rational(1) / d, d);
    // The numerator is antisymmetric under sqrt(D) -> -sqrt(D), so the
    // radical part cancels structurally, independent of whether D is a square.
    if (!value.radical_part().is_zero())
        throw Error(ErrorCode::InternalInconsistency,
                    "Binet evaluation did not collapse to a rational");
    return value.rational_part();
}

Decomposition decompose_check(const KflParams& params, std::size_t n) {
    Rational f = seq_term(params, SeqKind::KFib, n);
    Rational l = seq_term(params, SeqKind::KLucas, n);
    Rational s = seq_term(params, SeqKind::KFL, n);
    return Decomposition{f, l, params.a * f + params.b * l == s};
}

} // namespace kfl
