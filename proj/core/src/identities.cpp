#include "kfl/identities.hpp"

#include <algorithm>

namespace kfl {

namespace {

Rational xy_product(const KflParams& p) {
    // X*Y with X,Y = a +- sqrt(k^2+4) b
    return p.a * p.a - (p.k * p.k + Rational(4)) * p.b * p.b;
}

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

IdentityReport make(IdentityId id, Rational lhs, Rational rhs) {
    Rational residual = lhs - rhs;
    return IdentityReport{id, std::move(lhs), std::move(rhs), std::move(residual)};
}

void require_nonzero_k(const KflParams& params) {
    if (params.k.is_zero())
        throw Error(ErrorCode::ZeroK, "identity requires k != 0");
}

} // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
    case IdentityId::Catalan: return "catalan";
    case IdentityId::Cassini: return "cassini";
    case IdentityId::DOcagne: return "docagne";
    case IdentityId::SumAll: return "sum_all";
    case IdentityId::SumEven: return "sum_even";
    case IdentityId::SumOdd: return "sum_odd";
    case IdentityId::SumAlternating: return "sum_alternating";
    case IdentityId::Binomial: return "binomial";
    case IdentityId::Livio: return "livio";
    case IdentityId::Geometric: return "geometric";
    }
    return "unknown";
}

IdentityReport check_catalan(const KflParams& params, long n, long r) {
    if (r < 0 || n < r)
        throw Error(ErrorCode::BadIndex, "catalan requires n >= r >= 0");
    auto s = gen_prefix(params, SeqKind::KFL, static_cast<std::size_t>(n + r));
    Rational lhs = s.terms[n - r] * s.terms[n + r] - s.terms[n] * s.terms[n];
    Rational fr = seq_term(params, SeqKind::KFib, static_cast<std::size_t>(r));
    Rational rhs = sign_pow(n - r + 1) * xy_product(params) * fr * fr;
    return make(IdentityId::Catalan, std::move(lhs), std::move(rhs));
}

IdentityReport check_cassini(const KflParams& params, long n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "cassini requires n >= 1");
    auto s = gen_prefix(params, SeqKind::KFL, static_cast<std::size_t>(n + 1));
    Rational lhs = s.terms[n - 1] * s.terms[n + 1] - s.terms[n] * s.terms[n];
    Rational rhs = sign_pow(n) * xy_product(params);
    return make(IdentityId::Cassini, std::move(lhs), std::move(rhs));
}

IdentityReport check_docagne(const KflParams& params, long m, long n) {
    if (n < 0 || m < n)
        throw Error(ErrorCode::BadIndex, "docagne requires m >= n >= 0");
    auto s = gen_prefix(params, SeqKind::KFL, static_cast<std::size_t>(m + 1));
    Rational lhs = s.terms[m] * s.terms[n + 1] - s.terms[m + 1] * s.terms[n];
    Rational f = seq_term(params, SeqKind::KFib, static_cast<std::size_t>(m - n));
    Rational rhs = sign_pow(n) * xy_product(params) * f;
    return make(IdentityId::DOcagne, std::move(lhs), std::move(rhs));
}

IdentityReport check_sum(SumKind kind, const KflParams& params, long n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "sum identities require n >= 1");
    require_nonzero_k(params);
    const Rational& k = params.k;
    const Rational& a = params.a;
    const Rational& b = params.b;
    long r = n / 2;
    std::size_t top = static_cast<std::size_t>(std::max(2 * n + 1, n + 1));
    auto s = gen_prefix(params, SeqKind::KFL, top);

    Rational lhs(0), rhs(0);
    IdentityId id{};
    switch (kind) {
    case SumKind::All:
        id = IdentityId::SumAll;
        for (long i = 1; i <= n; ++i) lhs += s.terms[i];
        rhs = (s.terms[n + 1] + s.terms[n]) / k - b - (a + Rational(2) * b) / k;
        break;
    case SumKind::Even:
        id = IdentityId::SumEven;
        for (long i = 1; i <= n; ++i) lhs += s.terms[2 * i];
        rhs = s.terms[2 * n + 1] / k - b - a / k;
        break;
    case SumKind::Odd:
        id = IdentityId::SumOdd;
        for (long i = 1; i <= n; ++i) lhs += s.terms[2 * i - 1];
        rhs = s.terms[2 * n] / k - Rational(2) * b / k;
        break;
    case SumKind::Alternating:
        id = IdentityId::SumAlternating;
        for (long i = 1; i <= n; ++i) lhs += sign_pow(i) * s.terms[i];
        rhs = (Rational(2) * s.terms[2 * r + 1] - s.terms[n + 1] - s.terms[n]) / k
              - b - (a - Rational(2) * b) / k;
        break;
    }
    return make(id, std::move(lhs), std::move(rhs));
}

IdentityReport check_binomial(const KflParams& params, long n) {
    if (n < 0) throw Error(ErrorCode::BadIndex, "binomial requires n >= 0");
    auto s = gen_prefix(params, SeqKind::KFL, static_cast<std::size_t>(2 * n));
    Rational lhs(0);
    Rational kpow(1);
    for (long i = 0; i <= n; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(i));
        lhs += Rational(binom) * kpow * s.terms[i];
        kpow *= params.k;
    }
    return make(IdentityId::Binomial, std::move(lhs), s.terms[2 * n]);
}

IdentityReport check_livio(const KflParams& params, const Rational& p, long n) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "livio requires n >= 1");
    if (p.is_zero()) throw Error(ErrorCode::BadP, "livio requires p != 0");
    Rational charval = p * p - p * params.k - Rational(1);
    if (charval.is_zero())
        throw Error(ErrorCode::BadP, "livio requires p^2 - p*k - 1 != 0");
    auto s = gen_prefix(params, SeqKind::KFL, static_cast<std::size_t>(n + 1));
    Rational lhs(0);
    Rational ppow(1);
    for (long i = 1; i <= n; ++i) {
        ppow *= p;
        lhs += s.terms[i] / ppow;
    }
    Rational pn = p.pow(n);
    Rational rhs = (-s.terms[n] - p * s.terms[n + 1]
                    + pn * p * (params.a + params.b * params.k)
                    + Rational(2) * params.b * pn)
                   / (charval * pn);
    return make(IdentityId::Livio, std::move(lhs), std::move(rhs));
}

bool check_geometric(const KflParams& params) {
    bool geometric =
        params.a * params.a == (params.k * params.k + Rational(4)) * params.b * params.b;
    if (geometric) {
        // Constant-ratio sanity: S_{n+1} S_{n-1} = S_n^2 on the first terms.
        auto s = gen_prefix(params, SeqKind::KFL, 21);
        for (std::size_t n = 1; n <= 20; ++n) {
            if (!(s.terms[n + 1] * s.terms[n - 1] == s.terms[n] * s.terms[n]))
                throw Error(ErrorCode::InternalInconsistency,
                            "geometric criterion held but ratios are not constant");
        }
    }
    return geometric;
}

} // namespace kfl
