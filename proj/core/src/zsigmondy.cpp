#include "kfl/zsigmondy.hpp"

#include <algorithm>
#include <set>

namespace kfl {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000UL;

mpz_class pow_mod(mpz_class base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d,
                          unsigned long s) {
    mpz_class x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true; // composite witness
}

// Floyd-cycle Pollard rho with batched gcds and a deterministic increment
// schedule c = 1, 2, 3, ... (reports stay reproducible).
mpz_class pollard_rho(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        auto advance = [&](const mpz_class& v) -> mpz_class { return (v * v + c) % n; };
        mpz_class x(2), y(2), d(1), q(1);
        bool cycled = false;
        unsigned long iter = 0;
        while (d == 1) {
            x = advance(x);
            y = advance(advance(y));
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) {
                cycled = true;
                break;
            }
            q = q * diff % n;
            if (++iter % 128 == 0) mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (!cycled && d == 1) mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (cycled || d == n) {
            // Batching overshot (or the walk cycled): redo with per-step gcds.
            x = 2;
            y = 2;
            d = 1;
            while (d == 1) {
                x = advance(x);
                y = advance(advance(y));
                mpz_class diff = x > y ? x - y : y - x;
                if (diff == 0) {
                    d = n; // genuine cycle; fall through to the next c
                    break;
                }
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d > 1 && d < n) return d;
    }
}

void factor_into(const mpz_class& n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// Strip from value every prime it shares with base (to full multiplicity).
void strip_common(mpz_class& value, const mpz_class& base) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), base.get_mpz_t());
    while (g > 1) {
        value /= g;
        mpz_gcd(g.get_mpz_t(), value.get_mpz_t(), base.get_mpz_t());
    }
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3.3e24; a fixed strong-probable-prime basis above.
    for (unsigned long a : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL}) {
        if (miller_rabin_witness(n, mpz_class(a), d, s)) return false;
    }
    return true;
}

std::vector<mpz_class> factorize(const mpz_class& m) {
    mpz_class n = ::abs(m);
    if (n < 2)
        throw Error(ErrorCode::NotFactorable, "|m| must be at least 2");
    std::vector<mpz_class> factors;
    while (mpz_even_p(n.get_mpz_t())) {
        factors.emplace_back(2);
        n >>= 1;
    }
    for (unsigned long d = 3; d <= kTrialDivisionBound && mpz_class(d) * d <= n; d += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            factors.emplace_back(d);
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
    }
    if (n > 1) factor_into(n, factors);
    std::sort(factors.begin(), factors.end());
    return factors;
}

long sigma0(unsigned long r) {
    if (r == 0) throw Error(ErrorCode::BadIndex, "sigma0 requires r >= 1");
    if (r == 1) return 1;
    auto factors = factorize(mpz_class(r));
    long count = 1;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        count *= static_cast<long>(j - i + 1);
        i = j;
    }
    return count;
}

IntSeqPrefix integer_prefix(const KflParams& params, SeqKind kind, std::size_t n_max,
                            std::string label) {
    auto prefix = gen_prefix(params, kind, n_max);
    IntSeqPrefix out;
    out.label = std::move(label);
    out.terms.reserve(prefix.terms.size());
    for (std::size_t i = 0; i < prefix.terms.size(); ++i) {
        if (!prefix.terms[i].is_integer())
            throw Error(ErrorCode::BadSequence,
                        "term " + std::to_string(i) + " = " + prefix.terms[i].str() +
                            " is not an integer");
        out.terms.push_back(prefix.terms[i].numerator());
    }
    return out;
}

std::vector<mpz_class> primitive_primes(const IntSeqPrefix& seq, std::size_t n) {
    if (n >= seq.terms.size())
        throw Error(ErrorCode::BadIndex, "index beyond the stored prefix");
    const mpz_class& term = seq.terms[n];
    if (term == 0)
        throw Error(ErrorCode::BadIndex, "primitive primes are undefined for a zero term");
    mpz_class mag = ::abs(term);
    if (mag == 1) return {};
    std::set<mpz_class> distinct;
    for (const auto& p : factorize(mag)) distinct.insert(p);
    std::vector<mpz_class> out;
    for (const auto& p : distinct) {
        bool primitive = true;
        for (std::size_t m = 0; m < n && primitive; ++m) {
            if (seq.terms[m] != 0 && mpz_divisible_p(seq.terms[m].get_mpz_t(), p.get_mpz_t()))
                primitive = false;
        }
        if (primitive) out.push_back(p);
    }
    return out;
}

ZsigmondyOptions::ZsigmondyOptions() {
    mpz_ui_pow_ui(factor_cap.get_mpz_t(), 10, 30);
}

ZsigmondyReport zsigmondy_set(const IntSeqPrefix& seq, std::size_t bound,
                              const ZsigmondyOptions& options) {
    if (bound >= seq.terms.size())
        throw Error(ErrorCode::BadIndex, "bound beyond the stored prefix");
    ZsigmondyReport report;
    report.bound = bound;
    for (std::size_t n = 0; n <= bound; ++n) {
        IndexReport ir;
        ir.index = n;
        ir.term = seq.terms[n];
        ir.fully_factored = false;
        ir.zero_term = (ir.term == 0);
        mpz_class mag = ::abs(ir.term);
        if (ir.zero_term) {
            ir.in_z = false; // zero terms are excluded by convention
            ir.primitive_cofactor = 0;
        } else {
            // Primitive part: strip everything shared with earlier nonzero
            // terms (and with the discriminant under Carmichael's convention).
            mpz_class cofactor = mag;
            for (std::size_t m = 0; m < n && cofactor > 1; ++m)
                if (seq.terms[m] != 0) strip_common(cofactor, seq.terms[m]);
            if (options.carmichael && options.discriminant != 0 && cofactor > 1)
                strip_common(cofactor, options.discriminant);
            ir.primitive_cofactor = cofactor;
            ir.in_z = (cofactor == 1);
            if (mag > 1 && mag <= options.factor_cap) {
                ir.prime_factors = factorize(mag);
                ir.fully_factored = true;
                std::set<mpz_class> distinct(ir.prime_factors.begin(), ir.prime_factors.end());
                for (const auto& p : distinct)
                    if (mpz_divisible_p(cofactor.get_mpz_t(), p.get_mpz_t()))
                        ir.primitive_primes.push_back(p);
            } else if (mag == 1) {
                ir.fully_factored = true;
            } else if (cofactor > 1 && cofactor <= options.factor_cap) {
                // Term too large for a full report, but the primitive part
                // itself is small enough to list.
                auto cof_primes = factorize(cofactor);
                std::set<mpz_class> distinct(cof_primes.begin(), cof_primes.end());
                ir.primitive_primes.assign(distinct.begin(), distinct.end());
            }
            if (ir.in_z) report.z_set.push_back(n);
        }
        report.per_index.push_back(std::move(ir));
    }
    return report;
}

HighZConstruction construct_high_z(unsigned long k, unsigned long target,
                                   unsigned long r_override) {
    if (k < 1 || target < 1)
        throw Error(ErrorCode::BadIndex, "k and N must be positive");
    long needed = static_cast<long>(target / 2) + 1;
    unsigned long r = r_override;
    if (r == 0) {
        r = 1;
        while (sigma0(r) < needed) ++r;
    } else if (sigma0(r) < needed) {
        throw Error(ErrorCode::BadIndex,
                    "override r has too few divisors for the requested bound");
    }
    KflParams fib_params{Rational(static_cast<long>(k)), Rational(1), Rational(0)};
    auto fib = gen_prefix(fib_params, SeqKind::KFib, r);
    Rational half(1, 2);
    Rational sign_r = (r % 2 == 0) ? Rational(1) : Rational(-1);
    Rational a = sign_r * (fib.terms[r - 1] + Rational(static_cast<long>(k)) * fib.terms[r] * half);
    Rational b = -sign_r * fib.terms[r] * half;

    HighZConstruction c{k, target, r, std::move(a), std::move(b), sigma0(r)};

    // Piecewise law S_n = (-1)^{r+1-n} F_{k,r-n} (n <= r), S_n = F_{k,n-r} (n > r).
    KflParams params{Rational(static_cast<long>(k)), c.a, c.b};
    auto s = gen_prefix(params, SeqKind::KFL, 2 * r);
    auto f = gen_prefix(fib_params, SeqKind::KFib, 2 * r);
    for (unsigned long n = 0; n <= 2 * r; ++n) {
        Rational expected = (n <= r)
            ? (((r + 1 - n) % 2 == 0) ? f.terms[r - n] : -f.terms[r - n])
            : f.terms[n - r];
        if (!(s.terms[n] == expected))
            throw Error(ErrorCode::InternalInconsistency,
                        "constructed sequence violates the piecewise law at n = " +
                            std::to_string(n));
        if (!s.terms[n].is_integer())
            throw Error(ErrorCode::InternalInconsistency,
                        "constructed sequence has a non-integer term");
    }
    return c;
}

HighZVerification verify_high_z(const HighZConstruction& c, std::size_t bound) {
    if (bound < 2 * c.r)
        throw Error(ErrorCode::BadIndex, "bound must be at least 2r");
    KflParams params{Rational(static_cast<long>(c.k)), c.a, c.b};
    IntSeqPrefix seq = integer_prefix(params, SeqKind::KFL, bound, "high-z construction");
    HighZVerification v;
    v.report = zsigmondy_set(seq, bound);
    for (unsigned long d = 1; d <= c.r; ++d) {
        if (c.r % d != 0) continue;
        v.predicted.push_back(c.r - d);
        if (c.r + d <= bound) v.predicted.push_back(c.r + d);
    }
    std::sort(v.predicted.begin(), v.predicted.end());
    v.predicted.erase(std::unique(v.predicted.begin(), v.predicted.end()), v.predicted.end());
    for (auto idx : v.predicted)
        if (std::find(v.report.z_set.begin(), v.report.z_set.end(), idx) != v.report.z_set.end())
            v.predicted_hit.push_back(idx);
    v.z_count = v.report.z_set.size();
    v.ok = (v.z_count >= c.target);
    if (!v.ok)
        throw Error(ErrorCode::ConstructionFailure,
                    "Zsigmondy set has " + std::to_string(v.z_count) +
                        " elements, below the target " + std::to_string(c.target));
    return v;
}

} // namespace kfl
