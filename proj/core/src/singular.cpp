#include "kfl/singular.hpp"

namespace kfl {

namespace {

ExceptionalKind exceptional_kind_of(PairType type) {
    switch (type) {
    case PairType::Type1: return ExceptionalKind::A;
    case PairType::Type2: return ExceptionalKind::B;
    case PairType::Type3: return ExceptionalKind::C;
    }
    throw Error(ErrorCode::BadShape, "unknown pair type");
}

const char* set_name(ExceptionalKind kind) {
    switch (kind) {
    case ExceptionalKind::A: return "A_n";
    case ExceptionalKind::B: return "B_n";
    case ExceptionalKind::C: return "C_n";
    }
    return "?";
}

// The linear coefficients (u, v) with u*a + v*b = 0 defining the pair.
std::pair<Rational, Rational> linear_coeffs(PairType type, std::size_t n, const Rational& k) {
    if (n == 0) throw Error(ErrorCode::BadIndex, "pair level must be >= 1");
    FgpqPolys fam = fgpq(n);
    switch (type) {
    case PairType::Type1:
        return {fam.f.eval(k) + Rational(1), fam.g.eval(k) + k - Rational(2)};
    case PairType::Type2:
        return {fam.f.eval(k) - Rational(1), fam.g.eval(k) - k + Rational(2)};
    case PairType::Type3:
        return {fam.p.eval(k) - Rational(1), fam.q.eval(k) - k - Rational(2)};
    }
    throw Error(ErrorCode::BadShape, "unknown pair type");
}

void require_admissible(PairType type, std::size_t n, const Rational& k) {
    ExceptionalKind ek = exceptional_kind_of(type);
    if (member(ek, n, k))
        throw Error(ErrorCode::ExceptionalK,
                    "k = " + k.str() + " lies in the exceptional set " + set_name(ek) +
                        " at level " + std::to_string(n));
}

} // namespace

Rational cubic_discriminant(const Rational& a, const Rational& b) {
    return Rational(4) * a * a * a + Rational(27) * b * b;
}

SingularPair singular_pair(PairType type, std::size_t n, const Rational& k) {
    require_admissible(type, n, k);
    auto [u, v] = linear_coeffs(type, n, k);
    Rational v2 = v * v;
    Rational a = Rational(-27) * u * u / (Rational(4) * v2);
    Rational b = Rational(27) * u * u * u / (Rational(4) * v2 * v);
    if (!cubic_discriminant(a, b).is_zero() || !(u * a + v * b).is_zero() ||
        (a.is_zero() && b.is_zero()))
        throw Error(ErrorCode::InternalInconsistency, "singular pair invariants violated");
    return SingularPair{type, n, k, std::move(a), std::move(b)};
}

Rational rationality_ratio(PairType type, std::size_t n, const Rational& k) {
    require_admissible(type, n, k);
    auto [u, v] = linear_coeffs(type, n, k);
    return u / v;
}

RootSet s2_slope_roots(std::size_t n, const mpz_class& p, const mpz_class& q,
                       const Rational& precision) {
    if (n == 0) throw Error(ErrorCode::BadIndex, "level must be >= 1");
    if (p == 0 && q == 0) throw Error(ErrorCode::BadSlope, "(p, q) must be nonzero");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw Error(ErrorCode::BadSlope, "p and q must be coprime");
    FgpqPolys fam = fgpq(n);
    IntPoly poly = fam.g * q - fam.f * p - IntPoly::variable() * q +
                   IntPoly::constant(2 * q + p);
    RootSet roots = real_roots(poly, precision);
    if (roots.count() > n + 1)
        throw Error(ErrorCode::InternalInconsistency, "slope locus exceeded the degree bound");
    return roots;
}

std::vector<VarietyPoint> variety_classify(MatrixKind kind, std::size_t n, const Rational& k) {
    if (k.is_zero()) throw Error(ErrorCode::ZeroK, "variety classification assumes k != 0");
    bool odd = (n % 2 == 1);
    std::vector<PairType> types;
    if (kind == MatrixKind::SkewCirculant) {
        if (!odd || n < 3)
            throw Error(ErrorCode::BadShape,
                        "skew-circulant variety requires odd n >= 3");
        types = {PairType::Type1};
    } else if (odd) {
        if (n < 3) throw Error(ErrorCode::BadShape, "circulant odd variety requires n >= 3");
        types = {PairType::Type3};
    } else {
        types = {PairType::Type2, PairType::Type3};
    }
    // Even-n circulant points must avoid both B_n and C_n.
    for (PairType t : types) require_admissible(t, n, k);

    std::vector<VarietyPoint> points;
    for (PairType t : types) {
        SingularPair pair = singular_pair(t, n, k);
        KflMatrix m = KflMatrix::build(kind, KflParams{k, pair.a, pair.b}, n);
        std::size_t rank = rank_exact(m);
        if (rank > n - 1)
            throw Error(ErrorCode::InternalInconsistency,
                        "singular pair produced a full-rank matrix");
        points.push_back(VarietyPoint{k, pair.a, pair.b, kind, n, t, rank});
    }
    return points;
}

ScanReport variety_scan(MatrixKind kind, std::size_t n, const std::vector<Rational>& k_values) {
    ScanReport report;
    for (const auto& k : k_values) {
        try {
            for (auto& pt : variety_classify(kind, n, k)) {
                ++report.histogram[pt.rank];
                if (pt.rank < n - 1) report.below_generic.push_back(pt);
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ExceptionalK || e.code() == ErrorCode::ZeroK) {
                report.skipped.push_back(ScanIssue{k, e.what()});
            } else {
                throw;
            }
        }
    }
    return report;
}

} // namespace kfl
