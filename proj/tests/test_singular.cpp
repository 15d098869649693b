#include <doctest.h>

#include "kfl/singular.hpp"

using kfl::MatrixKind;
using kfl::PairType;
using kfl::Rational;

namespace {
const Rational kPrecision(1, 1L << 32);
}

TEST_CASE("cubic discriminant") {
    CHECK(kfl::cubic_discriminant(Rational(0), Rational(0)) == Rational(0));
    CHECK(kfl::cubic_discriminant(Rational(-3), Rational(2)) == Rational(0));
    CHECK(kfl::cubic_discriminant(Rational(1), Rational(1)) == Rational(31));
}

TEST_CASE("singular pair anchors") {
    auto t1 = kfl::singular_pair(PairType::Type1, 2, Rational(2));
    CHECK(t1.a == Rational(-27, 16));
    CHECK(t1.b == Rational(27, 32));
    CHECK(kfl::cubic_discriminant(t1.a, t1.b) == Rational(0));

    auto t2 = kfl::singular_pair(PairType::Type2, 2, Rational(2));
    CHECK(t2.a == Rational(-27, 64));
    CHECK(t2.b == Rational(27, 256));

    auto t1l3 = kfl::singular_pair(PairType::Type1, 3, Rational(2));
    CHECK(t1l3.a == Rational(-27, 25));
    CHECK(t1l3.b == Rational(54, 125));
}

TEST_CASE("exceptional k is rejected") {
    CHECK_THROWS_AS(kfl::singular_pair(PairType::Type2, 2, Rational(1)), kfl::Error);
    try {
        kfl::singular_pair(PairType::Type2, 2, Rational(1));
    } catch (const kfl::Error& e) {
        CHECK(e.code() == kfl::ErrorCode::ExceptionalK);
    }
    CHECK_THROWS_AS(kfl::singular_pair(PairType::Type2, 2, Rational(0)), kfl::Error);
    CHECK_THROWS_AS(kfl::singular_pair(PairType::Type3, 2, Rational(-1)), kfl::Error);
}

TEST_CASE("pair invariants on a k sweep") {
    for (int type = 1; type <= 3; ++type) {
        for (std::size_t n = 1; n <= 5; ++n) {
            int found = 0;
            for (long j = -40; j <= 40 && found < 12; ++j) {
                Rational k(j, 3);
                try {
                    auto pr = kfl::singular_pair(static_cast<PairType>(type), n, k);
                    CHECK(kfl::cubic_discriminant(pr.a, pr.b) == Rational(0));
                    CHECK(!(pr.a.is_zero() && pr.b.is_zero()));
                    ++found;
                } catch (const kfl::Error& e) {
                    CHECK(e.code() == kfl::ErrorCode::ExceptionalK);
                }
            }
            CHECK(found >= 10);
        }
    }
}

TEST_CASE("rationality ratio") {
    CHECK(kfl::rationality_ratio(PairType::Type2, 2, Rational(2)) == Rational(1, 4));
    CHECK_THROWS_AS(kfl::rationality_ratio(PairType::Type2, 2, Rational(0)), kfl::Error);
    // Tautology: rational admissible k gives a rational value by construction.
    auto r = kfl::rationality_ratio(PairType::Type1, 4, Rational(7, 3));
    CHECK(r.denominator() >= 1);
}

TEST_CASE("slope root locus") {
    auto single = kfl::s2_slope_roots(1, 1, 0, kPrecision);
    REQUIRE(single.rational_roots.size() == 1);
    CHECK(single.rational_roots[0] == Rational(2));
    CHECK(single.irrational_roots.empty());

    auto cubic = kfl::s2_slope_roots(2, 4, 1, kPrecision);
    CHECK(cubic.count() <= 3);

    CHECK_THROWS_AS(kfl::s2_slope_roots(2, 2, 4, kPrecision), kfl::Error);
    CHECK_THROWS_AS(kfl::s2_slope_roots(2, 0, 0, kPrecision), kfl::Error);
}

TEST_CASE("slope root count bound") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (auto [p, q] : {std::pair<long, long>{1, 1}, {3, 2}, {-5, 7}, {1, 0}, {0, 1}}) {
            auto rs = kfl::s2_slope_roots(n, p, q, kPrecision);
            CHECK(rs.count() <= n + 1);
        }
    }
}

TEST_CASE("variety classification pinned case") {
    auto pts = kfl::variety_classify(MatrixKind::SkewCirculant, 3, Rational(2));
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].a == Rational(-27, 25));
    CHECK(pts[0].b == Rational(54, 125));
    CHECK(pts[0].rank == 2);
}

TEST_CASE("variety classification admissibility") {
    CHECK_THROWS_AS(kfl::variety_classify(MatrixKind::SkewCirculant, 3, Rational(0)), kfl::Error);
    // Even-size skew matrices have no rank-set theorem.
    CHECK_THROWS_AS(kfl::variety_classify(MatrixKind::SkewCirculant, 4, Rational(2)), kfl::Error);
    try {
        kfl::variety_classify(MatrixKind::SkewCirculant, 4, Rational(2));
    } catch (const kfl::Error& e) {
        CHECK(e.code() == kfl::ErrorCode::BadShape);
    }

    auto both = kfl::variety_classify(MatrixKind::Circulant, 2, Rational(2));
    REQUIRE(both.size() == 2);
    CHECK(both[0].type == PairType::Type2);
    CHECK(both[1].type == PairType::Type3);
    for (const auto& pt : both) CHECK(pt.rank <= 1);

    auto odd = kfl::variety_classify(MatrixKind::Circulant, 3, Rational(1));
    REQUIRE(odd.size() == 1);
    CHECK(odd[0].type == PairType::Type3);
    CHECK(odd[0].rank <= 2);
}

TEST_CASE("variety scan") {
    CHECK(kfl::variety_scan(MatrixKind::SkewCirculant, 3, {}).histogram.empty());

    std::vector<Rational> ks;
    for (long j = 1; j <= 15; ++j) ks.push_back(Rational(j, 4));
    auto report = kfl::variety_scan(MatrixKind::SkewCirculant, 3, ks);
    std::size_t classified = 0;
    for (const auto& [rank, count] : report.histogram) {
        CHECK(rank <= 2);
        classified += count;
    }
    CHECK(classified + report.skipped.size() == ks.size());
    CHECK(report.below_generic.size() <= 2);
}
