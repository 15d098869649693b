#include <doctest.h>

#include <cstdint>

#include "kfl/polynomial.hpp"
#include "kfl/sequences.hpp"

using kfl::ExceptionalKind;
using kfl::IntPoly;
using kfl::Rational;

namespace {

struct Rng {
    std::uint64_t s = 0xcafef00dd15ea5e5ULL;
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    Rational rational() {
        long num = -20 + static_cast<long>(next() % 41);
        long den = 1 + static_cast<long>(next() % 20);
        return Rational(num, den);
    }
};

const Rational kPrecision(1, 1L << 32);

void check_intervals(const kfl::RootSet& rs, const Rational& precision) {
    for (const auto& iv : rs.irrational_roots) {
        CHECK(iv.lo < iv.hi);
        CHECK(iv.hi - iv.lo <= precision);
        CHECK(iv.source.eval(iv.lo).sign() * iv.source.eval(iv.hi).sign() == -1);
        for (const auto& r : rs.rational_roots) CHECK((r <= iv.lo || r >= iv.hi));
    }
    for (std::size_t i = 0; i + 1 < rs.irrational_roots.size(); ++i)
        CHECK(rs.irrational_roots[i].hi <= rs.irrational_roots[i + 1].lo);
}

} // namespace

TEST_CASE("polynomial ring operations") {
    IntPoly t = IntPoly::variable();
    IntPoly t_plus_1{1, 1};
    CHECK(t * t_plus_1 == IntPoly{0, 1, 1}); // T^2 + T
    CHECK((IntPoly{1, -1, 1}).eval(Rational(2)) == Rational(3));
    IntPoly p{3, 0, -2, 5};
    CHECK(p + IntPoly() == p);
    CHECK(p - p == IntPoly());
    CHECK(p.shift_mul() == IntPoly{0, 3, 0, -2, 5});
    CHECK((IntPoly{1, 2, 3}).degree() == 2);
    CHECK(IntPoly().degree() == -1);
    CHECK((IntPoly{0, 0, 0}).is_zero());
    CHECK((IntPoly{-1, 2, 1}).str() == "T^2 + 2*T - 1");
}

TEST_CASE("fg_pair seeds and recurrence") {
    auto [f1, g1] = kfl::fg_pair(1);
    CHECK(f1 == IntPoly{1});
    CHECK(g1 == IntPoly::variable());
    auto [f2, g2] = kfl::fg_pair(2);
    CHECK(f2 == IntPoly::variable());
    CHECK(g2 == IntPoly{2, 0, 1}); // T^2 + 2
    auto [f4, g4] = kfl::fg_pair(4);
    CHECK(f4 == IntPoly{0, 2, 0, 1}); // T^3 + 2T
    auto [f0, g0] = kfl::fg_pair(0);
    CHECK(f0.is_zero());
    CHECK(g0 == IntPoly{2});
}

TEST_CASE("fg decomposition matches the recurrence") {
    Rng rng;
    for (int t = 0; t < 50; ++t) {
        kfl::KflParams p{rng.rational(), rng.rational(), rng.rational()};
        auto prefix = kfl::gen_prefix(p, kfl::SeqKind::KFL, 12);
        for (std::size_t n = 0; n <= 12; ++n) {
            auto [fn, gn] = kfl::fg_pair(n);
            CHECK(fn.eval(p.k) * p.a + gn.eval(p.k) * p.b == prefix.terms[n]);
        }
    }
}

TEST_CASE("fgpq table for n = 0..3") {
    auto t0 = kfl::fgpq(0);
    CHECK(t0.f == IntPoly{1});
    CHECK(t0.g == IntPoly{-2, 1});
    CHECK(t0.p == IntPoly{1});
    CHECK(t0.q == IntPoly{2, 1});

    auto t2 = kfl::fgpq(2);
    CHECK(t2.f == IntPoly{1, -1, 1});
    CHECK(t2.g == IntPoly{-2, 3, -1, 1});
    CHECK(t2.p == IntPoly{1, 1, 1});
    CHECK(t2.q == IntPoly{2, 3, 1, 1});

    auto t3 = kfl::fgpq(3);
    CHECK(t3.f == IntPoly{-1, 2, -1, 1});
    CHECK(t3.q == IntPoly{2, 3, 4, 1, 1});
}

TEST_CASE("degree and monic law up to n = 30") {
    for (std::size_t n = 0; n <= 30; ++n) {
        auto t = kfl::fgpq(n);
        CHECK(t.f.degree() == static_cast<int>(n));
        CHECK(t.p.degree() == static_cast<int>(n));
        CHECK(t.g.degree() == static_cast<int>(n) + 1);
        CHECK(t.q.degree() == static_cast<int>(n) + 1);
        CHECK(t.f.is_monic());
        CHECK(t.g.is_monic());
        CHECK(t.p.is_monic());
        CHECK(t.q.is_monic());
    }
}

TEST_CASE("real_roots: single irrational root") {
    IntPoly p{-2, 4, -1, 1}; // T^3 - T^2 + 4T - 2
    auto rs = kfl::real_roots(p, kPrecision);
    CHECK(rs.rational_roots.empty());
    REQUIRE(rs.irrational_roots.size() == 1);
    const auto& iv = rs.irrational_roots[0];
    CHECK(iv.lo > Rational(0));
    CHECK(iv.hi < Rational(1));
    check_intervals(rs, kPrecision);
}

TEST_CASE("real_roots: rational root with no real cofactor roots") {
    IntPoly p{-2, 2, -1, 1}; // (T-1)(T^2+2)
    auto rs = kfl::real_roots(p, kPrecision);
    REQUIRE(rs.rational_roots.size() == 1);
    CHECK(rs.rational_roots[0] == Rational(1));
    CHECK(rs.irrational_roots.empty());
}

TEST_CASE("real_roots: no real roots / error paths") {
    CHECK(kfl::real_roots(IntPoly{1, 0, 1}, kPrecision).count() == 0);
    CHECK_THROWS_AS(kfl::real_roots(IntPoly(), kPrecision), kfl::Error);
}

TEST_CASE("real_roots: repeated and mixed roots") {
    // (T-1)^2 (T+3) (T^2 - 2): rational 1, -3 plus +-sqrt(2)
    IntPoly p = IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{3, 1} * IntPoly{-2, 0, 1};
    auto rs = kfl::real_roots(p, kPrecision);
    REQUIRE(rs.rational_roots.size() == 2);
    CHECK(rs.rational_roots[0] == Rational(-3));
    CHECK(rs.rational_roots[1] == Rational(1));
    REQUIRE(rs.irrational_roots.size() == 2);
    check_intervals(rs, kPrecision);
    // Root count never exceeds the degree.
    CHECK(rs.count() <= static_cast<std::size_t>(p.degree()));
}

TEST_CASE("exceptional set A_3") {
    auto rs = kfl::exceptional_set(ExceptionalKind::A, 3, kPrecision);
    CHECK(rs.count() == 2);
    REQUIRE(rs.rational_roots.size() == 1);
    CHECK(rs.rational_roots[0] == Rational(0));
    REQUIRE(rs.irrational_roots.size() == 1);
    check_intervals(rs, kPrecision);
}

TEST_CASE("exceptional set B_3") {
    auto rs = kfl::exceptional_set(ExceptionalKind::B, 3, kPrecision);
    CHECK(rs.count() == 1);
    REQUIRE(rs.rational_roots.size() == 1);
    CHECK(rs.rational_roots[0] == Rational(1));
}

TEST_CASE("exceptional sets B_2 and C_2") {
    auto b2 = kfl::exceptional_set(ExceptionalKind::B, 2, kPrecision);
    REQUIRE(b2.rational_roots.size() == 2);
    CHECK(b2.rational_roots[0] == Rational(0));
    CHECK(b2.rational_roots[1] == Rational(1));
    CHECK(b2.irrational_roots.empty());

    auto c2 = kfl::exceptional_set(ExceptionalKind::C, 2, kPrecision);
    REQUIRE(c2.rational_roots.size() == 2);
    CHECK(c2.rational_roots[0] == Rational(-1));
    CHECK(c2.rational_roots[1] == Rational(0));
    CHECK(c2.irrational_roots.empty());
}

TEST_CASE("exceptional set C_3") {
    auto rs = kfl::exceptional_set(ExceptionalKind::C, 3, kPrecision);
    CHECK(rs.count() == 2);
    REQUIRE(rs.rational_roots.size() == 1);
    CHECK(rs.rational_roots[0] == Rational(0));
    check_intervals(rs, kPrecision);
}

TEST_CASE("member") {
    CHECK(kfl::member(ExceptionalKind::B, 3, Rational(1)));
    CHECK(!kfl::member(ExceptionalKind::A, 3, Rational(2)));
    CHECK(kfl::member(ExceptionalKind::C, 2, Rational(-1)));
    CHECK(kfl::member(ExceptionalKind::A, 3, Rational(0)));
    CHECK(!kfl::member(ExceptionalKind::B, 2, Rational(1, 2)));
}

TEST_CASE("member agrees with the rational roots of exceptional_set") {
    for (auto kind : {ExceptionalKind::A, ExceptionalKind::B, ExceptionalKind::C}) {
        for (std::size_t n = 1; n <= 5; ++n) {
            auto rs = kfl::exceptional_set(kind, n, kPrecision);
            for (const auto& r : rs.rational_roots) CHECK(kfl::member(kind, n, r));
        }
    }
}
