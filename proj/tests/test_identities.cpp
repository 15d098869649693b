#include <doctest.h>

#include <cstdint>

#include "kfl/identities.hpp"

using kfl::KflParams;
using kfl::Rational;
using kfl::SumKind;

namespace {

const KflParams kUnit{Rational(1), Rational(1), Rational(1)};

struct Rng {
    std::uint64_t s = 0xda3e39cb94b95bdbULL;
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
    Rational rational(bool nonzero = false) {
        for (;;) {
            long num = -20 + static_cast<long>(next() % 41);
            long den = 1 + static_cast<long>(next() % 20);
            Rational r(num, den);
            if (!nonzero || !r.is_zero()) return r;
        }
    }
};

} // namespace

TEST_CASE("catalan pinned values") {
    auto rep = kfl::check_catalan(kUnit, 3, 2);
    CHECK(rep.lhs == Rational(-4)); // 2*16 - 36
    CHECK(rep.rhs == Rational(-4));
    CHECK(rep.holds());

    CHECK(kfl::check_catalan(kUnit, 5, 0).lhs == Rational(0));
    CHECK(kfl::check_catalan(kUnit, 2, 1).lhs == Rational(-4)); // 2*6 - 16
    CHECK_THROWS_AS(kfl::check_catalan(kUnit, 2, 3), kfl::Error);
}

TEST_CASE("cassini pinned values") {
    auto rep = kfl::check_cassini(kUnit, 1);
    CHECK(rep.lhs == Rational(4)); // 2*4 - 4
    CHECK(rep.rhs == Rational(4));
    CHECK(rep.holds());

    // Geometric degenerate: a^2 = (k^2+4) b^2 kills the right side.
    KflParams geo{Rational(3, 2), Rational(5), Rational(2)};
    for (long n = 1; n <= 6; ++n) CHECK(kfl::check_cassini(geo, n).rhs == Rational(0));

    CHECK(kfl::check_cassini({Rational(2), Rational(1), Rational(0)}, 2).rhs == Rational(1));
    CHECK_THROWS_AS(kfl::check_cassini(kUnit, 0), kfl::Error);
}

TEST_CASE("cassini coincides with catalan at r=1") {
    Rng rng;
    for (int t = 0; t < 30; ++t) {
        KflParams p{rng.rational(), rng.rational(), rng.rational()};
        for (long n = 1; n <= 8; ++n) {
            auto cas = kfl::check_cassini(p, n);
            auto cat = kfl::check_catalan(p, n, 1);
            CHECK(cas.lhs == cat.lhs);
            CHECK(cas.rhs == cat.rhs);
        }
    }
}

TEST_CASE("docagne pinned values") {
    CHECK(kfl::check_docagne(kUnit, 4, 4).lhs == Rational(0));
    auto rep = kfl::check_docagne(kUnit, 3, 1);
    CHECK(rep.lhs == Rational(4)); // 6*4 - 10*2
    CHECK(rep.rhs == Rational(4));
    CHECK(kfl::check_docagne(kUnit, 4, 2).holds());
    CHECK_THROWS_AS(kfl::check_docagne(kUnit, 1, 3), kfl::Error);
}

TEST_CASE("sum identities pinned values") {
    auto all = kfl::check_sum(SumKind::All, kUnit, 4);
    CHECK(all.lhs == Rational(22)); // 2+4+6+10
    CHECK(all.holds());

    auto even = kfl::check_sum(SumKind::Even, kUnit, 2);
    CHECK(even.lhs == Rational(14)); // 4+10
    CHECK(even.holds());

    auto odd = kfl::check_sum(SumKind::Odd, kUnit, 2);
    CHECK(odd.lhs == Rational(8)); // 2+6
    CHECK(odd.holds());

    CHECK(kfl::check_sum(SumKind::Alternating, kUnit, 5).holds());

    KflParams zero_k{Rational(0), Rational(1), Rational(1)};
    CHECK_THROWS_AS(kfl::check_sum(SumKind::All, zero_k, 3), kfl::Error);
}

TEST_CASE("sum decomposition SumAll = SumEven + SumOdd") {
    Rng rng;
    for (int t = 0; t < 20; ++t) {
        KflParams p{rng.rational(true), rng.rational(), rng.rational()};
        long n = 2 + static_cast<long>(rng.next() % 6);
        auto all = kfl::check_sum(SumKind::All, p, 2 * n);
        auto even = kfl::check_sum(SumKind::Even, p, n);
        auto odd = kfl::check_sum(SumKind::Odd, p, n);
        CHECK(all.lhs == even.lhs + odd.lhs);
    }
}

TEST_CASE("binomial pinned values") {
    KflParams p{Rational(9, 5), Rational(-3), Rational(7, 2)};
    CHECK(kfl::check_binomial(p, 0).holds());
    CHECK(kfl::check_binomial(kUnit, 2).lhs == Rational(10));
    auto rep = kfl::check_binomial({Rational(2), Rational(1), Rational(1)}, 1);
    CHECK(rep.lhs == Rational(8));
    CHECK(rep.holds());
}

TEST_CASE("livio pinned values and preconditions") {
    auto rep = kfl::check_livio(kUnit, Rational(2), 2);
    CHECK(rep.lhs == Rational(2)); // 2/2 + 4/4
    CHECK(rep.holds());

    // p = -1 satisfies p^2 - pk - 1 = k != 0, so it is admissible for k != 0.
    CHECK(kfl::check_livio(kUnit, Rational(-1), 6).holds());

    CHECK_THROWS_AS(kfl::check_livio(kUnit, Rational(0), 2), kfl::Error);
    // p = 2 is a root of p^2 - (3/2)p - 1.
    KflParams half{Rational(3, 2), Rational(1), Rational(1)};
    CHECK_THROWS_AS(kfl::check_livio(half, Rational(2), 2), kfl::Error);
    try {
        kfl::check_livio(half, Rational(2), 2);
    } catch (const kfl::Error& e) {
        CHECK(e.code() == kfl::ErrorCode::BadP);
    }
}

TEST_CASE("geometric criterion") {
    CHECK(kfl::check_geometric({Rational(3, 2), Rational(5), Rational(2)}));
    CHECK(!kfl::check_geometric(kUnit));
    CHECK(kfl::check_geometric({Rational(4), Rational(0), Rational(0)}));
}

TEST_CASE("all identities have zero residual on random parameters") {
    Rng rng;
    for (int t = 0; t < 100; ++t) {
        KflParams p{rng.rational(true), rng.rational(), rng.rational()};
        long n = 1 + static_cast<long>(rng.next() % 12);
        long r = static_cast<long>(rng.next() % static_cast<std::uint64_t>(n + 1));
        long m = n + static_cast<long>(rng.next() % 8);
        CHECK(kfl::check_catalan(p, n, r).holds());
        CHECK(kfl::check_cassini(p, n).holds());
        CHECK(kfl::check_docagne(p, m, n).holds());
        CHECK(kfl::check_sum(SumKind::All, p, n).holds());
        CHECK(kfl::check_sum(SumKind::Even, p, n).holds());
        CHECK(kfl::check_sum(SumKind::Odd, p, n).holds());
        CHECK(kfl::check_sum(SumKind::Alternating, p, n).holds());
        CHECK(kfl::check_binomial(p, n).holds());
        Rational q = rng.rational(true);
        if (!(q * q - q * p.k - Rational(1)).is_zero())
            CHECK(kfl::check_livio(p, q, n).holds());
    }
}
