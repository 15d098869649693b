#include "kfl/polynomial.hpp"

#include <algorithm>
#include <set>

namespace kfl {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::constant(mpz_class v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::variable() { return IntPoly({0, 1}); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    if (s == 0) return IntPoly();
    std::vector<mpz_class> r = c_;
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_mul() const {
    if (is_zero()) return IntPoly();
    std::vector<mpz_class> r;
    r.reserve(c_.size() + 1);
    r.emplace_back(0);
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

mpz_class IntPoly::eval_int(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class content(0);
    for (const auto& v : c_) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (c_.back() < 0) content = -content;
    std::vector<mpz_class> r = c_;
    for (auto& v : r) v /= content;
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& ci = c_[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        mpz_class mag = ::abs(ci);
        if (out.empty())
            out += (ci < 0) ? "-" : "";
        else
            out += (ci < 0) ? " - " : " + ";
        bool show_coeff = (mag != 1 || i == 0);
        if (show_coeff) out += mag.get_str();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += "T";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rational-coefficient helpers (internal): Sturm chains and exact division.

namespace {

struct RatPoly {
    std::vector<Rational> c; // index = degree

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    static RatPoly from(const IntPoly& p) {
        RatPoly r;
        r.c.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) r.c.emplace_back(v);
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

// Remainder of u by v (v nonzero).
RatPoly rat_rem(RatPoly u, const RatPoly& v) {
    while (!u.is_zero() && u.degree() >= v.degree()) {
        Rational factor = u.c.back() / v.c.back();
        int shift = u.degree() - v.degree();
        for (std::size_t i = 0; i < v.c.size(); ++i)
            u.c[i + static_cast<std::size_t>(shift)] -= factor * v.c[i];
        u.c.pop_back();
        u.trim();
    }
    return u;
}

// Exact quotient u / v; remainder must vanish.
RatPoly rat_div_exact(RatPoly u, const RatPoly& v) {
    RatPoly q;
    if (u.degree() < v.degree()) {
        if (!u.is_zero())
            throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
        return q;
    }
    q.c.assign(static_cast<std::size_t>(u.degree() - v.degree()) + 1, Rational(0));
    while (!u.is_zero() && u.degree() >= v.degree()) {
        Rational factor = u.c.back() / v.c.back();
        int shift = u.degree() - v.degree();
        q.c[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < v.c.size(); ++i)
            u.c[i + static_cast<std::size_t>(shift)] -= factor * v.c[i];
        u.c.pop_back();
        u.trim();
    }
    if (!u.is_zero())
        throw Error(ErrorCode::InternalInconsistency, "inexact polynomial division");
    q.trim();
    return q;
}

void make_monic(RatPoly& p) {
    if (p.is_zero()) return;
    Rational lead = p.c.back();
    for (auto& v : p.c) v /= lead;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

IntPoly to_int_poly(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    mpz_class lcm(1);
    for (const auto& v : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<mpz_class> coeffs;
    coeffs.reserve(p.c.size());
    for (const auto& v : p.c) coeffs.push_back(v.numerator() * (lcm / v.denominator()));
    return IntPoly(std::move(coeffs)).primitive_part();
}

// Squarefree part p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p) {
    RatPoly rp = RatPoly::from(p);
    RatPoly g = rat_gcd(rp, RatPoly::from(p.derivative()));
    if (g.degree() <= 0) return p.primitive_part();
    return to_int_poly(rat_div_exact(rp, g));
}

std::vector<mpz_class> divisors_of(mpz_class n) {
    // n > 0; plain trial division (constants in this codebase stay small).
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d(2); d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : factors) {
        std::size_t old = divs.size();
        mpz_class pe(1);
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

// Rational roots of a squarefree poly; returns roots and the deflated poly
// (primitive, no rational roots remaining).
std::pair<std::vector<Rational>, IntPoly> extract_rational_roots(IntPoly sf) {
    std::vector<Rational> roots;
    RatPoly cur = RatPoly::from(sf);
    // Zero root first.
    if (!cur.is_zero() && cur.c.front().is_zero()) {
        roots.emplace_back(0);
        cur.c.erase(cur.c.begin());
    }
    if (cur.degree() >= 1) {
        IntPoly ip = to_int_poly(cur);
        auto nums = divisors_of(::abs(ip.coeff(0)));
        auto dens = divisors_of(::abs(ip.leading()));
        std::set<Rational> candidates;
        for (const auto& p : nums)
            for (const auto& q : dens) {
                candidates.insert(Rational(p, q));
                candidates.insert(Rational(-p, q));
            }
        for (const auto& cand : candidates) {
            if (cur.degree() < 1) break;
            if (cur.eval(cand).is_zero()) {
                roots.push_back(cand);
                RatPoly lin;
                lin.c = {-cand, Rational(1)};
                cur = rat_div_exact(cur, lin);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return {std::move(roots), to_int_poly(cur)};
}

std::vector<RatPoly> sturm_chain(const IntPoly& sf) {
    std::vector<RatPoly> chain;
    chain.push_back(RatPoly::from(sf));
    RatPoly d = RatPoly::from(sf.derivative());
    if (!d.is_zero()) chain.push_back(std::move(d));
    while (chain.back().degree() >= 1) {
        RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        for (auto& v : r.c) v = -v;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Rational cauchy_root_bound(const IntPoly& p) {
    Rational lead = Rational(p.leading()).abs();
    Rational maxrest(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational c = Rational(p.coeff(static_cast<std::size_t>(i))).abs();
        if (c > maxrest) maxrest = c;
    }
    return Rational(1) + maxrest / lead;
}

// Bisect an isolating interval (single simple root, opposite endpoint signs)
// until its width is at most `width`.
void refine_interval(RootInterval& iv, const Rational& width) {
    int lo_sign = iv.source.eval(iv.lo).sign();
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / Rational(2);
        int ms = iv.source.eval(mid).sign();
        if (ms == lo_sign)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

// Isolate all real roots of a squarefree poly with no rational roots.
std::vector<RootInterval> isolate_irrational(const IntPoly& sf, const Rational& precision) {
    std::vector<RootInterval> out;
    if (sf.degree() < 1) return out;
    auto chain = sturm_chain(sf);
    Rational bound = cauchy_root_bound(sf);
    struct Seg {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Seg> stack;
    stack.push_back({-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int nroots = s.vlo - s.vhi;
        if (nroots <= 0) continue;
        if (nroots == 1) {
            RootInterval iv{s.lo, s.hi, sf};
            // Endpoints are rational, all remaining roots irrational, so the
            // endpoint values are nonzero and of opposite sign.
            refine_interval(iv, precision);
            out.push_back(std::move(iv));
            continue;
        }
        Rational mid = (s.lo + s.hi) / Rational(2);
        int vm = sign_variations(chain, mid);
        stack.push_back({s.lo, mid, s.vlo, vm});
        stack.push_back({mid, s.hi, vm, s.vhi});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

// Shrink intervals until they are pairwise disjoint and exclude every listed
// rational point. All roots involved are distinct reals, so this terminates.
void separate(std::vector<RootInterval>& ivs, const std::vector<Rational>& points) {
    auto halve = [](RootInterval& iv) {
        refine_interval(iv, (iv.hi - iv.lo) / Rational(2));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(ivs.begin(), ivs.end(),
                  [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
        for (auto& iv : ivs) {
            for (const auto& pt : points) {
                while (iv.lo < pt && pt < iv.hi) {
                    halve(iv);
                    changed = true;
                }
            }
        }
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
            while (ivs[i].hi > ivs[i + 1].lo) {
                halve(ivs[i]);
                halve(ivs[i + 1]);
                changed = true;
            }
        }
    }
}

RootSet real_roots_squarefree(const IntPoly& sf, const Rational& precision) {
    RootSet rs;
    auto [rational, remaining] = extract_rational_roots(sf);
    rs.rational_roots = std::move(rational);
    rs.irrational_roots = isolate_irrational(remaining, precision);
    separate(rs.irrational_roots, rs.rational_roots);
    return rs;
}

} // namespace

// ---------------------------------------------------------------------------
// Public operations

std::pair<IntPoly, IntPoly> fg_pair(std::size_t n) {
    IntPoly f_prev;                   // f_0 = 0
    IntPoly g_prev = IntPoly({2});    // g_0 = 2
    IntPoly f_cur = IntPoly({1});     // f_1 = 1
    IntPoly g_cur = IntPoly::variable(); // g_1 = T
    if (n == 0) return {f_prev, g_prev};
    for (std::size_t i = 2; i <= n; ++i) {
        IntPoly f_next = f_cur.shift_mul() + f_prev;
        IntPoly g_next = g_cur.shift_mul() + g_prev;
        f_prev = std::move(f_cur);
        g_prev = std::move(g_cur);
        f_cur = std::move(f_next);
        g_cur = std::move(g_next);
    }
    return {f_cur, g_cur};
}

FgpqPolys fgpq(std::size_t n) {
    auto [fn, gn] = fg_pair(n);
    auto [fn1, gn1] = fg_pair(n + 1);
    return FgpqPolys{fn1 - fn, gn1 - gn, fn1 + fn, gn1 + gn};
}

RootSet real_roots(const IntPoly& p, const Rational& precision) {
    if (p.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
    if (precision.sign() <= 0)
        throw Error(ErrorCode::BadIndex, "precision must be positive");
    RootSet rs = real_roots_squarefree(squarefree_part(p), precision);
    rs.source_polys = {p};
    return rs;
}

std::pair<IntPoly, IntPoly> exceptional_polys(ExceptionalKind kind, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::BadIndex, "exceptional sets are defined for n >= 1");
    FgpqPolys fam = fgpq(n);
    IntPoly one({1});
    IntPoly t_minus_2({-2, 1});
    IntPoly t_plus_2({2, 1});
    switch (kind) {
    case ExceptionalKind::A: return {fam.f + one, fam.g + t_minus_2};
    case ExceptionalKind::B: return {fam.f - one, fam.g - t_minus_2};
    case ExceptionalKind::C: return {fam.p - one, fam.q - t_plus_2};
    }
    throw Error(ErrorCode::BadShape, "unknown exceptional-set kind");
}

RootSet exceptional_set(ExceptionalKind kind, std::size_t n, const Rational& precision) {
    if (precision.sign() <= 0)
        throw Error(ErrorCode::BadIndex, "precision must be positive");
    auto [p1, p2] = exceptional_polys(kind, n);
    IntPoly sf1 = squarefree_part(p1);
    IntPoly sf2 = squarefree_part(p2);
    // Shared roots are counted once: strip gcd(sf1, sf2) from the second poly.
    RatPoly g = rat_gcd(RatPoly::from(sf1), RatPoly::from(sf2));
    IntPoly sf2_only =
        g.degree() >= 1 ? to_int_poly(rat_div_exact(RatPoly::from(sf2), g)) : sf2;

    RootSet r1 = real_roots_squarefree(sf1, precision);
    RootSet r2 = real_roots_squarefree(sf2_only, precision);

    RootSet merged;
    merged.source_polys = {p1, p2};
    merged.rational_roots = r1.rational_roots;
    for (const auto& r : r2.rational_roots)
        if (std::find(merged.rational_roots.begin(), merged.rational_roots.end(), r) ==
            merged.rational_roots.end())
            merged.rational_roots.push_back(r);
    std::sort(merged.rational_roots.begin(), merged.rational_roots.end());
    merged.irrational_roots = r1.irrational_roots;
    merged.irrational_roots.insert(merged.irrational_roots.end(), r2.irrational_roots.begin(),
                                   r2.irrational_roots.end());
    std::sort(merged.irrational_roots.begin(), merged.irrational_roots.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    separate(merged.irrational_roots, merged.rational_roots);
    return merged;
}

bool member(ExceptionalKind kind, std::size_t n, const Rational& k) {
    auto [p1, p2] = exceptional_polys(kind, n);
    return p1.eval(k).is_zero() || p2.eval(k).is_zero();
}

} // namespace kfl
