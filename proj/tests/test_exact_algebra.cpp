#include "doctest.h"

#include "qwalk/modarith.hpp"
#include "qwalk/poly.hpp"
#include "qwalk/quartic.hpp"

#include <random>

using namespace qwalk;

namespace {

PolyT P(std::initializer_list<long> cs)
{
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return PolyT(v);
}

const PolyT T = PolyT::var();

PolyT rand_poly(std::mt19937_64& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> c(-6, 6), den(1, 4);
    std::vector<Rational> cs;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        cs.push_back(frac(c(rng), den(rng)));
    return PolyT(cs);
}

PolyT rand_nonzero(std::mt19937_64& rng, int max_deg)
{
    for (;;) {
        PolyT p = rand_poly(rng, max_deg);
        if (!p.is_zero())
            return p;
    }
}

RatFunT rand_ratfun(std::mt19937_64& rng)
{
    return RatFunT(rand_poly(rng, 2), rand_nonzero(rng, 2));
}

QPolyT lift_poly(const PolyT& p)
{
    std::vector<QuadNumber> cs(p.coeffs().begin(), p.coeffs().end());
    return QPolyT(cs);
}

} // namespace

TEST_CASE("rational parsing is exact and canonical")
{
    CHECK(parse_rational("6/4") == frac(3, 2));
    CHECK(parse_rational("-0.125") == frac(-1, 8));
    CHECK(parse_rational("3e-2") == frac(3, 100));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK(parse_rational("0/5").get_den() == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), AlgebraError);
    CHECK_THROWS_AS(parse_rational("abc"), AlgebraError);
    CHECK_THROWS_AS(parse_rational("1/x"), AlgebraError);
    Rational r = frac(10, -4);
    CHECK(r.get_num() == -5);
    CHECK(r.get_den() == 2);
}

TEST_CASE("rational square roots")
{
    CHECK(is_rational_square(frac(9, 4)));
    CHECK(rational_sqrt(frac(9, 4)) == frac(3, 2));
    CHECK_FALSE(is_rational_square(Rational(2)));
    CHECK_FALSE(is_rational_square(Rational(-4)));
    CHECK(is_rational_square(Rational(0)));
}

TEST_CASE("quadratic field arithmetic")
{
    QuadNumber s(0, 1, 2);  // sqrt 2
    CHECK(s * s == QuadNumber(Rational(2)));
    QuadNumber x(1, 1, 2);
    QuadNumber inv = QuadNumber(Rational(1)) / x;
    CHECK(inv * x == QuadNumber(Rational(1)));
    CHECK((x - x).is_rational());
    CHECK_THROWS_AS(QuadNumber(0, 1, 2) + QuadNumber(0, 1, 3), AlgebraError);
}

TEST_CASE("poly_gcd examples")
{
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    PolyT p = P({2, 4, 6});
    CHECK(gcd(p, PolyT()) == p.monic());
    CHECK(gcd(PolyT(), PolyT()).is_zero());
    CHECK(gcd(P({1, 0, 1}), P({2, 1})) == PolyT(1));
}

TEST_CASE("poly_gcd is a monic common divisor, and the modular gcd matches Euclid")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        PolyT c = rand_poly(rng, 3);
        PolyT a = rand_poly(rng, 4) * c, b = rand_poly(rng, 4) * c;
        PolyT g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.lc() == 1);
        CHECK(PolyT::divmod(a, g).second.is_zero());
        CHECK(PolyT::divmod(b, g).second.is_zero());
        CHECK(g == gcd_euclid(a, b));
        if (!c.is_zero())
            CHECK(PolyT::divmod(g, c).second.is_zero());
    }
}

TEST_CASE("modular gcd over a quadratic field matches Euclid")
{
    std::mt19937_64 rng(12);
    QuadNumber s(0, 1, 3);
    for (int k = 0; k < 40; ++k) {
        QPolyT c = lift_poly(rand_nonzero(rng, 2)) + QPolyT(s) * lift_poly(rand_poly(rng, 1));
        QPolyT a = c * (lift_poly(rand_nonzero(rng, 3)) + QPolyT::var() * QPolyT(s));
        QPolyT b = c * lift_poly(rand_nonzero(rng, 3));
        CHECK(gcd(a, b) == gcd_euclid(a, b));
    }
}

TEST_CASE("squarefree_part examples")
{
    PolyT a = P({-1, 1}), b = P({3, 1});
    CHECK(squarefree_part(a * a * b) == (a * b).monic());
    CHECK(squarefree_part(PolyT::monomial(Rational(1), 5)) == T);
    PolyT sq = P({-2, 0, 3});
    CHECK(squarefree_part(sq) == sq.monic());
    CHECK_THROWS_AS(squarefree_part(PolyT()), AlgebraError);
}

TEST_CASE("squarefree decomposition recovers planted multiplicities")
{
    PolyT a = P({1, 1}), b = P({-2, 0, 1}), c = P({5, 1});
    auto layers = squarefree_decomposition(a * b * b * c * c * c);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == a.monic());
    CHECK(layers[1] == b.monic());
    CHECK(layers[2] == c.monic());
}

TEST_CASE("valuation_at_zero examples")
{
    CHECK(valuation_at_zero(RatFunT(PolyT::monomial(Rational(1), 3), P({-1, 1}))) == 3);
    CHECK(valuation_at_zero(RatFunT(PolyT(1), PolyT::monomial(Rational(1), 2))) == -2);
    PolyT num = PolyT::monomial(Rational(2), 7) + PolyT::monomial(Rational(1), 8);
    CHECK(valuation_at_zero(RatFunT(num, P({1, 1}))) == 7);
    CHECK_THROWS_AS(valuation_at_zero(RatFunT()), AlgebraError);
}

TEST_CASE("valuation is additive")
{
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        RatFunT f = rand_ratfun(rng), g = rand_ratfun(rng);
        if (f.is_zero() || g.is_zero())
            continue;
        f = f * RatFunT(PolyT::monomial(Rational(1), k % 3));
        CHECK(valuation_at_zero(f * g) == valuation_at_zero(f) + valuation_at_zero(g));
    }
}

TEST_CASE("rational functions satisfy the field axioms")
{
    std::mt19937_64 rng(14);
    for (int k = 0; k < 1000; ++k) {
        RatFunT a = rand_ratfun(rng), b = rand_ratfun(rng), c = rand_ratfun(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == RatFunT(1));
        CHECK(a - a == RatFunT());
        CHECK(a.den().lc() == 1);
        CHECK(gcd(a.num(), a.den()).degree() == 0);
    }
}

TEST_CASE("quartic invariants examples")
{
    BinaryQuartic<Rational> q;
    q.coeff = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};
    auto inv = quartic_invariants(q);
    CHECK(inv.g2 == 12);
    CHECK(inv.g3 == 0);

    // (x0 - x1)^2 x0 x1 = x0^3 x1 - 2 x0^2 x1^2 + x0 x1^3
    BinaryQuartic<Rational> r;
    r.coeff = {Rational(0), Rational(1), Rational(-2), Rational(1), Rational(0)};
    CHECK(quartic_invariants(r).disc == 0);
}

TEST_CASE("4I^3 - J^2 vanishes exactly for repeated roots")
{
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<long> root(-5, 5);
    std::bernoulli_distribution repeat(0.5);
    for (int k = 0; k < 50; ++k) {
        long r[4];
        for (auto& v : r)
            v = root(rng);
        if (repeat(rng))
            r[3] = r[0];
        PolyT f(1);
        for (long v : r)
            f = f * P({-v, 1});
        BinaryQuartic<Rational> q;
        for (int i = 0; i <= 4; ++i)
            q.coeff[i] = f.coeff(i);
        bool repeated = gcd(f, f.derivative()).degree() > 0;
        CHECK((quartic_invariants(q).disc == 0) == repeated);
    }
}

TEST_CASE("modular helpers")
{
    using namespace modp;
    u64 p = prime_at(0);
    CHECK(p < (u64(1) << 62));
    CHECK(prime_at(1) < p);
    CHECK(mulmod(invmod(12345, p), 12345, p) == 1);
    auto s = sqrtmod(mulmod(777, 777, p), p);
    REQUIRE(s);
    CHECK(mulmod(*s, *s, p) == mulmod(777, 777, p));
    CHECK(reduce(frac(1, 2), p) == invmod(2, p));
}
