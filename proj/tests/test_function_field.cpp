#include "doctest.h"

#include "qwalk/expr.hpp"
#include "qwalk/families.hpp"
#include "support.hpp"

using namespace qwalk;
using namespace qwalk::testing;

namespace {

RatFunT rt(long p, long q = 1) { return RatFunT(frac(p, q)); }

// A random element of small degree: (a + b x + c x^2) + (d + e x) y over the rationals and t.
CurveFunction random_function(const FunctionField& ff, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> c(-4, 4);
    CurveFunction r = ff.constant(rt(c(rng)));
    CurveFunction x = ff.x(), y = ff.y(), t = ff.t();
    r = ff.add(r, ff.mul(ff.constant(rt(c(rng))), x));
    r = ff.add(r, ff.mul(ff.constant(rt(c(rng))), ff.mul(t, ff.mul(x, x))));
    r = ff.add(r, ff.mul(ff.constant(rt(c(rng))), y));
    r = ff.add(r, ff.mul(ff.constant(rt(c(rng))), ff.mul(x, y)));
    if (c(rng) > 0)
        r = ff.div(r, ff.add(x, ff.constant(rt(1 + (rng() % 3)))));
    return r;
}

} // namespace

TEST_CASE("iota1 fixes x and iota2 fixes y")
{
    std::mt19937_64 rng(41);
    for (int n = 0; n < 20; ++n) {
        Kernel k = build_kernel(random_genus_one(rng));
        FunctionField ff(k);
        CHECK(ff.iota1(ff.x()) == ff.x());
        CHECK(ff.iota2(ff.y()) == ff.y());
        CHECK(ff.iota1(ff.t()) == ff.t());
        CHECK(ff.iota2(ff.t()) == ff.t());
    }
}

TEST_CASE("y and iota1(y) are the two roots of the kernel in y")
{
    std::mt19937_64 rng(42);
    for (int n = 0; n < 20; ++n) {
        Kernel k = build_kernel(random_genus_one(rng));
        FunctionField ff(k);
        CurveFunction y = ff.y(), iy = ff.iota1(y);
        RatFunX A(k.A), B(k.B), C(k.C);
        CHECK(ff.add(y, iy) == ff.from_x(-B / A));
        CHECK(ff.mul(y, iy) == ff.from_x(C / A));
    }
}

TEST_CASE("y iota1(y) = d-1-1 / (d01 x) for weighted IIC.2 on the condition")
{
    std::mt19937_64 rng(43);
    for (int n = 0; n < 5; ++n) {
        WeightedModel m = sample_family(Family::WIIC2, true, rng);
        Kernel k = build_kernel(m);
        FunctionField ff(k);
        RatFunX want = RatFunX(RatFunT(m.d(-1, -1) / m.d(0, 1))) / RatFunX::var();
        CHECK(ff.mul(ff.y(), ff.iota1(ff.y())) == ff.from_x(want));
    }
}

TEST_CASE("the involutions square to the identity on random functions")
{
    std::mt19937_64 rng(44);
    for (const auto& names : decoupled_sets()) {
        Kernel k = build_kernel(steps(names));
        FunctionField ff(k);
        CurveFunction f = random_function(ff, rng);
        CHECK(ff.iota1(ff.iota1(f)) == f);
        CHECK(ff.iota2(ff.iota2(f)) == f);
        CHECK(ff.tau_inv(ff.tau(ff.x())) == ff.x());
        CHECK(ff.tau(ff.tau_inv(ff.y())) == ff.y());
    }
}

TEST_CASE("field operations on the curve")
{
    std::mt19937_64 rng(45);
    Kernel k = build_kernel(steps("N NE W SW S 0"));
    FunctionField ff(k);
    for (int n = 0; n < 20; ++n) {
        CurveFunction a = random_function(ff, rng), b = random_function(ff, rng), c = random_function(ff, rng);
        CHECK(ff.mul(a, ff.add(b, c)) == ff.add(ff.mul(a, b), ff.mul(a, c)));
        CHECK(ff.mul(ff.mul(a, b), c) == ff.mul(a, ff.mul(b, c)));
        if (!a.is_zero())
            CHECK(ff.mul(a, ff.inv(a)) == ff.constant(RatFunT(1)));
        CHECK(ff.sub(a, a).is_zero());
        CHECK(ff.pow(a, 3) == ff.mul(a, ff.mul(a, a)));
    }
    // the kernel vanishes on the curve
    CurveFunction x = ff.x(), y = ff.y();
    CurveFunction K = ff.add(ff.add(ff.mul(ff.from_x(RatFunX(k.A)), ff.mul(y, y)), ff.mul(ff.from_x(RatFunX(k.B)), y)),
                             ff.from_x(RatFunX(k.C)));
    CHECK(K.is_zero());
}

TEST_CASE("b is odd under iota1 and squares to the discriminant")
{
    std::mt19937_64 rng(46);
    for (int n = 0; n < 10; ++n) {
        Kernel k = build_kernel(random_genus_one(rng));
        FunctionField ff(k);
        CurveFunction b = build_b(ff);
        CHECK(ff.iota1(b) == ff.neg(b));
        RatFunX A(k.A), B(k.B), C(k.C), x = RatFunX::var();
        CHECK(ff.mul(b, b) == ff.from_x(x * x * (B * B - RatFunX(4) * A * C) / (A * A)));
    }
}

TEST_CASE("decoupling certificates for weighted IIC.2")
{
    std::mt19937_64 rng(47);
    for (int n = 0; n < 5; ++n) {
        WeightedModel on = sample_family(Family::WIIC2, true, rng);
        Kernel kon = build_kernel(on);
        FunctionField ff(kon);
        CurveFunction g = ff.div(ff.constant(RatFunT(-on.d(-1, -1) / on.d(0, 1))), ff.y());
        CHECK(verify_certificate(ff, g));
        auto [f, gg] = certificate_to_pair(ff, g);
        CHECK(gg == g);
        CHECK(verify_decoupling(ff, f, gg));
        CHECK(ff.iota1(f) == f);
        CHECK(ff.iota2(gg) == gg);
        CHECK_FALSE(verify_certificate(ff, ff.constant(RatFunT(0))));
        CHECK_FALSE(verify_certificate(ff, ff.constant(rt(3))));

        WeightedModel off = sample_family(Family::WIIC2, false, rng);
        Kernel koff = build_kernel(off);
        FunctionField fo(koff);
        CurveFunction go = fo.div(fo.constant(RatFunT(-off.d(-1, -1) / off.d(0, 1))), fo.y());
        CHECK_FALSE(verify_certificate(fo, go));
        CHECK_THROWS_AS(certificate_to_pair(fo, go), CertificateMembershipError);
    }
}

TEST_CASE("the reciprocal constant is a certificate only when d01 = d-1-1")
{
    std::mt19937_64 rng(147);
    int differ = 0;
    for (int n = 0; n < 10; ++n) {
        WeightedModel m = sample_family(Family::WIIC2, true, rng);
        Kernel k = build_kernel(m);
        FunctionField ff(k);
        CurveFunction g = ff.div(ff.constant(RatFunT(-m.d(0, 1) / m.d(-1, -1))), ff.y());
        CHECK(verify_certificate(ff, g) == (m.d(0, 1) == m.d(-1, -1)));
        differ += m.d(0, 1) != m.d(-1, -1);
    }
    CHECK(differ > 0);
    Kernel ones = build_kernel(steps("N NE W SW S 0"));
    FunctionField ff(ones);
    CHECK(verify_certificate(ff, parse_function(ff, "-1/y")));
}

TEST_CASE("xy does not decouple trivially")
{
    std::mt19937_64 rng(48);
    for (int n = 0; n < 5; ++n) {
        Kernel k = build_kernel(random_genus_one(rng));
        FunctionField ff(k);
        CurveFunction xy = ff.mul(ff.x(), ff.y());
        CHECK_FALSE(verify_decoupling(ff, xy, ff.constant(RatFunT(0))));
        CHECK_FALSE(verify_decoupling(ff, ff.x(), ff.y()));
        CHECK_FALSE(verify_decoupling(ff, random_function(ff, rng), random_function(ff, rng)));
    }
}

TEST_CASE("tau on functions matches tau on points")
{
    std::mt19937_64 rng(49);
    int compared = 0;
    for (const auto& names : decoupled_sets()) {
        Kernel k = build_kernel(steps(names));
        FunctionField ff(k);
        BasePointProfile bp = base_points(k);
        for (int j = 0; j < 2; ++j) {
            CurveFunction f = random_function(ff, rng);
            CurveFunction tf = ff.tau(f);
            std::vector<CurvePoint> pts(bp.points.begin(), bp.points.end());
            for (const auto& p : bp.points)
                pts.push_back(tau_point(k, p));
            for (const auto& p : pts) {
                auto lhs = ff.evaluate(tf, p);
                auto rhs = ff.evaluate(f, tau_point(k, p));
                if (lhs && rhs) {
                    CHECK(*lhs == *rhs);
                    ++compared;
                }
            }
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("the generic point follows the involutions")
{
    std::mt19937_64 rng(50);
    Kernel k = build_kernel(random_genus_one(rng));
    FunctionField ff(k);
    auto g1 = ff.iota1_generic({ff.x(), ff.y()});
    CHECK(g1.first == ff.x());
    CHECK(g1.second == ff.iota1(ff.y()));
    auto g2 = ff.iota2_generic({ff.x(), ff.y()});
    CHECK(g2.first == ff.iota2(ff.x()));
    CHECK(g2.second == ff.y());
}

TEST_CASE("expression parser")
{
    Kernel k = build_kernel(steps("N NE W SW S 0"));
    FunctionField ff(k);
    CurveFunction x = ff.x(), y = ff.y(), t = ff.t();
    CHECK(parse_function(ff, "x*y") == ff.mul(x, y));
    CHECK(parse_function(ff, "-1/y") == ff.neg(ff.inv(y)));
    CHECK(parse_function(ff, "2/3*x^2 - t*(y + 1)") ==
          ff.sub(ff.mul(ff.constant(rt(2, 3)), ff.mul(x, x)), ff.mul(t, ff.add(y, ff.constant(rt(1))))));
    CHECK(parse_function(ff, "x^-2") == ff.inv(ff.mul(x, x)));
    CHECK(parse_function(ff, "\xE2\x88\x92" "1/y") == parse_function(ff, "-1/y"));
    CHECK(parse_function(ff, "x \xC2\xB7 y") == ff.mul(x, y));
    try {
        parse_function(ff, "x + * y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_function(ff, "(x + y"), ParseError);
    CHECK_THROWS_AS(parse_function(ff, "z"), ParseError);
    CHECK_THROWS_AS(parse_function(ff, "1/0"), ParseError);
}
