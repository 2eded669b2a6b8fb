#include "qwalk/function_field.hpp"

#include <map>

namespace qwalk {

namespace {

RatFunX as_x(const PolyX& p) { return RatFunX(p); }

} // namespace

FunctionField::FunctionField(const Kernel& k) : k_(&k)
{
    if (k.A.is_zero() || k.Ap.is_zero())
        throw FunctionFieldError("leading kernel coefficient vanishes; y (or x) is not quadratic");
    A_ = as_x(k.A);
    B_over_A_ = as_x(k.B) / A_;
    C_over_A_ = as_x(k.C) / A_;
}

CurveFunction FunctionField::add(const CurveFunction& a, const CurveFunction& b) const
{
    return {a.u + b.u, a.v + b.v};
}

CurveFunction FunctionField::sub(const CurveFunction& a, const CurveFunction& b) const
{
    return {a.u - b.u, a.v - b.v};
}

CurveFunction FunctionField::neg(const CurveFunction& a) const { return {-a.u, -a.v}; }

CurveFunction FunctionField::mul(const CurveFunction& a, const CurveFunction& b) const
{
    if (a.v.is_zero())
        return {a.u * b.u, a.u * b.v};
    if (b.v.is_zero())
        return {a.u * b.u, a.v * b.u};
    RatFunX vv = a.v * b.v;
    // y^2 = -(B/A) y - C/A
    return {a.u * b.u - vv * C_over_A_, a.u * b.v + a.v * b.u - vv * B_over_A_};
}

CurveFunction FunctionField::inv(const CurveFunction& a) const
{
    if (a.is_zero())
        throw FunctionFieldError("inverse of zero function");
    if (a.v.is_zero())
        return {a.u.inverse(), RatFunX()};
    RatFunX cu = a.u - a.v * B_over_A_;
    RatFunX norm = a.u * cu + a.v * a.v * C_over_A_;
    RatFunX ni = norm.inverse();
    return {cu * ni, -(a.v * ni)};
}

CurveFunction FunctionField::div(const CurveFunction& a, const CurveFunction& b) const { return mul(a, inv(b)); }

CurveFunction FunctionField::pow(const CurveFunction& a, int e) const
{
    if (e < 0)
        return pow(inv(a), -e);
    CurveFunction r = constant(RatFunT(1)), b = a;
    while (e) {
        if (e & 1)
            r = mul(r, b);
        e >>= 1;
        if (e)
            b = mul(b, b);
    }
    return r;
}

CurveFunction FunctionField::eval_poly(const PolyX& p, const CurveFunction& f) const
{
    CurveFunction r;
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        r = add(mul(r, f), constant(*it));
    return r;
}

CurveFunction FunctionField::eval_ratfun(const RatFunX& r, const CurveFunction& f) const
{
    CurveFunction n = eval_poly(r.num(), f);
    if (r.den().degree() == 0)
        return mul(n, constant(RatFunT(1) / r.den().coeff(0)));
    return div(n, eval_poly(r.den(), f));
}

CurveFunction FunctionField::iota1(const CurveFunction& f) const
{
    return {f.u - f.v * B_over_A_, -f.v};
}

CurveFunction FunctionField::iota2(const CurveFunction& f) const
{
    CurveFunction y_ = y();
    CurveFunction xp = sub(neg(x()), div(eval_poly(k_->Bp, y_), eval_poly(k_->Ap, y_)));
    return add(eval_ratfun(f.u, xp), mul(eval_ratfun(f.v, xp), y_));
}

CurveFunction FunctionField::tau(const CurveFunction& f) const { return iota1(iota2(f)); }
CurveFunction FunctionField::tau_inv(const CurveFunction& f) const { return iota2(iota1(f)); }

std::pair<CurveFunction, CurveFunction>
FunctionField::iota1_generic(const std::pair<CurveFunction, CurveFunction>& g) const
{
    const auto& [X, Y] = g;
    CurveFunction yp = sub(neg(div(eval_poly(k_->B, X), eval_poly(k_->A, X))), Y);
    return {X, yp};
}

std::pair<CurveFunction, CurveFunction>
FunctionField::iota2_generic(const std::pair<CurveFunction, CurveFunction>& g) const
{
    const auto& [X, Y] = g;
    CurveFunction xp = sub(neg(div(eval_poly(k_->Bp, Y), eval_poly(k_->Ap, Y))), X);
    return {xp, Y};
}

std::optional<QRatFunT> FunctionField::evaluate(const CurveFunction& f, const CurvePoint& p) const
{
    if (p.x.is_infinite() || p.y.is_infinite())
        return std::nullopt;
    const QRatFunT& xv = p.x.value();
    auto ev_poly = [&](const PolyX& q) {
        QRatFunT r;
        const auto& cs = q.coeffs();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it)
            r = r * xv + lift(*it);
        return r;
    };
    auto ev = [&](const RatFunX& r) -> std::optional<QRatFunT> {
        QRatFunT d = ev_poly(r.den());
        if (d.is_zero())
            return std::nullopt;
        return ev_poly(r.num()) / d;
    };
    auto u = ev(f.u), v = ev(f.v);
    if (!u || !v)
        return std::nullopt;
    return *u + *v * p.y.value();
}

std::string FunctionField::str(const CurveFunction& f) const
{
    if (f.v.is_zero())
        return f.u.str("x");
    std::string s = "(" + f.v.str("x") + ")*y";
    if (!f.u.is_zero())
        s = "(" + f.u.str("x") + ") + " + s;
    return s;
}

std::optional<int> tau_order(const Kernel& k, int max_n, bool screen)
{
    if (screen && tau_order_exceeds(k, max_n))
        return std::nullopt;
    FunctionField ff(k);
    using Pt = std::pair<CurveFunction, CurveFunction>;
    std::map<int, Pt> it;
    it.emplace(0, Pt{ff.x(), ff.y()});
    auto at = [&](auto&& self, int n) -> const Pt& {
        auto f = it.find(n);
        if (f != it.end())
            return f->second;
        const Pt& prev = self(self, n > 0 ? n - 1 : n + 1);
        Pt next = n > 0 ? ff.iota2_generic(ff.iota1_generic(prev)) : ff.iota1_generic(ff.iota2_generic(prev));
        return it.emplace(n, std::move(next)).first->second;
    };
    for (int n = 1; n <= max_n; ++n) {
        int a = (n + 1) / 2, b = n - a;
        const Pt& fwd = at(at, a);
        const Pt& bwd = at(at, -b);
        if (fwd.first == bwd.first && fwd.second == bwd.second)
            return n;
    }
    return std::nullopt;
}

CurveFunction build_b(const FunctionField& ff)
{
    // x (iota1(y) - y) = x (-2y - B/A)
    CurveFunction x = ff.x();
    CurveFunction diff = ff.sub(ff.iota1(ff.y()), ff.y());
    return ff.mul(x, diff);
}

bool verify_certificate(const FunctionField& ff, const CurveFunction& g)
{
    return build_b(ff) == ff.sub(ff.tau(g), g);
}

bool verify_decoupling(const FunctionField& ff, const CurveFunction& f, const CurveFunction& g)
{
    if (ff.iota1(f) != f || ff.iota2(g) != g)
        return false;
    CurveFunction xy = ff.mul(ff.x(), ff.y());
    return ff.sub(ff.sub(xy, f), g).is_zero();
}

std::pair<CurveFunction, CurveFunction> certificate_to_pair(const FunctionField& ff, const CurveFunction& g)
{
    CurveFunction f = ff.sub(ff.mul(ff.x(), ff.y()), g);
    if (ff.iota1(f) != f)
        throw CertificateMembershipError("xy - g is not fixed by iota1");
    if (ff.iota2(g) != g)
        throw CertificateMembershipError("g is not fixed by iota2");
    return {f, g};
}

} // namespace qwalk
