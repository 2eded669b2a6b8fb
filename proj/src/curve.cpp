#include "qwalk/curve.hpp"

#include "qwalk/modarith.hpp"
#include "qwalk/quartic.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace qwalk {

namespace {

FiberQuadratic fiber(const Kernel& k, const ProjCoord& v, bool over_x)
{
    auto g = [&](int fixed, int free) -> const QRatFunT& {
        return over_x ? k.qgrid[fixed][free] : k.qgrid[free][fixed];
    };
    FiberQuadratic q;
    QRatFunT* out[3] = {&q.c, &q.b, &q.a};
    for (int e = 0; e < 3; ++e) {
        if (v.is_infinite()) {
            *out[e] = g(2, e);
            continue;
        }
        const QRatFunT& z = v.value();
        // Horner in the fixed coordinate
        QRatFunT s = g(2, e);
        s = s * z + g(1, e);
        s = s * z + g(0, e);
        *out[e] = s;
    }
    return q;
}

} // namespace

QRatFunT FiberQuadratic::eval(const ProjCoord& r) const
{
    if (r.is_infinite())
        return a;
    const QRatFunT& z = r.value();
    return (a * z + b) * z + c;
}

FiberQuadratic fiber_over_x(const Kernel& k, const ProjCoord& x) { return fiber(k, x, true); }
FiberQuadratic fiber_over_y(const Kernel& k, const ProjCoord& y) { return fiber(k, y, false); }

ProjCoord other_root(const FiberQuadratic& q, const ProjCoord& r)
{
    if (q.is_zero())
        throw StructuredAbort("involution", "fiber quadratic vanishes identically");
    if (!q.eval(r).is_zero())
        throw AlgebraError("other_root: " + r.str() + " is not a root");
    if (!q.a.is_zero()) {
        // finite roots z, z' with z + z' = -b/a
        return ProjCoord::affine(-(q.b / q.a) - r.value());
    }
    if (q.b.is_zero())
        return ProjCoord::infinity();
    if (r.is_infinite())
        return ProjCoord::affine(-(q.c / q.b));
    return ProjCoord::infinity();
}

CurvePoint iota1_point(const Kernel& k, const CurvePoint& p)
{
    return {p.x, other_root(fiber_over_x(k, p.x), p.y)};
}

CurvePoint iota2_point(const Kernel& k, const CurvePoint& p)
{
    return {other_root(fiber_over_y(k, p.y), p.x), p.y};
}

CurvePoint tau_point(const Kernel& k, const CurvePoint& p) { return iota2_point(k, iota1_point(k, p)); }
CurvePoint tau_inv_point(const Kernel& k, const CurvePoint& p) { return iota1_point(k, iota2_point(k, p)); }

CurvePoint tau_power(const Kernel& k, const CurvePoint& p, int n)
{
    CurvePoint q = p;
    for (int i = 0; i < std::abs(n); ++i)
        q = n > 0 ? tau_point(k, q) : tau_inv_point(k, q);
    return q;
}

OrbitCache::OrbitCache(const Kernel& k, CurvePoint p) : k_(&k) { pts_.emplace(0, std::move(p)); }

const CurvePoint& OrbitCache::at(int n)
{
    auto it = pts_.find(n);
    if (it != pts_.end())
        return it->second;
    int step = n > 0 ? 1 : -1;
    const CurvePoint& prev = at(n - step);
    CurvePoint next = step > 0 ? tau_point(*k_, prev) : tau_inv_point(*k_, prev);
    return pts_.emplace(n, std::move(next)).first->second;
}

std::optional<OrbitWitness> same_orbit_exact(OrbitCache& rc, OrbitCache& sc, const CurvePoint& r, const CurvePoint& s,
                                       const std::set<int>& candidates)
{
    std::vector<int> order(candidates.begin(), candidates.end());
    std::stable_sort(order.begin(), order.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (int n : order) {
        if (n == 0) {
            if (r == s)
                return OrbitWitness{0, r, s};
            continue;
        }
        int a = n > 0 ? (n + 1) / 2 : n / 2;
        int b = a - n;
        if (rc.at(a) == sc.at(b))
            return OrbitWitness{n, r, s};
    }
    return std::nullopt;
}

std::optional<OrbitWitness> same_orbit_exact(const Kernel& k, const CurvePoint& r, const CurvePoint& s,
                                             const std::set<int>& candidates)
{
    OrbitCache rc(k, r), sc(k, s);
    return same_orbit_exact(rc, sc, r, s, candidates);
}

namespace {

using namespace modp;

std::optional<QuadNumber> field_of(const CurvePoint& q)
{
    for (const ProjCoord* c : {&q.x, &q.y}) {
        if (c->is_infinite())
            continue;
        for (const auto* p : {&c->value().num(), &c->value().den()})
            for (const auto& v : p->coeffs())
                if (!v.is_rational())
                    return v;
    }
    return std::nullopt;
}

u64 splitmix(u64 x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::optional<SmoothFiber> SmoothFiber::make(const Kernel& k, u64 p, u64 t0, const std::optional<Rational>& field_d)
{
    SmoothFiber f;
    f.p_ = p;
    f.t0_ = t0;
    if (field_d) {
        auto dm = modp::reduce(*field_d, p);
        if (!dm || *dm == 0)
            return std::nullopt;
        auto s = sqrtmod(*dm, p);
        if (!s)
            return std::nullopt;
        f.s_ = *s;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto d = modp::reduce(k.d(i - 1, j - 1), p);
            if (!d)
                return std::nullopt;
            u64 v = negmod(mulmod(t0, *d, p), p);
            if (i == 1 && j == 1)
                v = addmod(v, 1, p);
            f.g_[i][j] = v;
        }
    // smooth iff the branch quartic has distinct roots
    std::array<u64, 5> q{};
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) {
            u64 term = submod(mulmod(f.g_[i][1], f.g_[l][1], p), mulmod(4, mulmod(f.g_[i][2], f.g_[l][0], p), p), p);
            q[i + l] = addmod(q[i + l], term, p);
        }
    auto m = [p](u64 a, u64 b) { return mulmod(a, b, p); };
    u64 I = addmod(submod(m(12, m(q[4], q[0])), m(3, m(q[3], q[1])), p), m(q[2], q[2]), p);
    u64 J = m(72, m(q[4], m(q[2], q[0])));
    J = addmod(J, m(9, m(q[3], m(q[2], q[1]))), p);
    J = submod(J, m(27, m(q[4], m(q[1], q[1]))), p);
    J = submod(J, m(27, m(q[3], m(q[3], q[0]))), p);
    J = submod(J, m(2, m(q[2], m(q[2], q[2]))), p);
    u64 disc = submod(m(4, m(I, m(I, I))), m(J, J), p);
    if (disc == 0)
        return std::nullopt;
    return f;
}

std::optional<SmoothFiber::Pt> SmoothFiber::reduce(const CurvePoint& q) const
{
    auto img = [this](const QuadNumber& c) -> std::optional<u64> {
        auto a = modp::reduce(c.a(), p_), b = modp::reduce(c.b(), p_);
        if (!a || !b)
            return std::nullopt;
        if (*b != 0 && s_ == 0)
            return std::nullopt;
        return addmod(*a, mulmod(*b, s_, p_), p_);
    };
    auto ev = [&](const QPolyT& poly) -> std::optional<u64> {
        u64 r = 0;
        const auto& cs = poly.coeffs();
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
            auto c = img(*it);
            if (!c)
                return std::nullopt;
            r = addmod(mulmod(r, t0_, p_), *c, p_);
        }
        return r;
    };
    auto coord = [&](const ProjCoord& c, u64& u0, u64& u1) -> bool {
        if (c.is_infinite()) {
            u0 = 1;
            u1 = 0;
            return true;
        }
        auto n = ev(c.value().num()), d = ev(c.value().den());
        if (!n || !d || (*n == 0 && *d == 0))
            return false;
        if (*d == 0) {
            u0 = 1;
            u1 = 0;
        } else {
            u0 = mulmod(*n, invmod(*d, p_), p_);
            u1 = 1;
        }
        return true;
    };
    Pt r{};
    if (!coord(q.x, r.x0, r.x1) || !coord(q.y, r.y0, r.y1))
        return std::nullopt;
    return r;
}

bool SmoothFiber::on_curve(const Pt& q) const
{
    u64 xs[3] = {mulmod(q.x1, q.x1, p_), mulmod(q.x0, q.x1, p_), mulmod(q.x0, q.x0, p_)};
    u64 ys[3] = {mulmod(q.y1, q.y1, p_), mulmod(q.y0, q.y1, p_), mulmod(q.y0, q.y0, p_)};
    u64 s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s = addmod(s, mulmod(g_[i][j], mulmod(xs[i], ys[j], p_), p_), p_);
    return s == 0;
}

SmoothFiber::Pt SmoothFiber::other(const Pt& q, bool over_x) const
{
    // fixed coordinate (f0:f1), moving root (r0:r1), both normalized
    u64 f0 = over_x ? q.x0 : q.y0, f1 = over_x ? q.x1 : q.y1;
    u64 r0 = over_x ? q.y0 : q.x0, r1 = over_x ? q.y1 : q.x1;
    u64 fs[3] = {mulmod(f1, f1, p_), mulmod(f0, f1, p_), mulmod(f0, f0, p_)};
    u64 co[3] = {0, 0, 0};  // c, b, a
    for (int e = 0; e < 3; ++e)
        for (int i = 0; i < 3; ++i) {
            u64 g = over_x ? g_[i][e] : g_[e][i];
            co[e] = addmod(co[e], mulmod(g, fs[i], p_), p_);
        }
    u64 a = co[2], b = co[1], c = co[0];
    u64 n0, n1;
    if (a != 0) {
        if (r1 == 0)
            throw AlgebraError("reduced point is off the fiber");
        n0 = submod(negmod(mulmod(b, invmod(a, p_), p_), p_), r0, p_);
        n1 = 1;
    } else if (b == 0) {
        n0 = 1;
        n1 = 0;
    } else if (r1 == 0) {
        n0 = negmod(mulmod(c, invmod(b, p_), p_), p_);
        n1 = 1;
    } else {
        n0 = 1;
        n1 = 0;
    }
    Pt out = q;
    if (over_x) {
        out.y0 = n0;
        out.y1 = n1;
    } else {
        out.x0 = n0;
        out.x1 = n1;
    }
    return out;
}

std::optional<SmoothFiber::Pt> SmoothFiber::point_over_x(u64 x) const
{
    u64 co[3] = {0, 0, 0};
    u64 xs[3] = {1, x % p_, mulmod(x % p_, x % p_, p_)};
    for (int e = 0; e < 3; ++e)
        for (int i = 0; i < 3; ++i)
            co[e] = addmod(co[e], mulmod(g_[i][e], xs[i], p_), p_);
    u64 a = co[2], b = co[1], c = co[0];
    if (a == 0)
        return std::nullopt;
    u64 disc = submod(mulmod(b, b, p_), mulmod(4, mulmod(a, c, p_), p_), p_);
    auto s = sqrtmod(disc, p_);
    if (!s)
        return std::nullopt;
    u64 y = mulmod(submod(*s, b, p_), invmod(mulmod(2, a, p_), p_), p_);
    return Pt{xs[1], 1, y, 1};
}

SmoothFiber::Pt SmoothFiber::iota1(const Pt& q) const { return other(q, true); }
SmoothFiber::Pt SmoothFiber::iota2(const Pt& q) const { return other(q, false); }

std::vector<SmoothFiber> smooth_fibers(const Kernel& k, int count, const std::optional<Rational>& field_d)
{
    std::vector<SmoothFiber> out;
    for (std::size_t i = 0; static_cast<int>(out.size()) < count; ++i) {
        if (i > 200)
            break;
        u64 p = prime_at(i);
        u64 t0 = splitmix(i + 1) % p;
        if (t0 == 0)
            continue;
        if (auto f = SmoothFiber::make(k, p, t0, field_d))
            out.push_back(*f);
    }
    return out;
}

std::optional<OrbitWitness> same_orbit(const Kernel& k, const CurvePoint& r, const CurvePoint& s,
                                       const std::set<int>& candidates, const OrbitSearchOptions& opt)
{
    if (!opt.screen)
        return same_orbit_exact(k, r, s, candidates);
    std::optional<Rational> d;
    if (auto v = field_of(r))
        d = v->d();
    else if (auto w = field_of(s))
        d = w->d();

    struct Screen
    {
        SmoothFiber f;
        SmoothFiber::Pt r, s;
    };
    std::vector<Screen> screens;
    for (const auto& f : smooth_fibers(k, opt.fibers + 4, d)) {
        auto rr = f.reduce(r), ss = f.reduce(s);
        if (!rr || !ss || !f.on_curve(*rr) || !f.on_curve(*ss))
            continue;
        screens.push_back({f, *rr, *ss});
        if (static_cast<int>(screens.size()) == opt.fibers)
            break;
    }
    if (static_cast<int>(screens.size()) < opt.fibers)
        return same_orbit_exact(k, r, s, candidates);

    int lo = 0, hi = 0;
    for (int n : candidates) {
        lo = std::min(lo, n);
        hi = std::max(hi, n);
    }
    // iterates on each fiber, index n - lo
    std::vector<std::vector<SmoothFiber::Pt>> orbit;
    for (const auto& sc : screens) {
        std::vector<SmoothFiber::Pt> v(static_cast<std::size_t>(hi - lo + 1));
        v[-lo] = sc.r;
        for (int n = 1; n <= hi; ++n)
            v[n - lo] = sc.f.tau(v[n - 1 - lo]);
        for (int n = -1; n >= lo; --n)
            v[n - lo] = sc.f.tau_inv(v[n + 1 - lo]);
        orbit.push_back(std::move(v));
    }
    std::vector<int> order(candidates.begin(), candidates.end());
    std::stable_sort(order.begin(), order.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    OrbitCache rc(k, r), scache(k, s);
    for (int n : order) {
        bool hit = true;
        for (std::size_t i = 0; i < screens.size() && hit; ++i)
            hit = orbit[i][n - lo] == screens[i].s;
        if (!hit)
            continue;
        if (auto w = same_orbit_exact(rc, scache, r, s, {n}))
            return w;
    }
    return std::nullopt;
}

bool tau_order_exceeds(const Kernel& k, int max_n)
{
    std::vector<bool> refuted(static_cast<std::size_t>(max_n + 1), false);
    int open = max_n;
    for (const auto& f : smooth_fibers(k, 2, std::nullopt)) {
        for (u64 x = 2; x < 40 && open > 0; ++x) {
            auto pt = f.point_over_x(x);
            if (!pt)
                continue;
            SmoothFiber::Pt cur = *pt;
            for (int n = 1; n <= max_n; ++n) {
                cur = f.tau(cur);
                if (!refuted[n] && !(cur == *pt)) {
                    refuted[n] = true;
                    --open;
                }
            }
        }
    }
    return open == 0;
}

bool verify_witness(const Kernel& k, const OrbitWitness& w)
{
    return tau_power(k, w.from, w.n) == w.to;
}

} // namespace qwalk
