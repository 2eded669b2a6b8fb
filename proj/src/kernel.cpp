#include "qwalk/kernel.hpp"

#include "qwalk/curve.hpp"

#include <algorithm>

namespace qwalk {

namespace {

PolyX row_poly(const std::array<std::array<PolyT, 3>, 3>& g, int j)
{
    std::vector<RatFunT> cs;
    for (int i = 0; i < 3; ++i)
        cs.emplace_back(g[i][j]);
    return PolyX(cs);
}

PolyX col_poly(const std::array<std::array<PolyT, 3>, 3>& g, int i)
{
    std::vector<RatFunT> cs;
    for (int j = 0; j < 3; ++j)
        cs.emplace_back(g[i][j]);
    return PolyX(cs);
}

QRatFunT lift_poly(const PolyT& p)
{
    std::vector<QuadNumber> cs;
    for (const auto& c : p.coeffs())
        cs.emplace_back(c);
    return QRatFunT(QPolyT(cs));
}

// Binary form in [u0:u1] with coefficients p[k] of u0^k u1^(deg-k); degenerate if every
// nonzero form lacks the top coefficient (common factor u1) or the affine gcd is nonconstant.
bool forms_share_factor(const std::vector<PolyX>& forms)
{
    bool all_drop = true;
    PolyX g;
    for (const auto& f : forms) {
        if (f.is_zero())
            continue;
        if (!f.coeff(2).is_zero())
            all_drop = false;
        g = gcd(g, f);
    }
    return all_drop || g.degree() > 0;
}

PolyX quartic_affine(const BinaryQuartic<RatFunT>& q)
{
    std::vector<RatFunT> cs(q.coeff.begin(), q.coeff.end());
    return PolyX(cs);
}

} // namespace

Kernel build_kernel(const WeightedModel& m, const KernelOptions& opt)
{
    m.validate();
    Kernel k;
    k.model = m;
    if (!opt.include_center)
        k.model.set(0, 0, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational d = k.model.d(i - 1, j - 1);
            PolyT p(std::vector<Rational>{Rational(i == 1 && j == 1 ? 1 : 0), Rational(-d)});
            k.grid[i][j] = p;
            k.qgrid[i][j] = lift_poly(p);
        }
    k.A = row_poly(k.grid, 2);
    k.B = row_poly(k.grid, 1);
    k.C = row_poly(k.grid, 0);
    k.Ap = col_poly(k.grid, 2);
    k.Bp = col_poly(k.grid, 1);
    k.Cp = col_poly(k.grid, 0);
    return k;
}

std::array<std::array<PolyT, 3>, 3> expanded_kernel(const Kernel& k)
{
    // Reassemble from the y-decomposition so the two views can be compared.
    std::array<std::array<PolyT, 3>, 3> out;
    const PolyX* rows[3] = {&k.C, &k.B, &k.A};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            RatFunT c = rows[j]->coeff(i);
            if (!c.is_poly())
                throw AlgebraError("kernel coefficient is not polynomial in t");
            out[i][j] = c.num();
        }
    return out;
}

BinaryQuartic<RatFunT> discriminant_quartic(const Kernel& k, Axis axis)
{
    auto at = [&](int i, int j) -> const PolyT& { return axis == Axis::X ? k.grid[i][j] : k.grid[j][i]; };
    BinaryQuartic<RatFunT> q;
    for (int deg = 0; deg <= 4; ++deg) {
        PolyT s;
        for (int i = 0; i <= 2; ++i) {
            int l = deg - i;
            if (l < 0 || l > 2)
                continue;
            s += at(i, 1) * at(l, 1) - PolyT(4) * at(i, 2) * at(l, 0);
        }
        q.coeff[deg] = RatFunT(s);
    }
    return q;
}

std::string to_string(CurveTag t)
{
    switch (t) {
    case CurveTag::Degenerate:
        return "Degenerate";
    case CurveTag::GenusZero:
        return "GenusZero";
    case CurveTag::GenusOne:
        return "GenusOne";
    }
    return "?";
}

CurveClass classify_curve(const Kernel& k)
{
    if (forms_share_factor({k.A, k.B, k.C}))
        return {CurveTag::Degenerate, "factor independent of y"};
    if (forms_share_factor({k.Ap, k.Bp, k.Cp}))
        return {CurveTag::Degenerate, "factor independent of x"};

    BinaryQuartic<RatFunT> dq = discriminant_quartic(k, Axis::X);
    PolyX f = quartic_affine(dq);
    if (f.is_zero())
        return {CurveTag::Degenerate, "identically vanishing discriminant"};
    int at_inf = 4 - f.degree();
    bool square = at_inf % 2 == 0;
    if (square) {
        auto layers = squarefree_decomposition(f);
        for (std::size_t i = 0; i < layers.size(); i += 2)
            if (layers[i].degree() > 0)
                square = false;
    }
    if (square)
        return {CurveTag::Degenerate, "discriminant is a square: two (1,1) components"};

    auto inv = quartic_invariants(dq);
    if (inv.disc.is_zero())
        return {CurveTag::GenusZero, "discriminant quartic has a repeated root"};
    return {CurveTag::GenusOne, "smooth biquadratic"};
}

ProjCoord::ProjCoord(const QRatFunT& u0, const QRatFunT& u1)
{
    if (!u1.is_zero()) {
        inf_ = false;
        val_ = u0 / u1;
    } else if (!u0.is_zero()) {
        inf_ = true;
    } else {
        throw AlgebraError("projective coordinate [0:0]");
    }
}

const QRatFunT& ProjCoord::value() const
{
    if (inf_)
        throw AlgebraError("affine value of the point at infinity");
    return val_;
}

bool ProjCoord::is_rational() const
{
    if (inf_)
        return true;
    for (const auto& c : val_.num().coeffs())
        if (!c.is_rational())
            return false;
    for (const auto& c : val_.den().coeffs())
        if (!c.is_rational())
            return false;
    return true;
}

std::string ProjCoord::str() const
{
    if (inf_)
        return "[1:0]";
    const auto& n = val_.num();
    const auto& d = val_.den();
    return "[" + n.str("t") + ":" + d.str("t") + "]";
}

bool on_curve(const Kernel& k, const CurvePoint& p)
{
    QRatFunT x0 = p.x.u0(), x1 = p.x.u1(), y0 = p.y.u0(), y1 = p.y.u1();
    QRatFunT xs[3] = {x1 * x1, x0 * x1, x0 * x0};
    QRatFunT ys[3] = {y1 * y1, y0 * y1, y0 * y0};
    QRatFunT s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!k.qgrid[i][j].is_zero())
                s += k.qgrid[i][j] * xs[i] * ys[j];
    return s.is_zero();
}

bool EdgeQuadratic::splits() const
{
    if (sgn(a) == 0)
        return true;
    return is_rational_square(discriminant());
}

int EdgeQuadratic::mult_at_zero() const
{
    if (sgn(c) != 0)
        return 0;
    return sgn(b) != 0 ? 1 : 2;
}

int EdgeQuadratic::mult_at_infinity() const
{
    if (sgn(a) != 0)
        return 0;
    return sgn(b) != 0 ? 1 : 2;
}

std::array<ProjCoord, 2> edge_roots(const EdgeQuadratic& q, const std::optional<Rational>& field_d)
{
    if (q.is_zero())
        throw StructuredAbort("special_points", "edge quadratic vanishes identically");
    auto constant = [](const QuadNumber& v) { return ProjCoord::affine(QRatFunT(v)); };
    if (sgn(q.a) == 0) {
        if (sgn(q.b) == 0)
            return {ProjCoord::infinity(), ProjCoord::infinity()};
        return {ProjCoord::infinity(), constant(QuadNumber(Rational(-q.c / q.b)))};
    }
    Rational disc = q.discriminant();
    Rational two_a = 2 * q.a;
    if (is_rational_square(disc)) {
        Rational s = rational_sqrt(disc);
        Rational r1 = (-q.b - s) / two_a, r2 = (-q.b + s) / two_a;
        if (r1 > r2)
            std::swap(r1, r2);
        return {constant(QuadNumber(r1)), constant(QuadNumber(r2))};
    }
    Rational d = disc, scale = 1;
    if (field_d && is_rational_square(Rational(disc / *field_d))) {
        d = *field_d;
        scale = rational_sqrt(Rational(disc / *field_d));
    }
    Rational re = -q.b / two_a, im = scale / two_a;
    QuadNumber r1(re, -abs(im), d), r2(re, abs(im), d);
    return {constant(r1), constant(r2)};
}

EdgeQuadratic edge_quadratic(const Kernel& k, Edge e)
{
    switch (e) {
    case Edge::P:
        return {k.d(1, 1), k.d(1, 0), k.d(1, -1)};
    case Edge::R:
        return {k.d(-1, 1), k.d(-1, 0), k.d(-1, -1)};
    case Edge::Q:
        return {k.d(1, 1), k.d(0, 1), k.d(-1, 1)};
    case Edge::S:
        return {k.d(1, -1), k.d(0, -1), k.d(-1, -1)};
    }
    throw AlgebraError("bad edge");
}

SpecialPoints special_points(const Kernel& k, const std::optional<Rational>& field_d)
{
    EdgeQuadratic pq = edge_quadratic(k, Edge::P), qq = edge_quadratic(k, Edge::Q);
    auto pr = edge_roots(pq, field_d);
    auto qr = edge_roots(qq, field_d);
    SpecialPoints sp;
    sp.P0 = {ProjCoord::infinity(), pr[0]};
    sp.P1 = {ProjCoord::infinity(), pr[1]};
    sp.Q0 = {qr[0], ProjCoord::infinity()};
    sp.Q1 = {qr[1], ProjCoord::infinity()};
    sp.p_rational = pq.splits();
    sp.q_rational = qq.splits();
    sp.iota1_Q0 = iota1_point(k, sp.Q0);
    sp.iota1_Q1 = iota1_point(k, sp.Q1);
    return sp;
}

BasePointProfile base_points(const Kernel& k)
{
    EdgeQuadratic P = edge_quadratic(k, Edge::P), Q = edge_quadratic(k, Edge::Q);
    EdgeQuadratic R = edge_quadratic(k, Edge::R), S = edge_quadratic(k, Edge::S);
    auto pr = edge_roots(P), qr = edge_roots(Q), rr = edge_roots(R), sr = edge_roots(S);
    BasePointProfile bp;
    ProjCoord inf = ProjCoord::infinity(), zero = ProjCoord::affine(QRatFunT(0));
    bp.points = {CurvePoint{inf, pr[0]}, CurvePoint{inf, pr[1]}, CurvePoint{qr[0], inf}, CurvePoint{qr[1], inf},
                 CurvePoint{zero, rr[0]}, CurvePoint{zero, rr[1]}, CurvePoint{sr[0], zero}, CurvePoint{sr[1], zero}};
    bp.corner[0] = R.mult_at_zero() + S.mult_at_zero();
    bp.corner[1] = R.mult_at_infinity() + Q.mult_at_zero();
    bp.corner[2] = P.mult_at_zero() + S.mult_at_infinity();
    bp.corner[3] = P.mult_at_infinity() + Q.mult_at_infinity();
    int mx = 1;
    for (int c : bp.corner)
        mx = std::max(mx, c);
    for (const EdgeQuadratic* e : {&P, &Q, &R, &S})
        if (sgn(e->a) != 0 && sgn(e->discriminant()) == 0)
            mx = std::max(mx, 2);
    bp.max_multiplicity = mx;
    return bp;
}

} // namespace qwalk
