#include "qwalk/heights.hpp"

#include <algorithm>
#include <functional>

namespace qwalk {

namespace {

constexpr int kInf = WeierstrassValuations::kInfiniteOrder;

int order(const RatFunT& f) { return f.is_zero() ? kInf : f.valuation(); }

bool ge(int ord, int bound) { return ord >= bound; }

QuarticInvariants<RatFunT> invariants(const Kernel& k)
{
    return quartic_invariants(discriminant_quartic(k, Axis::X));
}

} // namespace

std::string KodairaType::str() const
{
    switch (family) {
    case KodairaFamily::Smooth:
        return "I0";
    case KodairaFamily::In:
        return "I" + std::to_string(n);
    case KodairaFamily::InStar:
        return "I" + std::to_string(n) + "*";
    case KodairaFamily::II:
        return "II";
    case KodairaFamily::III:
        return "III";
    case KodairaFamily::IV:
        return "IV";
    case KodairaFamily::IIStar:
        return "II*";
    case KodairaFamily::IIIStar:
        return "III*";
    case KodairaFamily::IVStar:
        return "IV*";
    }
    return "?";
}

std::string RootLatticeSummand::str() const
{
    const char* f = family == LatticeFamily::A ? "A" : family == LatticeFamily::D ? "D" : "E";
    return f + std::to_string(rank);
}

WeierstrassValuations weierstrass_valuations(const Kernel& k)
{
    auto inv = invariants(k);
    if (inv.disc.is_zero())
        throw StructuredAbort("fiber", "discriminant vanishes identically");
    WeierstrassValuations v{order(inv.g2), order(inv.g3), order(inv.disc)};
    while (ge(v.ord_g2, 4) && ge(v.ord_g3, 6)) {
        if (v.ord_g2 != kInf)
            v.ord_g2 -= 4;
        if (v.ord_g3 != kInf)
            v.ord_g3 -= 6;
        v.ord_delta -= 12;
    }
    return v;
}

KodairaType kodaira_type_at_zero(const WeierstrassValuations& v)
{
    const int a = v.ord_g2, b = v.ord_g3, d = v.ord_delta;
    if (d == 0)
        return {KodairaFamily::Smooth, 0};
    if (a == 0 && b == 0)
        return {KodairaFamily::In, d};
    if (ge(a, 2) && ge(b, 3) && d == 6)
        return {KodairaFamily::InStar, 0};
    if (a == 2 && b == 3 && d > 6)
        return {KodairaFamily::InStar, d - 6};
    if (a == 1 && ge(b, 2) && d == 3)
        return {KodairaFamily::III, 0};
    if (a == 3 && ge(b, 5) && d == 9)
        return {KodairaFamily::IIIStar, 0};
    if (ge(a, 2) && b == 2 && d == 4)
        return {KodairaFamily::IV, 0};
    if (ge(a, 3) && b == 4 && d == 8)
        return {KodairaFamily::IVStar, 0};
    if (ge(a, 1) && b == 1 && d == 2)
        throw StructuredAbort("fiber", "fiber of type II at t = 0");
    if (ge(a, 4) && b == 5 && d == 10)
        throw StructuredAbort("fiber", "fiber of type II* at t = 0");
    throw StructuredAbort("fiber", "valuations (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                       std::to_string(d) + ") match no Kodaira type");
}

RootLatticeSummand root_lattice(const KodairaType& t)
{
    switch (t.family) {
    case KodairaFamily::In:
        if (t.n < 2)
            break;
        return {LatticeFamily::A, t.n - 1};
    case KodairaFamily::InStar:
        return {LatticeFamily::D, t.n + 4};
    case KodairaFamily::III:
        return {LatticeFamily::A, 1};
    case KodairaFamily::IV:
        return {LatticeFamily::A, 2};
    case KodairaFamily::IVStar:
        return {LatticeFamily::E, 6};
    case KodairaFamily::IIIStar:
        return {LatticeFamily::E, 7};
    case KodairaFamily::IIStar:
        return {LatticeFamily::E, 8};
    default:
        break;
    }
    throw AlgebraError("fiber " + t.str() + " has no root lattice");
}

int fiber_components_from_base_points(const BasePointProfile& bp)
{
    int n = 4;
    for (int c : bp.corner)
        if (c >= 2)
            n += c - 1;
    return n;
}

int fiber_at_zero(const Kernel& k)
{
    KodairaType t = kodaira_type_at_zero(weierstrass_valuations(k));
    if (t.family != KodairaFamily::In)
        throw StructuredAbort("fiber", "fiber at t = 0 is " + t.str() + ", expected I_n");
    int n = fiber_components_from_base_points(base_points(k));
    if (n != t.n)
        throw StructuredAbort("fiber", "base points give I" + std::to_string(n) + " but the discriminant gives " +
                                           t.str());
    return n;
}

std::set<Rational> contribution_set(const RootLatticeSummand& s)
{
    std::set<Rational> out{Rational(0)};
    switch (s.family) {
    case LatticeFamily::A: {
        int n = s.rank + 1;
        for (int i = 1; i < n; ++i)
            out.insert(frac(i * (n - i), n));
        break;
    }
    case LatticeFamily::D: {
        if (s.rank < 4)
            throw AlgebraError("D_k needs k >= 4");
        out.insert(Rational(1));
        out.insert(Rational(1) + frac(s.rank - 4, 4));
        break;
    }
    case LatticeFamily::E:
        if (s.rank == 6)
            out.insert(frac(4, 3));
        else if (s.rank == 7)
            out.insert(frac(3, 2));
        else
            throw AlgebraError("only E6 and E7 carry sections of infinite order");
        break;
    }
    return out;
}

std::set<Rational> height_candidates(int n0)
{
    if (n0 < 4 || n0 > 9)
        throw StructuredAbort("heights", "fiber I" + std::to_string(n0) + " at t = 0 is outside I4..I9");
    const int budget = 9 - n0;

    std::vector<RootLatticeSummand> kinds;
    for (int r = 1; r <= budget; ++r) {
        kinds.push_back({LatticeFamily::A, r});
        if (r >= 4)
            kinds.push_back({LatticeFamily::D, r});
        if (r == 6 || r == 7)
            kinds.push_back({LatticeFamily::E, r});
    }

    // Sums of contributions over multisets of summands (nondecreasing index order).
    std::set<Rational> sums;
    std::function<void(std::size_t, int, const Rational&)> walk = [&](std::size_t from, int left, const Rational& s) {
        sums.insert(s);
        for (std::size_t i = from; i < kinds.size(); ++i) {
            if (kinds[i].rank > left)
                continue;
            for (const auto& c : contribution_set(kinds[i]))
                walk(i, left - kinds[i].rank, s + c);
        }
    };
    walk(0, budget, Rational(0));

    std::set<Rational> out;
    for (const auto& c0 : contribution_set({LatticeFamily::A, n0 - 1}))
        for (const auto& s : sums) {
            Rational h = Rational(2) - c0 - s;
            if (sgn(h) >= 0)
                out.insert(h);
        }
    return out;
}

std::set<int> candidate_multipliers(const std::set<Rational>& hM, const std::set<Rational>& hN, int cap)
{
    std::set<int> out;
    for (const auto& m : hM)
        for (const auto& n : hN) {
            if (sgn(n) == 0 || sgn(m) == 0)
                continue;
            Rational r = m / n;
            if (!is_rational_square(r))
                continue;
            Rational s = rational_sqrt(r);
            if (s.get_den() != 1 || s > cap)
                continue;
            int v = static_cast<int>(s.get_num().get_si());
            out.insert(v);
            out.insert(-v);
        }
    return out;
}

std::vector<int> delta_multiplicity_profile(const Kernel& k)
{
    auto inv = invariants(k);
    if (inv.disc.is_zero())
        throw StructuredAbort("fiber", "discriminant vanishes identically");
    if (inv.disc.den().degree() != 0)
        throw StructuredAbort("fiber", "discriminant is not a polynomial in t");
    PolyT d = inv.disc.num();
    d = d.exact_div(PolyT::monomial(Rational(1), d.valuation()));
    std::vector<int> out;
    // Delta is a form of degree 12 on P1; a degree drop is a root at t = oo.
    int at_infinity = 12 - inv.disc.num().degree();
    if (at_infinity > 0)
        out.push_back(at_infinity);
    if (d.degree() > 0) {
        auto layers = squarefree_decomposition(d);
        for (std::size_t i = 0; i < layers.size(); ++i)
            for (int r = 0; r < layers[i].degree(); ++r)
                out.push_back(static_cast<int>(i) + 1);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool has_repeated_nonzero_root(const Kernel& k)
{
    auto prof = delta_multiplicity_profile(k);
    return !prof.empty() && prof.front() >= 2;
}

} // namespace qwalk
