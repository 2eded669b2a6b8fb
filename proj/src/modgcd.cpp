// Multi-modular gcd over Q[t] and Q(sqrt d)[t]. The monic gcd is computed modulo a run of
// 62-bit primes, lifted by CRT and rational reconstruction, and only accepted after exact
// trial division, so the result never depends on a lucky prime.
#include "qwalk/modarith.hpp"
#include "qwalk/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qwalk {

namespace {

using namespace modp;
using ModPoly = std::vector<u64>;  // trimmed, index = degree

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        u64 inv = invmod(b.back(), p);
        std::size_t db = b.size() - 1;
        while (a.size() >= b.size()) {
            u64 f = mulmod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = submod(a[shift + j], mulmod(f, b[j], p), p);
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a)
            c = mulmod(c, inv, p);
    }
    return a;
}

// n/d with |n|, d <= sqrt(m/2) and n = r d (mod m), if it exists.
std::optional<Rational> rational_reconstruct(const mpz_class& r, const mpz_class& m)
{
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    Rational q(r1, t1);
    q.canonicalize();
    return q;
}

struct Crt
{
    std::vector<mpz_class> res;
    mpz_class mod = 1;

    void add(const std::vector<u64>& r, u64 p)
    {
        if (res.empty()) {
            for (u64 v : r)
                res.emplace_back(static_cast<unsigned long>(v));
            mod = static_cast<unsigned long>(p);
            return;
        }
        u64 minv = invmod(mpz_fdiv_ui(mod.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < r.size(); ++i) {
            u64 cur = mpz_fdiv_ui(res[i].get_mpz_t(), p);
            u64 k = mulmod(submod(r[i], cur, p), minv, p);
            res[i] += mod * static_cast<unsigned long>(k);
        }
        mod *= static_cast<unsigned long>(p);
    }
};

template <class F>
bool divides(const Poly<F>& g, const Poly<F>& f)
{
    if (f.is_zero())
        return true;
    return Poly<F>::divmod(f, g).second.is_zero();
}

// Images of the inputs under each embedding for prime p; nullopt for a bad prime.
template <class F>
struct Embedder;

template <>
struct Embedder<Rational>
{
    static constexpr int count = 1;
    bool setup(u64) { return true; }
    std::optional<u64> image(const Rational& c, int, u64 p) const { return reduce(c, p); }
    // the value for embedding e given the coefficient residues r[e]
    std::vector<u64> combine(const std::vector<u64>& r, u64) const { return r; }
};

template <>
struct Embedder<QuadNumber>
{
    static constexpr int count = 2;
    Rational d;
    u64 s = 0;

    bool setup(u64 p)
    {
        auto dm = reduce(d, p);
        if (!dm || *dm == 0)
            return false;
        auto r = sqrtmod(*dm, p);
        if (!r)
            return false;
        s = *r;
        return true;
    }
    std::optional<u64> image(const QuadNumber& c, int e, u64 p) const
    {
        auto a = reduce(c.a(), p), b = reduce(c.b(), p);
        if (!a || !b)
            return std::nullopt;
        u64 bs = mulmod(*b, s, p);
        return e == 0 ? addmod(*a, bs, p) : submod(*a, bs, p);
    }
    // (x_s, x_-s) -> (a, b) residues with x = a + b sqrt d
    std::vector<u64> combine(const std::vector<u64>& r, u64 p) const
    {
        u64 inv2 = invmod(2, p);
        u64 a = mulmod(addmod(r[0], r[1], p), inv2, p);
        u64 b = mulmod(mulmod(submod(r[0], r[1], p), inv2, p), invmod(s, p), p);
        return {a, b};
    }
};

template <class F>
std::optional<Poly<F>> build_candidate(const Crt& crt, int deg, const Embedder<F>& em);

template <>
std::optional<Poly<Rational>> build_candidate(const Crt& crt, int deg, const Embedder<Rational>&)
{
    std::vector<Rational> cs;
    for (int i = 0; i <= deg; ++i) {
        auto q = rational_reconstruct(crt.res[i], crt.mod);
        if (!q)
            return std::nullopt;
        cs.push_back(*q);
    }
    return Poly<Rational>(cs);
}

template <>
std::optional<Poly<QuadNumber>> build_candidate(const Crt& crt, int deg, const Embedder<QuadNumber>& em)
{
    std::vector<QuadNumber> cs;
    for (int i = 0; i <= deg; ++i) {
        auto a = rational_reconstruct(crt.res[2 * i], crt.mod);
        auto b = rational_reconstruct(crt.res[2 * i + 1], crt.mod);
        if (!a || !b)
            return std::nullopt;
        cs.emplace_back(*a, *b, em.d);
    }
    return Poly<QuadNumber>(cs);
}

template <class F>
Poly<F> modular_gcd(const Poly<F>& a, const Poly<F>& b, Embedder<F> em)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return Poly<F>(F(1));

    int best = -1;
    Crt crt;
    std::optional<Poly<F>> last;
    for (std::size_t pi = 0;; ++pi) {
        u64 p = prime_at(pi);
        if (!em.setup(p))
            continue;
        std::vector<ModPoly> g(Embedder<F>::count);
        bool bad = false;
        for (int e = 0; e < Embedder<F>::count && !bad; ++e) {
            ModPoly ia, ib;
            for (const auto& c : a.coeffs()) {
                auto v = em.image(c, e, p);
                if (!v) {
                    bad = true;
                    break;
                }
                ia.push_back(*v);
            }
            for (const auto& c : b.coeffs()) {
                if (bad)
                    break;
                auto v = em.image(c, e, p);
                if (!v) {
                    bad = true;
                    break;
                }
                ib.push_back(*v);
            }
            if (bad || ia.back() == 0 || ib.back() == 0) {
                bad = true;
                break;
            }
            g[e] = mod_gcd(ia, ib, p);
        }
        if (bad)
            continue;
        int deg = static_cast<int>(g[0].size()) - 1;
        bool same = true;
        for (const auto& ge : g)
            same = same && static_cast<int>(ge.size()) - 1 == deg;
        if (!same)
            continue;
        if (deg == 0)
            return Poly<F>(F(1));
        if (best >= 0 && deg > best)
            continue;  // unlucky prime
        if (best < 0 || deg < best) {
            best = deg;
            crt = Crt();
            last.reset();
        }
        std::vector<u64> flat;
        for (int i = 0; i <= deg; ++i) {
            std::vector<u64> r;
            for (const auto& ge : g)
                r.push_back(ge[i]);
            for (u64 v : em.combine(r, p))
                flat.push_back(v);
        }
        crt.add(flat, p);
        auto cand = build_candidate<F>(crt, deg, em);
        if (!cand)
            continue;
        if (last && *last == *cand && divides(*cand, a) && divides(*cand, b))
            return *cand;
        last = cand;
    }
}

} // namespace

Poly<Rational> gcd(Poly<Rational> a, Poly<Rational> b)
{
    return modular_gcd<Rational>(a, b, Embedder<Rational>{});
}

Poly<QuadNumber> gcd(Poly<QuadNumber> a, Poly<QuadNumber> b)
{
    Embedder<QuadNumber> em;
    bool irrational = false;
    for (const auto* p : {&a, &b})
        for (const auto& c : p->coeffs())
            if (!c.is_rational()) {
                em.d = c.d();
                irrational = true;
            }
    if (!irrational) {
        auto down = [](const Poly<QuadNumber>& p) {
            std::vector<Rational> cs;
            for (const auto& c : p.coeffs())
                cs.push_back(c.a());
            return Poly<Rational>(cs);
        };
        Poly<Rational> g = gcd(down(a), down(b));
        std::vector<QuadNumber> cs;
        for (const auto& c : g.coeffs())
            cs.emplace_back(c);
        return Poly<QuadNumber>(cs);
    }
    return modular_gcd<QuadNumber>(a, b, em);
}

} // namespace qwalk
