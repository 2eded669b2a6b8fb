#pragma once

#include "qwalk/scalar.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

namespace detail {
template <class F>
bool elem_zero(const F& c)
{
    using qwalk::is_zero;
    return is_zero(c);
}
} // namespace detail
using detail::elem_zero;

// Dense univariate polynomial over a field F. Coefficient i belongs to var^i;
// the vector never ends in a zero.
template <class F>
class Poly
{
public:
    Poly() = default;
    Poly(int c) : Poly(F(c)) {}
    Poly(const F& c)
    {
        if (!elem_zero(c))
            c_.push_back(c);
    }
    explicit Poly(std::vector<F> cs) : c_(std::move(cs)) { trim(); }

    static Poly monomial(const F& c, int k)
    {
        if (elem_zero(c))
            return Poly();
        std::vector<F> cs(static_cast<std::size_t>(k) + 1, F(0));
        cs[k] = c;
        return Poly(std::move(cs));
    }
    static Poly var() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : F(0); }
    const F& lc() const
    {
        if (c_.empty())
            throw AlgebraError("leading coefficient of zero polynomial");
        return c_.back();
    }

    // Order of vanishing at var = 0; the zero polynomial has no valuation.
    int valuation() const
    {
        if (c_.empty())
            throw AlgebraError("valuation of zero polynomial");
        int k = 0;
        while (elem_zero(c_[k]))
            ++k;
        return k;
    }

    F eval(const F& x) const
    {
        F r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Poly derivative() const
    {
        std::vector<F> cs;
        for (std::size_t i = 1; i < c_.size(); ++i)
            cs.push_back(c_[i] * F(static_cast<int>(i)));
        return Poly(std::move(cs));
    }

    Poly monic() const
    {
        if (c_.empty())
            return *this;
        F inv = F(1) / c_.back();
        std::vector<F> cs(c_.size(), F(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            cs[i] = c_[i] * inv;
        return Poly(std::move(cs));
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return Poly();
        std::vector<F> cs(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (elem_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                cs[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(cs));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const
    {
        if (elem_zero(s))
            return Poly();
        Poly r = *this;
        for (auto& c : r.c_)
            c *= s;
        return r;
    }

    Poly pow(unsigned k) const
    {
        Poly r(F(1)), b = *this;
        while (k) {
            if (k & 1)
                r *= b;
            k >>= 1;
            if (k)
                b *= b;
        }
        return r;
    }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw AlgebraError("polynomial division by zero");
        if (a.degree() < b.degree())
            return {Poly(), a};
        std::vector<F> r = a.c_;
        int db = b.degree();
        std::vector<F> q(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
        F inv = F(1) / b.lc();
        for (int k = a.degree(); k >= db; --k) {
            if (elem_zero(r[k]))
                continue;
            F f = r[k] * inv;
            q[k - db] = f;
            for (int j = 0; j <= db; ++j)
                r[k - db + j] -= f * b.c_[j];
        }
        r.resize(static_cast<std::size_t>(db));
        return {Poly(std::move(q)), Poly(std::move(r))};
    }

    Poly exact_div(const Poly& b) const
    {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero())
            throw AlgebraError("inexact polynomial division");
        return q;
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& v) const
    {
        if (c_.empty())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (elem_zero(c_[i]))
                continue;
            std::string cs = to_string(c_[i]);
            bool neg = !cs.empty() && cs[0] == '-';
            bool simple = cs.find_first_of("+-", 1) == std::string::npos && cs.find('/') == std::string::npos;
            if (!s.empty())
                s += neg && simple ? " - " : " + ";
            else if (neg && simple)
                s += "-";
            std::string mag = neg && simple ? cs.substr(1) : cs;
            if (!simple && i > 0)
                mag = "(" + mag + ")";
            if (i == 0)
                s += mag;
            else {
                if (mag != "1")
                    s += mag + "*";
                s += v;
                if (i > 1)
                    s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && elem_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p)
{
    return p.is_zero();
}

// Total order: by degree, then coefficients from the top down.
template <class F>
int compare(const Poly<F>& a, const Poly<F>& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = compare(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd_euclid(Poly<F> a, Poly<F> b)
{
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant())
            return Poly<F>(F(1));
        Poly<F> r = Poly<F>::divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Over Q and Q(sqrt d) the gcd is computed multi-modularly (see modgcd.cpp); Euclid's
// remainders grow too fast on the orbit computations.
Poly<Rational> gcd(Poly<Rational> a, Poly<Rational> b);
Poly<QuadNumber> gcd(Poly<QuadNumber> a, Poly<QuadNumber> b);

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b)
{
    return gcd_euclid(std::move(a), std::move(b));
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& p)
{
    if (p.is_zero())
        throw AlgebraError("squarefree part of zero");
    Poly<F> g = gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

// Yun's algorithm: p = lc * prod a_i^i with a_i squarefree, pairwise coprime.
// Entry i-1 of the result is a_i.
template <class F>
std::vector<Poly<F>> squarefree_decomposition(const Poly<F>& p)
{
    if (p.is_zero())
        throw AlgebraError("squarefree decomposition of zero");
    std::vector<Poly<F>> out;
    Poly<F> f = p.monic();
    if (f.degree() == 0)
        return out;
    Poly<F> fp = f.derivative();
    Poly<F> a = gcd(f, fp);
    Poly<F> b = f.exact_div(a);
    Poly<F> c = fp.exact_div(a);
    Poly<F> d = c - b.derivative();
    while (b.degree() > 0) {
        Poly<F> ai = gcd(b, d);
        out.push_back(ai);
        b = b.exact_div(ai);
        c = d.exact_div(ai);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

// Quotient of two polynomials over F, kept with gcd(num, den) = 1 and den monic.
template <class F>
class Frac
{
public:
    using poly_type = Poly<F>;

    Frac() : den_(F(1)) {}
    Frac(int c) : num_(F(c)), den_(F(1)) {}
    Frac(const F& c) : num_(c), den_(F(1)) {}
    Frac(const Poly<F>& p) : num_(p), den_(F(1)) {}
    Frac(const Poly<F>& n, const Poly<F>& d) : num_(n), den_(d) { canonicalize(); }

    static Frac var() { return Frac(Poly<F>::var()); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    F constant_value() const
    {
        if (!is_constant())
            throw AlgebraError("not a constant");
        return num_.coeff(0);
    }

    int valuation() const
    {
        if (num_.is_zero())
            throw AlgebraError("valuation of zero");
        return num_.valuation() - den_.valuation();
    }

    F eval(const F& x) const
    {
        F d = den_.eval(x);
        if (elem_zero(d))
            throw AlgebraError("pole at evaluation point");
        return num_.eval(x) / d;
    }

    Frac operator-() const
    {
        Frac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Frac operator+(const Frac& a, const Frac& b) { return add(a, b, false); }
    friend Frac operator-(const Frac& a, const Frac& b) { return add(a, b, true); }

    friend Frac operator*(const Frac& a, const Frac& b)
    {
        if (a.num_.is_zero() || b.num_.is_zero())
            return Frac();
        if (a.is_poly() && b.is_poly())
            return raw(a.num_ * b.num_, Poly<F>(F(1)));
        Poly<F> g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
        Poly<F> n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
        Poly<F> d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
        return normalized(std::move(n), std::move(d));
    }

    Frac inverse() const
    {
        if (num_.is_zero())
            throw AlgebraError("inverse of zero");
        return normalized(den_, num_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }

    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    Frac pow(int k) const
    {
        if (k < 0)
            return inverse().pow(-k);
        return raw(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
    }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::string str(const std::string& v) const
    {
        if (den_.degree() == 0)
            return num_.str(v);
        std::string n = num_.str(v), d = den_.str(v);
        if (num_.coeffs().size() > 1)
            n = "(" + n + ")";
        return n + "/(" + d + ")";
    }

private:
    static Frac raw(Poly<F> n, Poly<F> d)
    {
        Frac r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    // n/d already coprime; only the scale of d is fixed here.
    static Frac normalized(Poly<F> n, Poly<F> d)
    {
        if (d.is_zero())
            throw AlgebraError("zero denominator");
        if (n.is_zero())
            return Frac();
        F l = d.lc();
        if (!(l == F(1))) {
            F inv = F(1) / l;
            n = n.scaled(inv);
            d = d.scaled(inv);
        }
        return raw(std::move(n), std::move(d));
    }

    static Frac add(const Frac& a, const Frac& b, bool sub)
    {
        if (a.is_poly() && b.is_poly())
            return raw(sub ? a.num_ - b.num_ : a.num_ + b.num_, Poly<F>(F(1)));
        if (a.den_ == b.den_) {
            Poly<F> n = sub ? a.num_ - b.num_ : a.num_ + b.num_;
            return Frac(n, a.den_);
        }
        Poly<F> g = gcd(a.den_, b.den_);
        Poly<F> da = a.den_.exact_div(g), db = b.den_.exact_div(g);
        Poly<F> n = sub ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
        if (n.is_zero())
            return Frac();
        Poly<F> d = a.den_ * db;
        if (g.degree() > 0) {
            Poly<F> h = gcd(n, g);
            if (h.degree() > 0) {
                n = n.exact_div(h);
                d = d.exact_div(h);
            }
        }
        return normalized(std::move(n), std::move(d));
    }

    void canonicalize()
    {
        if (den_.is_zero())
            throw AlgebraError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        *this = normalized(std::move(num_), std::move(den_));
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
bool is_zero(const Frac<F>& f)
{
    return f.is_zero();
}

template <class F>
int compare(const Frac<F>& a, const Frac<F>& b)
{
    int c = compare(a.den(), b.den());
    if (c != 0)
        return c;
    return compare(a.num(), b.num());
}

template <class F>
std::string to_string(const Frac<F>& f)
{
    return f.str("t");
}

using PolyT = Poly<Rational>;
using RatFunT = Frac<Rational>;
using QPolyT = Poly<QuadNumber>;
using QRatFunT = Frac<QuadNumber>;

inline QRatFunT lift(const RatFunT& f)
{
    std::vector<QuadNumber> n, d;
    for (const auto& c : f.num().coeffs())
        n.emplace_back(c);
    for (const auto& c : f.den().coeffs())
        d.emplace_back(c);
    return QRatFunT(QPolyT(n), QPolyT(d));
}

// Multiplicity of t = 0 as a root; -1 for the zero polynomial.
inline int valuation_at_zero(const PolyT& p)
{
    return p.is_zero() ? -1 : p.valuation();
}

// Order at t = 0, negative at a pole; throws for zero.
inline int valuation_at_zero(const RatFunT& f)
{
    return f.valuation();
}

} // namespace qwalk
