#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qwalk {

using Rational = mpq_class;

class AlgebraError : public std::runtime_error
{
public:
    explicit AlgebraError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

// p/q in lowest terms; q != 0.
inline Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain decimal such as "-0.125" or "3e-2" exactly.
Rational parse_rational(const std::string& text);

bool is_rational_square(const Rational& a);
// Exact square root; throws unless is_rational_square(a).
Rational rational_sqrt(const Rational& a);

// Element a + b*sqrt(d) of Q(sqrt d). When b == 0 the value is rational and d is
// ignored. Elements with b != 0 must share d.
class QuadNumber
{
public:
    QuadNumber() = default;
    QuadNumber(int v) : a_(v) {}
    QuadNumber(const Rational& v) : a_(v) {}
    QuadNumber(const Rational& a, const Rational& b, const Rational& d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& d() const { return d_; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadNumber operator-() const;
    QuadNumber& operator+=(const QuadNumber& o);
    QuadNumber& operator-=(const QuadNumber& o);
    QuadNumber& operator*=(const QuadNumber& o);
    QuadNumber& operator/=(const QuadNumber& o);

    friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
    friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
    friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
    friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadNumber& x, const QuadNumber& y) { return !(x == y); }

private:
    void merge_d(const QuadNumber& o);

    Rational a_{0}, b_{0}, d_{0};
};

inline bool is_zero(const QuadNumber& a) { return is_zero(a.a()) && is_zero(a.b()); }
int compare(const QuadNumber& x, const QuadNumber& y);
std::string to_string(const QuadNumber& x);

} // namespace qwalk
