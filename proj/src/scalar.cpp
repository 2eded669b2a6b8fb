#include "qwalk/scalar.hpp"

#include <cctype>

namespace qwalk {

namespace {

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = text;
    if (s.empty())
        throw AlgebraError("empty number");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);
    Rational r;
    auto slash = body.find('/');
    if (slash != std::string::npos) {
        std::string p = body.substr(0, slash), q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw AlgebraError("malformed fraction '" + text + "'");
        mpz_class qz(q);
        if (qz == 0)
            throw AlgebraError("zero denominator in '" + text + "'");
        r = Rational(mpz_class(p), qz);
        r.canonicalize();
    } else {
        long exp10 = 0;
        auto e = body.find_first_of("eE");
        if (e != std::string::npos) {
            std::string ex = body.substr(e + 1);
            body = body.substr(0, e);
            bool eneg = false;
            if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
                eneg = ex[0] == '-';
                ex = ex.substr(1);
            }
            if (!all_digits(ex) || ex.size() > 6)
                throw AlgebraError("malformed exponent in '" + text + "'");
            exp10 = std::stol(ex) * (eneg ? -1 : 1);
        }
        std::string ip = body, fp;
        auto dot = body.find('.');
        if (dot != std::string::npos) {
            ip = body.substr(0, dot);
            fp = body.substr(dot + 1);
        }
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw AlgebraError("malformed number '" + text + "'");
        mpz_class num(ip.empty() ? "0" : ip);
        mpz_class scale = 1;
        for (char c : fp) {
            num = num * 10 + (c - '0');
            scale *= 10;
        }
        r = Rational(num, scale);
        r.canonicalize();
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
        if (exp10 > 0)
            r *= Rational(p10);
        else if (exp10 < 0)
            r /= Rational(p10);
    }
    return neg ? Rational(-r) : r;
}

bool is_rational_square(const Rational& a)
{
    if (sgn(a) < 0)
        return false;
    return mpz_perfect_square_p(a.get_num_mpz_t()) && mpz_perfect_square_p(a.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& a)
{
    if (!is_rational_square(a))
        throw AlgebraError("not a rational square: " + a.get_str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), a.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

QuadNumber::QuadNumber(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d)
{
    if (sgn(b_) == 0)
        d_ = 0;
    else if (sgn(d_) == 0)
        throw AlgebraError("QuadNumber with irrational part needs d != 0");
}

void QuadNumber::merge_d(const QuadNumber& o)
{
    if (sgn(o.b_) == 0)
        return;
    if (sgn(b_) == 0) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_)
        throw AlgebraError("mixing elements of different quadratic fields");
}

QuadNumber QuadNumber::operator-() const
{
    QuadNumber r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o)
{
    merge_d(o);
    a_ += o.a_;
    if (sgn(o.b_) != 0)
        b_ += o.b_;
    if (sgn(b_) == 0)
        d_ = 0;
    return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o)
{
    merge_d(o);
    a_ -= o.a_;
    if (sgn(o.b_) != 0)
        b_ -= o.b_;
    if (sgn(b_) == 0)
        d_ = 0;
    return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o)
{
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    merge_d(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    if (sgn(b_) == 0)
        d_ = 0;
    return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o)
{
    if (is_zero(o))
        throw AlgebraError("division by zero");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    QuadNumber conj(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this *= conj;
}

int compare(const QuadNumber& x, const QuadNumber& y)
{
    int c = cmp(x.a(), y.a());
    if (c != 0)
        return c;
    return cmp(x.b(), y.b());
}

std::string to_string(const QuadNumber& x)
{
    if (x.is_rational())
        return x.a().get_str();
    std::string s = "(";
    if (sgn(x.a()) != 0)
        s += x.a().get_str() + (sgn(x.b()) > 0 ? "+" : "");
    s += x.b().get_str() + "*sqrt(" + x.d().get_str() + "))";
    return s;
}

} // namespace qwalk
