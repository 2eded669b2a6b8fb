#pragma once

#include "qwalk/curve.hpp"

#include <optional>
#include <utility>

namespace qwalk {

class FunctionFieldError : public std::runtime_error
{
public:
    explicit FunctionFieldError(const std::string& what) : std::runtime_error(what) {}
};

// Element u(x) + v(x) y of Q(t)(E), with u, v in Q(t)(x). Every element has exactly one
// such form because y has degree 2 over Q(t)(x), so equality is structural.
struct CurveFunction
{
    RatFunX u, v;

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    friend bool operator==(const CurveFunction& a, const CurveFunction& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const CurveFunction& a, const CurveFunction& b) { return !(a == b); }
};

// Arithmetic bound to one kernel. A(x) and A'(y) must be nonzero.
class FunctionField
{
public:
    explicit FunctionField(const Kernel& k);

    const Kernel& kernel() const { return *k_; }

    CurveFunction constant(const RatFunT& c) const { return {RatFunX(c), RatFunX()}; }
    CurveFunction x() const { return {RatFunX::var(), RatFunX()}; }
    CurveFunction y() const { return {RatFunX(), RatFunX(RatFunT(1))}; }
    CurveFunction t() const { return constant(RatFunT::var()); }
    CurveFunction from_x(const RatFunX& f) const { return {f, RatFunX()}; }

    CurveFunction add(const CurveFunction& a, const CurveFunction& b) const;
    CurveFunction sub(const CurveFunction& a, const CurveFunction& b) const;
    CurveFunction neg(const CurveFunction& a) const;
    CurveFunction mul(const CurveFunction& a, const CurveFunction& b) const;
    CurveFunction inv(const CurveFunction& a) const;
    CurveFunction div(const CurveFunction& a, const CurveFunction& b) const;
    CurveFunction pow(const CurveFunction& a, int e) const;

    // p(f) for p with Q(t) coefficients.
    CurveFunction eval_poly(const PolyX& p, const CurveFunction& f) const;
    CurveFunction eval_ratfun(const RatFunX& r, const CurveFunction& f) const;

    // y -> -y - B(x)/A(x)
    CurveFunction iota1(const CurveFunction& f) const;
    // x -> -x - B'(y)/A'(y), then reduction
    CurveFunction iota2(const CurveFunction& f) const;
    // iota1 o iota2 as operators on functions, i.e. f o (iota2 o iota1)
    CurveFunction tau(const CurveFunction& f) const;
    CurveFunction tau_inv(const CurveFunction& f) const;

    // The generic point (x, y) pushed through the point maps: coordinates of
    // iota1(G), iota2(G) for G = (X, Y).
    std::pair<CurveFunction, CurveFunction> iota1_generic(const std::pair<CurveFunction, CurveFunction>& g) const;
    std::pair<CurveFunction, CurveFunction> iota2_generic(const std::pair<CurveFunction, CurveFunction>& g) const;

    // Value at a point with finite coordinates; nullopt at poles or points at infinity.
    std::optional<QRatFunT> evaluate(const CurveFunction& f, const CurvePoint& p) const;

    std::string str(const CurveFunction& f) const;

private:
    const Kernel* k_;
    RatFunX A_, B_over_A_, C_over_A_;
};

// Smallest n <= max_n with tau^n = id on the function field (tau^n(x) = x and tau^n(y) = y).
// With screen set, a reduced-fiber check first rules out every n <= max_n when it can;
// any n it cannot rule out is settled exactly.
std::optional<int> tau_order(const Kernel& k, int max_n = 6, bool screen = true);

// b = x (iota1(y) - y)
CurveFunction build_b(const FunctionField& ff);

bool verify_certificate(const FunctionField& ff, const CurveFunction& g);

// xy - f - g == 0 with f in Q(t)(x), g in Q(t)(y).
bool verify_decoupling(const FunctionField& ff, const CurveFunction& f, const CurveFunction& g);

class CertificateMembershipError : public std::runtime_error
{
public:
    explicit CertificateMembershipError(const std::string& what) : std::runtime_error(what) {}
};

// (xy - g, g); throws CertificateMembershipError unless iota1 fixes the first and
// iota2 fixes the second.
std::pair<CurveFunction, CurveFunction> certificate_to_pair(const FunctionField& ff, const CurveFunction& g);

} // namespace qwalk
