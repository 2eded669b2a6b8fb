#pragma once

#include "qwalk/model.hpp"
#include "qwalk/poly.hpp"
#include "qwalk/quartic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// Raised when the input leaves the regime an operation is defined on. The CLI maps
// these to exit code 2.
class StructuredAbort : public std::runtime_error
{
public:
    StructuredAbort(std::string stage, const std::string& what)
        : std::runtime_error(what), stage_(std::move(stage))
    {
    }
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

using PolyX = Poly<RatFunT>;  // polynomials in x (or y) over Q(t)
using RatFunX = Frac<RatFunT>;

struct KernelOptions
{
    // Whether the (0,0) weight enters S(x,y).
    bool include_center = true;
};

// K(x,y,t) = xy(1 - t S(x,y)) and its bihomogenization on P1 x P1.
struct Kernel
{
    WeightedModel model;
    // grid[i][j] is the coefficient of x0^i x1^(2-i) y0^j y1^(2-j), a polynomial in t.
    std::array<std::array<PolyT, 3>, 3> grid;
    std::array<std::array<QRatFunT, 3>, 3> qgrid;
    // K = A(x) y^2 + B(x) y + C(x)
    PolyX A, B, C;
    // K = A'(y) x^2 + B'(y) x + C'(y)
    PolyX Ap, Bp, Cp;

    const Rational& d(int i, int j) const { return model.d(i, j); }
};

Kernel build_kernel(const WeightedModel& m, const KernelOptions& opt = {});

// K expanded as a bivariate polynomial: entry [i][j] is the coefficient of x^i y^j.
std::array<std::array<PolyT, 3>, 3> expanded_kernel(const Kernel& k);

enum class Axis { X, Y };

// B^2 - 4AC for axis X as a binary quartic in [x0:x1]; axis Y is the mirror.
BinaryQuartic<RatFunT> discriminant_quartic(const Kernel& k, Axis axis);

enum class CurveTag { Degenerate, GenusZero, GenusOne };

struct CurveClass
{
    CurveTag tag;
    std::string reason;
};

std::string to_string(CurveTag t);

CurveClass classify_curve(const Kernel& k);

// Point of P1 over Q(sqrt d)(t), stored normalized: either [v:1] or [1:0].
class ProjCoord
{
public:
    ProjCoord() : inf_(true) {}
    ProjCoord(const QRatFunT& u0, const QRatFunT& u1);
    static ProjCoord affine(const QRatFunT& v) { return ProjCoord(v, QRatFunT(1)); }
    static ProjCoord infinity() { return ProjCoord(); }

    bool is_infinite() const { return inf_; }
    const QRatFunT& value() const;
    QRatFunT u0() const { return inf_ ? QRatFunT(1) : val_; }
    QRatFunT u1() const { return inf_ ? QRatFunT(0) : QRatFunT(1); }

    bool is_zero() const { return !inf_ && val_.is_zero(); }
    bool is_rational() const;  // no sqrt part in any coefficient

    friend bool operator==(const ProjCoord& a, const ProjCoord& b)
    {
        return a.inf_ == b.inf_ && (a.inf_ || a.val_ == b.val_);
    }
    friend bool operator!=(const ProjCoord& a, const ProjCoord& b) { return !(a == b); }

    std::string str() const;

private:
    bool inf_;
    QRatFunT val_;
};

struct CurvePoint
{
    ProjCoord x, y;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    bool is_rational() const { return x.is_rational() && y.is_rational(); }
    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

bool on_curve(const Kernel& k, const CurvePoint& p);

// a u0^2 + b u0 u1 + c u1^2 with rational a, b, c: the edge quadratics of the pencil.
struct EdgeQuadratic
{
    Rational a, b, c;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0; }
    Rational discriminant() const { return b * b - 4 * a * c; }
    bool splits() const;  // over Q
    // Multiplicity of [0:1] and of [1:0] as roots.
    int mult_at_zero() const;
    int mult_at_infinity() const;
};

// Roots with multiplicity, [1:0] first, then increasing in the order of QuadNumber.
// Irrational roots are written over Q(sqrt(field_d)) when field_d is given and
// discriminant/field_d is a rational square; otherwise over Q(sqrt(discriminant)).
std::array<ProjCoord, 2> edge_roots(const EdgeQuadratic& q, const std::optional<Rational>& field_d = std::nullopt);

enum class Edge { P, Q, R, S };

// P: x = oo, R: x = 0, Q: y = oo, S: y = 0.
EdgeQuadratic edge_quadratic(const Kernel& k, Edge e);

struct SpecialPoints
{
    CurvePoint P0, P1, Q0, Q1, iota1_Q0, iota1_Q1;
    bool p_rational = true, q_rational = true;
};

// Points are written over Q(sqrt(field_d)) when that field is given and contains them.
SpecialPoints special_points(const Kernel& k, const std::optional<Rational>& field_d = std::nullopt);

struct BasePointProfile
{
    std::array<CurvePoint, 8> points;  // P0 P1 Q0 Q1 R0 R1 S0 S1
    // corner multiplicities at (0,0), (0,oo), (oo,0), (oo,oo)
    std::array<int, 4> corner{0, 0, 0, 0};
    int max_multiplicity = 1;
};

BasePointProfile base_points(const Kernel& k);

} // namespace qwalk
