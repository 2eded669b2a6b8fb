#pragma once

#include "qwalk/kernel.hpp"

#include <cstdint>

#include <map>
#include <optional>
#include <set>

namespace qwalk {

using modp_u64 = std::uint64_t;

// q = a u0^2 + b u0 u1 + c u1^2 over Q(sqrt d)(t).
struct FiberQuadratic
{
    QRatFunT a, b, c;

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    QRatFunT eval(const ProjCoord& r) const;
};

// Fiber of the curve over a fixed x, as a quadratic in [y0:y1]; and the mirror.
FiberQuadratic fiber_over_x(const Kernel& k, const ProjCoord& x);
FiberQuadratic fiber_over_y(const Kernel& k, const ProjCoord& y);

// The second root of q given the root r (r itself for a double root).
ProjCoord other_root(const FiberQuadratic& q, const ProjCoord& r);

CurvePoint iota1_point(const Kernel& k, const CurvePoint& p);
CurvePoint iota2_point(const Kernel& k, const CurvePoint& p);
CurvePoint tau_point(const Kernel& k, const CurvePoint& p);      // iota2 o iota1
CurvePoint tau_inv_point(const Kernel& k, const CurvePoint& p);  // iota1 o iota2
CurvePoint tau_power(const Kernel& k, const CurvePoint& p, int n);

struct OrbitWitness
{
    int n = 0;
    CurvePoint from, to;
};

// Caches tau^k(p) for the k visited so far.
class OrbitCache
{
public:
    OrbitCache(const Kernel& k, CurvePoint p);
    const CurvePoint& at(int n);

private:
    const Kernel* k_;
    std::map<int, CurvePoint> pts_;
};

// Exact search: some n in candidates with tau^n(r) = s. Compares tau^a(r) with
// tau^(a-n)(s) for a = ceil(n/2), so no iterate beyond about half the largest |n| is formed.
std::optional<OrbitWitness> same_orbit_exact(const Kernel& k, const CurvePoint& r, const CurvePoint& s,
                                             const std::set<int>& candidates);
std::optional<OrbitWitness> same_orbit_exact(OrbitCache& rc, OrbitCache& sc, const CurvePoint& r,
                                             const CurvePoint& s, const std::set<int>& candidates);

// The curve reduced at t = t0 modulo a prime p, for t0 off the singular fibers. Reduction
// commutes with iota1 and iota2 there, so distinct reductions prove distinct points.
class SmoothFiber
{
public:
    struct Pt
    {
        modp_u64 x0, x1, y0, y1;
        friend bool operator==(const Pt& a, const Pt& b)
        {
            return a.x0 == b.x0 && a.x1 == b.x1 && a.y0 == b.y0 && a.y1 == b.y1;
        }
    };

    // nullopt if t0 is singular or p is unusable (denominators, sqrt(d) missing).
    static std::optional<SmoothFiber> make(const Kernel& k, modp_u64 p, modp_u64 t0,
                                           const std::optional<Rational>& field_d);

    std::optional<Pt> reduce(const CurvePoint& q) const;
    // An affine point with the given x, if the fiber over x splits with a finite root.
    std::optional<Pt> point_over_x(modp_u64 x) const;
    bool on_curve(const Pt& q) const;
    Pt iota1(const Pt& q) const;
    Pt iota2(const Pt& q) const;
    Pt tau(const Pt& q) const { return iota2(iota1(q)); }
    Pt tau_inv(const Pt& q) const { return iota1(iota2(q)); }

    modp_u64 prime() const { return p_; }

private:
    SmoothFiber() = default;
    Pt other(const Pt& q, bool over_x) const;

    modp_u64 p_ = 0, t0_ = 0, s_ = 0;  // s_ = image of sqrt(d)
    std::array<std::array<modp_u64, 3>, 3> g_{};
};

// Deterministic list of usable fibers; index i draws the i-th prime and a hashed t0.
std::vector<SmoothFiber> smooth_fibers(const Kernel& k, int count, const std::optional<Rational>& field_d);

struct OrbitSearchOptions
{
    // Screen candidates on reduced fibers first; exact arithmetic confirms every hit.
    bool screen = true;
    int fibers = 2;
};

// Some n in candidates with tau^n(r) = s, exactly verified.
std::optional<OrbitWitness> same_orbit(const Kernel& k, const CurvePoint& r, const CurvePoint& s,
                                       const std::set<int>& candidates, const OrbitSearchOptions& opt = {});

// True when reduced fibers prove tau^n != id for every 1 <= n <= max_n.
bool tau_order_exceeds(const Kernel& k, int max_n);

bool verify_witness(const Kernel& k, const OrbitWitness& w);

} // namespace qwalk
