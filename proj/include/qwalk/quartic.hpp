#pragma once

#include "qwalk/poly.hpp"

#include <array>

namespace qwalk {

// a4 X^4 + a3 X^3 Z + a2 X^2 Z^2 + a1 X Z^3 + a0 Z^4; coeff[k] = a_k.
template <class F>
struct BinaryQuartic
{
    std::array<F, 5> coeff{F(0), F(0), F(0), F(0), F(0)};

    const F& a(int k) const { return coeff[k]; }
};

template <class F>
struct QuarticInvariants
{
    F g2;
    F g3;
    F disc;
};

// g2 = I, g3 = J and disc = 4 I^3 - J^2 of the binary quartic.
template <class F>
QuarticInvariants<F> quartic_invariants(const BinaryQuartic<F>& q)
{
    const F &a4 = q.a(4), &a3 = q.a(3), &a2 = q.a(2), &a1 = q.a(1), &a0 = q.a(0);
    F I = F(12) * a4 * a0 - F(3) * a3 * a1 + a2 * a2;
    F J = F(72) * a4 * a2 * a0 + F(9) * a3 * a2 * a1 - F(27) * a4 * a1 * a1 - F(27) * a3 * a3 * a0 - F(2) * a2 * a2 * a2;
    F D = F(4) * I * I * I - J * J;
    return {I, J, D};
}

} // namespace qwalk
