#pragma once

#include "qwalk/kernel.hpp"

#include <set>
#include <string>
#include <vector>

namespace qwalk {

// Orders at t = 0 of g2, g3 and the discriminant, after minimalization.
// A vanishing invariant has order kInfiniteOrder.
struct WeierstrassValuations
{
    static constexpr int kInfiniteOrder = 1 << 20;

    int ord_g2 = 0, ord_g3 = 0, ord_delta = 0;

    friend bool operator==(const WeierstrassValuations&, const WeierstrassValuations&) = default;
};

enum class KodairaFamily { Smooth, In, InStar, II, III, IV, IIStar, IIIStar, IVStar };

struct KodairaType
{
    KodairaFamily family = KodairaFamily::Smooth;
    int n = 0;  // index of I_n and I_n*

    friend bool operator==(const KodairaType&, const KodairaType&) = default;
    std::string str() const;
};

enum class LatticeFamily { A, D, E };

struct RootLatticeSummand
{
    LatticeFamily family;
    int rank;

    friend bool operator==(const RootLatticeSummand&, const RootLatticeSummand&) = default;
    std::string str() const;
};

WeierstrassValuations weierstrass_valuations(const Kernel& k);

// Table lookup; II and II* raise StructuredAbort, as does a triple matching no row.
KodairaType kodaira_type_at_zero(const WeierstrassValuations& v);

// The root lattice spanned by the non-identity components; throws for Smooth.
RootLatticeSummand root_lattice(const KodairaType& t);

// 4 plus (multiplicity - 1) for every corner where base points collide.
int fiber_components_from_base_points(const BasePointProfile& bp);

// The I_n index at t = 0, with the base-point count checked against the Tate count.
// Throws StructuredAbort if the two disagree or the fiber is not of type I_n.
int fiber_at_zero(const Kernel& k);

std::set<Rational> contribution_set(const RootLatticeSummand& s);

// 2 - contr(fiber at 0) - contributions of further fibers whose root lattices fit in the
// remaining rank budget 9 - n0. Only values >= 0 are kept.
std::set<Rational> height_candidates(int n0);

// All n with 1 <= |n| <= cap and n^2 = hm / hn for some hm in hM, nonzero hn in hN.
std::set<int> candidate_multipliers(const std::set<Rational>& hM, const std::set<Rational>& hN, int cap = 25);

// Multiplicities of the roots of Delta away from t = 0, with Delta read as a degree-12
// form on P1 so that t = oo counts; over an algebraic closure, one entry per root,
// sorted in decreasing order.
std::vector<int> delta_multiplicity_profile(const Kernel& k);

bool has_repeated_nonzero_root(const Kernel& k);

} // namespace qwalk
