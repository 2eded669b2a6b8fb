#pragma once

#include "qwalk/curve.hpp"
#include "qwalk/heights.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qwalk {

struct FixedPointProfile
{
    // index 0..3 = P0, P1, Q0, Q1
    std::array<bool, 4> by_iota1{false, false, false, false};
    std::array<bool, 4> by_iota2{false, false, false, false};

    bool p_fixed() const { return by_iota1[0] || by_iota1[1] || by_iota2[0] || by_iota2[1]; }
    bool q_fixed() const { return by_iota1[2] || by_iota1[3] || by_iota2[2] || by_iota2[3]; }
    std::string str() const;
};

FixedPointProfile fixed_point_profile(const Kernel& k, const SpecialPoints& sp);

enum class VerdictTag {
    DegenerateAlgebraic,
    GenusZeroDTranscendental,
    FiniteGroupDFinite,
    DecoupledDAlgebraic,
    NotDecoupledDTranscendental
};

std::string to_string(VerdictTag t);

struct Diagnostics
{
    CurveClass curve{CurveTag::Degenerate, ""};
    bool infinite_group = false;
    std::optional<FixedPointProfile> fixed;
    std::optional<WeierstrassValuations> valuations;
    std::optional<KodairaType> fiber;
    std::set<Rational> heights;
    std::set<int> multipliers;
    // The height-derived candidates and the brute-force window agree on whether a witness exists.
    std::optional<bool> heights_window_agree;
    std::vector<std::string> notes;
};

struct Verdict
{
    VerdictTag tag = VerdictTag::DegenerateAlgebraic;
    std::optional<int> tau_order;
    std::optional<OrbitWitness> witness;
    std::string pairing;            // e.g. "P0~Q0"
    bool always_certificate = false;  // the d11 = 0 configuration that always decouples
    std::string reason;
    Diagnostics diag;
};

struct DecideOptions
{
    KernelOptions kernel;
    int window = 25;  // brute-force multipliers 1 <= |n| <= window
    int max_tau_order = 6;
    OrbitSearchOptions orbit;
};

Verdict decide(const WeightedModel& m, const DecideOptions& opt = {});
Verdict decide(const Kernel& k, const DecideOptions& opt = {});

} // namespace qwalk
