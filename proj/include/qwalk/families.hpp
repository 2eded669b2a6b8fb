#pragma once

#include "qwalk/decider.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qwalk {

// Weighted families with a closed-form decoupling condition.
//   WIIC2: N NE W SW S 0,    d01 d0-1 - d11 d-1-1 = 0
//   IB6:   NW N NE W SW S,   d-11 d0-1^2 - d01 d-1-1 d0-1 + d11 d-1-1^2 = 0
//   GB:    W E NW SE,        d10 d-10 - d1-1 d-11 = 0 (finite group)
enum class Family { WIIC2, IB6, GB };

Family parse_family(const std::string& name);
std::string to_string(Family f);

Rational condition_value(Family f, const WeightedModel& m);

// Positive rational weights p/q with 1 <= p, q <= 12, on or off the condition.
WeightedModel sample_family(Family f, bool on_condition, std::mt19937_64& rng);

// On the condition: WIIC2 and IB6 decouple with witness n = -1, GB has a group of
// order 4 or 8. Off it: not decoupled.
bool verdict_expected(Family f, bool on_condition, const Verdict& v);

struct ConditionTrial
{
    WeightedModel model;
    bool on_condition;
    Verdict verdict;
    bool agrees;
};

// trials samples on the condition followed by trials samples off it.
std::vector<ConditionTrial> check_condition(Family f, int trials, std::uint64_t seed, const DecideOptions& opt = {});

} // namespace qwalk
