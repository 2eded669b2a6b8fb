#include "qwalk/families.hpp"

namespace qwalk {

namespace {

Rational draw(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> pick(1, 12);
    long p = pick(rng), q = pick(rng);
    return frac(p, q);
}

void fill(WeightedModel& m, const std::vector<std::pair<int, int>>& steps, std::mt19937_64& rng)
{
    for (auto [i, j] : steps)
        m.set(i, j, draw(rng));
}

} // namespace

Family parse_family(const std::string& name)
{
    if (name == "wIIC2")
        return Family::WIIC2;
    if (name == "IB6")
        return Family::IB6;
    if (name == "GB")
        return Family::GB;
    throw ModelError("unknown family '" + name + "' (expected wIIC2, IB6 or GB)");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::WIIC2:
        return "wIIC2";
    case Family::IB6:
        return "IB6";
    case Family::GB:
        return "GB";
    }
    return "?";
}

Rational condition_value(Family f, const WeightedModel& m)
{
    auto d = [&](int i, int j) { return m.d(i, j); };
    switch (f) {
    case Family::WIIC2:
        return d(0, 1) * d(0, -1) - d(1, 1) * d(-1, -1);
    case Family::IB6:
        return d(-1, 1) * d(0, -1) * d(0, -1) - d(0, 1) * d(-1, -1) * d(0, -1) + d(1, 1) * d(-1, -1) * d(-1, -1);
    case Family::GB:
        return d(1, 0) * d(-1, 0) - d(1, -1) * d(-1, 1);
    }
    return 0;
}

WeightedModel sample_family(Family f, bool on_condition, std::mt19937_64& rng)
{
    for (;;) {
        WeightedModel m;
        switch (f) {
        case Family::WIIC2:
            fill(m, {{0, 1}, {1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {0, 0}}, rng);
            if (on_condition)
                m.set(0, 1, m.d(1, 1) * m.d(-1, -1) / m.d(0, -1));
            break;
        case Family::IB6:
            fill(m, {{-1, 1}, {0, 1}, {1, 1}, {-1, 0}, {-1, -1}, {0, -1}}, rng);
            if (on_condition) {
                // solve for d-11 > 0, which needs d01 d0-1 > d11 d-1-1
                m.set(0, 1, m.d(1, 1) * m.d(-1, -1) / m.d(0, -1) + draw(rng));
                Rational s = m.d(0, -1);
                m.set(-1, 1, (m.d(0, 1) * m.d(-1, -1) * s - m.d(1, 1) * m.d(-1, -1) * m.d(-1, -1)) / (s * s));
            }
            break;
        case Family::GB:
            fill(m, {{-1, 0}, {1, 0}, {-1, 1}, {1, -1}}, rng);
            if (on_condition)
                m.set(1, 0, m.d(1, -1) * m.d(-1, 1) / m.d(-1, 0));
            break;
        }
        if ((sgn(condition_value(f, m)) == 0) == on_condition)
            return m;
    }
}

bool verdict_expected(Family f, bool on_condition, const Verdict& v)
{
    if (!on_condition)
        return v.tag == VerdictTag::NotDecoupledDTranscendental;
    if (f == Family::GB)
        return v.tag == VerdictTag::FiniteGroupDFinite && v.tau_order && (*v.tau_order == 2 || *v.tau_order == 4);
    return v.tag == VerdictTag::DecoupledDAlgebraic && v.witness && v.witness->n == -1;
}

std::vector<ConditionTrial> check_condition(Family f, int trials, std::uint64_t seed, const DecideOptions& opt)
{
    std::mt19937_64 rng(seed);
    std::vector<ConditionTrial> out;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < trials; ++i) {
            bool on = pass == 0;
            WeightedModel m = sample_family(f, on, rng);
            Verdict v = decide(m, opt);
            out.push_back({m, on, v, verdict_expected(f, on, v)});
        }
    return out;
}

} // namespace qwalk
