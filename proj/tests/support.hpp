#pragma once

#include "qwalk/decider.hpp"
#include "qwalk/function_field.hpp"
#include "qwalk/kernel.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qwalk::testing {

// "N NE W" -> all-ones model on those steps.
inline WeightedModel steps(const std::string& names)
{
    std::istringstream in(names);
    std::vector<std::pair<int, int>> st;
    std::string w;
    while (in >> w)
        st.push_back(parse_step(w));
    return WeightedModel::unweighted(st);
}

inline Rational rand_weight(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> pick(1, 9);
    long p = pick(rng), q = pick(rng);
    return frac(p, q);
}

// Same support as m, fresh positive weights.
inline WeightedModel reweight(const WeightedModel& m, std::mt19937_64& rng)
{
    WeightedModel r;
    for (auto [i, j] : m.support())
        r.set(i, j, rand_weight(rng));
    return r;
}

// Each of the nine weights nonzero with probability 2/3, rejecting invalid models.
inline WeightedModel random_model(std::mt19937_64& rng)
{
    std::bernoulli_distribution on(2.0 / 3.0);
    for (;;) {
        WeightedModel m;
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j)
                if (on(rng))
                    m.set(i, j, rand_weight(rng));
        try {
            m.validate();
            return m;
        } catch (const ModelError&) {
        }
    }
}

inline WeightedModel random_genus_one(std::mt19937_64& rng)
{
    for (;;) {
        WeightedModel m = random_model(rng);
        if (classify_curve(build_kernel(m)).tag == CurveTag::GenusOne)
            return m;
    }
}

inline QRatFunT q(long p, long r = 1) { return QRatFunT(QuadNumber(frac(p, r))); }
inline QRatFunT qt() { return QRatFunT(QPolyT::var()); }
inline QRatFunT qc(const Rational& c) { return QRatFunT(QuadNumber(c)); }

// Genus one, infinite group, decoupled when unweighted.
inline const std::vector<std::string>& decoupled_sets()
{
    static const std::vector<std::string> s = {
        "N E SW S",      "N E SW SE",     "N NE W S",      "N W E SE",    "N NE W E SW",
        "N NE W SW S",   "N E SW S SE",   "N NE W E S",    "NW N E S SE",
    };
    return s;
}

inline const std::vector<std::string>& genus_zero_sets()
{
    static const std::vector<std::string> s = {"NW N SE", "NW E SE", "NW NE SE", "NW N NE SE", "NW E NE SE"};
    return s;
}

// Genus one, infinite group, not decoupled when unweighted.
inline const std::vector<std::string>& non_decoupled_sets()
{
    static const std::vector<std::string> s = {"N SE SW W", "N E S SW W", "NE SE W NW", "N NE S SW NW",
                                               "N NE E SE W NW"};
    return s;
}

} // namespace qwalk::testing
