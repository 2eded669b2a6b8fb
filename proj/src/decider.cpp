#include "qwalk/decider.hpp"

#include "qwalk/function_field.hpp"

#include <cstdlib>

namespace qwalk {

namespace {

const char* const kPointNames[4] = {"P0", "P1", "Q0", "Q1"};

std::set<int> window(int w)
{
    std::set<int> out;
    for (int n = -w; n <= w; ++n)
        if (n != 0)
            out.insert(n);
    return out;
}

bool better(const std::optional<OrbitWitness>& cand, const std::optional<OrbitWitness>& best)
{
    if (!cand)
        return false;
    if (!best)
        return true;
    int a = std::abs(cand->n), b = std::abs(best->n);
    return a < b || (a == b && cand->n < best->n);
}

struct Pairing
{
    std::string name;
    CurvePoint from, to;
};

struct Search
{
    std::optional<OrbitWitness> witness;
    std::string pairing;
};

Search search(const Kernel& k, const std::vector<Pairing>& pairs, const std::set<int>& cands,
              const OrbitSearchOptions& opt)
{
    Search best;
    for (const auto& p : pairs) {
        auto w = same_orbit(k, p.from, p.to, cands, opt);
        if (better(w, best.witness)) {
            best.witness = w;
            best.pairing = p.name;
        }
    }
    return best;
}

} // namespace

std::string FixedPointProfile::str() const
{
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (!out.empty())
            out += " ";
        out += kPointNames[i];
        out += ":";
        out += by_iota1[i] ? "1" : "-";
        out += by_iota2[i] ? "2" : "-";
    }
    return out;
}

FixedPointProfile fixed_point_profile(const Kernel& k, const SpecialPoints& sp)
{
    FixedPointProfile f;
    const CurvePoint* pts[4] = {&sp.P0, &sp.P1, &sp.Q0, &sp.Q1};
    for (int i = 0; i < 4; ++i) {
        f.by_iota1[i] = iota1_point(k, *pts[i]) == *pts[i];
        f.by_iota2[i] = iota2_point(k, *pts[i]) == *pts[i];
    }
    return f;
}

std::string to_string(VerdictTag t)
{
    switch (t) {
    case VerdictTag::DegenerateAlgebraic:
        return "DegenerateAlgebraic";
    case VerdictTag::GenusZeroDTranscendental:
        return "GenusZeroDTranscendental";
    case VerdictTag::FiniteGroupDFinite:
        return "FiniteGroupDFinite";
    case VerdictTag::DecoupledDAlgebraic:
        return "DecoupledDAlgebraic";
    case VerdictTag::NotDecoupledDTranscendental:
        return "NotDecoupledDTranscendental";
    }
    return "?";
}

Verdict decide(const WeightedModel& m, const DecideOptions& opt)
{
    return decide(build_kernel(m, opt.kernel), opt);
}

Verdict decide(const Kernel& k, const DecideOptions& opt)
{
    Verdict v;
    v.diag.curve = classify_curve(k);
    switch (v.diag.curve.tag) {
    case CurveTag::Degenerate:
        v.tag = VerdictTag::DegenerateAlgebraic;
        v.reason = "degenerate kernel: " + v.diag.curve.reason;
        return v;
    case CurveTag::GenusZero:
        v.tag = VerdictTag::GenusZeroDTranscendental;
        v.reason = "genus zero kernel curve";
        return v;
    case CurveTag::GenusOne:
        break;
    }

    if (auto ord = tau_order(k, opt.max_tau_order)) {
        v.tag = VerdictTag::FiniteGroupDFinite;
        v.tau_order = ord;
        v.reason = "tau has order " + std::to_string(*ord);
        return v;
    }
    v.diag.infinite_group = true;

    v.diag.valuations = weierstrass_valuations(k);
    v.diag.fiber = kodaira_type_at_zero(*v.diag.valuations);
    int n0 = fiber_at_zero(k);
    v.diag.heights = height_candidates(n0);
    v.diag.multipliers = candidate_multipliers(v.diag.heights, v.diag.heights, opt.window);

    SpecialPoints sp = special_points(k);
    FixedPointProfile fp = fixed_point_profile(k, sp);
    v.diag.fixed = fp;

    if (fp.p_fixed() && fp.q_fixed()) {
        v.tag = VerdictTag::NotDecoupledDTranscendental;
        v.reason = "an involution fixes some P_i and some Q_j";
        return v;
    }

    std::vector<Pairing> pairs;
    const bool d11_zero = sgn(k.d(1, 1)) == 0;
    if (d11_zero) {
        // P_j = Q_k with the other Q at (0, oo) and fixed by iota1
        const CurvePoint zero_inf{ProjCoord::affine(QRatFunT(0)), ProjCoord::infinity()};
        for (const CurvePoint* p : {&sp.P0, &sp.P1})
            for (int q = 0; q < 2; ++q) {
                const CurvePoint& qk = q == 0 ? sp.Q0 : sp.Q1;
                const CurvePoint& other = q == 0 ? sp.Q1 : sp.Q0;
                if (*p == qk && other == zero_inf && fp.by_iota1[q == 0 ? 3 : 2]) {
                    v.tag = VerdictTag::DecoupledDAlgebraic;
                    v.always_certificate = true;
                    v.reason = "P_j = Q_k and the other Q_k is (0, oo), fixed by iota1";
                    return v;
                }
            }
        pairs.push_back({"P0~P1", sp.P0, sp.P1});
    } else {
        EdgeQuadratic pq = edge_quadratic(k, Edge::P), qq = edge_quadratic(k, Edge::Q);
        bool pr = pq.splits(), qr = qq.splits();
        if (pr != qr) {
            v.tag = VerdictTag::NotDecoupledDTranscendental;
            v.reason = "P and Q are defined over different fields";
            return v;
        }
        if (!pr) {
            Rational dp = pq.discriminant(), dq = qq.discriminant();
            if (!is_rational_square(Rational(dp * dq))) {
                v.tag = VerdictTag::NotDecoupledDTranscendental;
                v.reason = "P and Q lie in different quadratic extensions";
                return v;
            }
            sp = special_points(k, dp);
            v.diag.notes.push_back("P and Q written over Q(sqrt(" + to_string(dp) + "))");
        }
        pairs.push_back({"P0~Q0", sp.P0, sp.Q0});
        pairs.push_back({"P0~Q1", sp.P0, sp.Q1});
    }

    Search by_heights = search(k, pairs, v.diag.multipliers, opt.orbit);
    Search by_window = search(k, pairs, window(opt.window), opt.orbit);
    v.diag.heights_window_agree = by_heights.witness.has_value() == by_window.witness.has_value();
    if (!*v.diag.heights_window_agree)
        v.diag.notes.push_back("height candidates and brute-force window disagree");

    if (!d11_zero && pairs.size() == 2 && sp.p_rational) {
        // the companion pairings from P1 carry no extra information
        Search comp = search(k, {{"P1~Q0", sp.P1, sp.Q0}, {"P1~Q1", sp.P1, sp.Q1}}, window(opt.window), opt.orbit);
        if (comp.witness.has_value() != by_window.witness.has_value())
            v.diag.notes.push_back("companion pairings from P1 disagree with those from P0");
    }

    if (by_window.witness) {
        if (!verify_witness(k, *by_window.witness))
            throw AlgebraError("orbit witness failed re-verification");
        v.tag = VerdictTag::DecoupledDAlgebraic;
        v.witness = by_window.witness;
        v.pairing = by_window.pairing;
        v.reason = "tau^" + std::to_string(v.witness->n) + " relates " + v.pairing;
    } else {
        v.tag = VerdictTag::NotDecoupledDTranscendental;
        v.reason = d11_zero ? "P0 and P1 are not in one tau-orbit" : "P0 is not in the tau-orbit of Q0 or Q1";
    }
    return v;
}

} // namespace qwalk
