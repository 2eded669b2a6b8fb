#include "doctest.h"

#include "support.hpp"

#include <map>

using namespace qwalk;
using namespace qwalk::testing;

namespace {

using Steps = std::vector<std::pair<int, int>>;

// True when every walk stays on an axis or is a half-plane problem in disguise: no step
// enters the quadrant, or all steps lie in a half-plane {a i + b j >= 0} inside which
// one of the quadrant constraints holds automatically.
bool reducible(const Steps& st)
{
    bool enters = false;
    for (auto [i, j] : st)
        enters = enters || (i >= 0 && j >= 0);
    if (!enters)
        return true;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) {
            if (a == 0 && b == 0)
                continue;
            bool inside = true;
            for (auto [i, j] : st)
                inside = inside && a * i + b * j >= 0;
            if (!inside)
                continue;
            // extreme rays of H and {x >= 0} (axis 0) or H and {y >= 0} (axis 1)
            const Steps boundary = {{-b, a}, {b, -a}};
            for (int axis = 0; axis < 2; ++axis) {
                Steps rays;
                Steps along = axis == 0 ? Steps{{0, 1}, {0, -1}} : Steps{{1, 0}, {-1, 0}};
                for (auto r : along)
                    if (a * r.first + b * r.second >= 0)
                        rays.push_back(r);
                for (auto r : boundary)
                    if ((axis == 0 ? r.first : r.second) >= 0)
                        rays.push_back(r);
                bool implied = true;
                for (auto r : rays)
                    implied = implied && (axis == 0 ? r.second : r.first) >= 0;
                if (implied)
                    return true;
            }
        }
    return false;
}

} // namespace

TEST_CASE("unweighted classification of all small-step models")
{
    Steps dirs;
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            if (i != 0 || j != 0)
                dirs.push_back({i, j});
    std::map<VerdictTag, int> count;
    std::vector<WeightedModel> decoupled;
    int total = 0;
    for (int mask = 1; mask < 256; ++mask) {
        Steps st;
        int tmask = 0;
        for (int b = 0; b < 8; ++b)
            if (mask >> b & 1) {
                st.push_back(dirs[b]);
                for (int c = 0; c < 8; ++c)
                    if (dirs[c] == std::make_pair(dirs[b].second, dirs[b].first))
                        tmask |= 1 << c;
            }
        if (tmask < mask || reducible(st))
            continue;
        WeightedModel m = WeightedModel::unweighted(st);
        Verdict v = decide(m);
        if (v.tag == VerdictTag::DegenerateAlgebraic)
            continue;
        ++total;
        ++count[v.tag];
        if (v.diag.heights_window_agree)
            CHECK_MESSAGE(*v.diag.heights_window_agree, m.describe());
        if (v.tag == VerdictTag::DecoupledDAlgebraic)
            decoupled.push_back(m);
    }
    CHECK(total == 79);
    CHECK(count[VerdictTag::FiniteGroupDFinite] == 23);
    CHECK(count[VerdictTag::GenusZeroDTranscendental] == 5);
    CHECK(count[VerdictTag::DecoupledDAlgebraic] == 9);
    CHECK(count[VerdictTag::NotDecoupledDTranscendental] == 42);
    CHECK(total - count[VerdictTag::FiniteGroupDFinite] == 56);

    // the decoupled models are the nine reference models up to exchanging x and y
    for (const auto& s : decoupled_sets()) {
        WeightedModel f = steps(s);
        bool found = false;
        for (const auto& m : decoupled)
            found = found || m == f || m == f.transposed();
        CHECK_MESSAGE(found, s);
    }
}
