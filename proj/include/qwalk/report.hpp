#pragma once

#include "qwalk/decider.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qwalk {

struct RunReport
{
    std::string source;
    std::string model;
    std::string curve;
    std::string tau_order;     // number, "infinite", or "-" when not reached
    std::string fixed_points;  // FixedPointProfile::str() or "-"
    std::string valuations;    // "ord_g2 ord_g3 ord_delta" or "-"
    std::string fiber;         // Kodaira type at t = 0 or "-"
    std::vector<Rational> heights;
    std::vector<int> multipliers;
    std::string witness;  // "n=<n> <pairing>", "always-certificate" or "-"
    std::string verdict;
    std::string reason;
    std::vector<std::string> notes;
    std::optional<double> elapsed_ms;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const std::string& source, const WeightedModel& m, const Verdict& v);

// "key: value" per line in a fixed key order.
std::string to_text(const RunReport& r);
RunReport report_from_text(const std::string& text);

std::string to_json(const RunReport& r);
RunReport report_from_json(const std::string& text);

} // namespace qwalk
