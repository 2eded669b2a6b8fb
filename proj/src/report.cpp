#include "qwalk/report.hpp"

#include "json.hpp"

#include <sstream>

namespace qwalk {

namespace {

std::string join_rationals(const std::vector<Rational>& v)
{
    std::string out;
    for (const auto& r : v)
        out += (out.empty() ? "" : " ") + to_string(r);
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string out;
    for (int n : v)
        out += (out.empty() ? "" : " ") + std::to_string(n);
    return out;
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

std::string strip(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

RunReport make_report(const std::string& source, const WeightedModel& m, const Verdict& v)
{
    RunReport r;
    r.source = source;
    r.model = m.describe();
    r.curve = to_string(v.diag.curve.tag);
    if (v.tau_order)
        r.tau_order = std::to_string(*v.tau_order);
    else
        r.tau_order = v.diag.infinite_group ? "infinite" : "-";
    r.fixed_points = v.diag.fixed ? v.diag.fixed->str() : "-";
    if (v.diag.valuations) {
        const auto& w = *v.diag.valuations;
        auto ord = [](int o) {
            return o == WeierstrassValuations::kInfiniteOrder ? std::string("inf") : std::to_string(o);
        };
        r.valuations = ord(w.ord_g2) + " " + ord(w.ord_g3) + " " + ord(w.ord_delta);
    } else {
        r.valuations = "-";
    }
    r.fiber = v.diag.fiber ? v.diag.fiber->str() : "-";
    r.heights.assign(v.diag.heights.begin(), v.diag.heights.end());
    r.multipliers.assign(v.diag.multipliers.begin(), v.diag.multipliers.end());
    if (v.witness)
        r.witness = "n=" + std::to_string(v.witness->n) + " " + v.pairing;
    else
        r.witness = v.always_certificate ? "always-certificate" : "-";
    r.verdict = to_string(v.tag);
    r.reason = v.reason;
    r.notes = v.diag.notes;
    return r;
}

std::string to_text(const RunReport& r)
{
    std::ostringstream out;
    out << "source: " << r.source << "\n";
    out << "model: " << r.model << "\n";
    out << "curve: " << r.curve << "\n";
    out << "tau_order: " << r.tau_order << "\n";
    out << "fixed_points: " << r.fixed_points << "\n";
    out << "valuations: " << r.valuations << "\n";
    out << "fiber: " << r.fiber << "\n";
    out << "heights: " << join_rationals(r.heights) << "\n";
    out << "multipliers: " << join_ints(r.multipliers) << "\n";
    out << "witness: " << r.witness << "\n";
    out << "verdict: " << r.verdict << "\n";
    out << "reason: " << r.reason << "\n";
    for (const auto& n : r.notes)
        out << "note: " << n << "\n";
    if (r.elapsed_ms) {
        std::ostringstream ms;
        ms.precision(17);
        ms << *r.elapsed_ms;
        out << "elapsed_ms: " << ms.str() << "\n";
    }
    return out.str();
}

RunReport report_from_text(const std::string& text)
{
    RunReport r;
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (strip(line).empty())
            continue;
        std::size_t sep = line.find(':');
        if (sep == std::string::npos)
            throw ParseError("expected 'key: value'", n, 1);
        std::string key = line.substr(0, sep);
        std::string value = line.substr(sep + 1);
        if (!value.empty() && value[0] == ' ')
            value.erase(0, 1);
        if (key == "source")
            r.source = value;
        else if (key == "model")
            r.model = value;
        else if (key == "curve")
            r.curve = value;
        else if (key == "tau_order")
            r.tau_order = value;
        else if (key == "fixed_points")
            r.fixed_points = value;
        else if (key == "valuations")
            r.valuations = value;
        else if (key == "fiber")
            r.fiber = value;
        else if (key == "heights") {
            for (const auto& w : words(value))
                r.heights.push_back(parse_rational(w));
        } else if (key == "multipliers") {
            for (const auto& w : words(value))
                r.multipliers.push_back(std::stoi(w));
        } else if (key == "witness")
            r.witness = value;
        else if (key == "verdict")
            r.verdict = value;
        else if (key == "reason")
            r.reason = value;
        else if (key == "note")
            r.notes.push_back(value);
        else if (key == "elapsed_ms")
            r.elapsed_ms = std::stod(value);
        else
            throw ParseError("unknown key '" + key + "'", n, 1);
    }
    return r;
}

std::string to_json(const RunReport& r)
{
    nlohmann::json j;
    j["source"] = r.source;
    j["model"] = r.model;
    j["curve"] = r.curve;
    j["tau_order"] = r.tau_order;
    j["fixed_points"] = r.fixed_points;
    j["valuations"] = r.valuations;
    j["fiber"] = r.fiber;
    j["heights"] = nlohmann::json::array();
    for (const auto& h : r.heights)
        j["heights"].push_back(to_string(h));
    j["multipliers"] = r.multipliers;
    j["witness"] = r.witness;
    j["verdict"] = r.verdict;
    j["reason"] = r.reason;
    j["notes"] = r.notes;
    if (r.elapsed_ms)
        j["elapsed_ms"] = *r.elapsed_ms;
    return j.dump(2);
}

RunReport report_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what(), 1, 1);
    }
    try {
        RunReport r;
        r.source = j.at("source").get<std::string>();
        r.model = j.at("model").get<std::string>();
        r.curve = j.at("curve").get<std::string>();
        r.tau_order = j.at("tau_order").get<std::string>();
        r.fixed_points = j.at("fixed_points").get<std::string>();
        r.valuations = j.at("valuations").get<std::string>();
        r.fiber = j.at("fiber").get<std::string>();
        for (const auto& h : j.at("heights"))
            r.heights.push_back(parse_rational(h.get<std::string>()));
        r.multipliers = j.at("multipliers").get<std::vector<int>>();
        r.witness = j.at("witness").get<std::string>();
        r.verdict = j.at("verdict").get<std::string>();
        r.reason = j.at("reason").get<std::string>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        if (j.contains("elapsed_ms"))
            r.elapsed_ms = j.at("elapsed_ms").get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what(), 1, 1);
    }
}

} // namespace qwalk
