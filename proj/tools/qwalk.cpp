#include "qwalk/decider.hpp"
#include "qwalk/expr.hpp"
#include "qwalk/families.hpp"
#include "qwalk/function_field.hpp"
#include "qwalk/heights.hpp"
#include "qwalk/report.hpp"
#include "qwalk/walk_enum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iostream>
#include <thread>

using namespace qwalk;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kInputError = 1, kAbort = 2 };

struct Failure
{
    int code;
    std::string message;
};

// Runs body, mapping library exceptions to the exit-code contract.
template <class F>
std::optional<Failure> guarded(const std::string& what, F&& body)
{
    try {
        body();
        return std::nullopt;
    } catch (const StructuredAbort& e) {
        return Failure{kAbort, what + ": aborted in " + e.stage() + ": " + e.what()};
    } catch (const FunctionFieldError& e) {
        return Failure{kAbort, what + ": aborted in function_field: " + e.what()};
    } catch (const CertificateMembershipError& e) {
        return Failure{kAbort, what + ": aborted in certificate: " + e.what()};
    } catch (const ParseError& e) {
        return Failure{kInputError, what + ": parse error: " + e.what()};
    } catch (const ModelError& e) {
        return Failure{kInputError, what + ": model error: " + e.what()};
    } catch (const std::exception& e) {
        return Failure{kInputError, what + ": " + e.what()};
    }
}

// Walk models from files must have nonnegative weights.
WeightedModel load_walk(const std::string& path)
{
    WeightedModel m = load_model(path);
    if (!m.nonnegative())
        throw ModelError("negative weight");
    return m;
}

int report_failure(const std::optional<Failure>& f)
{
    if (!f)
        return kOk;
    std::cerr << "qwalk: " << f->message << "\n";
    return f->code;
}

void emit(const std::string& format, const json& j, const std::string& text)
{
    if (format == "structured")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

RunReport classify_file(const std::string& path, bool timing)
{
    auto t0 = std::chrono::steady_clock::now();
    WeightedModel m = load_walk(path);
    Verdict v = decide(m);
    RunReport r = make_report(path, m, v);
    if (timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<std::string> model_files(const std::string& dir)
{
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file())
            out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_classify(const std::string& path, const std::string& dir, const std::string& format, bool timing)
{
    if (dir.empty()) {
        RunReport r;
        auto f = guarded(path, [&] { r = classify_file(path, timing); });
        if (f)
            return report_failure(f);
        if (format == "structured")
            std::cout << to_json(r) << "\n";
        else
            std::cout << to_text(r);
        return kOk;
    }

    std::vector<std::string> files;
    if (auto f = guarded(dir, [&] { files = model_files(dir); }))
        return report_failure(f);
    struct Outcome
    {
        RunReport report;
        std::optional<Failure> failure;
    };
    std::vector<Outcome> results(files.size());
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i; (i = next++) < files.size();)
                results[i].failure = guarded(files[i], [&] { results[i].report = classify_file(files[i], timing); });
        }));
    for (auto& p : pool)
        p.get();

    int code = kOk;
    json arr = json::array();
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (results[i].failure) {
            code = std::max(code, report_failure(results[i].failure));
            continue;
        }
        if (format == "structured")
            arr.push_back(json::parse(to_json(results[i].report)));
        else
            std::cout << (i ? "\n" : "") << to_text(results[i].report);
    }
    if (format == "structured")
        std::cout << arr.dump(2) << "\n";
    return code;
}

int cmd_fiber(const std::string& path, const std::string& format)
{
    return report_failure(guarded(path, [&] {
        Kernel k = build_kernel(load_walk(path));
        CurveClass cls = classify_curve(k);
        if (cls.tag != CurveTag::GenusOne)
            throw StructuredAbort("fiber", "curve is " + to_string(cls.tag) + ", not genus one");
        WeierstrassValuations v = weierstrass_valuations(k);
        KodairaType t = kodaira_type_at_zero(v);
        int bp = fiber_components_from_base_points(base_points(k));
        std::vector<int> prof = delta_multiplicity_profile(k);
        std::string ps;
        for (int m : prof)
            ps += (ps.empty() ? "" : " ") + std::to_string(m);
        json j{{"ord_g2", v.ord_g2}, {"ord_g3", v.ord_g3}, {"ord_delta", v.ord_delta}, {"kodaira", t.str()},
               {"base_point_components", bp}, {"delta_multiplicities", prof}};
        std::string text = "ord_g2: " + std::to_string(v.ord_g2) + "\nord_g3: " + std::to_string(v.ord_g3) +
                           "\nord_delta: " + std::to_string(v.ord_delta) + "\nkodaira: " + t.str() +
                           "\nbase_point_components: " + std::to_string(bp) + "\ndelta_multiplicities: " + ps + "\n";
        emit(format, j, text);
    }));
}

const CurvePoint& named_point(const SpecialPoints& sp, const std::string& name)
{
    if (name == "P0")
        return sp.P0;
    if (name == "P1")
        return sp.P1;
    if (name == "Q0")
        return sp.Q0;
    if (name == "Q1")
        return sp.Q1;
    throw ModelError("unknown point '" + name + "' (expected P0, P1, Q0 or Q1)");
}

int cmd_orbit(const std::string& path, const std::string& from, const std::string& to, int nmax,
              const std::string& format)
{
    return report_failure(guarded(path, [&] {
        if (nmax < 1)
            throw ModelError("--nmax must be positive");
        Kernel k = build_kernel(load_walk(path));
        if (classify_curve(k).tag != CurveTag::GenusOne)
            throw StructuredAbort("orbit", "curve is not genus one");
        EdgeQuadratic pq = edge_quadratic(k, Edge::P), qq = edge_quadratic(k, Edge::Q);
        std::optional<Rational> field;
        if (!pq.splits())
            field = pq.discriminant();
        else if (!qq.splits())
            field = qq.discriminant();
        SpecialPoints sp = special_points(k, field);
        const CurvePoint& r = named_point(sp, from);
        const CurvePoint& s = named_point(sp, to);
        std::optional<OrbitWitness> w;
        std::string note;
        bool comparable = true;
        for (const CurvePoint* p : {&r, &s})
            for (const ProjCoord* c : {&p->x, &p->y})
                if (!c->is_infinite())
                    for (const auto* poly : {&c->value().num(), &c->value().den()})
                        for (const auto& v : poly->coeffs())
                            if (!v.is_rational() && field && v.d() != *field)
                                comparable = false;
        if (comparable) {
            std::set<int> cands;
            for (int n = -nmax; n <= nmax; ++n)
                cands.insert(n);
            w = same_orbit(k, r, s, cands);
        } else {
            note = "points lie in different quadratic extensions";
        }
        json j{{"from", from}, {"to", to}, {"from_point", r.str()}, {"to_point", s.str()}, {"nmax", nmax}};
        j["witness"] = w ? json(w->n) : json(nullptr);
        std::string text = "from: " + from + " " + r.str() + "\nto: " + to + " " + s.str() +
                           "\nnmax: " + std::to_string(nmax) + "\nwitness: " + (w ? std::to_string(w->n) : "none") +
                           "\n";
        if (!note.empty()) {
            j["note"] = note;
            text += "note: " + note + "\n";
        }
        emit(format, j, text);
    }));
}

int cmd_tau_order(const std::string& path, int max_n, const std::string& format)
{
    return report_failure(guarded(path, [&] {
        Kernel k = build_kernel(load_walk(path));
        if (classify_curve(k).tag == CurveTag::Degenerate)
            throw StructuredAbort("tau-order", "degenerate kernel");
        auto ord = tau_order(k, max_n);
        std::string s = ord ? std::to_string(*ord) : "infinite";
        json j{{"tau_order", ord ? json(*ord) : json("infinite")}, {"max_n", max_n}};
        emit(format, j, "tau_order: " + s + (ord ? "" : " (no order <= " + std::to_string(max_n) + ")") + "\n");
    }));
}

int cmd_series(const std::string& path, int order, const std::string& format)
{
    return report_failure(guarded(path, [&] {
        if (order < 0)
            throw ModelError("--order must be nonnegative");
        WeightedModel m = load_walk(path);
        CountTable tab = count_walks(m, order);
        json rows = json::array();
        std::string text;
        for (int n = 0; n <= order; ++n)
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    const Rational& q = tab.q(i, j, n);
                    if (sgn(q) == 0)
                        continue;
                    text += std::to_string(n) + " " + std::to_string(i) + " " + std::to_string(j) + " " +
                            to_string(q) + "\n";
                    rows.push_back({n, i, j, to_string(q)});
                }
        emit(format, json{{"order", order}, {"rows", rows}}, text);
    }));
}

int cmd_check_certificate(const std::string& path, const std::string& expr, const std::string& format)
{
    return report_failure(guarded(path, [&] {
        Kernel k = build_kernel(load_walk(path));
        FunctionField ff(k);
        CurveFunction g = parse_function(ff, expr);
        bool ok = verify_certificate(ff, g);
        std::string pair = "-";
        if (ok) {
            auto [f, gg] = certificate_to_pair(ff, g);
            pair = verify_decoupling(ff, f, gg) ? "verified" : "failed";
        }
        json j{{"g", expr}, {"certificate", ok}, {"decoupling_pair", pair}};
        emit(format, j,
             "g: " + expr + "\ncertificate: " + (ok ? "true" : "false") + "\ndecoupling_pair: " + pair + "\n");
    }));
}

int cmd_check_condition(const std::string& family, int trials, std::uint64_t seed, const std::string& format)
{
    int code = kOk;
    auto f = guarded(family, [&] {
        Family fam = parse_family(family);
        if (trials < 1)
            throw ModelError("--trials must be positive");
        auto res = check_condition(fam, trials, seed);
        json arr = json::array();
        std::string text;
        int agree = 0;
        for (const auto& t : res) {
            agree += t.agrees;
            std::string w = t.verdict.witness ? std::to_string(t.verdict.witness->n) : "-";
            arr.push_back({{"model", t.model.describe()},
                           {"on_condition", t.on_condition},
                           {"verdict", to_string(t.verdict.tag)},
                           {"witness", w},
                           {"agrees", t.agrees}});
            text += std::string(t.agrees ? "ok   " : "FAIL ") + (t.on_condition ? "on  " : "off ") +
                    to_string(t.verdict.tag) + " n=" + w + " | " + t.model.describe() + "\n";
        }
        text += "agreement: " + std::to_string(agree) + "/" + std::to_string(res.size()) + "\n";
        emit(format, json{{"family", family}, {"seed", seed}, {"trials", arr}, {"agree", agree}, {"total", res.size()}},
             text);
        if (agree != static_cast<int>(res.size()))
            code = kInputError;
    });
    return f ? report_failure(f) : code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decide differential algebraicity of weighted quadrant walks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    std::string path, dir;
    bool timing = false;
    auto* classify = app.add_subcommand("classify", "Full verdict for a model file or directory");
    classify->add_option("model", path, "Model file");
    classify->add_option("--dir", dir, "Classify every file in a directory");
    classify->add_flag("--timing", timing, "Include elapsed time in the report");

    auto* fiber = app.add_subcommand("fiber", "Weierstrass valuations and Kodaira type at t = 0");
    fiber->add_option("model", path, "Model file")->required();

    std::string from = "P0", to = "Q0";
    int nmax = 25;
    auto* orbit = app.add_subcommand("orbit", "Search n with tau^n(from) = to");
    orbit->add_option("model", path, "Model file")->required();
    orbit->add_option("--from", from, "P0, P1, Q0 or Q1");
    orbit->add_option("--to", to, "P0, P1, Q0 or Q1");
    orbit->add_option("--nmax", nmax, "Largest |n| tried");

    int max_n = 6;
    auto* tau = app.add_subcommand("tau-order", "Order of tau, if at most --max");
    tau->add_option("model", path, "Model file")->required();
    tau->add_option("--max", max_n, "Largest order tried");

    int order = 12;
    auto* series = app.add_subcommand("series", "Walk counts as rows 'n i j value'");
    series->add_option("model", path, "Model file")->required();
    series->add_option("--order", order, "Largest walk length");

    std::string g;
    auto* cert = app.add_subcommand("check-certificate", "Check b = tau(g) - g for an expression g");
    cert->add_option("model", path, "Model file")->required();
    cert->add_option("--g", g, "Expression in x, y, t")->required();

    std::string family;
    int trials = 20;
    std::uint64_t seed = 1;
    auto* cond = app.add_subcommand("check-condition", "Sample a family on and off its condition");
    cond->add_option("--family", family, "wIIC2, IB6 or GB")->required();
    cond->add_option("--trials", trials, "Samples on and off the condition");
    cond->add_option("--seed", seed, "Random seed");

    for (auto* sub : {classify, fiber, orbit, tau, series, cert, cond})
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInputError;
    }

    if (*classify) {
        if (path.empty() == dir.empty()) {
            std::cerr << "qwalk: classify needs exactly one of a model file or --dir\n";
            return kInputError;
        }
        return cmd_classify(path, dir, format, timing);
    }
    if (*fiber)
        return cmd_fiber(path, format);
    if (*orbit)
        return cmd_orbit(path, from, to, nmax, format);
    if (*tau)
        return cmd_tau_order(path, max_n, format);
    if (*series)
        return cmd_series(path, order, format);
    if (*cert)
        return cmd_check_certificate(path, g, format);
    return cmd_check_condition(family, trials, seed, format);
}
